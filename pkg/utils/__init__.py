"""
Contributor-Only License v1.0

This file is licensed under the Contributor-Only License. Usage is restricted to
non-commercial purposes. Distribution, sublicensing, and sharing of this file
are prohibited except by the original owner.

Modifications are allowed solely for contributing purposes and must not
misrepresent the original material. This license does not grant any
patent rights or trademark rights.

Full license terms are available in the LICENSE file at the root of the repository.
"""

from __future__ import annotations

import os
from typing import Any, Iterable, Optional, Sequence, Tuple

from .config import *
from .context import *
from .error_handler import *
from .errors import *
from .files import *
from .logs import *

__all__: Tuple[str, ...] = ('RUNNING_DEVELOPMENT', 'human_join', 'make_table', 'format_float')


def _parse_environ_boolean(key: str, *, false_if_none: bool = False) -> bool:
    val = os.environ.get(key)
    if val is None:
        if false_if_none:
            return False

        return True

    return val.lower() in ("true", "1")


RUNNING_DEVELOPMENT: bool = _parse_environ_boolean('RUN_DEVELOPMENT', false_if_none=True)


def format_float(value: float, *, digits: int = 9) -> str:
    """Formats a float with a fixed number of decimals, the way every CSV artifact
    writes real numbers.

    Parameters
    ----------
    value: :class:`float`
        The value to format.
    digits: :class:`int`
        The number of decimals to keep. Defaults to ``9``.

    Returns
    -------
    :class:`str`
    """
    return f'{value:.{digits}f}'


def human_join(items: Iterable[str], /, *, last: str = 'and') -> str:
    """Joins strings into an English list, ``a, b and c``."""
    values = list(items)
    if len(values) < 2:
        return ''.join(values)

    return f'{", ".join(values[:-1])} {last} {values[-1]}'


def _rule(widths: Sequence[int], left: str, middle: str, right: str) -> str:
    return left + middle.join('─' * (width + 2) for width in widths) + right


def _line(cells: Sequence[str], widths: Sequence[int]) -> str:
    return '│' + '│'.join(f' {cell.ljust(width)} ' for cell, width in zip(cells, widths)) + '│'


def make_table(rows: Sequence[Sequence[Any]], labels: Optional[Sequence[str]] = None) -> str:
    """Renders rows as a box-drawn text table for the plain text reports.

    Parameters
    ----------
    rows: Sequence[Sequence[Any]]
        The table body, every row with one cell per column.
    labels: Optional[Sequence[:class:`str`]]
        The column headers, if any.

    Returns
    -------
    :class:`str`
    """
    body = [[str(cell) for cell in row] for row in rows]
    header = list(labels or ())
    columns = max([len(header), *(len(row) for row in body)], default=0)
    widths = [max((len(row[i]) for row in [header, *body] if i < len(row)), default=0) for i in range(columns)]

    lines = [_rule(widths, '┌', '┬', '┐')]
    if header:
        lines.append('│' + '│'.join(f' {label.center(width)} ' for label, width in zip(header, widths)) + '│')
        lines.append(_rule(widths, '├', '┼', '┤'))
    lines.extend(_line(row, widths) for row in body)
    lines.append(_rule(widths, '└', '┴', '┘'))
    return '\n'.join(lines)
