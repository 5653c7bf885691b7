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

import logging
import os
import sys
from typing import Dict, Optional, TextIO, Tuple

__all__: Tuple[str, ...] = ('setup_logging', 'LOG_FORMAT', 'LOG_DATE_FORMAT')

LOG_FORMAT: str = '[{asctime}] [{levelname:<8}] {name}: {message}'
LOG_DATE_FORMAT: str = '%Y-%m-%d %H:%M:%S'


class _ColourFormatter(logging.Formatter):
    # ANSI codes are a bit weird to decipher if you're unfamiliar with them, so here's a refresher
    # It starts off with a format like \x1b[XXXm where XXX is a semicolon separated list of commands
    # The important ones here relate to colour.
    # 30-37 are black, red, green, yellow, blue, magenta, cyan and white in that order
    # 40-47 are the same except for the background
    # 90-97 are the same but "bright" foreground
    # 100-107 are the same as the bright ones but for the background.
    # 1 means bold, 2 means dim, 0 means reset, and 4 means underline.

    LEVEL_COLOURS: Tuple[Tuple[int, str], ...] = (
        (logging.DEBUG, '\x1b[40;1m'),
        (logging.INFO, '\x1b[34;1m'),
        (logging.WARNING, '\x1b[33;1m'),
        (logging.ERROR, '\x1b[31m'),
        (logging.CRITICAL, '\x1b[41m'),
    )

    def __init__(self) -> None:
        super().__init__()
        self._formats: Dict[int, logging.Formatter] = {
            level: logging.Formatter(
                f'\x1b[30;1m%(asctime)s\x1b[0m {colour}%(levelname)-8s\x1b[0m \x1b[35m%(name)s\x1b[0m %(message)s',
                LOG_DATE_FORMAT,
            )
            for level, colour in self.LEVEL_COLOURS
        }

    def format(self, record: logging.LogRecord) -> str:
        formatter = self._formats.get(record.levelno, self._formats[logging.DEBUG])

        # Override the traceback to always print in red
        if record.exc_info:
            text = formatter.formatException(record.exc_info)
            record.exc_text = f'\x1b[31m{text}\x1b[0m'

        output = formatter.format(record)

        # Remove the cache layer
        record.exc_text = None
        return output


def _stream_supports_colour(stream: TextIO) -> bool:
    is_a_tty = hasattr(stream, 'isatty') and stream.isatty()
    if 'PYCHARM_HOSTED' in os.environ or os.environ.get('TERM_PROGRAM') == 'vscode':
        return is_a_tty

    return is_a_tty and sys.platform != 'win32'


def setup_logging(level: int = logging.INFO, *, stream: Optional[TextIO] = None, root: bool = True) -> logging.Handler:
    """Sets up logging for the command line front end. The library itself never installs
    handlers, this is only called once per process by ``__main__``.

    Parameters
    ----------
    level: :class:`int`
        The minimum level to emit. Defaults to ``logging.INFO``.
    stream: Optional[TextIO]
        The stream to write to. Defaults to ``sys.stderr`` so standard output stays clean
        for command summaries.
    root: :class:`bool`
        Whether to attach the handler to the root logger or only to the Cohort loggers.

    Returns
    -------
    :class:`logging.Handler`
        The installed handler.
    """
    handler = logging.StreamHandler(stream or sys.stderr)

    formatter: logging.Formatter
    if _stream_supports_colour(handler.stream):
        formatter = _ColourFormatter()
    else:
        formatter = logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT, style='{')

    handler.setFormatter(formatter)

    logger = logging.getLogger() if root else logging.getLogger('stages')
    logger.setLevel(level)
    logger.addHandler(handler)
    return handler
