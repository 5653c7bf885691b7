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

from typing import Tuple

from utils import ArgumentError, DataException

__all__: Tuple[str, ...] = ('DistanceException', 'CorruptCounts', 'UnknownSource', 'InvalidCap')


class DistanceException(DataException):
    """The base exception all distance exceptions inherit from."""


class CorruptCounts(DistanceException, ArgumentError):
    """Exception raised when a co-authorship count is inconsistent with the paper
    counts of its two scholars.

    Attributes
    ----------
    co_count: :class:`int`
        The shared paper count.
    paper_counts: Tuple[:class:`int`, :class:`int`]
        The paper counts of both scholars.
    """

    def __init__(self, *, co_count: int, paper_counts: Tuple[int, int]) -> None:
        super().__init__(
            f'Co-authorship count {co_count} is inconsistent with paper counts {paper_counts[0]} and {paper_counts[1]}.'
        )
        self.co_count: int = co_count
        self.paper_counts: Tuple[int, int] = paper_counts


class UnknownSource(DistanceException, ArgumentError):
    def __init__(self, *, source: str) -> None:
        super().__init__(f'Source {source!r} is not a node of the graph.')
        self.source: str = source


class InvalidCap(DistanceException, ArgumentError):
    def __init__(self, *, cap: float) -> None:
        super().__init__(f'The exploration cap must be positive, got {cap!r}.')
        self.cap: float = cap
