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

__all__: Tuple[str, ...] = (
    'CorpusException',
    'CorpusReadError',
    'MalformedRecord',
    'InvertedWindow',
    'UnknownScholar',
    'SnapshotError',
    'InvalidEdge',
)


class CorpusException(DataException):
    """The base exception all corpus exceptions inherit from."""


class CorpusReadError(CorpusException):
    """Exception raised when the publication stream can not be read."""


class MalformedRecord(CorpusException):
    """Exception raised when one line of the publication stream is not a valid record.

    Attributes
    ----------
    line_number: :class:`int`
        The 1-based line the record was read from.
    reason: :class:`str`
        Why the record was rejected.
    """

    def __init__(self, *, line_number: int, reason: str) -> None:
        super().__init__(f'Line {line_number}: {reason}', line_number)
        self.line_number: int = line_number
        self.reason: str = reason


class InvertedWindow(CorpusException, ArgumentError):
    def __init__(self, *, start_year: int, end_year: int) -> None:
        super().__init__(f'Window start {start_year} is after its end {end_year}.')
        self.start_year: int = start_year
        self.end_year: int = end_year


class UnknownScholar(CorpusException, ArgumentError):
    """Exception raised when a scholar id is not a node of the graph."""

    def __init__(self, *, scholar_id: str) -> None:
        super().__init__(f'Scholar {scholar_id!r} is not in the graph.')
        self.scholar_id: str = scholar_id


class SnapshotError(CorpusException):
    """Exception raised when a graph snapshot on disk is missing or corrupt."""


class InvalidEdge(CorpusException, ArgumentError):
    """Exception raised when an edge would break the collaboration graph's invariants,
    such as a self-loop, a duplicate or an unknown endpoint."""

    def __init__(self, *, edge: Tuple[str, str], reason: str) -> None:
        super().__init__(f'Edge {edge[0]!r} - {edge[1]!r} is invalid: {reason}.')
        self.edge: Tuple[str, str] = edge
        self.reason: str = reason
