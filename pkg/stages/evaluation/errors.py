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

import pathlib
from typing import Tuple

from utils import ArgumentError, DataException

__all__: Tuple[str, ...] = ('EvaluationException', 'UnknownMember', 'EmptyMembers', 'SummaryFileError')


class EvaluationException(DataException):
    """The base exception all evaluation exceptions inherit from."""


class UnknownMember(EvaluationException, ArgumentError):
    """Exception raised when a team lists a scholar the graph does not have.

    Attributes
    ----------
    team_id: :class:`int`
        The offending team.
    scholar_id: :class:`str`
        The unknown scholar.
    """

    def __init__(self, *, team_id: int, scholar_id: str) -> None:
        super().__init__(f'Team {team_id} lists {scholar_id!r}, which is not in the graph.')
        self.team_id: int = team_id
        self.scholar_id: str = scholar_id


class EmptyMembers(EvaluationException, ArgumentError):
    def __init__(self) -> None:
        super().__init__('Team metrics need at least one member.')


class SummaryFileError(EvaluationException):
    def __init__(self, path: pathlib.Path, reason: str) -> None:
        super().__init__(f'Evaluation summary {path} is invalid: {reason}')
        self.path: pathlib.Path = path
