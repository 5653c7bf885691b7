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

from utils import DataException

__all__: Tuple[str, ...] = ('TeamException', 'TeamsFileError')


class TeamException(DataException):
    """The base exception all team recognition exceptions inherit from."""


class TeamsFileError(TeamException):
    """Exception raised when a teams file can not be read back.

    Attributes
    ----------
    path: :class:`pathlib.Path`
        The offending file.
    """

    def __init__(self, path: pathlib.Path, reason: str) -> None:
        super().__init__(f'Teams file {path} is invalid: {reason}')
        self.path: pathlib.Path = path
