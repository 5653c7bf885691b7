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

__all__: Tuple[str, ...] = ('MotifException', 'EmptyTeam', 'InvalidEnsemble')


class MotifException(DataException):
    """The base exception all familiarity and motif exceptions inherit from."""


class EmptyTeam(MotifException, ArgumentError):
    """Exception raised when familiarity is asked for against an empty team."""

    def __init__(self) -> None:
        super().__init__('Familiarity needs a non-empty team.')


class InvalidEnsemble(MotifException, ArgumentError):
    def __init__(self, message: str) -> None:
        super().__init__(message)
