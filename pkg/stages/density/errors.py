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

__all__: Tuple[str, ...] = ('DensityException', 'InvalidCutoff', 'CenterSelectionError')


class DensityException(DataException):
    """The base exception all density peak exceptions inherit from."""


class InvalidCutoff(DensityException, ArgumentError):
    def __init__(self, *, d_c: float) -> None:
        super().__init__(f'The cutoff distance must be positive, got {d_c!r}.')
        self.d_c: float = d_c


class CenterSelectionError(DensityException):
    """Exception raised when a center policy can not select any center.

    Attributes
    ----------
    policy: :class:`str`
        The policy that failed.
    """

    def __init__(self, message: str, *, policy: str) -> None:
        super().__init__(message)
        self.policy: str = policy
