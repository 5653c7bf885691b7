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

from typing import Any, ClassVar, Tuple

__all__: Tuple[str, ...] = (
    'CohortException',
    'UsageException',
    'ConfigError',
    'DataException',
    'ArgumentError',
    'InternalError',
)


class CohortException(Exception):
    """The base exception every exception raised by Cohort inherits from.

    Attributes
    ----------
    exit_code: :class:`int`
        The process exit code the command line front end reports when this
        exception escapes a command.
    """

    exit_code: ClassVar[int] = 3

    __slots__: Tuple[str, ...] = ()

    def __init__(self, *args: Any) -> None:
        super().__init__(*args)


class UsageException(CohortException):
    """An exception raised when a command was invoked incorrectly.

    This inherits :class:`CohortException`.
    """

    exit_code: ClassVar[int] = 1


class ConfigError(UsageException):
    """An exception raised when a configuration value is missing or out of range.

    This inherits :class:`UsageException`.

    Parameters
    ----------
    key: :class:`str`
        The configuration key that failed validation.
    reason: :class:`str`
        Why the value was rejected.

    Attributes
    ----------
    key: :class:`str`
        The configuration key that failed validation.
    """

    __slots__: Tuple[str, ...] = ('key',)

    def __init__(self, key: str, reason: str) -> None:
        super().__init__(f'Invalid value for "{key}": {reason}')
        self.key: str = key


class DataException(CohortException):
    """An exception raised when input data can not be processed.

    This inherits :class:`CohortException`.
    """

    exit_code: ClassVar[int] = 2


class ArgumentError(DataException, ValueError):
    """An exception raised when an operation's precondition is violated, for example
    when collaboration counts are inconsistent.

    This inherits :class:`DataException` and :class:`ValueError`.
    """


class InternalError(CohortException):
    """An exception raised when an invariant that should always hold is broken.

    This inherits :class:`CohortException`.
    """
