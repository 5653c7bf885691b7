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
import traceback
from collections import defaultdict
from typing import Any, DefaultDict, Dict, List, Optional, Tuple, Type, TypeAlias

import typer

from .errors import *

__all__: Tuple[str, ...] = (
    'ErrorHandler',
    'CommandLineError',
    'CommandLineUsageError',
    'EXIT_OK',
    'EXIT_USAGE',
    'EXIT_DATA',
    'EXIT_INTERNAL',
)

_log = logging.getLogger(__name__)

Traceback: TypeAlias = Dict[str, Any]

EXIT_OK: int = 0
EXIT_USAGE: int = 1
EXIT_DATA: int = 2
EXIT_INTERNAL: int = 3


def _parser_error(name: str) -> Type[Exception]:
    # typer only re-exports BadParameter; its bases are the parser's usage and root errors.
    for cls in typer.BadParameter.__mro__:
        if cls.__name__ == name and issubclass(cls, Exception):
            return cls

    raise ImportError(f'typer.BadParameter does not derive from {name}.')


CommandLineError: Type[Exception] = _parser_error('ClickException')
CommandLineUsageError: Type[Exception] = _parser_error('UsageError')


class PacketManager:
    """Keeps track of unexpected errors, grouped by their traceback text, so the same
    failure is only logged in full once per process.

    Attributes
    ----------
    errors: DefaultDict[:class:`str`, List[Dict[:class:`str`, Any]]]
        A mapping of tracebacks to their error information.
    """

    __slots__: Tuple[str, ...] = ('errors',)

    def __init__(self) -> None:
        self.errors: DefaultDict[str, List[Traceback]] = defaultdict(list)

    def add_error(self, *, error: BaseException, command: Optional[str] = None) -> None:
        """Add an error to the packet log. The traceback is only released to the log the
        first time it is seen.

        Parameters
        ----------
        error: :class:`BaseException`
            The error to add.
        command: Optional[:class:`str`]
            The command that raised the error, if any.
        """
        packet: Traceback = {'exception': error, 'command': command or 'no command'}

        traceback_string = ''.join(traceback.format_exception(type(error), error, error.__traceback__))
        seen = traceback_string in self.errors
        self.errors[traceback_string].append(packet)

        if not seen:
            _log.error('An unexpected error occurred in %s', packet['command'], exc_info=error)
        else:
            _log.debug('Error in %s already logged, %s occurrences', packet['command'], len(self.errors[traceback_string]))


class ErrorHandler:
    """Turns exceptions escaping a command into the documented exit codes.

    ``0`` success, ``1`` usage error, ``2`` data error and ``3`` internal error.
    """

    __slots__: Tuple[str, ...] = ('__packet_manager',)

    def __init__(self) -> None:
        self.__packet_manager: PacketManager = PacketManager()

    @property
    def packet_manager(self) -> PacketManager:
        return self.__packet_manager

    def handle(self, error: BaseException, *, command: Optional[str] = None) -> int:
        """Reports an error to the user and returns the exit code for it.

        Parameters
        ----------
        error: :class:`BaseException`
            The error that escaped the command.
        command: Optional[:class:`str`]
            The command that was running.

        Returns
        -------
        :class:`int`
            The process exit code.
        """
        while isinstance(error, CommandLineError) and isinstance(error.__cause__, CohortException):
            error = error.__cause__

        if isinstance(error, CommandLineError):
            typer.echo(f'Error: {error}', err=True)
            if isinstance(error, CommandLineUsageError):
                hint = f'cohort {command} --help' if command else 'cohort --help'
                typer.echo(f'Try "{hint}" for the available options.', err=True)
            return EXIT_USAGE

        if isinstance(error, typer.Exit):
            return error.exit_code

        if isinstance(error, typer.Abort):
            typer.echo('Aborted!', err=True)
            return EXIT_USAGE

        if isinstance(error, CohortException):
            _log.debug('Command %s failed with %s', command, type(error).__name__, exc_info=error)
            typer.echo(f'Error: {error}', err=True)

            if error.exit_code == EXIT_INTERNAL:
                self.__packet_manager.add_error(error=error, command=command)

            return error.exit_code

        self.__packet_manager.add_error(error=error, command=command)
        typer.echo(f'Error: an internal error occurred while running {command or "the command"}: {error}', err=True)
        return EXIT_INTERNAL
