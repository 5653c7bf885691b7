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
from typing import TYPE_CHECKING, Optional, Sequence, Tuple

import typer

from .files import ArtifactWriter

if TYPE_CHECKING:
    from engine import CohortEngine

    from .config import RunConfig

__all__: Tuple[str, ...] = ('Context',)


class Context:
    """The invocation context handed to every command.

    Parameters
    ----------
    engine: :class:`CohortEngine`
        The engine created by the root callback.
    command: :class:`str`
        The name of the running command.
    """

    __slots__: Tuple[str, ...] = ('engine', 'command')

    def __init__(self, engine: CohortEngine, *, command: str) -> None:
        self.engine: CohortEngine = engine
        self.command: str = command

    @classmethod
    def from_typer(cls, ctx: typer.Context) -> Context:
        return cls(ctx.ensure_object(_engine_type()), command=ctx.info_name or 'cohort')

    @property
    def config(self) -> RunConfig:
        """:class:`RunConfig`: The resolved configuration of this run."""
        return self.engine.config

    def writer(self, *, inputs: Sequence[pathlib.Path] = (), directory: Optional[pathlib.Path] = None) -> ArtifactWriter:
        """Opens an :class:`ArtifactWriter` for this command in the configured output directory."""
        return ArtifactWriter(
            directory or self.config.output_dir,
            command=self.command,
            config=self.config.resolved(),
            inputs=inputs,
        )

    def snapshot_dir(self, directory: Optional[pathlib.Path] = None) -> pathlib.Path:
        """Returns the graph snapshot directory a command reads, the output directory unless given."""
        return directory or self.config.output_dir

    @staticmethod
    def tick(opt: Optional[bool], label: Optional[str] = None) -> str:
        lookup = {
            True: 'yes',
            False: 'no',
            None: '?',
        }

        mark = lookup.get(opt, 'no')
        if label is not None:
            return f'{label}: {mark}'

        return mark

    def echo(self, message: str) -> None:
        """Prints the one line summary of the command to standard output."""
        typer.echo(message)


def _engine_type() -> type[CohortEngine]:
    from engine import CohortEngine

    return CohortEngine
