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
from typing import Optional, Tuple

import typer

from stages.corpus.snapshot import snapshot_paths
from stages.teams.serialization import teams_file_name, teams_to_json
from utils import Context, TracIntensity

from .trac import TRAC_MODE, TracConfig, trac_recognize

__all__: Tuple[str, ...] = ('setup',)


def trac(
    ctx: typer.Context,
    graph_dir: Optional[pathlib.Path] = typer.Option(None, '--graph', '-g', help='The graph snapshot directory.'),
    w: Optional[float] = typer.Option(None, '--w', min=0, help='Edges below this intensity are deleted.'),
    phi_min: Optional[float] = typer.Option(None, '--phi-min', min=0, help='Nodes below this partnership are dropped.'),
    intensity: Optional[TracIntensity] = typer.Option(None, '--intensity', help='The edge intensity function.'),
) -> None:
    """Recognize teams with the simplified edge weight filtering baseline."""
    context = Context.from_typer(ctx)
    engine = context.engine
    config = engine.configure(trac_w=w, trac_phi_min=phi_min, trac_intensity=intensity)

    directory = context.snapshot_dir(graph_dir)
    graph = engine.load_graph(directory)

    with engine.stage('trac'):
        teams = trac_recognize(graph, TracConfig.from_run_config(config))

    with context.writer(inputs=snapshot_paths(directory)) as writer:
        writer.write_json(teams_file_name(TRAC_MODE), teams_to_json(teams))

    context.echo(f'Recognized {len(teams)} simplified TRAC teams with W={config.trac_w}')


def setup(app: typer.Typer) -> None:
    app.command('trac')(trac)
