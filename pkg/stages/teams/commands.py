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
from utils import Context, FamiliarityMode

from .recognition import recognize
from .serialization import teams_file_name, teams_to_json

__all__: Tuple[str, ...] = ('setup',)

RECOGNITION_FILE: str = 'recognition.json'


def recognize_command(
    ctx: typer.Context,
    graph_dir: Optional[pathlib.Path] = typer.Option(None, '--graph', '-g', help='The graph snapshot directory.'),
    d_c: Optional[str] = typer.Option(None, '--d-c', help='The cutoff distance, a number, auto or preset.'),
    centers: Optional[str] = typer.Option(None, '--centers', help='The center policy, k:N, threshold:G or auto.'),
    familiarity: Optional[FamiliarityMode] = typer.Option(None, '--familiarity', '-f', help='The familiarity measure.'),
    min_team_size: Optional[int] = typer.Option(None, '--min-team-size', min=1, help='The smallest reported team.'),
) -> None:
    """Recognize academic teams: distances, density peak clustering, then border filtering."""
    context = Context.from_typer(ctx)
    engine = context.engine
    engine.override(d_c=d_c, center_policy=centers)
    config = engine.configure(familiarity=familiarity, min_team_size=min_team_size)

    directory = context.snapshot_dir(graph_dir)
    graph = engine.load_graph(directory)
    distances = engine.distances(graph)
    triangles = engine.triangles(graph) if config.familiarity is FamiliarityMode.higher_order else None

    with engine.stage('recognize'):
        result = recognize(graph, config, distances=distances, triangles=triangles, executor=engine.executor)

    with context.writer(inputs=snapshot_paths(directory)) as writer:
        writer.write_json(teams_file_name(config.familiarity.value), teams_to_json(result))
        writer.write_json(RECOGNITION_FILE, result.to_dict())

    context.echo(
        f'Recognized {len(result)} {config.familiarity.value} teams at d_c={result.d_c} '
        f'({len(result.isolated)} isolated, {len(result.dissolved)} dissolved)'
    )


def setup(app: typer.Typer) -> None:
    app.command('recognize')(recognize_command)
