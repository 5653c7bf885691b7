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
from utils import Context

from .motifs import motif_significance

__all__: Tuple[str, ...] = ('setup',)

MOTIF_FILE: str = 'motif.json'
ENSEMBLE_FILE: str = 'ensemble.csv'


def motif_test(
    ctx: typer.Context,
    graph_dir: Optional[pathlib.Path] = typer.Option(None, '--graph', '-g', help='The graph snapshot directory.'),
    replicates: Optional[int] = typer.Option(None, '--replicates', '-n', min=1, help='The rewired ensemble size.'),
    seed: Optional[int] = typer.Option(None, '--seed', help='The base seed of the ensemble.'),
) -> None:
    """Test whether the triangle is a motif of the graph against a degree preserving ensemble."""
    context = Context.from_typer(ctx)
    engine = context.engine
    config = engine.configure(motif_replicates=replicates, seed=seed)

    directory = context.snapshot_dir(graph_dir)
    graph = engine.load_graph(directory)

    with engine.stage('motif test'):
        verdict = motif_significance(
            graph,
            replicates=config.motif_replicates,
            p=config.motif_p,
            u=config.motif_u,
            d=config.motif_d,
            seed=config.seed,
            direction=config.motif_direction,
            swaps_per_edge=config.swaps_per_edge,
            executor=engine.executor,
        )

    with context.writer(inputs=snapshot_paths(directory)) as writer:
        writer.write_json(MOTIF_FILE, verdict.to_dict())
        writer.write_rows(ENSEMBLE_FILE, verdict.csv_rows())

    significant, frequent, large_effect = verdict.conditions
    context.echo(
        f'Triangle motif: {context.tick(verdict.is_motif)} '
        f'(f_real={verdict.f_real}, f_rand={verdict.f_rand_mean:.2f}, '
        f'{context.tick(significant, "significant")}, {context.tick(frequent, "frequent")}, '
        f'{context.tick(large_effect, "large effect")})'
    )


def setup(app: typer.Typer) -> None:
    app.command('motif-test')(motif_test)
