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
from typing import List, Optional, Tuple

import typer

from stages.corpus.snapshot import snapshot_paths
from stages.teams.recognition import team_count_scan
from utils import Context, FamiliarityMode

from .centers import Clustering, assign_clusters, decision_regions, region_counts, select_centers
from .cutoff import occupancy_scan, resolve_cutoff, scan_csv_rows, suggest_dc
from .peaks import density_profile

__all__: Tuple[str, ...] = ('setup',)

SCAN_FILE: str = 'dc_scan.csv'
DECISION_GRAPH_FILE: str = 'decision_graph.csv'
CLUSTERING_FILE: str = 'clustering.json'
DISTANCES_FILE: str = 'distances.csv'


def suggest_dc_command(
    ctx: typer.Context,
    graph_dir: Optional[pathlib.Path] = typer.Option(None, '--graph', '-g', help='The graph snapshot directory.'),
    scan: Optional[str] = typer.Option(None, '--scan', help='The candidates to try, as start:stop:step.'),
    band: Optional[str] = typer.Option(None, '--band', help='The target occupancy band, as low-high.'),
    teams: bool = typer.Option(False, '--teams', help='Also count the recognized teams at every candidate.'),
) -> None:
    """Scan candidate cutoff distances and suggest the one landing in the occupancy band."""
    context = Context.from_typer(ctx)
    engine = context.engine
    config = engine.override(dc_scan=scan, occupancy_band=band)

    directory = context.snapshot_dir(graph_dir)
    graph = engine.load_graph(directory)
    distances = engine.distances(graph)

    candidates = config.dc_candidates
    with engine.stage('occupancy scan'):
        rows = occupancy_scan(distances, candidates, config.occupancy_band)
        chosen = suggest_dc(rows, config.occupancy_band)

    counts: List[int] = []
    if teams:
        triangles = engine.triangles(graph) if config.familiarity is FamiliarityMode.higher_order else None
        with engine.stage('team count scan'):
            counts = team_count_scan(
                graph, candidates, config, distances=distances, triangles=triangles, executor=engine.executor
            )

    with context.writer(inputs=snapshot_paths(directory)) as writer:
        writer.write_rows(SCAN_FILE, scan_csv_rows(rows, counts))

    in_band = sum(1 for row in rows if row.in_band)
    context.echo(f'Suggested d_c={chosen} ({in_band} of {len(rows)} candidates in band)')


def cluster(
    ctx: typer.Context,
    graph_dir: Optional[pathlib.Path] = typer.Option(None, '--graph', '-g', help='The graph snapshot directory.'),
    d_c: Optional[str] = typer.Option(None, '--d-c', help='The cutoff distance, a number, auto or preset.'),
    centers: Optional[str] = typer.Option(None, '--centers', help='The center policy, k:N, threshold:G or auto.'),
    dump_distances: bool = typer.Option(False, '--dump-distances', help='Also write the bounded distances.'),
) -> None:
    """Score every scholar on the decision graph and cluster around the selected centers."""
    context = Context.from_typer(ctx)
    engine = context.engine
    config = engine.override(d_c=d_c, center_policy=centers)

    directory = context.snapshot_dir(graph_dir)
    graph = engine.load_graph(directory)
    distances = engine.distances(graph)

    with engine.stage('density peaks'):
        cutoff = resolve_cutoff(config, distances)
        profile = density_profile(distances, cutoff, executor=engine.executor)
        selected = select_centers(profile, config.center_policy)
        clustering = assign_clusters(selected, distances) if selected else Clustering(centers=(), assignment={})
        regions = decision_regions(profile, selected)

    with context.writer(inputs=snapshot_paths(directory)) as writer:
        writer.write_rows(DECISION_GRAPH_FILE, profile.csv_rows(selected, regions))
        writer.write_json(CLUSTERING_FILE, {'d_c': cutoff, 'regions': region_counts(regions), **clustering.to_dict()})
        if dump_distances:
            writer.write_rows(DISTANCES_FILE, distances.csv_rows())

    context.echo(
        f'{len(selected)} centers at d_c={cutoff}, {len(clustering.assignment)} scholars assigned, '
        f'{len(clustering.unassigned)} unassigned'
    )


def setup(app: typer.Typer) -> None:
    app.command('suggest-dc')(suggest_dc_command)
    app.command('cluster')(cluster)
