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
import pathlib
from typing import List, Optional, Sequence, Tuple

import typer

from stages.evaluation.reports import coauthor_distribution
from utils import RUNNING_DEVELOPMENT, Context, UsageException

from .errors import CorpusException
from .graph import build_graph, largest_component
from .profile import profile
from .records import (
    PublicationRecord,
    career_spans,
    filter_fields,
    filter_scholars,
    filter_window,
    plan_windows,
    read_publications,
)
from .snapshot import snapshot_paths, write_snapshot

__all__: Tuple[str, ...] = ('setup',)

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)

REJECTED_FILE: str = 'rejected.tsv'
COAUTHORS_FILE: str = 'coauthors.json'
PROFILE_FILE: str = 'profile.json'


def _span(records: Sequence[PublicationRecord]) -> Tuple[int, int]:
    if not records:
        raise CorpusException('The corpus has no publication records to build a graph from.')

    years = [record.year for record in records]
    return min(years), max(years)


def ingest(
    ctx: typer.Context,
    source: Optional[pathlib.Path] = typer.Option(
        None, '--input', '-i', exists=True, dir_okay=False, help='The JSON lines publication file.'
    ),
    window: Optional[str] = typer.Option(None, '--window', help='The analysis window, as start-end.'),
    all_windows: bool = typer.Option(False, '--all-windows', help='Build one snapshot per staggered window.'),
) -> None:
    """Parse publications and write the collaboration graph snapshot of a window."""
    context = Context.from_typer(ctx)
    config = context.engine.override(window=window)
    if source is not None:
        config = context.engine.configure(input=source)
    if config.input is None:
        raise UsageException('ingest needs a publication file, pass --input or set input.')

    engine = context.engine
    with engine.stage('parse'):
        parsed = read_publications(config.input, year_bounds=(config.year_min, config.year_max))

    records = filter_fields(parsed.records, config.fields)
    retained = filter_scholars(records, config.min_career_years)
    spans = career_spans(records)

    windows: Sequence[Tuple[int, int]]
    if all_windows:
        first, last = _span(records)
        windows = plan_windows(first, last, length=config.window_length, stride=config.window_stride)
        _log.info('Planned %s analysis windows between %s and %s', len(windows), first, last)
    else:
        windows = [config.window or _span(records)]

    summaries: List[str] = []
    with context.writer(inputs=[config.input]) as writer:
        if parsed.rejected:
            writer.write_rows(
                REJECTED_FILE, ([str(line.line_number), line.reason] for line in parsed.rejected), delimiter='\t'
            )

        for start, end in windows:
            window_records = filter_window(records, start, end)
            with engine.stage(f'build graph {start}-{end}'):
                graph = largest_component(build_graph(window_records, retained, career_spans=spans))

            prefix = f'{start}-{end}/' if all_windows else ''
            write_snapshot(graph, writer, prefix=prefix)
            writer.write_json(f'{prefix}{COAUTHORS_FILE}', coauthor_distribution(window_records))
            summaries.append(f'{start}-{end}: {graph.node_count} scholars, {graph.edge_count} edges')

    context.echo(f'Ingested {len(parsed)} records ({parsed.reject_count} rejected); ' + '; '.join(summaries))


def profile_command(
    ctx: typer.Context,
    graph_dir: Optional[pathlib.Path] = typer.Option(None, '--graph', '-g', help='The graph snapshot directory.'),
) -> None:
    """Compute the network profile of a graph snapshot."""
    context = Context.from_typer(ctx)
    directory = context.snapshot_dir(graph_dir)
    graph = context.engine.load_graph(directory)

    with context.engine.stage('profile'):
        result = profile(graph, triangles=context.engine.triangles(graph))

    with context.writer(inputs=snapshot_paths(directory)) as writer:
        writer.write_json(PROFILE_FILE, result.to_dict())

    context.echo(
        f'{result.node_count} scholars, {result.edge_count} edges, {result.triangle_count} triangles, '
        f'clustering {result.clustering_coefficient:.4f}'
    )


def setup(app: typer.Typer) -> None:
    app.command('ingest')(ingest)
    app.command('profile')(profile_command)
