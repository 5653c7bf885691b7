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
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, cast

import typer

from stages.corpus.snapshot import snapshot_paths
from stages.teams.serialization import TeamRecord, load_teams
from utils import Context, human_join, load_json

from .errors import SummaryFileError
from .metrics import evaluate_teams, metrics_csv_rows
from .reports import build_report, load_summary, render_report, summarize

__all__: Tuple[str, ...] = ('setup',)

REPORT_JSON_FILE: str = 'report.json'
REPORT_TEXT_FILE: str = 'report.txt'


def _label_for(teams: Sequence[TeamRecord], path: pathlib.Path) -> str:
    modes = {team.mode for team in teams}
    if len(modes) == 1:
        return modes.pop()

    return path.stem.removeprefix('teams-')


def evaluate(
    ctx: typer.Context,
    teams_path: pathlib.Path = typer.Option(
        ..., '--teams', '-t', exists=True, dir_okay=False, help='A teams file written by recognize or trac.'
    ),
    graph_dir: Optional[pathlib.Path] = typer.Option(None, '--graph', '-g', help='The graph snapshot directory.'),
    label: Optional[str] = typer.Option(None, '--label', help='The method label, the teams mode by default.'),
    hops: Optional[bool] = typer.Option(None, '--hops/--weighted', help='Measure CCR in hops instead of distance.'),
) -> None:
    """Compute CCR, triangles, separability and citations of every team."""
    context = Context.from_typer(ctx)
    engine = context.engine
    config = engine.configure(ccr_hops=hops)

    directory = context.snapshot_dir(graph_dir)
    graph = engine.load_graph(directory)
    teams = load_teams(teams_path)
    name = label or _label_for(teams, teams_path)

    with engine.stage('evaluate'):
        metrics = evaluate_teams(
            teams, graph, triangles=engine.triangles(graph), hops=config.ccr_hops, executor=engine.executor
        )
        summary = summarize(
            name,
            teams,
            metrics,
            graph.profiles,
            interagency_sizes=config.interagency_sizes,
            top_quantile=config.top_quantile,
            top_quantile_sizes=config.top_quantile_sizes,
        )

    with context.writer(inputs=[teams_path, *snapshot_paths(directory)]) as writer:
        writer.write_rows(f'metrics-{name}.csv', metrics_csv_rows(metrics))
        writer.write_json(f'summary-{name}.json', summary)

    overall = summary['overall']
    context.echo(
        f'Evaluated {overall["count"]} {name} teams: mean size {overall["mean_size"]:.2f}, '
        f'mean CCR {overall["mean_ccr"]:.4f}, mean separability {overall["mean_separability"]:.4f}'
    )


def report(
    ctx: typer.Context,
    summaries: List[pathlib.Path] = typer.Option(
        ..., '--summary', exists=True, dir_okay=False, help='An evaluation summary, may be repeated.'
    ),
    coauthors: Optional[pathlib.Path] = typer.Option(
        None, '--coauthors', exists=True, dir_okay=False, help='The co-author histogram written by ingest.'
    ),
) -> None:
    """Compare the evaluation summaries of several methods in one report."""
    context = Context.from_typer(ctx)

    loaded = [load_summary(path) for path in summaries]
    histogram: Optional[Mapping[str, float]] = None
    if coauthors is not None:
        raw: Any = load_json(coauthors)
        if not isinstance(raw, dict):
            raise SummaryFileError(coauthors, 'expected a JSON object of author count shares')

        values = cast(Dict[str, Any], raw)
        histogram = {str(bucket): float(share) for bucket, share in values.items()}

    result = build_report(loaded, histogram)
    inputs = [*summaries, coauthors] if coauthors is not None else list(summaries)
    with context.writer(inputs=inputs) as writer:
        writer.write_json(REPORT_JSON_FILE, result)
        writer.write_text(REPORT_TEXT_FILE, render_report(result))

    context.echo(f'Reported {len(loaded)} methods: ' + human_join(method['label'] for method in result['methods']))


def setup(app: typer.Typer) -> None:
    app.command('evaluate')(evaluate)
    app.command('report')(report)
