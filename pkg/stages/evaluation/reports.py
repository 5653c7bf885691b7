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

import dataclasses
import math
import pathlib
from collections import Counter, defaultdict
from typing import Any, DefaultDict, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, cast

import numpy as np
import orjson

from stages.corpus.graph import ScholarProfile
from stages.corpus.records import PublicationRecord
from stages.teams.serialization import TeamRecord
from stages.teams.team import UNKNOWN_INSTITUTION
from utils import load_json, make_table

from .errors import SummaryFileError
from .metrics import TeamMetrics

__all__: Tuple[str, ...] = (
    'InteragencyRow',
    'is_interagency',
    'interagency_report',
    'top_quantile_report',
    'coauthor_distribution',
    'summarize',
    'build_report',
    'render_report',
    'load_summary',
)

COAUTHOR_CAP: int = 10

_SUMMARY_KEYS: Tuple[str, ...] = ('label', 'overall', 'interagency', 'top_quantile')


@dataclasses.dataclass(frozen=True, kw_only=True)
class InteragencyRow:
    """How many teams of one size span several institutions.

    Attributes
    ----------
    size: :class:`int`
        The team size.
    teams: :class:`int`
        The number of teams of that size considered.
    interagency: :class:`int`
        How many of them span at least two known institutions.
    """

    size: int
    teams: int
    interagency: int

    @property
    def proportion(self) -> float:
        return self.interagency / self.teams if self.teams else 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {'size': self.size, 'teams': self.teams, 'interagency': self.interagency, 'proportion': self.proportion}


def is_interagency(members: Iterable[str], scholars: Mapping[str, ScholarProfile]) -> bool:
    """Whether the members belong to at least two known institutions between them."""
    institutions: Set[str] = set()
    for member in members:
        profile = scholars.get(member)
        if profile is not None:
            institutions.update(profile.institutions)

    institutions.discard(UNKNOWN_INSTITUTION)
    return len(institutions) >= 2


def _sizes(size_range: Tuple[int, int]) -> range:
    return range(size_range[0], size_range[1] + 1)


def interagency_report(
    teams: Sequence[TeamRecord], scholars: Mapping[str, ScholarProfile], size_range: Tuple[int, int] = (2, 20)
) -> List[InteragencyRow]:
    """Returns the share of interagency teams for every size in ``size_range``, inclusive."""
    by_size: DefaultDict[int, List[TeamRecord]] = defaultdict(list)
    for team in teams:
        by_size[team.size].append(team)

    return [
        InteragencyRow(
            size=size,
            teams=len(by_size[size]),
            interagency=sum(1 for team in by_size[size] if is_interagency(team.members, scholars)),
        )
        for size in _sizes(size_range)
    ]


def top_quantile_report(
    teams: Sequence[TeamRecord],
    scholars: Mapping[str, ScholarProfile],
    citations: Mapping[int, float],
    size_range: Tuple[int, int] = (3, 8),
    quantile: float = 0.2,
) -> List[InteragencyRow]:
    """Like :func:`interagency_report`, restricted to the most cited teams of each size.

    Teams of one size are ranked by mean citation, descending, ties broken by team id,
    and the first ``ceil(quantile * count)`` are kept.

    Parameters
    ----------
    citations: Mapping[:class:`int`, :class:`float`]
        Team id to mean citation.
    quantile: :class:`float`
        The fraction of teams to keep per size, in ``(0, 1]``.
    """
    by_size: DefaultDict[int, List[TeamRecord]] = defaultdict(list)
    for team in teams:
        by_size[team.size].append(team)

    rows: List[InteragencyRow] = []
    for size in _sizes(size_range):
        ranked = sorted(by_size[size], key=lambda team: (-citations.get(team.team_id, 0.0), team.team_id))
        kept = ranked[: math.ceil(quantile * len(ranked))]
        rows.append(
            InteragencyRow(
                size=size,
                teams=len(kept),
                interagency=sum(1 for team in kept if is_interagency(team.members, scholars)),
            )
        )

    return rows


def _bucket(author_count: int) -> str:
    return f'{COAUTHOR_CAP}+' if author_count >= COAUTHOR_CAP else str(author_count)


def coauthor_distribution(records: Iterable[PublicationRecord]) -> Dict[str, float]:
    """Returns the fraction of papers per author count, counts from ten up sharing one bucket.

    Only buckets with at least one paper are present, in ascending author count.
    """
    counts = Counter(_bucket(len(record.authors)) for record in records)
    total = sum(counts.values())
    if not total:
        return {}

    ordered = sorted(counts, key=lambda bucket: int(bucket.rstrip('+')))
    return {bucket: counts[bucket] / total for bucket in ordered}


def _mean(values: Sequence[float]) -> float:
    return float(np.mean(values)) if values else 0.0


def _aggregate(metrics: Sequence[TeamMetrics]) -> Dict[str, Any]:
    return {
        'count': len(metrics),
        'mean_size': _mean([item.size for item in metrics]),
        'mean_ccr': _mean([item.ccr for item in metrics]),
        'mean_triangles': _mean([item.triangles for item in metrics]),
        'mean_separability': _mean([item.separability for item in metrics]),
        'mean_citation': _mean([item.mean_citation for item in metrics]),
        'disconnected': sum(1 for item in metrics if item.disconnected),
    }


def summarize(
    label: str,
    teams: Sequence[TeamRecord],
    metrics: Sequence[TeamMetrics],
    scholars: Mapping[str, ScholarProfile],
    *,
    interagency_sizes: Tuple[int, int] = (2, 20),
    top_quantile: float = 0.2,
    top_quantile_sizes: Tuple[int, int] = (3, 8),
) -> Dict[str, Any]:
    """Aggregates team metrics into the evaluation summary of one method.

    Parameters
    ----------
    label: :class:`str`
        The method label, such as ``higher-order`` or ``trac``.
    teams: Sequence[:class:`TeamRecord`]
        The evaluated teams.
    metrics: Sequence[:class:`TeamMetrics`]
        Their metrics, in the same order.
    scholars: Mapping[:class:`str`, :class:`ScholarProfile`]
        The scholar profiles of the graph.
    """
    by_size: DefaultDict[int, List[TeamMetrics]] = defaultdict(list)
    for item in metrics:
        by_size[item.size].append(item)

    citations = {item.team_id: item.mean_citation for item in metrics}
    return {
        'label': label,
        'overall': _aggregate(metrics),
        'by_size': {str(size): _aggregate(by_size[size]) for size in sorted(by_size)},
        'interagency': [row.to_dict() for row in interagency_report(teams, scholars, interagency_sizes)],
        'top_quantile': {
            'quantile': top_quantile,
            'rows': [
                row.to_dict()
                for row in top_quantile_report(teams, scholars, citations, top_quantile_sizes, top_quantile)
            ],
        },
    }


def build_report(
    summaries: Sequence[Mapping[str, Any]], coauthors: Optional[Mapping[str, float]] = None
) -> Dict[str, Any]:
    """Merges evaluation summaries of several methods into one comparison report."""
    methods: List[Dict[str, Any]] = []
    interagency: Dict[str, List[Dict[str, Any]]] = {}
    top_quantile: Dict[str, List[Dict[str, Any]]] = {}
    for summary in summaries:
        label = str(summary['label'])
        overall = summary['overall']
        methods.append(
            {
                'label': label,
                'teams': overall['count'],
                'mean_size': overall['mean_size'],
                'mean_ccr': overall['mean_ccr'],
                'mean_triangles': overall['mean_triangles'],
                'mean_separability': overall['mean_separability'],
                'mean_citation': overall['mean_citation'],
            }
        )
        interagency[label] = list(summary['interagency'])
        top_quantile[label] = list(summary['top_quantile']['rows'])

    return {
        'methods': methods,
        'interagency': interagency,
        'top_quantile': top_quantile,
        'coauthors': dict(coauthors or {}),
    }


def _fmt(value: float) -> str:
    return f'{value:.4f}'


def render_report(report: Mapping[str, Any]) -> str:
    """Renders a report from :func:`build_report` as plain text tables."""
    sections: List[str] = []

    method_rows = [
        [
            method['label'],
            method['teams'],
            _fmt(method['mean_size']),
            _fmt(method['mean_ccr']),
            _fmt(method['mean_triangles']),
            _fmt(method['mean_separability']),
        ]
        for method in report['methods']
    ]
    sections.append(
        'Methods\n'
        + make_table(method_rows, labels=['method', 'teams', 'mean size', 'mean CCR', 'mean triangles', 'separability'])
    )

    for key, title in (('interagency', 'Interagency teams by size'), ('top_quantile', 'Interagency, most cited teams')):
        tables: Mapping[str, List[Mapping[str, Any]]] = report[key]
        if not tables:
            continue

        labels = list(tables)
        sizes = [row['size'] for row in tables[labels[0]]]
        rows: List[List[Any]] = []
        for position, size in enumerate(sizes):
            rows.append([size] + [_fmt(tables[label][position]['proportion']) for label in labels])

        sections.append(f'{title}\n' + make_table(rows, labels=['size'] + labels))

    coauthors: Mapping[str, float] = report.get('coauthors') or {}
    if coauthors:
        sections.append(
            'Authors per paper\n'
            + make_table([[bucket, _fmt(share)] for bucket, share in coauthors.items()], labels=['authors', 'share'])
        )

    return '\n\n'.join(sections) + '\n'


def load_summary(path: pathlib.Path) -> Dict[str, Any]:
    """Reads an evaluation summary written by ``evaluate``.

    Raises
    ------
    SummaryFileError
        The file is missing, is not JSON or lacks a summary section.
    """
    try:
        raw = load_json(path)
    except OSError as exc:
        raise SummaryFileError(path, str(exc)) from exc
    except orjson.JSONDecodeError as exc:
        raise SummaryFileError(path, f'not valid JSON ({exc})') from exc

    if not isinstance(raw, dict):
        raise SummaryFileError(path, 'expected a JSON object')

    summary = cast(Dict[str, Any], raw)
    for key in _SUMMARY_KEYS:
        if key not in summary:
            raise SummaryFileError(path, f'missing "{key}"')

    return summary
