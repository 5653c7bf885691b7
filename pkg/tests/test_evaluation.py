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
from typing import Any, Dict, List, Sequence

import numpy as np
import orjson
import pytest
from conftest import CLIQUE_COUNT, complete_graph, planted_ring

from stages.corpus.graph import CollaborationGraph
from stages.corpus.records import PublicationRecord
from stages.evaluation.errors import EmptyMembers, SummaryFileError, UnknownMember
from stages.evaluation.metrics import ccr, evaluate_teams, metrics_csv_rows, separability, team_citation, team_triangles
from stages.evaluation.reports import (
    build_report,
    coauthor_distribution,
    interagency_report,
    is_interagency,
    load_summary,
    render_report,
    summarize,
    top_quantile_report,
)
from stages.familiarity.triangles import enumerate_triangles
from stages.teams.recognition import recognize
from stages.teams.serialization import TeamRecord
from stages.trac.trac import TRAC_MODE, TracConfig, trac_recognize
from utils import CenterPolicy, FamiliarityMode, RunConfig


def _team(team_id: int, *members: str, mode: str = 'higher-order') -> TeamRecord:
    return TeamRecord(team_id=team_id, members=tuple(sorted(members)), mode=mode)


def _papers(*author_counts: int) -> List[PublicationRecord]:
    return [
        PublicationRecord(paper_id=f'p{index}', year=2008, authors=tuple(f'a{author}' for author in range(count)))
        for index, count in enumerate(author_counts)
    ]


def test_ccr_triangle() -> None:
    graph = complete_graph(3, 0.4)
    assert ccr({'k0', 'k1', 'k2'}, graph) == (pytest.approx(0.4), False)


def test_ccr_path() -> None:
    graph = CollaborationGraph.from_edges([('a', 'b', 0.5), ('b', 'c', 0.5)])

    assert ccr({'a', 'b', 'c'}, graph) == (1.0, False)
    assert ccr({'a', 'b', 'c'}, graph, hops=True) == (2.0, False)


def test_ccr_singleton() -> None:
    assert ccr({'k0'}, complete_graph(3)) == (0.0, False)


def test_ccr_stays_inside_the_team() -> None:
    graph = CollaborationGraph.from_edges([('a', 'x', 0.1), ('x', 'b', 0.1), ('a', 'b', 0.9)])
    assert ccr({'a', 'b'}, graph) == (pytest.approx(0.9), False)


def test_ccr_disconnected() -> None:
    graph = CollaborationGraph.from_edges([('a', 'b', 0.3), ('b', 'x', 0.3), ('x', 'c', 0.3), ('c', 'd', 0.4)])
    radius, disconnected = ccr({'a', 'b', 'c', 'd'}, graph)

    assert disconnected
    assert radius == pytest.approx(0.4)


def test_ccr_empty() -> None:
    with pytest.raises(EmptyMembers):
        ccr(set(), complete_graph(3))


def test_team_triangles() -> None:
    graph = complete_graph(4)
    triangles = enumerate_triangles(graph)

    assert team_triangles({'k0', 'k1', 'k2', 'k3'}, triangles) == 4
    assert team_triangles({'k0', 'k1'}, triangles) == 0


def test_separability() -> None:
    graph = CollaborationGraph.from_edges([('A', 'B', 0.2), ('A', 'X', 0.2)])

    assert separability({'A', 'B'}, graph) == 0.5
    assert separability({'A', 'B', 'X'}, graph) == 0.0


def test_separability_isolated_member() -> None:
    graph = CollaborationGraph.from_edges([('A', 'B', 0.2)], nodes=['Z'])
    assert separability({'Z'}, graph) == 0.0


def test_team_citation() -> None:
    graph = CollaborationGraph.from_edges([('a', 'b', 0.2)], citations={'a': 10, 'b': 20})
    assert team_citation({'a', 'b'}, graph.profiles) == 15.0


def test_evaluate_teams_unknown_member() -> None:
    with pytest.raises(UnknownMember):
        evaluate_teams([_team(1, 'k0', 'ghost')], complete_graph(3))


def test_evaluate_teams_keeps_order() -> None:
    graph = complete_graph(5)
    metrics = evaluate_teams([_team(7, 'k3', 'k4'), _team(2, 'k0', 'k1', 'k2')], graph)

    assert [item.team_id for item in metrics] == [7, 2]
    assert metrics[1].triangles == 1

    rows = list(metrics_csv_rows(metrics))
    assert rows[0][0] == 'team_id'
    assert len(rows) == 3


def _institution_graph() -> CollaborationGraph:
    return CollaborationGraph.from_edges(
        [('a', 'b', 0.2), ('c', 'd', 0.2), ('e', 'f', 0.2)],
        institutions={'a': ['mit'], 'b': ['cmu'], 'c': ['mit'], 'd': ['mit'], 'e': ['unknown'], 'f': ['mit']},
    )


def test_is_interagency() -> None:
    scholars = _institution_graph().profiles

    assert is_interagency(['a', 'b'], scholars)
    assert not is_interagency(['c', 'd'], scholars)
    assert not is_interagency(['e', 'f'], scholars)


def test_interagency_report() -> None:
    teams = [_team(1, 'a', 'b'), _team(2, 'c', 'd')]
    rows = interagency_report(teams, _institution_graph().profiles, (2, 3))

    assert [(row.size, row.teams, row.interagency) for row in rows] == [(2, 2, 1), (3, 0, 0)]
    assert rows[0].proportion == 0.5
    assert rows[1].proportion == 0.0


def test_top_quantile_of_one_is_everything() -> None:
    teams = [_team(1, 'a', 'b'), _team(2, 'c', 'd'), _team(3, 'e', 'f')]
    scholars = _institution_graph().profiles

    assert top_quantile_report(teams, scholars, {}, (2, 2), 1.0) == interagency_report(teams, scholars, (2, 2))


def test_top_quantile_keeps_most_cited() -> None:
    teams = [_team(1, 'a', 'b'), _team(2, 'c', 'd'), _team(3, 'e', 'f')]
    citations = {1: 5.0, 2: 50.0, 3: 1.0}
    rows = top_quantile_report(teams, _institution_graph().profiles, citations, (2, 2), 0.2)

    assert (rows[0].teams, rows[0].interagency) == (1, 0)


@pytest.mark.parametrize(
    ('counts', 'expected'),
    [
        ((1, 2, 2, 3), {'1': 0.25, '2': 0.5, '3': 0.25}),
        ((14,), {'10+': 1.0}),
        ((), {}),
        ((10, 9, 12, 1), {'1': 0.25, '9': 0.25, '10+': 0.5}),
    ],
)
def test_coauthor_distribution(counts: Sequence[int], expected: Dict[str, float]) -> None:
    result = coauthor_distribution(_papers(*counts))

    assert result == expected
    assert list(result) == list(expected)


def _summary(label: str) -> Dict[str, Any]:
    graph = _institution_graph()
    teams = [_team(1, 'a', 'b', mode=label), _team(2, 'c', 'd', mode=label)]
    metrics = evaluate_teams(teams, graph)
    return summarize(label, teams, metrics, graph.profiles, interagency_sizes=(2, 3), top_quantile_sizes=(2, 3))


def test_summarize() -> None:
    summary = _summary('trac')

    assert summary['label'] == 'trac'
    assert summary['overall'] == {
        'count': 2,
        'mean_size': 2.0,
        'mean_ccr': pytest.approx(0.2),
        'mean_triangles': 0.0,
        'mean_separability': 0.0,
        'mean_citation': 0.0,
        'disconnected': 0,
    }
    assert list(summary['by_size']) == ['2']
    assert summary['interagency'][0] == {'size': 2, 'teams': 2, 'interagency': 1, 'proportion': 0.5}


def test_build_and_render_report() -> None:
    report = build_report([_summary('higher-order'), _summary('trac')], {'1': 0.25, '2': 0.75})

    assert [method['label'] for method in report['methods']] == ['higher-order', 'trac']
    assert list(report['interagency']) == ['higher-order', 'trac']
    assert report['coauthors'] == {'1': 0.25, '2': 0.75}

    text = render_report(report)
    for title in ('Methods', 'Interagency teams by size', 'Interagency, most cited teams', 'Authors per paper'):
        assert title in text
    assert 'higher-order' in text


def test_render_report_without_coauthors() -> None:
    text = render_report(build_report([_summary('pairwise')]))
    assert 'Authors per paper' not in text


def test_load_summary(tmp_path: pathlib.Path) -> None:
    path = tmp_path / 'summary-trac.json'
    path.write_bytes(orjson.dumps(_summary('trac')))

    assert load_summary(path)['label'] == 'trac'


@pytest.mark.parametrize('payload', [b'[]', b'{"label": "x"}', b'{{'])
def test_load_summary_rejects(tmp_path: pathlib.Path, payload: bytes) -> None:
    path = tmp_path / 'summary.json'
    path.write_bytes(payload)

    with pytest.raises(SummaryFileError):
        load_summary(path)


def test_load_summary_missing(tmp_path: pathlib.Path) -> None:
    with pytest.raises(SummaryFileError):
        load_summary(tmp_path / 'absent.json')


def test_higher_order_trends_on_noisy_corpora() -> None:
    higher_separability: List[float] = []
    trac_separability: List[float] = []
    higher_sizes: List[int] = []
    pairwise_sizes: List[int] = []

    for seed in range(20):
        graph = planted_ring(seed, pendants=2, intra_co_count=3)
        config = RunConfig(d_c=0.5, center_policy=CenterPolicy.top_k(CLIQUE_COUNT))
        higher = recognize(graph, config)
        pairwise = recognize(graph, config.replace(familiarity=FamiliarityMode.pairwise))
        trac = trac_recognize(graph, TracConfig(w=2.0))

        higher_records = [TeamRecord(team_id=team.team_id, members=team.members, mode=team.mode) for team in higher]
        trac_records = [TeamRecord(team_id=team.team_id, members=team.members, mode=TRAC_MODE) for team in trac]
        higher_separability.extend(item.separability for item in evaluate_teams(higher_records, graph))
        trac_separability.extend(item.separability for item in evaluate_teams(trac_records, graph))
        higher_sizes.extend(team.size for team in higher)
        pairwise_sizes.extend(team.size for team in pairwise)

    assert np.mean(higher_separability) <= np.mean(trac_separability)
    assert np.mean(higher_sizes) <= np.mean(pairwise_sizes)
