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

import networkx as nx
import pytest
from conftest import CLIQUE_COUNT, clique_members, planted_ring, random_graph

from stages.corpus.graph import CollaborationGraph
from stages.evaluation.metrics import evaluate_teams
from stages.teams.serialization import TeamRecord
from stages.trac.trac import TRAC_MODE, TracConfig, partnership_scores, trac_recognize
from utils import ArgumentError, RunConfig, TracIntensity, TracPartnership


def test_zero_threshold_gives_components() -> None:
    graph = random_graph(1, 60, 0.03)
    teams = trac_recognize(graph, TracConfig(w=0.0))

    expected = sorted(
        (tuple(sorted(component)) for component in nx.connected_components(graph.to_networkx()) if len(component) >= 2),
        key=lambda members: members[0],
    )
    assert [team.members for team in teams] == expected


def test_bridge_is_cut() -> None:
    graph = CollaborationGraph.from_edges(
        [('a', 'b', 0.1, 3), ('b', 'c', 0.1, 3), ('a', 'c', 0.1, 3), ('c', 'd', 0.8, 1), ('d', 'e', 0.1, 2)]
    )
    teams = trac_recognize(graph, TracConfig(w=2.0))

    assert [team.members for team in teams] == [('a', 'b', 'c'), ('d', 'e')]
    assert [team.team_id for team in teams] == [1, 2]


def test_threshold_above_every_edge() -> None:
    assert trac_recognize(planted_ring(0, intra_co_count=3), TracConfig(w=10.0)) == []


def test_noise_corpus_keeps_bare_cliques() -> None:
    graph = planted_ring(2, pendants=2, intra_co_count=3)
    teams = trac_recognize(graph, TracConfig(w=2.0))

    assert [frozenset(team.members) for team in teams] == [clique_members(clique) for clique in range(CLIQUE_COUNT)]

    records = [TeamRecord(team_id=team.team_id, members=team.members, mode=TRAC_MODE) for team in teams]
    for item in evaluate_teams(records, graph):
        assert item.separability == pytest.approx(4 / 32)


@pytest.mark.parametrize('seed', range(3))
def test_raising_threshold_never_grows_teams(seed: int) -> None:
    graph = random_graph(seed, 60, 0.08)
    config = TracConfig(intensity=TracIntensity.closeness, w=0.2)
    stricter = TracConfig(intensity=TracIntensity.closeness, w=0.6)

    loose = {member for team in trac_recognize(graph, config) for member in team.members}
    tight = {member for team in trac_recognize(graph, stricter) for member in team.members}
    assert tight <= loose


def test_partnership_filter_drops_weak_nodes() -> None:
    graph = CollaborationGraph.from_edges([('a', 'b', 0.1, 4), ('b', 'c', 0.1, 4), ('c', 'd', 0.5, 1)])
    config = TracConfig(w=1.0, phi_min=2.0)

    assert partnership_scores(graph, config) == {'a': 4.0, 'b': 8.0, 'c': 5.0, 'd': 1.0}
    assert [team.members for team in trac_recognize(graph, config)] == [('a', 'b', 'c')]


def test_degree_partnership() -> None:
    graph = CollaborationGraph.from_edges([('a', 'b', 0.1, 4), ('b', 'c', 0.1, 4)])
    config = TracConfig(partnership=TracPartnership.degree)

    assert partnership_scores(graph, config) == {'a': 1.0, 'b': 2.0, 'c': 1.0}


def test_team_json_has_no_center() -> None:
    teams = trac_recognize(planted_ring(0, intra_co_count=3), TracConfig(w=2.0))
    entry = teams[0].to_dict()

    assert entry['mode'] == TRAC_MODE
    assert entry['center'] is None
    assert entry['rho_threshold'] is None


def test_from_run_config() -> None:
    config = TracConfig.from_run_config(RunConfig(trac_w=3.0, trac_intensity=TracIntensity.closeness))

    assert config.w == 3.0
    assert config.intensity is TracIntensity.closeness


def test_negative_threshold() -> None:
    with pytest.raises(ArgumentError):
        TracConfig(w=-1.0)
