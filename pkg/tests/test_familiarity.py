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

import random
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Tuple

import networkx as nx
import numpy as np
import pytest
from conftest import complete_graph, path_graph, random_graph, two_cliques_and_path

from stages.corpus.graph import CollaborationGraph
from stages.familiarity.errors import EmptyTeam, InvalidEnsemble
from stages.familiarity.measures import familiarity_function, higher_order_familiarity, pairwise_familiarity
from stages.familiarity.motifs import motif_significance, rewire_preserving_degrees
from stages.familiarity.triangles import enumerate_triangles
from utils import FamiliarityMode, MotifDirection


def _matrix_triangles(graph: CollaborationGraph) -> Tuple[int, Dict[str, int]]:
    adjacency = nx.to_numpy_array(graph.to_networkx(), nodelist=list(graph.nodes), weight=None)
    closed = np.diag(np.linalg.matrix_power(adjacency, 3))
    per_node = {node: int(round(closed[position] / 2)) for position, node in enumerate(graph.nodes)}
    return int(round(closed.sum() / 6)), per_node


def test_triangles_of_k4() -> None:
    index = enumerate_triangles(complete_graph(4))

    assert len(index) == 4
    assert index.count('k0') == 3
    assert index.partners('k0') == {'k1', 'k2', 'k3'}


def test_triangles_of_path() -> None:
    index = enumerate_triangles(path_graph(6))

    assert len(index) == 0
    assert index.count('v001') == 0
    assert not index.pair_in_triangle('v000', 'v001')


@pytest.mark.parametrize('seed', range(30))
def test_triangles_match_adjacency_cube(seed: int) -> None:
    graph = random_graph(seed, 30 + (seed * 13) % 121, 0.1)
    index = enumerate_triangles(graph)
    total, per_node = _matrix_triangles(graph)

    assert len(index) == total
    assert sum(index.per_node_count.values()) == 3 * len(index)
    for node in graph.nodes:
        assert index.count(node) == per_node[node]
    for a, b, c in index.triangles:
        assert a < b < c


def test_triangles_independent_of_executor() -> None:
    graph = random_graph(3, 600, 0.01)

    with ThreadPoolExecutor(max_workers=4) as executor:
        threaded = enumerate_triangles(graph, executor=executor)

    assert threaded.triangles == enumerate_triangles(graph).triangles


def test_triangle_index_within() -> None:
    index = enumerate_triangles(complete_graph(5))
    inner = index.within({'k0', 'k1', 'k2', 'k3'})

    assert len(index) == 10
    assert len(inner) == 4


def test_familiarity_on_path() -> None:
    graph = CollaborationGraph.from_edges([('a', 'b', 0.3), ('b', 'c', 0.3)])
    triangles = enumerate_triangles(graph)
    team = {'a', 'b', 'c'}

    assert pairwise_familiarity('b', team, graph) == 2
    assert higher_order_familiarity('b', team, triangles) == 0


def test_familiarity_on_triangle() -> None:
    graph = CollaborationGraph.from_edges([('a', 'b', 0.3), ('b', 'c', 0.3), ('a', 'c', 0.3)])
    triangles = enumerate_triangles(graph)
    team = {'a', 'b', 'c'}

    assert pairwise_familiarity('a', team, graph) == 2
    assert higher_order_familiarity('a', team, triangles) == 2


def test_familiarity_excludes_the_node_itself() -> None:
    graph = complete_graph(3)
    assert pairwise_familiarity('k0', {'k0'}, graph) == 0


@pytest.mark.parametrize('seed', range(100))
def test_higher_order_never_exceeds_pairwise(seed: int) -> None:
    graph = random_graph(seed, 30, 0.2)
    triangles = enumerate_triangles(graph)
    rng = random.Random(seed)
    teams = [set(rng.sample(graph.nodes, rng.randint(1, 12))) for _ in range(3)]

    for team in teams:
        for node in graph.nodes:
            higher = higher_order_familiarity(node, team, triangles)
            pairwise = pairwise_familiarity(node, team, graph)
            assert higher <= pairwise <= len(team - {node})


def test_familiarity_empty_team() -> None:
    graph = complete_graph(3)

    with pytest.raises(EmptyTeam):
        pairwise_familiarity('k0', set(), graph)
    with pytest.raises(EmptyTeam):
        higher_order_familiarity('k0', set(), enumerate_triangles(graph))


def test_restricted_triangles() -> None:
    graph = complete_graph(4)
    triangles = enumerate_triangles(graph)
    team = {'k0', 'k1'}

    unrestricted = familiarity_function(FamiliarityMode.higher_order, graph=graph, triangles=triangles)
    restricted = familiarity_function(
        FamiliarityMode.higher_order, graph=graph, triangles=triangles, restrict_triangles=True
    )

    assert unrestricted('k0', team) == 1
    assert restricted('k0', team) == 0


@pytest.mark.parametrize('seed', range(3))
def test_rewiring_preserves_degrees(seed: int) -> None:
    graph = random_graph(seed, 40, 0.12)
    rewired = rewire_preserving_degrees(graph, seed)

    assert rewired.nodes == graph.nodes
    assert rewired.edge_count == graph.edge_count
    for node in graph.nodes:
        assert rewired.degree(node) == graph.degree(node)


def test_rewiring_is_seeded() -> None:
    graph = random_graph(5, 40, 0.12)

    assert rewire_preserving_degrees(graph, 9) == rewire_preserving_degrees(graph, 9)


def test_rewiring_small_graph_unchanged() -> None:
    graph = path_graph(3)
    assert rewire_preserving_degrees(graph, 0) is graph


def test_rewiring_invalid_swaps() -> None:
    with pytest.raises(InvalidEnsemble):
        rewire_preserving_degrees(path_graph(5), 0, swaps_per_edge=0)


def test_motif_two_cliques_and_path() -> None:
    verdict = motif_significance(two_cliques_and_path(), replicates=100, seed=0)

    assert verdict.f_real == 8
    assert verdict.f_rand_mean < verdict.f_real
    assert verdict.is_motif


def test_motif_complete_graph_has_no_effect() -> None:
    verdict = motif_significance(complete_graph(6), replicates=20, seed=0)

    assert verdict.f_real == 20
    assert set(verdict.ensemble) == {20}
    assert verdict.p_estimate == 0.0
    assert verdict.conditions == (True, True, False)
    assert not verdict.is_motif


def test_motif_triangle_free_graph_is_not_frequent() -> None:
    verdict = motif_significance(path_graph(12), replicates=10, seed=0)

    assert verdict.f_real == 0
    assert not verdict.frequent
    assert not verdict.is_motif


def test_motif_direction_flips_frequency() -> None:
    verdict = motif_significance(path_graph(12), replicates=5, seed=0, direction=MotifDirection.at_most)
    assert verdict.frequent


def test_motif_independent_of_executor() -> None:
    graph = random_graph(2, 30, 0.2)
    serial = motif_significance(graph, replicates=12, seed=4)

    with ThreadPoolExecutor(max_workers=4) as executor:
        threaded = motif_significance(graph, replicates=12, seed=4, executor=executor)

    assert serial == threaded


def test_motif_invalid_replicates() -> None:
    with pytest.raises(InvalidEnsemble):
        motif_significance(complete_graph(4), replicates=0)
