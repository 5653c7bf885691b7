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
from typing import List

import networkx as nx
import pytest
from conftest import planted_ring, random_graph, ring_publications, write_publications

from stages.corpus.errors import CorpusReadError, InvalidEdge, InvertedWindow, SnapshotError
from stages.corpus.graph import CollaborationGraph, Edge, ScholarProfile, build_graph, largest_component
from stages.corpus.profile import profile
from stages.corpus.records import (
    PublicationRecord,
    filter_fields,
    filter_scholars,
    filter_window,
    parse_publications,
    plan_windows,
    read_publications,
)
from stages.corpus.snapshot import read_snapshot, write_snapshot
from utils import ArtifactWriter


def _record(paper_id: str, year: int, *authors: str, fields: tuple[str, ...] = ()) -> PublicationRecord:
    return PublicationRecord(paper_id=paper_id, year=year, authors=authors, fields=fields)


def test_parse_single_record() -> None:
    result = parse_publications(['{"paper_id": "p1", "year": 2008, "authors": ["a", "b", "c"]}\n'])

    assert len(result) == 1
    assert result.records[0].authors == ('a', 'b', 'c')
    assert result.reject_count == 0


def test_parse_empty_stream() -> None:
    result = parse_publications([])

    assert len(result) == 0
    assert result.reject_count == 0


def test_parse_rejects_record_missing_year() -> None:
    lines = [
        '{"paper_id": "p1", "year": 2008, "authors": ["a"]}',
        '{"paper_id": "p2", "authors": ["b"]}',
        '{"paper_id": "p3", "year": 2009, "authors": ["c", "d"]}',
    ]
    result = parse_publications(lines)

    assert len(result) == 2
    assert result.reject_count == 1
    assert result.rejected[0].line_number == 2
    assert 'year' in result.rejected[0].reason


@pytest.mark.parametrize(
    'line',
    [
        'not json',
        '[1, 2]',
        '{"paper_id": "p", "year": 2008, "authors": []}',
        '{"paper_id": "p", "year": 2008, "authors": ["a", "a"]}',
        '{"paper_id": "p", "year": "2008", "authors": ["a"]}',
        '{"paper_id": "p", "year": 2008, "authors": ["a", "b"], "institutions": [["x"]]}',
        '{"paper_id": "p", "year": 2008, "authors": ["a"], "citations": -1}',
    ],
)
def test_parse_rejects_malformed_lines(line: str) -> None:
    result = parse_publications([line])

    assert len(result) == 0
    assert result.reject_count == 1


@pytest.mark.parametrize(
    'line',
    [
        r'{"paper_id": "p", "year": 2008, "authors": ["a", "b"], "institutions": [["mit;cmu"], ["x"]]}',
        r'{"paper_id": "p", "year": 2008, "authors": ["a", "b"], "institutions": [["mit\tcmu"], ["x"]]}',
        r'{"paper_id": "p", "year": 2008, "authors": ["a", "b"], "institutions": [["x"], ["mit\n"]]}',
        r'{"paper_id": "p", "year": 2008, "authors": ["a\tb", "c"]}',
    ],
)
def test_parse_rejects_snapshot_delimiters_in_ids(line: str) -> None:
    result = parse_publications([line])

    assert len(result) == 0
    assert result.reject_count == 1
    assert 'reserved character' in result.rejected[0].reason


def test_parse_accepts_separator_free_institutions() -> None:
    result = parse_publications(
        [r'{"paper_id": "p", "year": 2008, "authors": ["a", "b"], "institutions": [["mit", "cmu"], []]}']
    )

    assert result.reject_count == 0
    assert list(result)[0].institutions_of('a') == ('mit', 'cmu')


def test_parse_applies_year_bounds() -> None:
    result = parse_publications(['{"paper_id": "p", "year": 1990, "authors": ["a"]}'], year_bounds=(2000, 2020))
    assert result.reject_count == 1


def test_read_missing_file(tmp_path: pathlib.Path) -> None:
    with pytest.raises(CorpusReadError):
        read_publications(tmp_path / 'missing.jsonl')


def test_filter_window() -> None:
    records = [_record(f'p{year}', year, 'a') for year in range(2006, 2018)]

    assert [record.year for record in filter_window(records, 2006, 2009)] == [2006, 2007, 2008, 2009]
    assert [record.year for record in filter_window(records, 2010, 2010)] == [2010]
    assert filter_window([], 2006, 2009) == []


def test_filter_window_inverted() -> None:
    with pytest.raises(InvertedWindow):
        filter_window([], 2010, 2006)

    # also a ValueError for callers that only know the builtin
    with pytest.raises(ValueError):
        filter_window([], 2010, 2006)


def test_filter_fields() -> None:
    records = [_record('p1', 2008, 'a', fields=('databases',)), _record('p2', 2008, 'b', fields=('graphics',))]

    assert [record.paper_id for record in filter_fields(records, ['databases'])] == ['p1']
    assert len(filter_fields(records, [])) == 2


def test_filter_scholars() -> None:
    records = [
        _record('p1', 2006, 'long', 'short'),
        _record('p2', 2011, 'long'),
        _record('p3', 2008, 'single'),
    ]

    assert filter_scholars(records, 5) == {'long'}
    assert filter_scholars(records, 1) == {'long', 'short', 'single'}


def test_build_graph_full_overlap() -> None:
    graph = build_graph([_record('p1', 2008, 'A', 'B')], {'A', 'B'})

    edge = graph.edge('A', 'B')
    assert edge is not None
    assert edge.co_count == 1
    assert edge.weight == 0.0


def test_build_graph_disjoint_pairs() -> None:
    graph = build_graph([_record('p1', 2008, 'A', 'B'), _record('p2', 2008, 'C', 'D')], {'A', 'B', 'C', 'D'})

    assert graph.edge_count == 2
    assert len(list(nx.connected_components(graph.to_networkx()))) == 2


def test_build_graph_jaccard_weight() -> None:
    records = [
        _record('s1', 2008, 'A', 'B'),
        _record('s2', 2008, 'A', 'B'),
        _record('a3', 2008, 'A'),
        _record('b3', 2008, 'B'),
        _record('b4', 2009, 'B'),
    ]
    graph = build_graph(records, {'A', 'B'})

    edge = graph.edge('A', 'B')
    assert edge is not None
    assert edge.co_count == 2
    assert edge.weight == pytest.approx(0.6)
    assert graph.scholar('A').paper_count == 3
    assert graph.scholar('B').paper_count == 4


def test_build_graph_drops_unretained_and_duplicates() -> None:
    records = [
        _record('p1', 2008, 'A', 'B', 'X'),
        _record('p1', 2008, 'A', 'B', 'X'),
        _record('p2', 2008, 'X'),
    ]
    graph = build_graph(records, {'A', 'B'})

    assert graph.nodes == ('A', 'B')
    assert graph.scholar('A').paper_count == 1


def test_build_graph_matches_brute_force_counts() -> None:
    records = [
        _record(f'p{index}', 2008, *authors)
        for index, authors in enumerate([('A', 'B', 'C'), ('A', 'B'), ('B', 'C'), ('C', 'D'), ('A', 'D'), ('A', 'B')])
    ]
    graph = build_graph(records, {'A', 'B', 'C', 'D'})

    for edge in graph.edges:
        shared = sum(1 for record in records if edge.a in record.authors and edge.b in record.authors)
        assert edge.co_count == shared
        assert graph.scholar(edge.a).paper_count >= edge.co_count
        assert graph.scholar(edge.b).paper_count >= edge.co_count


def test_graph_rejects_self_loop() -> None:
    profile_a = ScholarProfile(scholar_id='A', paper_count=1)
    with pytest.raises(InvalidEdge):
        CollaborationGraph([profile_a], [Edge('A', 'A', 1, 0.0)])


def test_graph_rejects_unknown_endpoint() -> None:
    profile_a = ScholarProfile(scholar_id='A', paper_count=1)
    with pytest.raises(InvalidEdge):
        CollaborationGraph([profile_a], [Edge('A', 'B', 1, 0.0)])


def test_largest_component_by_size() -> None:
    edges = [('a', 'b', 0.1), ('b', 'c', 0.1), ('c', 'd', 0.1), ('d', 'e', 0.1), ('x', 'y', 0.1), ('y', 'z', 0.1)]
    graph = CollaborationGraph.from_edges(edges)

    assert largest_component(graph).nodes == ('a', 'b', 'c', 'd', 'e')


def test_largest_component_connected_identity(ring: CollaborationGraph) -> None:
    assert largest_component(ring) == ring


def test_largest_component_tie_break() -> None:
    edges = [('m', 'n', 0.1), ('n', 'o', 0.1), ('b', 'c', 0.1), ('a', 'b', 0.1)]
    graph = CollaborationGraph.from_edges(edges)

    assert largest_component(graph).nodes == ('a', 'b', 'c')


def test_largest_component_empty() -> None:
    graph = CollaborationGraph([], [])
    assert largest_component(graph).node_count == 0


def test_profile_triangle() -> None:
    graph = CollaborationGraph.from_edges([('a', 'b', 0.0), ('b', 'c', 0.0), ('a', 'c', 0.0)])
    result = profile(graph)

    assert result.node_count == 3
    assert result.edge_count == 3
    assert result.avg_co_times == 1.0
    assert result.avg_degree == 2.0
    assert result.triangle_count == 1
    assert result.clustering_coefficient == 1.0


def test_profile_single_edge() -> None:
    result = profile(CollaborationGraph.from_edges([('a', 'b', 0.0)]))

    assert result.triangle_count == 0
    assert result.clustering_coefficient == 0.0


def test_profile_empty() -> None:
    result = profile(CollaborationGraph([], []))

    assert result.to_dict() == {
        'node_count': 0,
        'edge_count': 0,
        'avg_co_times': 0.0,
        'avg_degree': 0.0,
        'triangle_count': 0,
        'clustering_coefficient': 0.0,
    }


@pytest.mark.parametrize('seed', range(5))
def test_profile_clustering_matches_networkx(seed: int) -> None:
    graph = random_graph(seed, 40, 0.15)
    result = profile(graph)
    oracle = graph.to_networkx()

    assert result.clustering_coefficient == pytest.approx(nx.average_clustering(oracle))
    assert result.triangle_count == sum(nx.triangles(oracle).values()) // 3
    assert result.avg_degree == pytest.approx(2 * graph.edge_count / graph.node_count)


def test_plan_windows() -> None:
    assert plan_windows(2006, 2017) == [(2006, 2009), (2008, 2011), (2010, 2013), (2012, 2015), (2014, 2017)]
    assert plan_windows(2006, 2008) == []

    with pytest.raises(InvertedWindow):
        plan_windows(2017, 2006)


def test_snapshot_round_trip(tmp_path: pathlib.Path) -> None:
    graph = planted_ring(3, institutions={'0-0': ['mit', 'cmu']}, citations={'1-1': 12})

    with ArtifactWriter(tmp_path, command='test', config={}) as writer:
        write_snapshot(graph, writer)

    assert read_snapshot(tmp_path) == graph


def test_snapshot_of_built_corpus(tmp_path: pathlib.Path) -> None:
    path = write_publications(tmp_path / 'corpus.jsonl', ring_publications())
    records = read_publications(path).records
    graph = largest_component(build_graph(records, filter_scholars(records)))

    with ArtifactWriter(tmp_path / 'out', command='test', config={}) as writer:
        write_snapshot(graph, writer)

    restored = read_snapshot(tmp_path / 'out')
    assert restored == graph
    assert restored.scholar('s0-0').institutions == frozenset({'inst-0'})


def test_snapshot_missing(tmp_path: pathlib.Path) -> None:
    with pytest.raises(SnapshotError):
        read_snapshot(tmp_path)


def test_snapshot_malformed_line(tmp_path: pathlib.Path) -> None:
    (tmp_path / 'nodes.tsv').write_text('a\t1\t\t0\n')
    (tmp_path / 'edges.tsv').write_text('a\tb\n')

    with pytest.raises(SnapshotError):
        read_snapshot(tmp_path)


def test_ring_corpus_graph_shape(corpus_file: pathlib.Path) -> None:
    records: List[PublicationRecord] = read_publications(corpus_file).records
    graph = build_graph(filter_window(records, 2006, 2009), filter_scholars(records))

    assert graph.node_count == 12
    # three K4s and three bridges
    assert graph.edge_count == 3 * 6 + 3
