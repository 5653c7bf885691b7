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
import random
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import networkx as nx
import orjson
import pytest

from stages.corpus.graph import CollaborationGraph, EdgeTuple

CLIQUE_COUNT: int = 5
CLIQUE_SIZE: int = 8
INTRA_WEIGHT: float = 0.2
BRIDGE_WEIGHT: float = 0.9
PENDANT_WEIGHT: float = 0.35


def clique_members(clique: int, size: int = CLIQUE_SIZE) -> FrozenSet[str]:
    return frozenset(f'{clique}-{index}' for index in range(size))


def planted_ring(
    seed: int = 0,
    *,
    cliques: int = CLIQUE_COUNT,
    size: int = CLIQUE_SIZE,
    pendants: int = 0,
    intra_co_count: int = 1,
    institutions: Optional[Mapping[str, Iterable[str]]] = None,
    citations: Optional[Mapping[str, int]] = None,
) -> CollaborationGraph:
    """Builds a ring of cliques joined by one bridge between neighbouring cliques.

    Bridge endpoints are drawn from ``seed``. With ``pendants`` every clique also gets
    that many extra scholars hanging off random members.
    """
    rng = random.Random(seed)
    edges: List[EdgeTuple] = []
    for clique in range(cliques):
        members = sorted(clique_members(clique, size))
        for position, a in enumerate(members):
            for b in members[position + 1 :]:
                edges.append((a, b, INTRA_WEIGHT, intra_co_count))

    for clique in range(cliques):
        following = (clique + 1) % cliques
        a = f'{clique}-{rng.randrange(size)}'
        b = f'{following}-{rng.randrange(size)}'
        edges.append((a, b, BRIDGE_WEIGHT, 1))

    for clique in range(cliques):
        for index in range(pendants):
            edges.append((f'p{clique}-{index}', f'{clique}-{rng.randrange(size)}', PENDANT_WEIGHT, 1))

    return CollaborationGraph.from_edges(edges, institutions=institutions, citations=citations)


def random_graph(seed: int, nodes: int, probability: float) -> CollaborationGraph:
    """A seeded G(n, p) graph with weights drawn from ``[0.05, 0.95)``."""
    rng = random.Random(seed)
    topology = nx.gnp_random_graph(nodes, probability, seed=seed)
    edges: List[EdgeTuple] = [
        (f'n{a:03d}', f'n{b:03d}', round(rng.uniform(0.05, 0.95), 6)) for a, b in sorted(topology.edges())
    ]
    return CollaborationGraph.from_edges(edges, nodes=[f'n{index:03d}' for index in range(nodes)])


def two_cliques_and_path(path_length: int = 10) -> CollaborationGraph:
    """Two K4s joined through a path of ``path_length`` scholars."""
    edges: List[EdgeTuple] = []
    for prefix in ('a', 'b'):
        members = [f'{prefix}{index}' for index in range(4)]
        for position, a in enumerate(members):
            for b in members[position + 1 :]:
                edges.append((a, b, 0.3))

    path = [f'p{index:02d}' for index in range(path_length)]
    chain = ['a0', *path, 'b0']
    edges.extend((a, b, 0.5) for a, b in zip(chain, chain[1:]))
    return CollaborationGraph.from_edges(edges)


def complete_graph(size: int, weight: float = 0.3) -> CollaborationGraph:
    nodes = [f'k{index}' for index in range(size)]
    return CollaborationGraph.from_edges(
        [(a, b, weight) for position, a in enumerate(nodes) for b in nodes[position + 1 :]]
    )


def path_graph(size: int, weight: float = 0.5) -> CollaborationGraph:
    nodes = [f'v{index:03d}' for index in range(size)]
    return CollaborationGraph.from_edges([(a, b, weight) for a, b in zip(nodes, nodes[1:])])


def write_publications(path: pathlib.Path, records: Iterable[Dict[str, object]]) -> pathlib.Path:
    path.write_bytes(b''.join(orjson.dumps(record) + b'\n' for record in records))
    return path


def ring_publications(cliques: int = 3, size: int = 4, years: Tuple[int, int] = (2006, 2011)) -> List[Dict[str, object]]:
    """A small corpus whose collaboration graph is a ring of author cliques.

    Every clique writes one paper per year, so every scholar has a career spanning
    ``years``, and neighbouring cliques share one bridging paper.
    """
    records: List[Dict[str, object]] = []
    first, last = years
    for clique in range(cliques):
        authors = [f's{clique}-{index}' for index in range(size)]
        for year in range(first, last + 1):
            records.append(
                {
                    'paper_id': f'c{clique}-{year}',
                    'year': year,
                    'authors': authors,
                    'institutions': [[f'inst-{clique}'] for _ in authors],
                    'citations': clique + 1,
                    'fields': ['databases'],
                }
            )

    for clique in range(cliques):
        following = (clique + 1) % cliques
        records.append(
            {
                'paper_id': f'bridge-{clique}',
                'year': first,
                'authors': [f's{clique}-0', f's{following}-1'],
                'institutions': [[f'inst-{clique}'], [f'inst-{following}']],
                'citations': 0,
            }
        )

    return records


@pytest.fixture
def ring() -> CollaborationGraph:
    return planted_ring()


@pytest.fixture
def corpus_file(tmp_path: pathlib.Path) -> pathlib.Path:
    return write_publications(tmp_path / 'corpus.jsonl', ring_publications())
