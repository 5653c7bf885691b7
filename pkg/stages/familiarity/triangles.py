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
from collections import defaultdict
from concurrent.futures import Executor
from typing import TYPE_CHECKING, AbstractSet, DefaultDict, Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from utils import RUNNING_DEVELOPMENT

if TYPE_CHECKING:
    from stages.corpus.graph import CollaborationGraph

__all__: Tuple[str, ...] = ('Triangle', 'TriangleIndex', 'enumerate_triangles')

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)

Triangle = Tuple[str, str, str]

# Nodes per census shard handed to the executor.
_SHARD_SIZE: int = 256


class TriangleIndex:
    """Every undirected triangle of a graph with per node and per pair lookups.

    Parameters
    ----------
    triangles: Iterable[Tuple[:class:`str`, :class:`str`, :class:`str`]]
        The triangles, each given with its nodes in ascending order.
    """

    __slots__: Tuple[str, ...] = ('_triangles', '_per_node', '_partners')

    def __init__(self, triangles: Iterable[Triangle]) -> None:
        self._triangles: Tuple[Triangle, ...] = tuple(sorted(set(triangles)))

        per_node: DefaultDict[str, int] = defaultdict(int)
        partners: DefaultDict[str, Set[str]] = defaultdict(set)
        for a, b, c in self._triangles:
            for node, first, second in ((a, b, c), (b, a, c), (c, a, b)):
                per_node[node] += 1
                partners[node].update((first, second))

        self._per_node: Dict[str, int] = dict(per_node)
        self._partners: Dict[str, FrozenSet[str]] = {node: frozenset(others) for node, others in partners.items()}

    def __len__(self) -> int:
        return len(self._triangles)

    def __repr__(self) -> str:
        return f'<TriangleIndex triangles={len(self._triangles)}>'

    @property
    def triangles(self) -> Tuple[Triangle, ...]:
        return self._triangles

    @property
    def per_node_count(self) -> Mapping[str, int]:
        """Mapping[:class:`str`, :class:`int`]: Triangles per node, nodes in no triangle are absent."""
        return self._per_node

    def count(self, node: str) -> int:
        return self._per_node.get(node, 0)

    def partners(self, node: str) -> FrozenSet[str]:
        """Returns every node that shares at least one triangle with ``node``."""
        return self._partners.get(node, frozenset())

    def pair_in_triangle(self, a: str, b: str) -> bool:
        return b in self._partners.get(a, ())

    def within(self, members: AbstractSet[str]) -> TriangleIndex:
        """Returns the index of the triangles whose three nodes are all in ``members``."""
        return TriangleIndex(
            triangle for triangle in self._triangles if all(node in members for node in triangle)
        )


def _census(graph: CollaborationGraph, shard: Tuple[str, ...]) -> List[Triangle]:
    found: List[Triangle] = []
    for u in shard:
        higher = sorted(node for node in graph.neighbor_set(u) if node > u)
        for index, v in enumerate(higher):
            v_neighbors = graph.neighbor_set(v)
            for w in higher[index + 1 :]:
                if w in v_neighbors:
                    found.append((u, v, w))

    return found


def enumerate_triangles(graph: CollaborationGraph, *, executor: Optional[Executor] = None) -> TriangleIndex:
    """Enumerates every triangle of ``graph``.

    Each triangle is found exactly once, from its smallest node. The census is split
    in node shards when an executor is given, results are merged in shard order.

    Parameters
    ----------
    graph: :class:`CollaborationGraph`
        The graph to census. Weights are ignored.
    executor: Optional[:class:`concurrent.futures.Executor`]
        Runs the shards concurrently.

    Returns
    -------
    :class:`TriangleIndex`
    """
    nodes = graph.nodes
    shards = [nodes[start : start + _SHARD_SIZE] for start in range(0, len(nodes), _SHARD_SIZE)]

    results: Iterable[List[Triangle]]
    if executor is not None and len(shards) > 1:
        results = executor.map(lambda shard: _census(graph, shard), shards)
    else:
        results = map(lambda shard: _census(graph, shard), shards)

    index = TriangleIndex(triangle for shard_result in results for triangle in shard_result)
    _log.debug('Counted %s triangles over %s nodes', len(index), len(nodes))
    return index
