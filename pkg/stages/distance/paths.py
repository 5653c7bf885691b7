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

import heapq
import logging
import math
from concurrent.futures import Executor
from typing import TYPE_CHECKING, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from utils import RUNNING_DEVELOPMENT, format_float

from .errors import InvalidCap, UnknownSource

if TYPE_CHECKING:
    from stages.corpus.graph import CollaborationGraph

__all__: Tuple[str, ...] = ('DEFAULT_CAP', 'DistanceIndex', 'bounded_sssp', 'all_pairs')

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)

DEFAULT_CAP: float = 3.5


class DistanceIndex:
    """Bounded shortest path distances from every source of a graph.

    Pairs further apart than :attr:`cap`, or not connected at all, are absent and
    read back as infinity.

    Parameters
    ----------
    rows: Mapping[:class:`str`, Mapping[:class:`str`, :class:`float`]]
        Source to reachable target to distance.
    cap: :class:`float`
        The largest distance that was explored.
    """

    __slots__: Tuple[str, ...] = ('_rows', 'cap')

    def __init__(self, rows: Mapping[str, Mapping[str, float]], *, cap: float) -> None:
        self._rows: Dict[str, Dict[str, float]] = {source: dict(sorted(rows[source].items())) for source in sorted(rows)}
        self.cap: float = cap

    def __len__(self) -> int:
        return len(self._rows)

    def __contains__(self, source: object) -> bool:
        return source in self._rows

    def __repr__(self) -> str:
        return f'<DistanceIndex sources={len(self._rows)} cap={self.cap}>'

    @property
    def sources(self) -> Tuple[str, ...]:
        """Tuple[:class:`str`, ...]: Every source in ascending order."""
        return tuple(self._rows)

    @property
    def entry_count(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def row(self, source: str) -> Mapping[str, float]:
        """Returns every stored distance from ``source``, targets in ascending order.

        Raises
        ------
        UnknownSource
            ``source`` has no row.
        """
        try:
            return self._rows[source]
        except KeyError:
            raise UnknownSource(source=source) from None

    def distance(self, a: str, b: str) -> float:
        """Returns the distance of ``a`` and ``b``, :data:`math.inf` when it was not stored."""
        return self._rows.get(a, {}).get(b, math.inf)

    def max_finite(self, source: str) -> Optional[float]:
        """Returns the largest distance stored from ``source`` to another node."""
        others = [distance for target, distance in self.row(source).items() if target != source]
        return max(others) if others else None

    def pairs(self) -> Iterator[Tuple[str, str, float]]:
        """Yields every stored ``(source, target, distance)``, sorted by source then target."""
        for source, row in self._rows.items():
            for target, distance in row.items():
                yield source, target, distance

    def csv_rows(self) -> Iterator[List[str]]:
        yield ['source', 'target', 'distance']
        for source, target, distance in self.pairs():
            yield [source, target, format_float(distance)]


def _check_cap(cap: float) -> None:
    if not cap > 0:
        raise InvalidCap(cap=cap)


def bounded_sssp(graph: CollaborationGraph, source: str, cap: float = DEFAULT_CAP) -> Dict[str, float]:
    """Runs Dijkstra from ``source``, exploring no further than ``cap``.

    Neighbors are relaxed in ascending id order so the result is identical on every run.

    Parameters
    ----------
    graph: :class:`CollaborationGraph`
        The graph to search.
    source: :class:`str`
        The node to start from.
    cap: :class:`float`
        The largest distance to keep, inclusive.

    Returns
    -------
    Dict[:class:`str`, :class:`float`]
        Every node within ``cap`` of ``source``, in ascending id order.

    Raises
    ------
    UnknownSource
        ``source`` is not a node of ``graph``.
    InvalidCap
        ``cap`` is not positive.
    """
    _check_cap(cap)
    if source not in graph:
        raise UnknownSource(source=source)

    settled: Dict[str, float] = {}
    tentative: Dict[str, float] = {source: 0.0}
    heap: List[Tuple[float, str]] = [(0.0, source)]

    while heap:
        distance, node = heapq.heappop(heap)
        if node in settled:
            continue

        settled[node] = distance
        for neighbor, weight in graph.neighbors(node):
            if neighbor in settled:
                continue

            candidate = distance + weight
            if candidate > cap:
                continue

            if candidate < tentative.get(neighbor, math.inf):
                tentative[neighbor] = candidate
                heapq.heappush(heap, (candidate, neighbor))

    return dict(sorted(settled.items()))


def _symmetrize(rows: Dict[str, Dict[str, float]]) -> None:
    # Summation order differs per direction, keep the smaller of the two sums.
    for source, row in rows.items():
        for target, distance in row.items():
            if target <= source:
                continue

            mirrored = rows[target].get(source, math.inf)
            best = min(distance, mirrored)
            row[target] = best
            rows[target][source] = best


def all_pairs(
    graph: CollaborationGraph, cap: float = DEFAULT_CAP, *, executor: Optional[Executor] = None
) -> DistanceIndex:
    """Runs :func:`bounded_sssp` from every node of ``graph``.

    Rows are computed independently, concurrently when an executor is given, and
    assembled in source order so the index never depends on the worker count.

    Parameters
    ----------
    graph: :class:`CollaborationGraph`
        The graph to search.
    cap: :class:`float`
        The largest distance to keep, inclusive.
    executor: Optional[:class:`concurrent.futures.Executor`]
        Runs the per source searches.

    Returns
    -------
    :class:`DistanceIndex`
    """
    _check_cap(cap)
    nodes = graph.nodes

    results: Iterable[Dict[str, float]]
    if executor is not None and len(nodes) > 1:
        results = executor.map(lambda node: bounded_sssp(graph, node, cap), nodes)
    else:
        results = (bounded_sssp(graph, node, cap) for node in nodes)

    rows: Dict[str, Dict[str, float]] = dict(zip(nodes, results))
    _symmetrize(rows)

    index = DistanceIndex(rows, cap=cap)
    _log.debug('Computed %s bounded distances from %s sources with cap %s', index.entry_count, len(index), cap)
    return index
