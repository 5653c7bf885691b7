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
import logging
from concurrent.futures import Executor
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from stages.corpus.graph import CollaborationGraph
from utils import RUNNING_DEVELOPMENT, MotifDirection

from .errors import InvalidEnsemble
from .triangles import enumerate_triangles

__all__: Tuple[str, ...] = ('MotifVerdict', 'rewire_preserving_degrees', 'motif_significance')

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)

# Attempts allowed per requested swap before the rewiring gives up.
_TRIES_PER_SWAP: int = 10


@dataclasses.dataclass(frozen=True, kw_only=True)
class MotifVerdict:
    """Whether the triangle is a motif of a graph.

    Attributes
    ----------
    f_real: :class:`int`
        The triangle count of the real graph.
    f_rand_mean: :class:`float`
        The mean triangle count over the rewired ensemble.
    f_rand_std: :class:`float`
        The population standard deviation over the ensemble.
    p_estimate: :class:`float`
        The fraction of replicates with strictly more triangles than the real graph.
    significant: :class:`bool`
        ``p_estimate <= P``.
    frequent: :class:`bool`
        ``f_real >= U``, or ``f_real <= U`` when the direction is flipped.
    large_effect: :class:`bool`
        ``f_real - f_rand_mean > D * f_rand_mean``.
    ensemble: Tuple[:class:`int`, ...]
        The triangle count of each replicate.
    """

    f_real: int
    f_rand_mean: float
    f_rand_std: float
    p_estimate: float
    significant: bool
    frequent: bool
    large_effect: bool
    ensemble: Tuple[int, ...] = ()
    seed: int = 0

    @property
    def conditions(self) -> Tuple[bool, bool, bool]:
        return self.significant, self.frequent, self.large_effect

    @property
    def is_motif(self) -> bool:
        return all(self.conditions)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'f_real': self.f_real,
            'f_rand_mean': self.f_rand_mean,
            'f_rand_std': self.f_rand_std,
            'p_estimate': self.p_estimate,
            'conditions': {
                'significance': self.significant,
                'frequency': self.frequent,
                'effect_size': self.large_effect,
            },
            'is_motif': self.is_motif,
            'replicates': len(self.ensemble),
            'seed': self.seed,
        }

    def csv_rows(self) -> Iterator[List[str]]:
        yield ['replicate', 'triangles']
        for replicate, count in enumerate(self.ensemble):
            yield [str(replicate), str(count)]


def _rewired(graph: CollaborationGraph, seed: int, swaps_per_edge: int) -> Optional[nx.Graph]:
    if graph.node_count < 4 or graph.edge_count < 2:
        return None

    topology = graph.to_networkx()
    swaps = swaps_per_edge * graph.edge_count
    try:
        nx.double_edge_swap(topology, nswap=swaps, max_tries=swaps * _TRIES_PER_SWAP, seed=seed)
    except nx.NetworkXAlgorithmError:
        # The swaps done so far are kept, a clique never accepts one.
        _log.debug('Rewiring with seed %s ran out of attempts before %s swaps', seed, swaps)

    return topology


def rewire_preserving_degrees(graph: CollaborationGraph, seed: int, swaps_per_edge: int = 10) -> CollaborationGraph:
    """Randomizes ``graph`` with double edge swaps that keep every node's degree.

    Parameters
    ----------
    graph: :class:`CollaborationGraph`
        The graph to randomize.
    seed: :class:`int`
        The random seed, equal seeds give equal graphs.
    swaps_per_edge: :class:`int`
        Swaps to attempt per edge. Defaults to ``10``.

    Returns
    -------
    :class:`CollaborationGraph`
        The rewired graph. Graphs with fewer than two edges, or fewer than four nodes,
        are returned unchanged.

    Raises
    ------
    InvalidEnsemble
        ``swaps_per_edge`` is below one.
    """
    if swaps_per_edge < 1:
        raise InvalidEnsemble(f'swaps_per_edge must be at least 1, got {swaps_per_edge}.')

    topology = _rewired(graph, seed, swaps_per_edge)
    if topology is None:
        _log.debug('Graph is too small to rewire, returning it unchanged')
        return graph

    return graph.with_topology(topology.edges())


def _rewired_triangles(graph: CollaborationGraph, seed: int, swaps_per_edge: int) -> int:
    topology = _rewired(graph, seed, swaps_per_edge)
    if topology is None:
        return len(enumerate_triangles(graph))

    return sum(nx.triangles(topology).values()) // 3


def motif_significance(
    graph: CollaborationGraph,
    *,
    replicates: int = 100,
    p: float = 0.01,
    u: float = 4,
    d: float = 0.1,
    seed: int = 0,
    direction: MotifDirection = MotifDirection.at_least,
    swaps_per_edge: int = 10,
    executor: Optional[Executor] = None,
) -> MotifVerdict:
    """Tests whether the triangle is a motif of ``graph``.

    Replicate ``i`` is rewired with seed ``seed + i`` so the verdict is the same for
    any worker count.

    Parameters
    ----------
    graph: :class:`CollaborationGraph`
        The real graph.
    replicates: :class:`int`
        The ensemble size ``N``.
    p: :class:`float`
        The largest accepted ``p_estimate``.
    u: :class:`float`
        The frequency cutoff.
    d: :class:`float`
        The relative effect size the real count must exceed the ensemble mean by.
    seed: :class:`int`
        The base seed.
    direction: :class:`MotifDirection`
        How ``f_real`` is compared with ``u``.
    swaps_per_edge: :class:`int`
        Swaps per edge used to build each replicate.
    executor: Optional[:class:`concurrent.futures.Executor`]
        Builds the replicates concurrently.

    Raises
    ------
    InvalidEnsemble
        ``replicates`` or ``swaps_per_edge`` is below one.
    """
    if replicates < 1:
        raise InvalidEnsemble(f'The ensemble needs at least one replicate, got {replicates}.')
    if swaps_per_edge < 1:
        raise InvalidEnsemble(f'swaps_per_edge must be at least 1, got {swaps_per_edge}.')

    f_real = len(enumerate_triangles(graph, executor=executor))

    seeds = range(seed, seed + replicates)
    counts: Iterable[int]
    if executor is not None:
        counts = executor.map(lambda replicate_seed: _rewired_triangles(graph, replicate_seed, swaps_per_edge), seeds)
    else:
        counts = (_rewired_triangles(graph, replicate_seed, swaps_per_edge) for replicate_seed in seeds)

    ensemble = np.fromiter(counts, dtype=np.int64, count=replicates)
    mean = float(ensemble.mean())
    std = float(ensemble.std())
    p_estimate = float(np.count_nonzero(ensemble > f_real)) / replicates

    if direction is MotifDirection.at_least:
        frequent = f_real >= u
    else:
        frequent = f_real <= u

    verdict = MotifVerdict(
        f_real=f_real,
        f_rand_mean=mean,
        f_rand_std=std,
        p_estimate=p_estimate,
        significant=p_estimate <= p,
        frequent=frequent,
        large_effect=f_real - mean > d * mean,
        ensemble=tuple(int(count) for count in ensemble),
        seed=seed,
    )
    _log.info(
        'Triangle census %s against %.3f ± %.3f over %s replicates, motif: %s',
        f_real,
        mean,
        std,
        replicates,
        verdict.is_motif,
    )
    return verdict
