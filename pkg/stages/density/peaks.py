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
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from stages.distance.paths import DistanceIndex
from utils import RUNNING_DEVELOPMENT, format_float

from .errors import InvalidCutoff

__all__: Tuple[str, ...] = (
    'NodeDensity',
    'DensityProfile',
    'local_density',
    'tie_break_order',
    'distinguishable_distance',
    'gamma_scores',
    'min_max',
    'density_profile',
)

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)


@dataclasses.dataclass(frozen=True, slots=True)
class NodeDensity:
    """One row of the decision graph."""

    node: str
    rho: int
    delta: float
    rho_norm: float
    delta_norm: float
    gamma: float
    order_rank: int


class DensityProfile:
    """The decision graph of a clustering run.

    Holds ρ, δ, their normalized values and γ for every node, plus the total tie
    break order the δ computation followed.

    Parameters
    ----------
    entries: Iterable[:class:`NodeDensity`]
        One entry per node.
    d_c: Optional[:class:`float`]
        The cutoff distance ρ was counted with.
    """

    __slots__: Tuple[str, ...] = ('_entries', '_order', 'd_c')

    def __init__(self, entries: Iterable[NodeDensity], *, d_c: Optional[float] = None) -> None:
        ranked = sorted(entries, key=lambda entry: entry.order_rank)
        self._entries: Dict[str, NodeDensity] = {entry.node: entry for entry in ranked}
        self._order: Tuple[str, ...] = tuple(entry.node for entry in ranked)
        self.d_c: Optional[float] = d_c

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[NodeDensity]:
        return iter(self._entries.values())

    def __getitem__(self, node: str) -> NodeDensity:
        return self._entries[node]

    def __contains__(self, node: object) -> bool:
        return node in self._entries

    @property
    def order(self) -> Tuple[str, ...]:
        """Tuple[:class:`str`, ...]: Nodes in tie break order, ρ descending then id ascending."""
        return self._order

    @property
    def rho(self) -> Dict[str, int]:
        return {node: entry.rho for node, entry in self._entries.items()}

    @property
    def delta(self) -> Dict[str, float]:
        return {node: entry.delta for node, entry in self._entries.items()}

    @property
    def gamma(self) -> Dict[str, float]:
        return {node: entry.gamma for node, entry in self._entries.items()}

    def by_gamma(self) -> List[NodeDensity]:
        """Returns every entry sorted by γ descending then id ascending."""
        return sorted(self._entries.values(), key=lambda entry: (-entry.gamma, entry.node))

    def csv_rows(
        self, centers: Sequence[str] = (), regions: Optional[Mapping[str, str]] = None
    ) -> Iterator[List[str]]:
        """Yields the decision graph table, header first, rows sorted by γ."""
        header = ['node_id', 'rho', 'delta', 'rho_norm', 'delta_norm', 'gamma', 'is_center']
        if regions is not None:
            header.append('region')
        yield header

        chosen = set(centers)
        for entry in self.by_gamma():
            row = [
                entry.node,
                str(entry.rho),
                format_float(entry.delta),
                format_float(entry.rho_norm),
                format_float(entry.delta_norm),
                format_float(entry.gamma),
                'true' if entry.node in chosen else 'false',
            ]
            if regions is not None:
                row.append(regions[entry.node])
            yield row


def local_density(
    distances: DistanceIndex, d_c: float, *, executor: Optional[Executor] = None
) -> Dict[str, int]:
    """Counts for every node the other nodes strictly closer than ``d_c``.

    Pairs that were not stored in ``distances`` count as infinitely far apart.

    Parameters
    ----------
    distances: :class:`DistanceIndex`
        The bounded all pairs distances.
    d_c: :class:`float`
        The cutoff distance.
    executor: Optional[:class:`concurrent.futures.Executor`]
        Counts rows concurrently.

    Raises
    ------
    InvalidCutoff
        ``d_c`` is not positive.
    """
    if not d_c > 0:
        raise InvalidCutoff(d_c=d_c)

    if d_c > distances.cap:
        _log.warning('Cutoff distance %s exceeds the exploration cap %s, densities may be truncated', d_c, distances.cap)

    def count(source: str) -> int:
        return sum(1 for target, distance in distances.row(source).items() if target != source and distance < d_c)

    sources = distances.sources
    counts: Iterable[int] = executor.map(count, sources) if executor is not None else map(count, sources)
    return dict(zip(sources, counts))


def tie_break_order(rho: Mapping[str, int]) -> Tuple[str, ...]:
    """Orders nodes by ρ descending, ties broken by ascending id."""
    return tuple(sorted(rho, key=lambda node: (-rho[node], node)))


def distinguishable_distance(distances: DistanceIndex, order: Sequence[str]) -> Dict[str, float]:
    """Computes δ for every node of ``order``.

    The first node takes the largest distance it reaches. Every other node takes the
    smallest distance to a node earlier in ``order``. When nothing qualifies the
    exploration cap is used instead.

    Parameters
    ----------
    distances: :class:`DistanceIndex`
        The bounded all pairs distances.
    order: Sequence[:class:`str`]
        The tie break order from :func:`tie_break_order`.
    """
    rank = {node: position for position, node in enumerate(order)}
    delta: Dict[str, float] = {}

    for position, node in enumerate(order):
        if position == 0:
            furthest = distances.max_finite(node)
            delta[node] = distances.cap if furthest is None else furthest
            continue

        nearest: Optional[float] = None
        for target, distance in distances.row(node).items():
            if rank.get(target, position) < position and (nearest is None or distance < nearest):
                nearest = distance

        delta[node] = distances.cap if nearest is None else nearest

    return delta


def min_max(values: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    """Scales ``values`` to ``[0, 1]``. A constant array scales to zeros."""
    low = float(values.min())
    high = float(values.max())
    if high > low:
        return (values - low) / (high - low)

    return np.zeros_like(values)


def gamma_scores(
    rho: Mapping[str, int], delta: Mapping[str, float], *, d_c: Optional[float] = None
) -> DensityProfile:
    """Normalizes ρ and δ to ``[0, 1]`` and scores every node with γ = ρ' · δ'.

    Both fields are scaled independently. A field with no spread scales to ``0``,
    which leaves every γ at ``0``.

    Parameters
    ----------
    rho: Mapping[:class:`str`, :class:`int`]
        The local densities.
    delta: Mapping[:class:`str`, :class:`float`]
        The distinguishable distances of the same nodes.
    d_c: Optional[:class:`float`]
        The cutoff the densities were counted with, kept on the profile.

    Returns
    -------
    :class:`DensityProfile`
    """
    order = tie_break_order(rho)
    if not order:
        return DensityProfile((), d_c=d_c)

    rho_values = np.array([rho[node] for node in order], dtype=np.float64)
    delta_values = np.array([delta[node] for node in order], dtype=np.float64)

    rho_norm = min_max(rho_values)
    delta_norm = min_max(delta_values)
    gamma = rho_norm * delta_norm

    return DensityProfile(
        (
            NodeDensity(
                node=node,
                rho=rho[node],
                delta=delta[node],
                rho_norm=float(rho_norm[position]),
                delta_norm=float(delta_norm[position]),
                gamma=float(gamma[position]),
                order_rank=position,
            )
            for position, node in enumerate(order)
        ),
        d_c=d_c,
    )


def density_profile(
    distances: DistanceIndex, d_c: float, *, executor: Optional[Executor] = None
) -> DensityProfile:
    """Runs ρ, the tie break order, δ and γ in sequence over ``distances``."""
    rho = local_density(distances, d_c, executor=executor)
    delta = distinguishable_distance(distances, tie_break_order(rho))
    profile = gamma_scores(rho, delta, d_c=d_c)
    _log.debug('Scored %s nodes at d_c=%s', len(profile), d_c)
    return profile
