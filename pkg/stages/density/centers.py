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
import enum
import logging
import math
from collections import defaultdict
from typing import Any, DefaultDict, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from stages.distance.paths import DistanceIndex
from utils import RUNNING_DEVELOPMENT, CenterPolicy, CenterPolicyKind

from .errors import CenterSelectionError
from .peaks import DensityProfile, min_max

__all__: Tuple[str, ...] = ('Region', 'Clustering', 'select_centers', 'assign_clusters', 'decision_regions', 'region_counts')

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)


class Region(enum.Enum):
    """Where a node falls on the decision graph relative to the selected centers."""

    center = 'center'
    core = 'core'
    sparse = 'sparse'
    isolated = 'isolated'


@dataclasses.dataclass(frozen=True, kw_only=True)
class Clustering:
    """The assignment of nodes to their nearest center.

    Attributes
    ----------
    centers: Tuple[:class:`str`, ...]
        The centers, in selection order.
    assignment: Dict[:class:`str`, :class:`str`]
        Node to center. Every center maps to itself.
    unassigned: Tuple[:class:`str`, ...]
        Nodes no center can reach within the exploration cap.
    """

    centers: Tuple[str, ...]
    assignment: Dict[str, str]
    unassigned: Tuple[str, ...] = ()

    def members(self, center: str) -> Tuple[str, ...]:
        """Returns the nodes assigned to ``center`` in ascending order."""
        return tuple(sorted(node for node, assigned in self.assignment.items() if assigned == center))

    def clusters(self) -> Dict[str, Tuple[str, ...]]:
        """Maps every center to its members, in center order."""
        grouped: DefaultDict[str, List[str]] = defaultdict(list)
        for node in sorted(self.assignment):
            grouped[self.assignment[node]].append(node)

        return {center: tuple(grouped.get(center, ())) for center in self.centers}

    def to_dict(self) -> Dict[str, Any]:
        return {
            'centers': list(self.centers),
            'clusters': {center: list(members) for center, members in self.clusters().items()},
            'unassigned': list(self.unassigned),
        }


def _selection_scores(profile: DensityProfile) -> Dict[str, float]:
    gamma = profile.gamma
    if max(gamma.values()) > min(gamma.values()):
        return gamma

    # γ has no spread when ρ or δ is constant, so rank on the scaled raw product instead.
    nodes = list(gamma)
    product = np.array([profile[node].rho * profile[node].delta for node in nodes], dtype=np.float64)
    _log.debug('γ is constant over %s nodes, ranking centers on the scaled ρ·δ product', len(nodes))
    return dict(zip(nodes, (float(value) for value in min_max(product))))


def _largest_gap(scores: Sequence[float]) -> int:
    count = len(scores)
    if count <= 1:
        return count

    window = min(math.ceil(math.sqrt(count)), count)
    best_cut = 1
    best_gap = -1.0
    for cut in range(1, min(window, count - 1) + 1):
        upper = scores[cut - 1]
        lower = scores[cut]
        if lower > 0:
            gap = upper / lower
        elif upper > 0:
            gap = math.inf
        else:
            gap = 1.0

        if gap > best_gap:
            best_cut, best_gap = cut, gap

    return best_cut


def select_centers(profile: DensityProfile, policy: CenterPolicy) -> List[str]:
    """Picks cluster centers from the decision graph.

    Candidates are ranked by γ. When every γ is equal, because ρ or δ has no spread,
    they are ranked by the min-max scaled product ρ · δ instead.

    Parameters
    ----------
    profile: :class:`DensityProfile`
        The scored nodes.
    policy: :class:`CenterPolicy`
        ``k`` keeps the top k candidates, ``threshold`` keeps every node with γ at
        least the threshold and ``auto`` cuts the top ``ceil(sqrt(n))`` candidates at
        their largest multiplicative gap.

    Returns
    -------
    List[:class:`str`]
        Centers ordered by γ descending then id ascending. Empty only for an empty profile.

    Raises
    ------
    CenterSelectionError
        ``k`` exceeds the node count or the threshold excludes every node.
    """
    if not len(profile):
        _log.warning('The density profile is empty, no centers were selected')
        return []

    scores = _selection_scores(profile)
    ranked = sorted(scores, key=lambda node: (-scores[node], node))

    if policy.kind is CenterPolicyKind.k:
        if policy.k > len(ranked):
            raise CenterSelectionError(
                f'Asked for {policy.k} centers but the graph has {len(ranked)} nodes.', policy=str(policy)
            )
        chosen = ranked[: policy.k]
    elif policy.kind is CenterPolicyKind.threshold:
        assert policy.value is not None
        chosen = [entry.node for entry in profile.by_gamma() if entry.gamma >= policy.value]
        if not chosen:
            raise CenterSelectionError(f'No node reaches the γ threshold {policy.value}.', policy=str(policy))
    else:
        chosen = ranked[: _largest_gap([scores[node] for node in ranked])]

    centers = sorted(chosen, key=lambda node: (-profile[node].gamma, node))
    _log.debug('Selected %s centers with policy %s', len(centers), policy)
    return centers


def assign_clusters(centers: Sequence[str], distances: DistanceIndex) -> Clustering:
    """Assigns every node to its nearest center.

    Ties go to the center listed first. A center always belongs to itself and nodes
    no center reaches are reported as unassigned.

    Parameters
    ----------
    centers: Sequence[:class:`str`]
        The centers from :func:`select_centers`.
    distances: :class:`DistanceIndex`
        The bounded all pairs distances.
    """
    if not centers:
        raise CenterSelectionError('At least one center is needed to assign clusters.', policy='none')

    center_set = set(centers)
    assignment: Dict[str, str] = {}
    unassigned: List[str] = []

    for node in distances.sources:
        if node in center_set:
            assignment[node] = node
            continue

        row = distances.row(node)
        nearest: Optional[str] = None
        nearest_distance = math.inf
        for center in centers:
            distance = row.get(center, math.inf)
            if distance < nearest_distance:
                nearest, nearest_distance = center, distance

        if nearest is not None:
            assignment[node] = nearest
        else:
            unassigned.append(node)

    if unassigned:
        _log.info('%s nodes are not reachable from any center and stay unassigned', len(unassigned))

    return Clustering(centers=tuple(centers), assignment=assignment, unassigned=tuple(unassigned))


def decision_regions(profile: DensityProfile, centers: Sequence[str]) -> Dict[str, str]:
    """Labels every node with its decision graph region.

    A value is high when it reaches the smallest normalized value among the selected
    centers.

    Returns
    -------
    Dict[:class:`str`, :class:`str`]
        Node to :class:`Region` value.
    """
    if not centers:
        return {entry.node: Region.sparse.value for entry in profile}

    rho_floor = min(profile[center].rho_norm for center in centers)
    delta_floor = min(profile[center].delta_norm for center in centers)

    regions: Dict[str, str] = {}
    for entry in profile:
        high_rho = entry.rho_norm >= rho_floor
        high_delta = entry.delta_norm >= delta_floor
        if high_rho and high_delta:
            region = Region.center
        elif high_rho:
            region = Region.core
        elif high_delta:
            region = Region.isolated
        else:
            region = Region.sparse

        regions[entry.node] = region.value

    return regions


def region_counts(regions: Mapping[str, str]) -> Dict[str, int]:
    counts = {region.value: 0 for region in Region}
    for region in regions.values():
        counts[region] += 1

    return counts
