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
from typing import AbstractSet, Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, overload

from stages.corpus.graph import CollaborationGraph
from stages.density.centers import Clustering, assign_clusters, decision_regions, region_counts, select_centers
from stages.density.cutoff import resolve_cutoff
from stages.density.peaks import DensityProfile, density_profile
from stages.distance.paths import DistanceIndex, all_pairs
from stages.familiarity.measures import FamiliarityFn, familiarity_function
from stages.familiarity.triangles import TriangleIndex, enumerate_triangles
from utils import RUNNING_DEVELOPMENT, FamiliarityMode, RunConfig

from .team import RecognizedTeam, split_by_institution

__all__: Tuple[str, ...] = (
    'Recognition',
    'border_region',
    'team_thresholds',
    'filter_team',
    'recognize',
    'team_count_scan',
)

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)


def border_region(team: AbstractSet[str], distances: DistanceIndex, d_c: float) -> FrozenSet[str]:
    """Returns the team members strictly closer than ``d_c`` to some node outside the team.

    Parameters
    ----------
    team: AbstractSet[:class:`str`]
        The raw members of one cluster.
    distances: :class:`DistanceIndex`
        The bounded all pairs distances.
    d_c: :class:`float`
        The cutoff distance.
    """
    return frozenset(
        node
        for node in team
        if any(target not in team and distance < d_c for target, distance in distances.row(node).items())
    )


def team_thresholds(
    team: AbstractSet[str],
    border: AbstractSet[str],
    rho: Mapping[str, int],
    familiarity: FamiliarityFn,
) -> Tuple[float, float]:
    """Returns the density and familiarity thresholds of a team.

    Both are the maxima over the border. An empty border gives ``(0, 0)`` so nothing
    is filtered.
    """
    if not border:
        return 0.0, 0.0

    rho_threshold = max(rho[node] for node in border)
    familiarity_threshold = max(familiarity(node, team) for node in border)
    return float(rho_threshold), float(familiarity_threshold)


def filter_team(
    team: AbstractSet[str],
    rho_threshold: float,
    familiarity_threshold: float,
    rho: Mapping[str, int],
    familiarity: FamiliarityFn,
) -> FrozenSet[str]:
    """Keeps the members meeting both the density and the familiarity threshold."""
    return frozenset(
        node for node in team if rho[node] >= rho_threshold and familiarity(node, team) >= familiarity_threshold
    )


@dataclasses.dataclass(frozen=True)
class _TeamOutcome:
    center: str
    raw_members: FrozenSet[str]
    border: FrozenSet[str]
    thresholds: Tuple[float, float]
    members: FrozenSet[str]


class Recognition:
    """The teams of one recognition run, in canonical order.

    Behaves like a sequence of :class:`RecognizedTeam` and keeps the bookkeeping of
    the run next to it.

    Attributes
    ----------
    d_c: :class:`float`
        The cutoff distance the run used.
    mode: :class:`FamiliarityMode`
        The familiarity measure the run filtered with.
    isolated: Tuple[:class:`str`, ...]
        Scholars left in remnants smaller than the minimum team size.
    dissolved: Tuple[:class:`str`, ...]
        Centers whose team lost every member.
    clustering: :class:`Clustering`
        The center assignment the teams were cut from.
    profile: :class:`DensityProfile`
        The decision graph.
    """

    __slots__: Tuple[str, ...] = ('_teams', 'd_c', 'mode', 'isolated', 'dissolved', 'clustering', 'profile')

    def __init__(
        self,
        teams: Iterable[RecognizedTeam],
        *,
        d_c: float,
        mode: FamiliarityMode,
        isolated: Sequence[str] = (),
        dissolved: Sequence[str] = (),
        clustering: Optional[Clustering] = None,
        profile: Optional[DensityProfile] = None,
    ) -> None:
        self._teams: Tuple[RecognizedTeam, ...] = tuple(teams)
        self.d_c: float = d_c
        self.mode: FamiliarityMode = mode
        self.isolated: Tuple[str, ...] = tuple(isolated)
        self.dissolved: Tuple[str, ...] = tuple(dissolved)
        self.clustering: Clustering = clustering or Clustering(centers=(), assignment={})
        self.profile: DensityProfile = profile or DensityProfile(())

    def __len__(self) -> int:
        return len(self._teams)

    def __iter__(self) -> Iterator[RecognizedTeam]:
        return iter(self._teams)

    @overload
    def __getitem__(self, index: int) -> RecognizedTeam:
        ...

    @overload
    def __getitem__(self, index: slice) -> Tuple[RecognizedTeam, ...]:
        ...

    def __getitem__(self, index: int | slice) -> RecognizedTeam | Tuple[RecognizedTeam, ...]:
        return self._teams[index]

    def __repr__(self) -> str:
        return f'<Recognition teams={len(self._teams)} d_c={self.d_c} mode={self.mode.value}>'

    @property
    def teams(self) -> Tuple[RecognizedTeam, ...]:
        return self._teams

    @property
    def unassigned(self) -> Tuple[str, ...]:
        return self.clustering.unassigned

    @property
    def flagged_centers(self) -> Tuple[str, ...]:
        return tuple(team.center for team in self._teams if team.center_flagged)

    def to_dict(self) -> Dict[str, Any]:
        """Renders the bookkeeping of the run, the teams themselves are written separately."""
        return {
            'd_c': self.d_c,
            'mode': self.mode.value,
            'team_count': len(self._teams),
            'centers': list(self.clustering.centers),
            'flagged_centers': list(self.flagged_centers),
            'isolated': list(self.isolated),
            'dissolved': list(self.dissolved),
            'unassigned': list(self.unassigned),
            'regions': region_counts(decision_regions(self.profile, self.clustering.centers)),
        }


def recognize(
    graph: CollaborationGraph,
    config: RunConfig,
    *,
    distances: Optional[DistanceIndex] = None,
    triangles: Optional[TriangleIndex] = None,
    executor: Optional[Executor] = None,
) -> Recognition:
    """Recognizes the academic teams of ``graph``.

    Clusters the graph around density peaks, then keeps in every cluster the members
    that are at least as dense and as familiar with the team as its densest and most
    familiar border member.

    Parameters
    ----------
    graph: :class:`CollaborationGraph`
        The collaboration graph.
    config: :class:`RunConfig`
        Supplies the cap, cutoff, center policy, familiarity mode and minimum team size.
        A cutoff of ``None`` is picked from the occupancy scan.
    distances: Optional[:class:`DistanceIndex`]
        An index already computed for ``graph`` with the configured cap.
    triangles: Optional[:class:`TriangleIndex`]
        A census already computed for ``graph``.
    executor: Optional[:class:`concurrent.futures.Executor`]
        Runs the per node and per team work concurrently.

    Returns
    -------
    :class:`Recognition`
    """
    if distances is None:
        distances = all_pairs(graph, config.cap, executor=executor)

    d_c = resolve_cutoff(config, distances)
    mode = config.familiarity

    profile = density_profile(distances, d_c, executor=executor)
    centers = select_centers(profile, config.center_policy)
    if not centers:
        return Recognition((), d_c=d_c, mode=mode, profile=profile)

    clustering = assign_clusters(centers, distances)
    clusters = clustering.clusters()
    rho = profile.rho

    if mode is FamiliarityMode.higher_order and triangles is None:
        triangles = enumerate_triangles(graph, executor=executor)

    def build(center: str) -> _TeamOutcome:
        team = frozenset(clusters[center])
        familiarity = familiarity_function(
            mode, graph=graph, triangles=triangles, restrict_triangles=config.restrict_triangles, team=team
        )
        border = border_region(team, distances, d_c)
        rho_threshold, familiarity_threshold = team_thresholds(team, border, rho, familiarity)
        members = filter_team(team, rho_threshold, familiarity_threshold, rho, familiarity)
        return _TeamOutcome(center, team, border, (rho_threshold, familiarity_threshold), members)

    outcomes: Iterable[_TeamOutcome] = executor.map(build, centers) if executor is not None else map(build, centers)

    teams: List[RecognizedTeam] = []
    isolated: List[str] = []
    dissolved: List[str] = []
    for outcome in outcomes:
        if not outcome.members:
            dissolved.append(outcome.center)
            _log.debug('Team of center %s dissolved, no member met the border thresholds', outcome.center)
            continue

        if len(outcome.members) < config.min_team_size:
            isolated.extend(sorted(outcome.members))
            continue

        team_id = len(teams) + 1
        teams.append(
            RecognizedTeam(
                team_id=team_id,
                center=outcome.center,
                raw_members=tuple(sorted(outcome.raw_members)),
                border=tuple(sorted(outcome.border)),
                rho_threshold=outcome.thresholds[0],
                familiarity_threshold=outcome.thresholds[1],
                members=tuple(sorted(outcome.members)),
                mode=mode.value,
                center_flagged=outcome.center not in outcome.members,
                institution_splits=tuple(split_by_institution(outcome.members, graph.profiles, team_id=team_id)),
            )
        )

    if dissolved:
        _log.info('%s teams dissolved during border filtering', len(dissolved))

    _log.info('Recognized %s %s teams at d_c=%s', len(teams), mode.value, d_c)
    return Recognition(
        teams,
        d_c=d_c,
        mode=mode,
        isolated=sorted(isolated),
        dissolved=dissolved,
        clustering=clustering,
        profile=profile,
    )


def team_count_scan(
    graph: CollaborationGraph,
    candidates: Sequence[float],
    config: RunConfig,
    *,
    distances: Optional[DistanceIndex] = None,
    triangles: Optional[TriangleIndex] = None,
    executor: Optional[Executor] = None,
) -> List[int]:
    """Counts the recognized teams at every candidate cutoff distance.

    One distance index and one triangle census are shared by every run.
    """
    if distances is None:
        distances = all_pairs(graph, config.cap, executor=executor)
    if triangles is None and config.familiarity is FamiliarityMode.higher_order:
        triangles = enumerate_triangles(graph, executor=executor)

    return [
        len(recognize(graph, config.replace(d_c=candidate), distances=distances, triangles=triangles, executor=executor))
        for candidate in candidates
    ]
