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
import math
from concurrent.futures import Executor
from typing import AbstractSet, Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from stages.corpus.graph import CollaborationGraph, ScholarProfile
from stages.distance.paths import all_pairs
from stages.familiarity.triangles import TriangleIndex, enumerate_triangles
from stages.teams.serialization import TeamRecord
from utils import RUNNING_DEVELOPMENT, format_float

from .errors import EmptyMembers, UnknownMember

__all__: Tuple[str, ...] = (
    'TeamMetrics',
    'ccr',
    'team_triangles',
    'separability',
    'team_citation',
    'evaluate_teams',
    'metrics_csv_rows',
)

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)


@dataclasses.dataclass(frozen=True, kw_only=True)
class TeamMetrics:
    """The evaluation metrics of one team.

    Attributes
    ----------
    team_id: :class:`int`
        The team.
    size: :class:`int`
        The member count.
    ccr: :class:`float`
        The communication cost radius, the diameter of the induced subgraph.
    disconnected: :class:`bool`
        Whether the induced subgraph is disconnected, :attr:`ccr` is then the largest
        finite eccentricity.
    triangles: :class:`int`
        Triangles lying entirely inside the team.
    separability: :class:`float`
        The fraction of the team's edges that leave it.
    mean_citation: :class:`float`
        The mean citation sum of the members.
    """

    team_id: int
    size: int
    ccr: float
    disconnected: bool
    triangles: int
    separability: float
    mean_citation: float

    def to_dict(self) -> Dict[str, Any]:
        return dataclasses.asdict(self)


def _require_members(members: AbstractSet[str]) -> None:
    if not members:
        raise EmptyMembers()


def ccr(members: AbstractSet[str], graph: CollaborationGraph, *, hops: bool = False) -> Tuple[float, bool]:
    """Computes the communication cost radius of a team.

    Shortest paths only run through the team's induced subgraph, weighted by the
    collaboration distance or, with ``hops``, by edge count.

    Parameters
    ----------
    members: AbstractSet[:class:`str`]
        The team members.
    graph: :class:`CollaborationGraph`
        The collaboration graph.
    hops: :class:`bool`
        Count edges instead of summing distances.

    Returns
    -------
    Tuple[:class:`float`, :class:`bool`]
        The radius and whether the induced subgraph is disconnected.
    """
    _require_members(members)
    if len(members) == 1:
        return 0.0, False

    induced = graph.subgraph(members)
    lengths: Iterator[Tuple[str, Mapping[str, float]]]
    if hops:
        lengths = ((source, dict(row)) for source, row in nx.all_pairs_shortest_path_length(induced.to_networkx()))
    else:
        index = all_pairs(induced, math.inf)
        lengths = ((source, index.row(source)) for source in index.sources)

    radius = 0.0
    reached = 0
    for _, row in lengths:
        reached += len(row)
        if row:
            radius = max(radius, float(max(row.values())))

    return radius, reached < induced.node_count**2


def team_triangles(members: AbstractSet[str], triangles: TriangleIndex) -> int:
    """Counts the triangles whose three nodes are all team members."""
    return len(triangles.within(members))


def separability(members: AbstractSet[str], graph: CollaborationGraph) -> float:
    """Returns the share of a team's edges that leave the team.

    Internal edges are counted once. A team without any edge scores ``0``.
    """
    _require_members(members)

    internal = 0
    outgoing = 0
    for member in members:
        for neighbor in graph.neighbor_set(member):
            if neighbor in members:
                internal += 1
            else:
                outgoing += 1

    total = outgoing + internal // 2
    return outgoing / total if total else 0.0


def team_citation(members: AbstractSet[str], scholars: Mapping[str, ScholarProfile]) -> float:
    """Returns the mean citation sum of the team members."""
    _require_members(members)
    return sum(scholars[member].citation_sum for member in members) / len(members)


def _evaluate(team: TeamRecord, graph: CollaborationGraph, triangles: TriangleIndex, hops: bool) -> TeamMetrics:
    members = frozenset(team.members)
    for member in sorted(members):
        if member not in graph:
            raise UnknownMember(team_id=team.team_id, scholar_id=member)

    radius, disconnected = ccr(members, graph, hops=hops)
    return TeamMetrics(
        team_id=team.team_id,
        size=len(members),
        ccr=radius,
        disconnected=disconnected,
        triangles=team_triangles(members, triangles),
        separability=separability(members, graph),
        mean_citation=team_citation(members, graph.profiles),
    )


def evaluate_teams(
    teams: Sequence[TeamRecord],
    graph: CollaborationGraph,
    *,
    triangles: Optional[TriangleIndex] = None,
    hops: bool = False,
    executor: Optional[Executor] = None,
) -> List[TeamMetrics]:
    """Computes :class:`TeamMetrics` for every team, in the order given.

    Raises
    ------
    UnknownMember
        A team lists a scholar that is not in ``graph``.
    """
    if triangles is None:
        triangles = enumerate_triangles(graph, executor=executor)

    index = triangles
    results: Iterable[TeamMetrics]
    if executor is not None:
        results = executor.map(lambda team: _evaluate(team, graph, index, hops), teams)
    else:
        results = (_evaluate(team, graph, index, hops) for team in teams)

    metrics = list(results)
    disconnected = sum(1 for item in metrics if item.disconnected)
    if disconnected:
        _log.warning('%s of %s teams have a disconnected induced subgraph', disconnected, len(metrics))

    return metrics


def metrics_csv_rows(metrics: Iterable[TeamMetrics]) -> Iterator[List[str]]:
    yield ['team_id', 'size', 'ccr', 'disconnected', 'triangles', 'separability', 'mean_citation']
    for item in metrics:
        yield [
            str(item.team_id),
            str(item.size),
            format_float(item.ccr),
            str(item.disconnected).lower(),
            str(item.triangles),
            format_float(item.separability),
            format_float(item.mean_citation),
        ]
