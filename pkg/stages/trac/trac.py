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
from typing import Any, Dict, List, Set, Tuple

import networkx as nx
from typing_extensions import Self

from stages.corpus.graph import CollaborationGraph, Edge
from stages.teams.team import InstitutionTeam, split_by_institution
from utils import RUNNING_DEVELOPMENT, ArgumentError, RunConfig, TracIntensity, TracPartnership

__all__: Tuple[str, ...] = (
    'TRAC_MODE',
    'TracConfig',
    'TracTeam',
    'edge_intensity',
    'partnership_scores',
    'trac_recognize',
)

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)

TRAC_MODE: str = 'trac'


@dataclasses.dataclass(frozen=True, kw_only=True)
class TracConfig:
    """The knobs of the simplified edge filtering baseline.

    Attributes
    ----------
    intensity: :class:`TracIntensity`
        How an edge's collaboration intensity is measured.
    partnership: :class:`TracPartnership`
        How a node's partnership score is measured.
    w: :class:`float`
        Edges with a lower intensity are deleted.
    phi_min: :class:`float`
        Nodes with a lower partnership score are deleted.
    """

    intensity: TracIntensity = TracIntensity.co_count
    partnership: TracPartnership = TracPartnership.weighted_degree
    w: float = 2.0
    phi_min: float = 0.0

    def __post_init__(self) -> None:
        if self.w < 0:
            raise ArgumentError(f'The intensity threshold must be non-negative, got {self.w}.')
        if self.phi_min < 0:
            raise ArgumentError(f'The partnership threshold must be non-negative, got {self.phi_min}.')

    @classmethod
    def from_run_config(cls, config: RunConfig) -> Self:
        return cls(
            intensity=config.trac_intensity,
            partnership=config.trac_partnership,
            w=config.trac_w,
            phi_min=config.trac_phi_min,
        )


@dataclasses.dataclass(frozen=True, kw_only=True)
class TracTeam:
    team_id: int
    members: Tuple[str, ...]
    institution_splits: Tuple[InstitutionTeam, ...] = ()

    @property
    def size(self) -> int:
        return len(self.members)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'team_id': self.team_id,
            'center': None,
            'center_flagged': False,
            'rho_threshold': None,
            'familiarity_threshold': None,
            'mode': TRAC_MODE,
            'members': list(self.members),
            'border': [],
            'institution_splits': [split.to_dict() for split in self.institution_splits],
        }


def edge_intensity(edge: Edge, kind: TracIntensity) -> float:
    """Returns the collaboration intensity of ``edge``: its co-authorship count, or its closeness ``1 - d``."""
    if kind is TracIntensity.co_count:
        return float(edge.co_count)

    return 1.0 - edge.weight


def partnership_scores(graph: CollaborationGraph, config: TracConfig) -> Dict[str, float]:
    """Scores every node of ``graph`` by its summed edge intensity or by its degree."""
    scores: Dict[str, float] = {node: 0.0 for node in graph.nodes}
    for edge in graph.edges:
        value = edge_intensity(edge, config.intensity) if config.partnership is TracPartnership.weighted_degree else 1.0
        scores[edge.a] += value
        scores[edge.b] += value

    return scores


def trac_recognize(graph: CollaborationGraph, config: TracConfig) -> List[TracTeam]:
    """Recognizes teams by filtering weak collaborations out of ``graph``.

    Nodes below the partnership threshold are removed first, then every edge below
    the intensity threshold. The connected components left with two or more scholars
    are the teams, ordered by their smallest member.

    Parameters
    ----------
    graph: :class:`CollaborationGraph`
        The collaboration graph. It is never modified.
    config: :class:`TracConfig`
        The thresholds and scoring functions.

    Returns
    -------
    List[:class:`TracTeam`]
    """
    scores = partnership_scores(graph, config)
    kept_nodes: Set[str] = {node for node, score in scores.items() if score >= config.phi_min}

    filtered = nx.Graph()
    for edge in graph.edges:
        if edge.a in kept_nodes and edge.b in kept_nodes and edge_intensity(edge, config.intensity) >= config.w:
            filtered.add_edge(edge.a, edge.b)

    components = sorted(
        (tuple(sorted(component)) for component in nx.connected_components(filtered) if len(component) >= 2),
        key=lambda members: members[0],
    )

    teams: List[TracTeam] = []
    for position, members in enumerate(components, start=1):
        splits = split_by_institution(set(members), graph.profiles, team_id=position)
        teams.append(TracTeam(team_id=position, members=members, institution_splits=tuple(splits)))

    _log.info(
        'Kept %s of %s scholars and %s edges, %s teams remain',
        len(kept_nodes),
        graph.node_count,
        filtered.number_of_edges(),
        len(teams),
    )
    return teams
