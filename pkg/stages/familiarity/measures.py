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

from typing import TYPE_CHECKING, AbstractSet, Callable, Optional, Tuple, TypeAlias

from utils import FamiliarityMode

from .errors import EmptyTeam
from .triangles import TriangleIndex, enumerate_triangles

if TYPE_CHECKING:
    from stages.corpus.graph import CollaborationGraph

__all__: Tuple[str, ...] = ('FamiliarityFn', 'pairwise_familiarity', 'higher_order_familiarity', 'familiarity_function')

FamiliarityFn: TypeAlias = Callable[[str, AbstractSet[str]], int]


def pairwise_familiarity(node: str, team: AbstractSet[str], graph: CollaborationGraph) -> int:
    """Counts the team members ``node`` has co-authored with directly.

    Raises
    ------
    EmptyTeam
        ``team`` is empty.
    """
    if not team:
        raise EmptyTeam()

    neighbors = graph.neighbor_set(node)
    return sum(1 for member in team if member != node and member in neighbors)


def higher_order_familiarity(node: str, team: AbstractSet[str], triangles: TriangleIndex) -> int:
    """Counts the team members that share at least one triangle with ``node``.

    Raises
    ------
    EmptyTeam
        ``team`` is empty.
    """
    if not team:
        raise EmptyTeam()

    partners = triangles.partners(node)
    return sum(1 for member in team if member != node and member in partners)


def familiarity_function(
    mode: FamiliarityMode,
    *,
    graph: CollaborationGraph,
    triangles: Optional[TriangleIndex] = None,
    restrict_triangles: bool = False,
    team: Optional[AbstractSet[str]] = None,
) -> FamiliarityFn:
    """Binds the familiarity measure of ``mode`` to a graph.

    With ``restrict_triangles`` only triangles lying entirely inside the team count
    towards higher order familiarity. Passing ``team`` restricts the census once up
    front instead of on every call.

    Parameters
    ----------
    mode: :class:`FamiliarityMode`
        The measure to bind.
    graph: :class:`CollaborationGraph`
        The collaboration graph.
    triangles: Optional[:class:`TriangleIndex`]
        The triangle census of ``graph``, enumerated here when missing and needed.
    restrict_triangles: :class:`bool`
        Whether to count only triangles inside the team.
    team: Optional[AbstractSet[:class:`str`]]
        The team every call will be made with.
    """
    if mode is FamiliarityMode.pairwise:
        return lambda node, members: pairwise_familiarity(node, members, graph)

    index = triangles if triangles is not None else enumerate_triangles(graph)
    if not restrict_triangles:
        return lambda node, members: higher_order_familiarity(node, members, index)

    if team is not None:
        restricted = index.within(team)
        return lambda node, members: higher_order_familiarity(node, members, restricted)

    return lambda node, members: higher_order_familiarity(node, members, index.within(members))
