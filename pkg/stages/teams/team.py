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
from collections import defaultdict
from typing import TYPE_CHECKING, AbstractSet, Any, DefaultDict, Dict, FrozenSet, List, Mapping, Optional, Set, Tuple

if TYPE_CHECKING:
    from stages.corpus.graph import ScholarProfile

__all__: Tuple[str, ...] = ('UNKNOWN_INSTITUTION', 'InstitutionTeam', 'RecognizedTeam', 'split_by_institution')

UNKNOWN_INSTITUTION: str = 'unknown'


@dataclasses.dataclass(frozen=True, kw_only=True)
class InstitutionTeam:
    """The members of a team that belong to one institution.

    Attributes
    ----------
    team_id: :class:`int`
        The parent team.
    institution: :class:`str`
        The institution id, :data:`UNKNOWN_INSTITUTION` for members without one.
    members: Tuple[:class:`str`, ...]
        The members, sorted.
    """

    team_id: int
    institution: str
    members: Tuple[str, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {'institution': self.institution, 'members': list(self.members)}


@dataclasses.dataclass(frozen=True, kw_only=True)
class RecognizedTeam:
    """A team that survived border filtering.

    Attributes
    ----------
    team_id: :class:`int`
        The 1-based position of the team in canonical order.
    center: :class:`str`
        The cluster center the team grew from.
    raw_members: Tuple[:class:`str`, ...]
        Every node assigned to the center.
    border: Tuple[:class:`str`, ...]
        The raw members within the cutoff distance of a node outside the team.
    rho_threshold: :class:`float`
        The highest local density on the border.
    familiarity_threshold: :class:`float`
        The highest familiarity on the border.
    members: Tuple[:class:`str`, ...]
        The raw members meeting both thresholds.
    mode: :class:`str`
        ``higher-order`` or ``pairwise``.
    center_flagged: :class:`bool`
        Whether the center itself failed the thresholds.
    institution_splits: Tuple[:class:`InstitutionTeam`, ...]
        The members grouped per institution.
    """

    team_id: int
    center: str
    raw_members: Tuple[str, ...]
    border: Tuple[str, ...]
    rho_threshold: float
    familiarity_threshold: float
    members: Tuple[str, ...]
    mode: str
    center_flagged: bool = False
    institution_splits: Tuple[InstitutionTeam, ...] = ()

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def member_set(self) -> FrozenSet[str]:
        return frozenset(self.members)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'team_id': self.team_id,
            'center': self.center,
            'center_flagged': self.center_flagged,
            'rho_threshold': self.rho_threshold,
            'familiarity_threshold': self.familiarity_threshold,
            'mode': self.mode,
            'members': list(self.members),
            'border': list(self.border),
            'institution_splits': [split.to_dict() for split in self.institution_splits],
        }


def split_by_institution(
    members: AbstractSet[str], scholars: Mapping[str, ScholarProfile], *, team_id: int = 0
) -> List[InstitutionTeam]:
    """Splits a team by institution.

    A scholar listed with several institutions appears in every one of their splits,
    a scholar with none is grouped under :data:`UNKNOWN_INSTITUTION`.

    Parameters
    ----------
    members: AbstractSet[:class:`str`]
        The filtered team members.
    scholars: Mapping[:class:`str`, :class:`ScholarProfile`]
        The scholar profiles of the graph.
    team_id: :class:`int`
        The parent team id stamped on every split.

    Returns
    -------
    List[:class:`InstitutionTeam`]
        One split per institution, sorted by institution id.
    """
    grouped: DefaultDict[str, Set[str]] = defaultdict(set)
    for member in members:
        profile: Optional[ScholarProfile] = scholars.get(member)
        institutions = profile.institutions if profile is not None else frozenset()
        for institution in institutions or (UNKNOWN_INSTITUTION,):
            grouped[institution].add(member)

    return [
        InstitutionTeam(team_id=team_id, institution=institution, members=tuple(sorted(grouped[institution])))
        for institution in sorted(grouped)
    ]
