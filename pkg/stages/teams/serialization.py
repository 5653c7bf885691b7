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
import pathlib
from typing import Any, Dict, Iterable, List, Optional, Protocol, Set, Tuple, cast

import orjson

from utils import load_json

from .errors import TeamsFileError

__all__: Tuple[str, ...] = ('SerializableTeam', 'TeamRecord', 'teams_to_json', 'load_teams', 'teams_file_name')


class SerializableTeam(Protocol):
    def to_dict(self) -> Dict[str, Any]:
        ...


@dataclasses.dataclass(frozen=True, kw_only=True)
class TeamRecord:
    """A team read back from a teams file, whichever method recognized it.

    Attributes
    ----------
    team_id: :class:`int`
        The team id.
    members: Tuple[:class:`str`, ...]
        The members, sorted.
    mode: :class:`str`
        ``higher-order``, ``pairwise`` or ``trac``.
    center: Optional[:class:`str`]
        The center, ``None`` for methods without one.
    """

    team_id: int
    members: Tuple[str, ...]
    mode: str
    center: Optional[str] = None

    @property
    def size(self) -> int:
        return len(self.members)


def teams_file_name(mode: str) -> str:
    return f'teams-{mode}.json'


def teams_to_json(teams: Iterable[SerializableTeam]) -> List[Dict[str, Any]]:
    return [team.to_dict() for team in teams]


def _record(raw: Any, *, path: pathlib.Path, position: int) -> TeamRecord:
    if not isinstance(raw, dict):
        raise TeamsFileError(path, f'entry {position} is not an object')

    entry = cast(Dict[str, Any], raw)
    team_id = entry.get('team_id')
    members = entry.get('members')
    mode = entry.get('mode')
    center = entry.get('center')

    if isinstance(team_id, bool) or not isinstance(team_id, int):
        raise TeamsFileError(path, f'entry {position} has no integer "team_id"')
    if not isinstance(members, list) or not members:
        raise TeamsFileError(path, f'team {team_id} has no members')

    member_list = cast(List[Any], members)
    if not all(isinstance(member, str) for member in member_list):
        raise TeamsFileError(path, f'team {team_id} lists a member that is not a string')
    if not isinstance(mode, str):
        raise TeamsFileError(path, f'team {team_id} has no "mode"')
    if center is not None and not isinstance(center, str):
        raise TeamsFileError(path, f'team {team_id} has an invalid "center"')

    return TeamRecord(team_id=team_id, members=tuple(sorted(cast(List[str], member_list))), mode=mode, center=center)


def load_teams(path: pathlib.Path) -> List[TeamRecord]:
    """Reads a teams file written by ``recognize`` or ``trac``.

    Raises
    ------
    TeamsFileError
        The file is missing, is not JSON or does not follow the teams schema.
    """
    try:
        raw = load_json(path)
    except OSError as exc:
        raise TeamsFileError(path, str(exc)) from exc
    except orjson.JSONDecodeError as exc:
        raise TeamsFileError(path, f'not valid JSON ({exc})') from exc

    if not isinstance(raw, list):
        raise TeamsFileError(path, 'the top level value must be an array')

    records = [_record(entry, path=path, position=position) for position, entry in enumerate(cast(List[Any], raw))]
    seen: Set[int] = set()
    for record in records:
        if record.team_id in seen:
            raise TeamsFileError(path, f'team id {record.team_id} appears twice')
        seen.add(record.team_id)

    return records
