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
import pathlib
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple, cast

import orjson

from utils import RUNNING_DEVELOPMENT

from .errors import CorpusReadError, InvertedWindow, MalformedRecord

__all__: Tuple[str, ...] = (
    'PublicationRecord',
    'RejectedLine',
    'ParseResult',
    'parse_publications',
    'read_publications',
    'filter_window',
    'filter_fields',
    'filter_scholars',
    'career_spans',
    'plan_windows',
)

_log = logging.getLogger(__name__)

# Snapshot tables separate fields with tabs and institutions with ';'.
_LINE_BREAKS = '\n\r'
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)


@dataclasses.dataclass(frozen=True, kw_only=True)
class PublicationRecord:
    """Represents one paper of the publication corpus.

    Attributes
    ----------
    paper_id: :class:`str`
        The opaque paper id.
    year: :class:`int`
        The publication year.
    authors: Tuple[:class:`str`, ...]
        The scholar ids in author order. Never empty and never repeated.
    institutions: Tuple[Tuple[:class:`str`, ...], ...]
        Per author institution ids, aligned with :attr:`authors`. Empty when the record
        carries no affiliations.
    citations: :class:`int`
        The citation count of the paper.
    fields: Tuple[:class:`str`, ...]
        The field of study tags.
    """

    paper_id: str
    year: int
    authors: Tuple[str, ...]
    institutions: Tuple[Tuple[str, ...], ...] = ()
    citations: int = 0
    fields: Tuple[str, ...] = ()

    def institutions_of(self, author: str) -> Tuple[str, ...]:
        """Returns the institutions listed for ``author`` on this paper."""
        if not self.institutions:
            return ()

        return self.institutions[self.authors.index(author)]


@dataclasses.dataclass(frozen=True)
class RejectedLine:
    line_number: int
    reason: str


@dataclasses.dataclass(frozen=True, kw_only=True)
class ParseResult:
    """The outcome of parsing a publication stream.

    Attributes
    ----------
    records: List[:class:`PublicationRecord`]
        Every well formed record, in stream order.
    rejected: List[:class:`RejectedLine`]
        Every malformed line with the reason it was rejected.
    """

    records: List[PublicationRecord]
    rejected: List[RejectedLine]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[PublicationRecord]:
        return iter(self.records)

    @property
    def reject_count(self) -> int:
        return len(self.rejected)


def _string_list(value: Any, *, key: str, reserved: str = '') -> Tuple[str, ...]:
    items = cast(List[Any], value) if isinstance(value, list) else None
    if items is None or not all(isinstance(item, str) for item in items):
        raise ValueError(f'"{key}" must be an array of strings')

    strings = tuple(cast(List[str], items))
    for item in strings:
        if any(character in item for character in reserved):
            raise ValueError(f'"{key}" entry {item!r} contains a reserved character')

    return strings


def _build_record(data: Mapping[str, Any], *, year_bounds: Optional[Tuple[int, int]]) -> PublicationRecord:
    for key in ('paper_id', 'year', 'authors'):
        if key not in data:
            raise ValueError(f'missing "{key}"')

    paper_id = data['paper_id']
    if not isinstance(paper_id, str) or not paper_id:
        raise ValueError('"paper_id" must be a non-empty string')

    year = data['year']
    if isinstance(year, bool) or not isinstance(year, int):
        raise ValueError('"year" must be an integer')

    if year_bounds is not None and not year_bounds[0] <= year <= year_bounds[1]:
        raise ValueError(f'year {year} is outside [{year_bounds[0]}, {year_bounds[1]}]')

    authors = _string_list(data['authors'], key='authors', reserved=_LINE_BREAKS + '\t')
    if not authors:
        raise ValueError('"authors" must not be empty')
    if len(set(authors)) != len(authors):
        raise ValueError('"authors" lists a scholar more than once')

    raw_institutions = data.get('institutions') or []
    if not isinstance(raw_institutions, list):
        raise ValueError('"institutions" must be an array of arrays')

    institutions: Tuple[Tuple[str, ...], ...] = tuple(
        _string_list(entry, key='institutions', reserved=_LINE_BREAKS + '\t;')
        for entry in cast(List[Any], raw_institutions)
    )
    if institutions and len(institutions) != len(authors):
        raise ValueError('"institutions" is not aligned with "authors"')

    citations = data.get('citations', 0)
    if citations is None:
        citations = 0
    if isinstance(citations, bool) or not isinstance(citations, int) or citations < 0:
        raise ValueError('"citations" must be a non-negative integer')

    fields = _string_list(data.get('fields') or [], key='fields')

    return PublicationRecord(
        paper_id=paper_id,
        year=year,
        authors=authors,
        institutions=institutions,
        citations=citations,
        fields=fields,
    )


def parse_publications(stream: Iterable[str], *, year_bounds: Optional[Tuple[int, int]] = None) -> ParseResult:
    """Parses a JSON-lines publication stream.

    Blank lines are skipped. A line that is not a valid record is rejected with its
    line number and the reason, it never stops the parse.

    Parameters
    ----------
    stream: Iterable[:class:`str`]
        The lines to parse, usually an open text file.
    year_bounds: Optional[Tuple[:class:`int`, :class:`int`]]
        Inclusive bounds a record's year must fall in.

    Returns
    -------
    :class:`ParseResult`

    Raises
    ------
    CorpusReadError
        The stream could not be read.
    """
    records: List[PublicationRecord] = []
    rejected: List[RejectedLine] = []

    try:
        for line_number, line in enumerate(stream, start=1):
            if not line.strip():
                continue

            try:
                data = orjson.loads(line)
                if not isinstance(data, dict):
                    raise ValueError('the line is not a JSON object')

                records.append(_build_record(cast(Dict[str, Any], data), year_bounds=year_bounds))
            except (orjson.JSONDecodeError, ValueError) as exc:
                error = MalformedRecord(line_number=line_number, reason=str(exc))
                _log.debug('Rejected record: %s', error)
                rejected.append(RejectedLine(error.line_number, error.reason))
    except (OSError, UnicodeDecodeError) as exc:
        raise CorpusReadError(f'Failed to read the publication stream: {exc}') from exc

    if rejected:
        _log.warning('Rejected %s malformed publication records, first on line %s', len(rejected), rejected[0].line_number)

    _log.info('Parsed %s publication records', len(records))
    return ParseResult(records=records, rejected=rejected)


def read_publications(path: pathlib.Path, *, year_bounds: Optional[Tuple[int, int]] = None) -> ParseResult:
    """Opens ``path`` and runs :func:`parse_publications` over it.

    Raises
    ------
    CorpusReadError
        The file does not exist or could not be read.
    """
    try:
        with path.open('r', encoding='utf-8') as fp:
            return parse_publications(fp, year_bounds=year_bounds)
    except OSError as exc:
        raise CorpusReadError(f'Failed to open {path}: {exc}') from exc


def filter_window(records: Iterable[PublicationRecord], start_year: int, end_year: int) -> List[PublicationRecord]:
    """Keeps the records published within ``[start_year, end_year]``.

    Raises
    ------
    InvertedWindow
        ``start_year`` is after ``end_year``.
    """
    if start_year > end_year:
        raise InvertedWindow(start_year=start_year, end_year=end_year)

    return [record for record in records if start_year <= record.year <= end_year]


def filter_fields(records: Iterable[PublicationRecord], whitelist: Iterable[str]) -> List[PublicationRecord]:
    """Keeps the records tagged with at least one whitelisted field. An empty
    whitelist keeps every record."""
    allowed: FrozenSet[str] = frozenset(whitelist)
    if not allowed:
        return list(records)

    return [record for record in records if allowed.intersection(record.fields)]


def career_spans(records: Iterable[PublicationRecord]) -> Dict[str, Tuple[int, int]]:
    """Maps each scholar to the first and last year they published in."""
    spans: Dict[str, Tuple[int, int]] = {}
    for record in records:
        for author in record.authors:
            first, last = spans.get(author, (record.year, record.year))
            spans[author] = (min(first, record.year), max(last, record.year))

    return spans


def filter_scholars(all_records: Iterable[PublicationRecord], min_career_years: int = 5) -> Set[str]:
    """Returns the scholars whose academic life spans at least ``min_career_years``.

    The span is measured over the whole corpus, not over one window, so this should
    be given every record.

    Parameters
    ----------
    all_records: Iterable[:class:`PublicationRecord`]
        The full corpus.
    min_career_years: :class:`int`
        The minimum ``last_year - first_year + 1``. Defaults to ``5``.

    Returns
    -------
    Set[:class:`str`]
    """
    retained = {
        scholar for scholar, (first, last) in career_spans(all_records).items() if last - first + 1 >= min_career_years
    }
    _log.debug('Retained %s scholars with a career of %s years or more', len(retained), min_career_years)
    return retained


def plan_windows(first_year: int, last_year: int, *, length: int = 4, stride: int = 2) -> Sequence[Tuple[int, int]]:
    """Plans the staggered analysis windows covering ``[first_year, last_year]``.

    Windows are ``length`` years long and start every ``stride`` years, a window that
    would run past ``last_year`` is not planned.

    Raises
    ------
    InvertedWindow
        ``first_year`` is after ``last_year``.
    """
    if first_year > last_year:
        raise InvertedWindow(start_year=first_year, end_year=last_year)

    windows: List[Tuple[int, int]] = []
    start = first_year
    while start + length - 1 <= last_year:
        windows.append((start, start + length - 1))
        start += stride

    return windows
