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
import hashlib
import itertools
import logging
from collections import defaultdict
from typing import (
    AbstractSet,
    DefaultDict,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Set,
    Tuple,
    Union,
)

import networkx as nx

from stages.distance.weights import edge_distance
from utils import RUNNING_DEVELOPMENT

from .errors import InvalidEdge, UnknownScholar
from .records import PublicationRecord

__all__: Tuple[str, ...] = (
    'ScholarProfile',
    'Edge',
    'CollaborationGraph',
    'build_graph',
    'largest_component',
)

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)

EdgeTuple = Union[Tuple[str, str, float], Tuple[str, str, float, int]]


@dataclasses.dataclass(frozen=True, kw_only=True)
class ScholarProfile:
    """Represents one scholar of a collaboration graph.

    Attributes
    ----------
    scholar_id: :class:`str`
        The scholar id.
    paper_count: :class:`int`
        The number of distinct papers listing the scholar within the window.
    institutions: FrozenSet[:class:`str`]
        Every institution the scholar was affiliated with in the window.
    citation_sum: :class:`int`
        The summed citations of the scholar's window papers.
    first_year: Optional[:class:`int`]
        The first year the scholar published in. Not part of equality.
    last_year: Optional[:class:`int`]
        The last year the scholar published in. Not part of equality.
    """

    scholar_id: str
    paper_count: int
    institutions: FrozenSet[str] = frozenset()
    citation_sum: int = 0
    first_year: Optional[int] = dataclasses.field(default=None, compare=False)
    last_year: Optional[int] = dataclasses.field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.paper_count < 1:
            raise ValueError(f'Scholar {self.scholar_id!r} must have at least one paper.')
        if self.citation_sum < 0:
            raise ValueError(f'Scholar {self.scholar_id!r} has a negative citation sum.')
        if self.first_year is not None and self.last_year is not None and self.first_year > self.last_year:
            raise ValueError(f'Scholar {self.scholar_id!r} has a career that ends before it starts.')


@dataclasses.dataclass(frozen=True, slots=True)
class Edge:
    """An undirected co-authorship edge, stored with ``a < b``."""

    a: str
    b: str
    co_count: int
    weight: float

    @property
    def pair(self) -> Tuple[str, str]:
        return self.a, self.b

    def other(self, node: str) -> str:
        return self.b if node == self.a else self.a


def _ordered(a: str, b: str) -> Tuple[str, str]:
    return (a, b) if a < b else (b, a)


class CollaborationGraph:
    """An immutable weighted undirected co-authorship graph.

    Nodes are scholars and every edge carries the number of shared papers and the
    collaboration distance. Neighbors are always iterated in ascending id order so
    every traversal over the graph is deterministic.

    Parameters
    ----------
    profiles: Iterable[:class:`ScholarProfile`]
        One profile per node.
    edges: Iterable[:class:`Edge`]
        The edges. Endpoints may be given in either order.

    Raises
    ------
    InvalidEdge
        An edge is a self-loop, a duplicate, references an unknown scholar or carries
        an out of range count or weight.
    """

    __slots__: Tuple[str, ...] = ('_nodes', '_profiles', '_edges', '_adjacency', '_neighbor_sets', '_fingerprint')

    def __init__(self, profiles: Iterable[ScholarProfile], edges: Iterable[Edge]) -> None:
        self._profiles: Dict[str, ScholarProfile] = {}
        for profile in profiles:
            if profile.scholar_id in self._profiles:
                raise ValueError(f'Scholar {profile.scholar_id!r} is listed twice.')
            self._profiles[profile.scholar_id] = profile

        self._nodes: Tuple[str, ...] = tuple(sorted(self._profiles))

        stored: Dict[Tuple[str, str], Edge] = {}
        for edge in edges:
            a, b = _ordered(edge.a, edge.b)
            if a == b:
                raise InvalidEdge(edge=(a, b), reason='self-loops are not allowed')
            if a not in self._profiles or b not in self._profiles:
                raise InvalidEdge(edge=(a, b), reason='an endpoint is not a node of the graph')
            if (a, b) in stored:
                raise InvalidEdge(edge=(a, b), reason='the pair is already connected')
            if edge.co_count < 1:
                raise InvalidEdge(edge=(a, b), reason='the co-authorship count must be positive')
            if not 0.0 <= edge.weight < 1.0:
                raise InvalidEdge(edge=(a, b), reason=f'the weight {edge.weight!r} is outside [0, 1)')

            stored[(a, b)] = edge if edge.a == a else Edge(a, b, edge.co_count, edge.weight)

        self._edges: Dict[Tuple[str, str], Edge] = dict(sorted(stored.items()))

        adjacency: DefaultDict[str, List[Tuple[str, float]]] = defaultdict(list)
        for (a, b), edge in self._edges.items():
            adjacency[a].append((b, edge.weight))
            adjacency[b].append((a, edge.weight))

        self._adjacency: Dict[str, Tuple[Tuple[str, float], ...]] = {
            node: tuple(sorted(adjacency.get(node, ()))) for node in self._nodes
        }
        self._neighbor_sets: Dict[str, FrozenSet[str]] = {
            node: frozenset(neighbor for neighbor, _ in row) for node, row in self._adjacency.items()
        }
        self._fingerprint: Optional[str] = None

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[EdgeTuple],
        *,
        nodes: Iterable[str] = (),
        institutions: Optional[Mapping[str, Iterable[str]]] = None,
        citations: Optional[Mapping[str, int]] = None,
    ) -> CollaborationGraph:
        """Builds a graph straight from weighted edges.

        Each edge is ``(a, b, weight)`` or ``(a, b, weight, co_count)``, the co-authorship
        count defaulting to ``1``. Paper counts are set to the largest incident count so
        every edge stays consistent with its endpoints.

        Parameters
        ----------
        edges: Iterable[Tuple]
            The weighted edges.
        nodes: Iterable[:class:`str`]
            Extra nodes that have no edges.
        institutions: Optional[Mapping[:class:`str`, Iterable[:class:`str`]]]
            Institution memberships per scholar.
        citations: Optional[Mapping[:class:`str`, :class:`int`]]
            Citation sums per scholar.
        """
        built: List[Edge] = []
        paper_counts: Dict[str, int] = {node: 1 for node in nodes}
        for item in edges:
            a, b, weight = item[0], item[1], item[2]
            co_count = item[3] if len(item) == 4 else 1
            built.append(Edge(*_ordered(a, b), co_count, float(weight)))
            for node in (a, b):
                paper_counts[node] = max(paper_counts.get(node, 1), co_count)

        institutions = institutions or {}
        citations = citations or {}
        profiles = [
            ScholarProfile(
                scholar_id=node,
                paper_count=count,
                institutions=frozenset(institutions.get(node, ())),
                citation_sum=citations.get(node, 0),
            )
            for node, count in paper_counts.items()
        ]
        return cls(profiles, built)

    def __repr__(self) -> str:
        return f'<CollaborationGraph nodes={self.node_count} edges={self.edge_count}>'

    def __len__(self) -> int:
        return len(self._nodes)

    def __iter__(self) -> Iterator[str]:
        return iter(self._nodes)

    def __contains__(self, node: object) -> bool:
        return node in self._profiles

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CollaborationGraph):
            return NotImplemented

        return self._profiles == other._profiles and self._edges == other._edges

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    @property
    def nodes(self) -> Tuple[str, ...]:
        """Tuple[:class:`str`, ...]: Every scholar id in ascending order."""
        return self._nodes

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Tuple[:class:`Edge`, ...]: Every edge ordered by its endpoints."""
        return tuple(self._edges.values())

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def profiles(self) -> Mapping[str, ScholarProfile]:
        return self._profiles

    @property
    def fingerprint(self) -> str:
        """:class:`str`: A SHA-256 digest of the topology and weights, used as a cache key."""
        if self._fingerprint is None:
            digest = hashlib.sha256()
            for node in self._nodes:
                digest.update(f'n\t{node}\n'.encode())
            for edge in self._edges.values():
                digest.update(f'e\t{edge.a}\t{edge.b}\t{edge.co_count}\t{edge.weight!r}\n'.encode())

            self._fingerprint = digest.hexdigest()

        return self._fingerprint

    def scholar(self, node: str) -> ScholarProfile:
        """Returns the profile of ``node``.

        Raises
        ------
        UnknownScholar
            ``node`` is not in the graph.
        """
        try:
            return self._profiles[node]
        except KeyError:
            raise UnknownScholar(scholar_id=node) from None

    def neighbors(self, node: str) -> Tuple[Tuple[str, float], ...]:
        """Returns ``(neighbor, weight)`` pairs of ``node`` in ascending neighbor id order."""
        try:
            return self._adjacency[node]
        except KeyError:
            raise UnknownScholar(scholar_id=node) from None

    def neighbor_set(self, node: str) -> FrozenSet[str]:
        try:
            return self._neighbor_sets[node]
        except KeyError:
            raise UnknownScholar(scholar_id=node) from None

    def degree(self, node: str) -> int:
        return len(self.neighbor_set(node))

    def has_edge(self, a: str, b: str) -> bool:
        return _ordered(a, b) in self._edges

    def edge(self, a: str, b: str) -> Optional[Edge]:
        return self._edges.get(_ordered(a, b))

    def incident(self, node: str) -> Iterator[Edge]:
        for neighbor in self.neighbor_set(node):
            yield self._edges[_ordered(node, neighbor)]

    def subgraph(self, nodes: AbstractSet[str]) -> CollaborationGraph:
        """Returns the subgraph induced on ``nodes``. Unknown ids are ignored."""
        keep = {node for node in nodes if node in self._profiles}
        return CollaborationGraph(
            (self._profiles[node] for node in sorted(keep)),
            (edge for edge in self._edges.values() if edge.a in keep and edge.b in keep),
        )

    def with_topology(self, pairs: Iterable[Tuple[str, str]]) -> CollaborationGraph:
        """Returns a graph on the same scholars with the given edge set.

        Pairs that are already edges keep their counts and weights, new pairs are
        treated as a single shared paper.
        """
        edges: List[Edge] = []
        for a, b in pairs:
            existing = self.edge(a, b)
            if existing is not None:
                edges.append(existing)
                continue

            first, second = _ordered(a, b)
            weight = edge_distance(1, self.scholar(first).paper_count, self.scholar(second).paper_count)
            edges.append(Edge(first, second, 1, weight))

        return CollaborationGraph(self._profiles.values(), edges)

    def to_networkx(self) -> nx.Graph:
        """Returns a :class:`networkx.Graph` copy with ``weight`` and ``co_count`` edge attributes.

        Nodes and edges are inserted in sorted order so seeded networkx algorithms
        behave the same on equal graphs.
        """
        graph = nx.Graph()
        graph.add_nodes_from(self._nodes)
        for edge in self._edges.values():
            graph.add_edge(edge.a, edge.b, weight=edge.weight, co_count=edge.co_count)

        return graph


def build_graph(
    window_records: Iterable[PublicationRecord],
    retained_scholars: AbstractSet[str],
    *,
    career_spans: Optional[Mapping[str, Tuple[int, int]]] = None,
) -> CollaborationGraph:
    """Builds the collaboration graph of one analysis window.

    Every retained scholar listed on a window paper becomes a node and every pair of
    retained scholars sharing a paper becomes an edge. A paper id seen twice is only
    counted once.

    Parameters
    ----------
    window_records: Iterable[:class:`PublicationRecord`]
        The records of the window.
    retained_scholars: AbstractSet[:class:`str`]
        The scholars that passed the career filter.
    career_spans: Optional[Mapping[:class:`str`, Tuple[:class:`int`, :class:`int`]]]
        Corpus wide first and last years, attached to the scholar profiles. When not
        given the window years are used.

    Returns
    -------
    :class:`CollaborationGraph`
    """
    if not retained_scholars:
        _log.warning('No scholars were retained, the collaboration graph is empty')

    paper_counts: DefaultDict[str, int] = defaultdict(int)
    citation_sums: DefaultDict[str, int] = defaultdict(int)
    institutions: DefaultDict[str, Set[str]] = defaultdict(set)
    window_years: Dict[str, Tuple[int, int]] = {}
    co_counts: DefaultDict[Tuple[str, str], int] = defaultdict(int)

    seen_papers: Set[str] = set()
    dropped = 0
    for record in window_records:
        if record.paper_id in seen_papers:
            continue
        seen_papers.add(record.paper_id)

        authors = sorted(author for author in record.authors if author in retained_scholars)
        if not authors:
            dropped += 1
            continue

        for author in authors:
            paper_counts[author] += 1
            citation_sums[author] += record.citations
            institutions[author].update(record.institutions_of(author))

            first, last = window_years.get(author, (record.year, record.year))
            window_years[author] = (min(first, record.year), max(last, record.year))

        for pair in itertools.combinations(authors, 2):
            co_counts[pair] += 1

    if dropped:
        _log.debug('Dropped %s papers with no retained authors', dropped)

    spans = career_spans or window_years
    profiles = [
        ScholarProfile(
            scholar_id=scholar,
            paper_count=count,
            institutions=frozenset(institutions[scholar]),
            citation_sum=citation_sums[scholar],
            first_year=spans.get(scholar, window_years[scholar])[0],
            last_year=spans.get(scholar, window_years[scholar])[1],
        )
        for scholar, count in paper_counts.items()
    ]
    edges = [
        Edge(a, b, co_count, edge_distance(co_count, paper_counts[a], paper_counts[b]))
        for (a, b), co_count in co_counts.items()
    ]

    graph = CollaborationGraph(profiles, edges)
    _log.info('Built a collaboration graph with %s scholars and %s edges', graph.node_count, graph.edge_count)
    return graph


def largest_component(graph: CollaborationGraph) -> CollaborationGraph:
    """Returns the subgraph induced on the largest connected component.

    Components of equal size are ranked by their smallest scholar id.
    """
    if not graph.node_count:
        return graph

    components: List[Set[str]] = [set(component) for component in nx.connected_components(graph.to_networkx())]
    best = min(components, key=lambda component: (-len(component), min(component)))
    if len(components) > 1:
        _log.debug('Kept the largest of %s components, %s of %s scholars', len(components), len(best), graph.node_count)

    return graph.subgraph(best)
