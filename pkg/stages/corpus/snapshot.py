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

import logging
import pathlib
from typing import List, Tuple

from utils import ArtifactWriter

from .errors import SnapshotError
from .graph import CollaborationGraph, Edge, ScholarProfile

__all__: Tuple[str, ...] = (
    'NODES_FILE',
    'EDGES_FILE',
    'snapshot_paths',
    'render_nodes',
    'render_edges',
    'write_snapshot',
    'read_snapshot',
)

_log = logging.getLogger(__name__)

NODES_FILE: str = 'nodes.tsv'
EDGES_FILE: str = 'edges.tsv'


def snapshot_paths(directory: pathlib.Path) -> Tuple[pathlib.Path, pathlib.Path]:
    """Returns the node table and edge list paths of the snapshot in ``directory``."""
    return directory / NODES_FILE, directory / EDGES_FILE


def render_nodes(graph: CollaborationGraph) -> str:
    lines: List[str] = []
    for node in graph.nodes:
        scholar = graph.scholar(node)
        lines.append(f'{node}\t{scholar.paper_count}\t{";".join(sorted(scholar.institutions))}\t{scholar.citation_sum}\n')

    return ''.join(lines)


def render_edges(graph: CollaborationGraph) -> str:
    # repr keeps the shortest round-tripping form of the weight
    return ''.join(f'{edge.a}\t{edge.b}\t{edge.co_count}\t{edge.weight!r}\n' for edge in graph.edges)


def write_snapshot(graph: CollaborationGraph, writer: ArtifactWriter, *, prefix: str = '') -> None:
    """Stages the node table and edge list of ``graph`` in ``writer``.

    Parameters
    ----------
    graph: :class:`CollaborationGraph`
        The graph to write.
    writer: :class:`ArtifactWriter`
        The open writer of the running command.
    prefix: :class:`str`
        A sub directory inside the writer, used when one command writes several windows.
    """
    writer.write_text(f'{prefix}{NODES_FILE}', render_nodes(graph))
    writer.write_text(f'{prefix}{EDGES_FILE}', render_edges(graph))


def _fields(line: str, *, expected: int, path: pathlib.Path, line_number: int) -> List[str]:
    fields = line.rstrip('\n').split('\t')
    if len(fields) != expected:
        raise SnapshotError(f'{path}:{line_number}: expected {expected} tab separated fields, got {len(fields)}')

    return fields


def read_snapshot(directory: pathlib.Path) -> CollaborationGraph:
    """Reads the graph snapshot written by :func:`write_snapshot`.

    Raises
    ------
    SnapshotError
        A snapshot file is missing or a line can not be parsed.
    """
    nodes_path, edges_path = snapshot_paths(directory)
    for path in (nodes_path, edges_path):
        if not path.is_file():
            raise SnapshotError(f'Graph snapshot file {path} does not exist.')

    profiles: List[ScholarProfile] = []
    edges: List[Edge] = []
    try:
        with nodes_path.open('r', encoding='utf-8') as fp:
            for line_number, line in enumerate(fp, start=1):
                if not line.strip():
                    continue

                node, paper_count, institutions, citation_sum = _fields(
                    line, expected=4, path=nodes_path, line_number=line_number
                )
                profiles.append(
                    ScholarProfile(
                        scholar_id=node,
                        paper_count=int(paper_count),
                        institutions=frozenset(item for item in institutions.split(';') if item),
                        citation_sum=int(citation_sum),
                    )
                )

        with edges_path.open('r', encoding='utf-8') as fp:
            for line_number, line in enumerate(fp, start=1):
                if not line.strip():
                    continue

                a, b, co_count, weight = _fields(line, expected=4, path=edges_path, line_number=line_number)
                edges.append(Edge(a, b, int(co_count), float(weight)))

        graph = CollaborationGraph(profiles, edges)
    except SnapshotError:
        raise
    except ValueError as exc:
        raise SnapshotError(f'Graph snapshot in {directory} is corrupt: {exc}') from exc
    except OSError as exc:
        raise SnapshotError(f'Failed to read the graph snapshot in {directory}: {exc}') from exc

    _log.debug('Read a snapshot of %s scholars and %s edges from %s', graph.node_count, graph.edge_count, directory)
    return graph
