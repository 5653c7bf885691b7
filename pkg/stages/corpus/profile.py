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
from typing import Any, Dict, Optional, Tuple

import numpy as np

from stages.familiarity.triangles import TriangleIndex, enumerate_triangles

from .graph import CollaborationGraph

__all__: Tuple[str, ...] = ('NetworkProfile', 'profile', 'local_clustering')


@dataclasses.dataclass(frozen=True, kw_only=True)
class NetworkProfile:
    """The summary statistics of a collaboration graph.

    Attributes
    ----------
    node_count: :class:`int`
        The number of scholars.
    edge_count: :class:`int`
        The number of co-authorship edges.
    avg_co_times: :class:`float`
        The mean shared paper count over edges.
    avg_degree: :class:`float`
        ``2 * edge_count / node_count``.
    triangle_count: :class:`int`
        The number of triangles.
    clustering_coefficient: :class:`float`
        The mean local clustering coefficient over all nodes, nodes with fewer than
        two neighbors contributing ``0``.
    """

    node_count: int
    edge_count: int
    avg_co_times: float
    avg_degree: float
    triangle_count: int
    clustering_coefficient: float

    def to_dict(self) -> Dict[str, Any]:
        return dataclasses.asdict(self)


def local_clustering(graph: CollaborationGraph, triangles: TriangleIndex) -> Dict[str, float]:
    """Returns the local clustering coefficient of every node."""
    coefficients: Dict[str, float] = {}
    for node in graph.nodes:
        degree = graph.degree(node)
        if degree < 2:
            coefficients[node] = 0.0
        else:
            coefficients[node] = 2.0 * triangles.count(node) / (degree * (degree - 1))

    return coefficients


def profile(graph: CollaborationGraph, *, triangles: Optional[TriangleIndex] = None) -> NetworkProfile:
    """Computes the :class:`NetworkProfile` of ``graph``.

    Parameters
    ----------
    graph: :class:`CollaborationGraph`
        The graph to profile.
    triangles: Optional[:class:`TriangleIndex`]
        A census already computed for ``graph``.
    """
    if not graph.node_count:
        return NetworkProfile(
            node_count=0,
            edge_count=0,
            avg_co_times=0.0,
            avg_degree=0.0,
            triangle_count=0,
            clustering_coefficient=0.0,
        )

    if triangles is None:
        triangles = enumerate_triangles(graph)

    co_counts = np.fromiter((edge.co_count for edge in graph.edges), dtype=np.float64, count=graph.edge_count)
    coefficients = np.fromiter(local_clustering(graph, triangles).values(), dtype=np.float64, count=graph.node_count)

    return NetworkProfile(
        node_count=graph.node_count,
        edge_count=graph.edge_count,
        avg_co_times=float(co_counts.mean()) if co_counts.size else 0.0,
        avg_degree=2.0 * graph.edge_count / graph.node_count,
        triangle_count=len(triangles),
        clustering_coefficient=float(coefficients.mean()),
    )
