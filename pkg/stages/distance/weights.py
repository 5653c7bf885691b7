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

from typing import Tuple

from .errors import CorruptCounts

__all__: Tuple[str, ...] = ('edge_distance',)


def edge_distance(co_count: int, papers_a: int, papers_b: int) -> float:
    """Computes the collaboration distance of two scholars.

    This is one minus the Jaccard overlap of their paper sets,
    ``1 - cot / (pn_a + pn_b - cot)``.

    Parameters
    ----------
    co_count: :class:`int`
        The number of papers both scholars appear on.
    papers_a: :class:`int`
        The paper count of the first scholar.
    papers_b: :class:`int`
        The paper count of the second scholar.

    Returns
    -------
    :class:`float`
        A distance in ``[0, 1)``, ``0`` only when both paper sets are identical.

    Raises
    ------
    CorruptCounts
        ``co_count`` is not positive or exceeds either paper count.
    """
    if co_count < 1 or co_count > min(papers_a, papers_b):
        raise CorruptCounts(co_count=co_count, paper_counts=(papers_a, papers_b))

    return 1.0 - co_count / (papers_a + papers_b - co_count)
