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
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from stages.distance.paths import DistanceIndex
from utils import RUNNING_DEVELOPMENT, RunConfig, format_float

from .errors import DensityException, InvalidCutoff

__all__: Tuple[str, ...] = ('OccupancyRow', 'occupancy_scan', 'suggest_dc', 'scan_csv_rows', 'resolve_cutoff')

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)


@dataclasses.dataclass(frozen=True, kw_only=True)
class OccupancyRow:
    """The mean neighborhood size a candidate cutoff distance produces.

    Attributes
    ----------
    d_c: :class:`float`
        The candidate cutoff.
    mean_rho: :class:`float`
        The mean local density.
    occupancy: :class:`float`
        ``mean_rho`` as a fraction of the node count.
    in_band: :class:`bool`
        Whether ``occupancy`` falls within the target band.
    """

    d_c: float
    mean_rho: float
    occupancy: float
    in_band: bool


def occupancy_scan(
    distances: DistanceIndex, candidates: Sequence[float], band: Tuple[float, float] = (0.01, 0.02)
) -> List[OccupancyRow]:
    """Measures the mean neighborhood occupancy of every candidate cutoff distance.

    The off diagonal distances are sorted once and every candidate is answered with a
    binary search, so a whole scan costs about as much as one density pass.

    Parameters
    ----------
    distances: :class:`DistanceIndex`
        The bounded all pairs distances.
    candidates: Sequence[:class:`float`]
        The cutoff distances to try.
    band: Tuple[:class:`float`, :class:`float`]
        The inclusive occupancy band a good cutoff lands in.

    Raises
    ------
    InvalidCutoff
        A candidate is not positive.
    """
    for candidate in candidates:
        if not candidate > 0:
            raise InvalidCutoff(d_c=candidate)

    node_count = len(distances)
    pair_distances = np.sort(
        np.fromiter(
            (distance for source, target, distance in distances.pairs() if source != target),
            dtype=np.float64,
        )
    )

    low, high = band
    rows: List[OccupancyRow] = []
    for candidate in candidates:
        if candidate > distances.cap:
            _log.warning('Cutoff candidate %s exceeds the exploration cap %s', candidate, distances.cap)

        closer = int(np.searchsorted(pair_distances, candidate, side='left'))
        mean_rho = closer / node_count if node_count else 0.0
        occupancy = mean_rho / node_count if node_count else 0.0
        rows.append(OccupancyRow(d_c=candidate, mean_rho=mean_rho, occupancy=occupancy, in_band=low <= occupancy <= high))

    return rows


def suggest_dc(scan: Sequence[OccupancyRow], band: Tuple[float, float] = (0.01, 0.02)) -> float:
    """Picks a cutoff distance from an occupancy scan.

    The in band candidate closest to the middle of the band wins, the smaller cutoff
    on ties. When no candidate is in band the one closest to the band is used and a
    warning is logged.

    Raises
    ------
    DensityException
        The scan is empty.
    """
    if not scan:
        raise DensityException('The cutoff scan has no candidates to choose from.')

    low, high = band
    middle = (low + high) / 2

    in_band = [row for row in scan if row.in_band]
    if in_band:
        best = min(in_band, key=lambda row: (abs(row.occupancy - middle), row.d_c))
        _log.info('Suggested d_c=%s with occupancy %.4f', best.d_c, best.occupancy)
        return best.d_c

    best = min(scan, key=lambda row: (max(low - row.occupancy, row.occupancy - high), row.d_c))
    _log.warning(
        'No cutoff candidate lands in the occupancy band [%s, %s], falling back to d_c=%s with occupancy %.4f',
        low,
        high,
        best.d_c,
        best.occupancy,
    )
    return best.d_c


def scan_csv_rows(scan: Sequence[OccupancyRow], team_counts: Sequence[int] = ()) -> Iterator[List[str]]:
    """Yields the scan table, optionally with the recognized team count per candidate."""
    header = ['d_c', 'mean_rho', 'occupancy', 'in_band']
    if team_counts:
        header.append('teams')
    yield header

    for position, row in enumerate(scan):
        cells = [
            format_float(row.d_c, digits=6),
            format_float(row.mean_rho),
            format_float(row.occupancy),
            str(row.in_band).lower(),
        ]
        if team_counts:
            cells.append(str(team_counts[position]))
        yield cells


def resolve_cutoff(config: RunConfig, distances: DistanceIndex) -> float:
    """Returns the configured cutoff distance, or the one :func:`suggest_dc` picks from a
    scan over the configured candidates when it is left to ``auto``."""
    if config.d_c is not None:
        return config.d_c

    scan = occupancy_scan(distances, config.dc_candidates, config.occupancy_band)
    return suggest_dc(scan, config.occupancy_band)
