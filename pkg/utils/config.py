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
import enum
import logging
import math
import os
import pathlib
from typing import Any, Callable, Dict, Final, Iterable, Mapping, Optional, Tuple, cast

import dotenv
from typing_extensions import Self

from .errors import ConfigError

__all__: Tuple[str, ...] = (
    'CenterPolicy',
    'CenterPolicyKind',
    'DC_PRESETS',
    'RUN_ENVIRONMENT_KEYS',
    'FamiliarityMode',
    'MotifDirection',
    'RunConfig',
    'TracIntensity',
    'TracPartnership',
    'load_config',
)

_log = logging.getLogger(__name__)

# Cutoff distances used for the five staggered analysis windows.
DC_PRESETS: Final[Mapping[Tuple[int, int], float]] = {
    (2006, 2009): 1.6,
    (2008, 2011): 1.5,
    (2010, 2013): 1.5,
    (2012, 2015): 1.5,
    (2014, 2017): 1.4,
}

# How a run executes, not what it computes. Left out of manifests.
RUN_ENVIRONMENT_KEYS: Final[Tuple[str, ...]] = ('workers', 'output_dir')

ENVIRON_PREFIX: Final[str] = 'COHORT_'


class FamiliarityMode(enum.Enum):
    """Which familiarity measure filters team members.

    higher_order: members must share triangles with the rest of the team.
    pairwise: members only need direct co-authorships with the team.
    """

    higher_order = 'higher-order'
    pairwise = 'pairwise'


class CenterPolicyKind(enum.Enum):
    k = 'k'
    threshold = 'threshold'
    auto = 'auto'


class MotifDirection(enum.Enum):
    """The comparison used for the minimum frequency condition of a motif."""

    at_least = 'at-least'
    at_most = 'at-most'


class TracIntensity(enum.Enum):
    co_count = 'co-count'
    closeness = 'closeness'


class TracPartnership(enum.Enum):
    weighted_degree = 'weighted-degree'
    degree = 'degree'


@dataclasses.dataclass(frozen=True, kw_only=True)
class CenterPolicy:
    """How cluster centers are picked from the decision graph.

    Attributes
    ----------
    kind: :class:`CenterPolicyKind`
        The selection rule.
    value: Optional[:class:`float`]
        ``k`` for :attr:`CenterPolicyKind.k`, the minimum γ for :attr:`CenterPolicyKind.threshold`
        and ``None`` for :attr:`CenterPolicyKind.auto`.
    """

    kind: CenterPolicyKind
    value: Optional[float] = None

    def __post_init__(self) -> None:
        if self.kind is CenterPolicyKind.k:
            if self.value is None or self.value < 1 or int(self.value) != self.value:
                raise ConfigError('center_policy', 'k must be a positive integer')
        elif self.kind is CenterPolicyKind.threshold:
            if self.value is None or self.value < 0:
                raise ConfigError('center_policy', 'the γ threshold must be non-negative')
        elif self.value is not None:
            raise ConfigError('center_policy', 'auto takes no value')

    @classmethod
    def top_k(cls, k: int) -> Self:
        return cls(kind=CenterPolicyKind.k, value=float(k))

    @classmethod
    def threshold(cls, gamma_min: float) -> Self:
        return cls(kind=CenterPolicyKind.threshold, value=float(gamma_min))

    @classmethod
    def auto(cls) -> Self:
        return cls(kind=CenterPolicyKind.auto)

    @classmethod
    def parse(cls, raw: str) -> Self:
        """Parses ``k:N``, ``threshold:G`` or ``auto``."""
        name, _, value = raw.strip().partition(':')
        try:
            kind = CenterPolicyKind(name.strip().lower())
        except ValueError:
            raise ConfigError('center_policy', f'unknown policy {raw!r}') from None

        if kind is CenterPolicyKind.auto:
            if value:
                raise ConfigError('center_policy', 'auto takes no value')
            return cls.auto()

        try:
            number = float(value)
        except ValueError:
            raise ConfigError('center_policy', f'{raw!r} needs a numeric value') from None

        return cls(kind=kind, value=number)

    @property
    def k(self) -> int:
        if self.kind is not CenterPolicyKind.k or self.value is None:
            raise ValueError('Only the k policy has a center count.')

        return int(self.value)

    def __str__(self) -> str:
        if self.kind is CenterPolicyKind.auto:
            return 'auto'
        if self.kind is CenterPolicyKind.k:
            return f'k:{self.k}'

        return f'threshold:{self.value!r}'


def _parse_bool(raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ('true', '1', 'yes', 'on'):
        return True
    if lowered in ('false', '0', 'no', 'off', ''):
        return False

    raise ValueError(f'{raw!r} is not a boolean')


def _parse_int_range(raw: str) -> Tuple[int, int]:
    start, sep, end = raw.strip().partition('-')
    if not sep:
        value = int(start)
        return value, value

    return int(start), int(end)


def _parse_float_range(raw: str) -> Tuple[float, float]:
    start, sep, end = raw.strip().partition('-')
    if not sep:
        raise ValueError(f'{raw!r} is not a range')

    return float(start), float(end)


def _parse_scan(raw: str) -> Tuple[float, float, float]:
    parts = [float(part) for part in raw.strip().split(':')]
    if len(parts) != 3:
        raise ValueError(f'{raw!r} is not start:stop:step')

    return parts[0], parts[1], parts[2]


def _parse_fields(raw: str) -> Tuple[str, ...]:
    return tuple(sorted({tag.strip() for tag in raw.split(',') if tag.strip()}))


def _parse_optional_int(raw: str) -> Optional[int]:
    return None if raw.strip().lower() in ('', 'auto', 'none') else int(raw)


_PARSERS: Dict[str, Callable[[str], Any]] = {
    'input': lambda raw: pathlib.Path(raw) if raw.strip() else None,
    'window': lambda raw: _parse_int_range(raw) if raw.strip() else None,
    'year_min': int,
    'year_max': int,
    'min_career_years': int,
    'fields': _parse_fields,
    'cap': float,
    'occupancy_band': _parse_float_range,
    'dc_scan': _parse_scan,
    'center_policy': CenterPolicy.parse,
    'familiarity': FamiliarityMode,
    'restrict_triangles': _parse_bool,
    'min_team_size': int,
    'seed': int,
    'workers': _parse_optional_int,
    'output_dir': pathlib.Path,
    'motif_replicates': int,
    'motif_p': float,
    'motif_u': float,
    'motif_d': float,
    'motif_direction': MotifDirection,
    'swaps_per_edge': int,
    'trac_intensity': TracIntensity,
    'trac_partnership': TracPartnership,
    'trac_w': float,
    'trac_phi_min': float,
    'ccr_hops': _parse_bool,
    'interagency_sizes': _parse_int_range,
    'top_quantile': float,
    'top_quantile_sizes': _parse_int_range,
    'window_length': int,
    'window_stride': int,
}


@dataclasses.dataclass(frozen=True, kw_only=True)
class RunConfig:
    """The fully resolved configuration of one command run.

    Every numeric field is validated on construction, an out of range value raises
    :class:`ConfigError`. ``d_c`` of ``None`` means the cutoff distance is picked from
    the occupancy scan at run time.
    """

    input: Optional[pathlib.Path] = None
    window: Optional[Tuple[int, int]] = None
    year_min: int = 1800
    year_max: int = 2100
    min_career_years: int = 5
    fields: Tuple[str, ...] = ()

    cap: float = 3.5
    d_c: Optional[float] = None
    occupancy_band: Tuple[float, float] = (0.01, 0.02)
    dc_scan: Tuple[float, float, float] = (0.1, 3.5, 0.1)
    center_policy: CenterPolicy = dataclasses.field(default_factory=CenterPolicy.auto)

    familiarity: FamiliarityMode = FamiliarityMode.higher_order
    restrict_triangles: bool = False
    min_team_size: int = 2

    seed: int = 0
    workers: Optional[int] = None
    output_dir: pathlib.Path = pathlib.Path('.')

    motif_replicates: int = 100
    motif_p: float = 0.01
    motif_u: float = 4
    motif_d: float = 0.1
    motif_direction: MotifDirection = MotifDirection.at_least
    swaps_per_edge: int = 10

    trac_intensity: TracIntensity = TracIntensity.co_count
    trac_partnership: TracPartnership = TracPartnership.weighted_degree
    trac_w: float = 2.0
    trac_phi_min: float = 0.0

    ccr_hops: bool = False
    interagency_sizes: Tuple[int, int] = (2, 20)
    top_quantile: float = 0.2
    top_quantile_sizes: Tuple[int, int] = (3, 8)

    window_length: int = 4
    window_stride: int = 2

    def __post_init__(self) -> None:
        if self.window is not None and self.window[0] > self.window[1]:
            raise ConfigError('window', f'start {self.window[0]} is after end {self.window[1]}')
        if self.year_min > self.year_max:
            raise ConfigError('year_min', 'must not exceed year_max')
        if self.min_career_years < 1:
            raise ConfigError('min_career_years', 'must be at least 1')
        if not self.cap > 0 or math.isnan(self.cap):
            raise ConfigError('cap', 'must be positive')
        if self.d_c is not None and not self.d_c > 0:
            raise ConfigError('d_c', 'must be positive')

        low, high = self.occupancy_band
        if not 0 <= low <= high <= 1:
            raise ConfigError('occupancy_band', 'must satisfy 0 <= low <= high <= 1')

        start, stop, step = self.dc_scan
        if not (0 < start <= stop and step > 0):
            raise ConfigError('dc_scan', 'must satisfy 0 < start <= stop and step > 0')

        if self.min_team_size < 1:
            raise ConfigError('min_team_size', 'must be at least 1')
        if self.workers is not None and self.workers < 1:
            raise ConfigError('workers', 'must be at least 1')
        if self.motif_replicates < 1:
            raise ConfigError('motif_replicates', 'must be at least 1')
        if not 0 <= self.motif_p <= 1:
            raise ConfigError('motif_p', 'must be within [0, 1]')
        if self.motif_u < 0:
            raise ConfigError('motif_u', 'must be non-negative')
        if self.motif_d < 0:
            raise ConfigError('motif_d', 'must be non-negative')
        if self.swaps_per_edge < 1:
            raise ConfigError('swaps_per_edge', 'must be at least 1')
        if self.trac_w < 0:
            raise ConfigError('trac_w', 'must be non-negative')
        if self.trac_phi_min < 0:
            raise ConfigError('trac_phi_min', 'must be non-negative')
        if not 0 < self.top_quantile <= 1:
            raise ConfigError('top_quantile', 'must be within (0, 1]')

        for key in ('interagency_sizes', 'top_quantile_sizes'):
            low_size, high_size = getattr(self, key)
            if not 1 <= low_size <= high_size:
                raise ConfigError(key, 'must satisfy 1 <= low <= high')

        if self.window_length < 1:
            raise ConfigError('window_length', 'must be at least 1')
        if self.window_stride < 1:
            raise ConfigError('window_stride', 'must be at least 1')

    @classmethod
    def from_mapping(cls, raw: Mapping[str, str], /) -> Self:
        """Builds a config from raw string values, as read from a key=value file,
        the environment or command line overrides.

        Parameters
        ----------
        raw: Mapping[:class:`str`, :class:`str`]
            Lower case keys to raw values.

        Raises
        ------
        ConfigError
            A key is unknown or a value could not be parsed.
        """
        kwargs: Dict[str, Any] = {}
        dc_raw: Optional[str] = None

        for key, value in raw.items():
            if key == 'd_c':
                dc_raw = value.strip().lower()
                continue

            parser = _PARSERS.get(key)
            if parser is None:
                raise ConfigError(key, 'unknown configuration key')

            try:
                kwargs[key] = parser(value)
            except ConfigError:
                raise
            except ValueError as exc:
                raise ConfigError(key, str(exc)) from None

        if dc_raw is not None and dc_raw not in ('', 'auto'):
            if dc_raw == 'preset':
                window = kwargs.get('window')
                preset = DC_PRESETS.get(window) if window is not None else None
                if preset is None:
                    raise ConfigError('d_c', f'no preset exists for window {window}')

                kwargs['d_c'] = preset
            else:
                try:
                    kwargs['d_c'] = float(dc_raw)
                except ValueError:
                    raise ConfigError('d_c', f'{dc_raw!r} is not a number, "auto" or "preset"') from None

        return cls(**kwargs)

    def replace(self, **changes: Any) -> Self:
        """Returns a copy with the given fields changed. Validation runs again."""
        return dataclasses.replace(self, **changes)

    def with_overrides(self, raw: Mapping[str, str], /) -> Self:
        """Parses raw values like :meth:`from_mapping` and applies them on top of this config.

        A ``d_c`` of ``preset`` resolves against this config's window unless ``raw``
        carries its own.
        """
        values = {key.lower(): value for key, value in raw.items()}
        if values.get('d_c', '').strip().lower() == 'preset' and 'window' not in values and self.window is not None:
            values['window'] = f'{self.window[0]}-{self.window[1]}'

        parsed = type(self).from_mapping(values)
        return self.replace(**{key: getattr(parsed, key) for key in values})

    @property
    def dc_candidates(self) -> Tuple[float, ...]:
        """Tuple[:class:`float`, ...]: The cutoff distances visited by the occupancy scan."""
        start, stop, step = self.dc_scan
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        return tuple(round(start + step * index, 6) for index in range(count))

    def resolved(self) -> Dict[str, Any]:
        """Renders every field that shapes the results as a plain JSON compatible value,
        for run manifests. :data:`RUN_ENVIRONMENT_KEYS` are left out.
        """
        resolved: Dict[str, Any] = {}
        for field in dataclasses.fields(self):
            if field.name in RUN_ENVIRONMENT_KEYS:
                continue

            value = getattr(self, field.name)
            if isinstance(value, enum.Enum):
                value = value.value
            elif isinstance(value, (pathlib.Path, CenterPolicy)):
                value = str(value)
            elif isinstance(value, tuple):
                value = list(cast(Tuple[Any, ...], value))

            resolved[field.name] = value

        if self.d_c is None:
            resolved['d_c'] = 'auto'

        return resolved


def load_config(
    path: Optional[pathlib.Path] = None,
    *,
    overrides: Iterable[str] = (),
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """Resolves the run configuration from every source.

    Later sources win: defaults, the key=value file at ``path``, ``COHORT_*``
    environment variables and finally ``key=value`` command line overrides.

    Parameters
    ----------
    path: Optional[:class:`pathlib.Path`]
        The configuration file to read.
    overrides: Iterable[:class:`str`]
        ``key=value`` strings, usually from repeated ``--set`` options.
    environ: Optional[Mapping[:class:`str`, :class:`str`]]
        The environment to read. Defaults to :data:`os.environ`.

    Raises
    ------
    ConfigError
        The file is missing, a key is unknown or a value is out of range.
    """
    raw: Dict[str, str] = {}

    if path is not None:
        if not path.is_file():
            raise ConfigError('config', f'file {path} does not exist')

        for key, value in dotenv.dotenv_values(path).items():
            if value is not None:
                raw[key.strip().lower()] = value

        _log.debug('Read %s configuration values from %s', len(raw), path)

    for key, value in (environ if environ is not None else os.environ).items():
        if key.startswith(ENVIRON_PREFIX):
            raw[key[len(ENVIRON_PREFIX) :].lower()] = value

    for item in overrides:
        key, sep, value = item.partition('=')
        if not sep:
            raise ConfigError(item, 'overrides must look like key=value')

        raw[key.strip().lower()] = value.strip()

    return RunConfig.from_mapping(raw)
