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

import contextlib
import importlib
import logging
import pathlib
import time
from concurrent import futures
from typing import Any, Iterator, List, Optional, Sequence, Set, Tuple

import cachetools
import psutil
import typer
from typer.core import TyperGroup
from typer.main import get_command

from stages.corpus.graph import CollaborationGraph
from stages.corpus.snapshot import read_snapshot
from stages.distance.paths import DistanceIndex, all_pairs
from stages.familiarity.triangles import TriangleIndex, enumerate_triangles
from utils import RUNNING_DEVELOPMENT, ErrorHandler, RunConfig, load_config
from utils.error_handler import EXIT_OK

__all__: Tuple[str, ...] = ('CohortEngine', 'build_app', 'run_subcommand', 'initial_commands')

_log = logging.getLogger(__name__)
if RUNNING_DEVELOPMENT:
    _log.setLevel(logging.DEBUG)

initial_commands: Tuple[str, ...] = (
    'stages.corpus.commands',
    'stages.density.commands',
    'stages.familiarity.commands',
    'stages.teams.commands',
    'stages.trac.commands',
    'stages.evaluation.commands',
)

_CACHE_SIZE: int = 8

_error_handler = ErrorHandler()


def _default_workers() -> int:
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1


class CohortEngine:
    """The hub shared by every command of one process.

    It owns the resolved configuration, the worker pool the stage kernels run on and
    the caches that let a command reuse a distance index or triangle census it
    already computed for the same graph.

    Parameters
    ----------
    config: :class:`RunConfig`
        The resolved configuration.

    Attributes
    ----------
    config: :class:`RunConfig`
        The resolved configuration. Commands narrow it with :meth:`configure`.
    """

    __slots__: Tuple[str, ...] = ('config', '_executor', '_distances', '_triangles', '_process')

    def __init__(self, config: Optional[RunConfig] = None) -> None:
        self.config: RunConfig = config or RunConfig()
        self._executor: Optional[futures.ThreadPoolExecutor] = None

        # Mapping[(fingerprint, cap), DistanceIndex]
        self._distances: cachetools.LRUCache[Tuple[str, float], DistanceIndex] = cachetools.LRUCache(maxsize=_CACHE_SIZE)
        # Mapping[fingerprint, TriangleIndex]
        self._triangles: cachetools.LRUCache[str, TriangleIndex] = cachetools.LRUCache(maxsize=_CACHE_SIZE)
        self._process: psutil.Process = psutil.Process()

    def __repr__(self) -> str:
        return f'<CohortEngine workers={self.workers}>'

    @property
    def workers(self) -> int:
        """:class:`int`: The worker count, the physical core count unless configured."""
        return self.config.workers or _default_workers()

    @property
    def executor(self) -> futures.ThreadPoolExecutor:
        """:class:`concurrent.futures.ThreadPoolExecutor`: The shared worker pool, created on first use."""
        if self._executor is None:
            self._executor = futures.ThreadPoolExecutor(max_workers=self.workers, thread_name_prefix='cohort')

        return self._executor

    def configure(self, **changes: Any) -> RunConfig:
        """Applies command options on top of the resolved configuration.

        ``None`` values are ignored so unset options keep the configured value.
        """
        changes = {key: value for key, value in changes.items() if value is not None}
        if changes:
            self.config = self.config.replace(**changes)

        return self.config

    def override(self, **raw: Optional[str]) -> RunConfig:
        """Like :meth:`configure` for options taken as raw configuration strings, such as
        ``window='2006-2009'`` or ``d_c='preset'``."""
        values = {key: value for key, value in raw.items() if value is not None}
        if values:
            self.config = self.config.with_overrides(values)

        return self.config

    @contextlib.contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        yield
        _log.info('Ran the "%s" stage in %s seconds', name, round(time.perf_counter() - start, 3))

    def load_graph(self, directory: pathlib.Path) -> CollaborationGraph:
        with self.stage('load graph'):
            return read_snapshot(directory)

    def distances(self, graph: CollaborationGraph) -> DistanceIndex:
        """Returns the bounded all pairs distances of ``graph`` at the configured cap, memoised."""
        key = (graph.fingerprint, self.config.cap)
        index = self._distances.get(key)
        if index is None:
            with self.stage('distances'):
                index = all_pairs(graph, self.config.cap, executor=self.executor)

            self._distances[key] = index
        else:
            _log.debug('Reusing the distance index of %s at cap %s', key[0][:12], key[1])

        return index

    def triangles(self, graph: CollaborationGraph) -> TriangleIndex:
        """Returns the triangle census of ``graph``, memoised."""
        key = graph.fingerprint
        index = self._triangles.get(key)
        if index is None:
            with self.stage('triangles'):
                index = enumerate_triangles(graph, executor=self.executor)

            self._triangles[key] = index

        return index

    def log_memory(self) -> None:
        memory = self._process.memory_full_info().uss / 1024**2
        _log.debug('Process memory footprint is %.2f MiB', memory)

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

        self.log_memory()


def build_app() -> typer.Typer:
    """Creates the command line application with every stage's commands registered."""
    app = typer.Typer(
        name='cohort',
        help='Recognize academic teams in a co-authorship network.',
        add_completion=False,
        no_args_is_help=True,
        pretty_exceptions_enable=False,
    )

    @app.callback()
    def main(
        ctx: typer.Context,
        config: Optional[pathlib.Path] = typer.Option(None, '--config', '-c', help='A key=value configuration file.'),
        overrides: List[str] = typer.Option([], '--set', '-s', help='A key=value override, may be repeated.'),
        workers: Optional[int] = typer.Option(None, '--workers', '-w', min=1, help='The worker thread count.'),
        output_dir: Optional[pathlib.Path] = typer.Option(None, '--output-dir', '-o', help='Where artifacts are written.'),
        verbose: bool = typer.Option(False, '--verbose', '-v', help='Log at debug level.'),
    ) -> None:
        if verbose:
            logging.getLogger().setLevel(logging.DEBUG)

        engine = CohortEngine(load_config(config, overrides=overrides))
        engine.configure(workers=workers, output_dir=output_dir)
        ctx.obj = engine
        ctx.call_on_close(engine.close)

    for name in initial_commands:
        start = time.perf_counter()
        module = importlib.import_module(name)
        module.setup(app)
        _log.debug('Loaded the "%s" commands in %s seconds', name, round(time.perf_counter() - start, 4))

    return app


def run_subcommand(argv: Sequence[str]) -> int:
    """Runs one command line and returns its exit status.

    Parameters
    ----------
    argv: Sequence[:class:`str`]
        The arguments after the program name.

    Returns
    -------
    :class:`int`
        ``0`` on success, ``1`` usage error, ``2`` data error, ``3`` internal error.
    """
    command = get_command(build_app())
    names: Set[str] = set(command.commands) if isinstance(command, TyperGroup) else set()
    name = next((arg for arg in argv if arg in names), None)

    try:
        result = command.main(args=list(argv), prog_name='cohort', standalone_mode=False)
    except Exception as exc:
        return _error_handler.handle(exc, command=name)

    return result if isinstance(result, int) else EXIT_OK
