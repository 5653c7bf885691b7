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

import hashlib
import logging
import os
import pathlib
import shutil
import tempfile
from types import TracebackType
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Type

import orjson

__all__: Tuple[str, ...] = ('ArtifactWriter', 'dump_json', 'load_json', 'hash_path')

_log = logging.getLogger(__name__)

JSON_OPTIONS: int = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_NON_STR_KEYS


def dump_json(value: Any) -> bytes:
    """Serializes a value the way every JSON artifact is written: two space indentation,
    sorted keys and a trailing newline, so identical values give identical bytes."""
    return orjson.dumps(value, option=JSON_OPTIONS) + b'\n'


def load_json(path: pathlib.Path) -> Any:
    return orjson.loads(path.read_bytes())


def hash_path(path: pathlib.Path) -> str:
    """Returns the SHA-256 of a file, or of every regular file in a directory taken
    in name order.

    Parameters
    ----------
    path: :class:`pathlib.Path`
        The file or directory to hash.

    Returns
    -------
    :class:`str`
        The hex digest.
    """
    digest = hashlib.sha256()

    files: Iterable[pathlib.Path]
    if path.is_dir():
        files = sorted(entry for entry in path.iterdir() if entry.is_file() and not entry.name.endswith('.manifest.json'))
    else:
        files = (path,)

    for entry in files:
        if path.is_dir():
            digest.update(entry.name.encode())

        with entry.open('rb') as fp:
            for chunk in iter(lambda: fp.read(1 << 20), b''):
                digest.update(chunk)

    return digest.hexdigest()


class ArtifactWriter:
    """A context manager that writes a command's output files all at once.

    Files are staged in a temporary directory next to the destination. When the
    block exits cleanly every staged file is moved into place with :func:`os.replace`,
    when it raises the staging directory is removed and nothing is left behind.

    Parameters
    ----------
    directory: :class:`pathlib.Path`
        Where the artifacts end up.
    command: :class:`str`
        The command producing the artifacts, used to name the manifest.
    config: Dict[:class:`str`, Any]
        The resolved configuration echoed into the manifest.
    inputs: Sequence[:class:`pathlib.Path`]
        The inputs whose hashes are recorded in the manifest.

    Attributes
    ----------
    directory: :class:`pathlib.Path`
        Where the artifacts end up.
    written: List[:class:`str`]
        The names staged so far.
    """

    __slots__: Tuple[str, ...] = ('directory', 'command', 'config', 'inputs', 'written', '_staging')

    def __init__(
        self,
        directory: pathlib.Path,
        *,
        command: str,
        config: Dict[str, Any],
        inputs: Sequence[pathlib.Path] = (),
    ) -> None:
        self.directory: pathlib.Path = directory
        self.command: str = command
        self.config: Dict[str, Any] = config
        self.inputs: Sequence[pathlib.Path] = inputs
        self.written: List[str] = []
        self._staging: Optional[pathlib.Path] = None

    @property
    def staging(self) -> pathlib.Path:
        if self._staging is None:
            raise RuntimeError('ArtifactWriter is not open.')

        return self._staging

    def __enter__(self) -> ArtifactWriter:
        self.directory.mkdir(parents=True, exist_ok=True)
        self._staging = pathlib.Path(tempfile.mkdtemp(prefix=f'.{self.command}-', dir=self.directory))
        return self

    def __exit__(
        self,
        exc_type: Optional[Type[BaseException]],
        exc: Optional[BaseException],
        tb: Optional[TracebackType],
    ) -> None:
        staging = self.staging
        try:
            if exc is None:
                self._write_manifest()
                for name in self.written:
                    target = self.directory / name
                    target.parent.mkdir(parents=True, exist_ok=True)
                    os.replace(staging / name, target)

                _log.debug('Committed %s artifacts to %s', len(self.written), self.directory)
            else:
                _log.debug('Discarding %s staged artifacts for %s', len(self.written), self.command)
        finally:
            shutil.rmtree(staging, ignore_errors=True)
            self._staging = None

    def path(self, name: str) -> pathlib.Path:
        """Returns the staging path for ``name`` and records it as an output."""
        if name not in self.written:
            self.written.append(name)

        target = self.staging / name
        target.parent.mkdir(parents=True, exist_ok=True)
        return target

    def write_bytes(self, name: str, data: bytes) -> None:
        self.path(name).write_bytes(data)

    def write_text(self, name: str, text: str) -> None:
        self.path(name).write_bytes(text.encode('utf-8'))

    def write_json(self, name: str, value: Any) -> None:
        self.write_bytes(name, dump_json(value))

    def write_rows(self, name: str, rows: Iterable[Sequence[Any]], *, delimiter: str = ',') -> None:
        """Writes delimited rows. Cells are written with :class:`str` as is, callers format floats."""
        lines = [delimiter.join(str(cell) for cell in row) for row in rows]
        self.write_text(name, ''.join(f'{line}\n' for line in lines))

    def _input_key(self, path: pathlib.Path) -> str:
        # Inputs produced by earlier commands in the same directory are keyed relative to it.
        try:
            return path.resolve().relative_to(self.directory.resolve()).as_posix()
        except ValueError:
            return str(path)

    def _write_manifest(self) -> None:
        manifest: Dict[str, Any] = {
            'command': self.command,
            'config': self.config,
            'inputs': {self._input_key(path): hash_path(path) for path in self.inputs},
            'outputs': sorted(self.written),
        }
        name = f'{self.command}.manifest.json'
        (self.staging / name).write_bytes(dump_json(manifest))
        self.written.append(name)
