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

import pathlib
from typing import Dict, List

import orjson
import pytest

from engine import run_subcommand
from utils import EXIT_DATA, EXIT_OK, EXIT_USAGE

_ARTIFACTS = (
    'nodes.tsv',
    'edges.tsv',
    'teams-higher-order.json',
    'teams-trac.json',
    'summary-higher-order.json',
    'summary-trac.json',
    'report.json',
    'report.txt',
    'ingest.manifest.json',
    'recognize.manifest.json',
    'trac.manifest.json',
    'evaluate.manifest.json',
    'report.manifest.json',
)


def _run(output: pathlib.Path, *args: str, workers: int = 2) -> int:
    return run_subcommand(['--output-dir', str(output), '--workers', str(workers), *args])


def _pipeline(corpus: pathlib.Path, output: pathlib.Path, *, workers: int = 2) -> Dict[str, bytes]:
    steps: List[List[str]] = [
        ['ingest', '--input', str(corpus)],
        ['recognize', '--d-c', '0.5', '--centers', 'k:3'],
        ['trac', '--w', '2'],
        ['evaluate', '--teams', str(output / 'teams-higher-order.json')],
        ['evaluate', '--teams', str(output / 'teams-trac.json')],
        [
            'report',
            '--summary',
            str(output / 'summary-higher-order.json'),
            '--summary',
            str(output / 'summary-trac.json'),
            '--coauthors',
            str(output / 'coauthors.json'),
        ],
    ]
    for step in steps:
        assert _run(output, *step, workers=workers) == EXIT_OK, step

    return {name: (output / name).read_bytes() for name in _ARTIFACTS}


def test_pipeline_end_to_end(corpus_file: pathlib.Path, tmp_path: pathlib.Path) -> None:
    artifacts = _pipeline(corpus_file, tmp_path / 'out')

    teams = orjson.loads(artifacts['teams-higher-order.json'])
    assert sorted(tuple(team['members']) for team in teams) == [
        ('s0-0', 's0-1', 's0-2', 's0-3'),
        ('s1-0', 's1-1', 's1-2', 's1-3'),
        ('s2-0', 's2-1', 's2-2', 's2-3'),
    ]

    report = orjson.loads(artifacts['report.json'])
    assert [method['label'] for method in report['methods']] == ['higher-order', 'trac']
    assert (tmp_path / 'out' / 'recognize.manifest.json').is_file()


def test_pipeline_is_deterministic(corpus_file: pathlib.Path, tmp_path: pathlib.Path) -> None:
    first = _pipeline(corpus_file, tmp_path / 'first', workers=1)
    second = _pipeline(corpus_file, tmp_path / 'second', workers=8)

    assert first == second


def test_manifest_records_inputs(corpus_file: pathlib.Path, tmp_path: pathlib.Path) -> None:
    output = tmp_path / 'out'
    assert _run(output, 'ingest', '--input', str(corpus_file)) == EXIT_OK

    manifest = orjson.loads((output / 'ingest.manifest.json').read_bytes())
    assert manifest['command'] == 'ingest'
    assert list(manifest['inputs']) == [str(corpus_file)]
    assert 'nodes.tsv' in manifest['outputs']


def test_analysis_commands(corpus_file: pathlib.Path, tmp_path: pathlib.Path) -> None:
    output = tmp_path / 'out'
    assert _run(output, 'ingest', '--input', str(corpus_file)) == EXIT_OK
    assert _run(output, 'profile') == EXIT_OK
    assert _run(output, 'suggest-dc', '--scan', '0.1:1.0:0.1') == EXIT_OK
    assert _run(output, 'cluster', '--d-c', '0.5', '--centers', 'k:3') == EXIT_OK
    assert _run(output, 'motif-test', '--replicates', '5') == EXIT_OK

    assert orjson.loads((output / 'profile.json').read_bytes())['node_count'] == 12
    for name in ('dc_scan.csv', 'decision_graph.csv', 'clustering.json', 'motif.json', 'ensemble.csv'):
        assert (output / name).is_file(), name


def test_all_windows(tmp_path: pathlib.Path) -> None:
    from conftest import ring_publications, write_publications

    corpus = write_publications(tmp_path / 'corpus.jsonl', ring_publications(years=(2006, 2013)))
    output = tmp_path / 'out'

    assert _run(output, 'ingest', '--input', str(corpus), '--all-windows') == EXIT_OK
    for window in ('2006-2009', '2008-2011', '2010-2013'):
        assert (output / window / 'nodes.tsv').is_file()


def test_rejected_lines_are_reported(tmp_path: pathlib.Path) -> None:
    from conftest import ring_publications, write_publications

    corpus = write_publications(tmp_path / 'corpus.jsonl', ring_publications())
    with corpus.open('a') as fp:
        fp.write('{"paper_id": "broken"}\n')

    output = tmp_path / 'out'
    assert _run(output, 'ingest', '--input', str(corpus)) == EXIT_OK
    assert (output / 'rejected.tsv').read_text().startswith('22\t')


def test_evaluate_without_teams_is_a_usage_error(tmp_path: pathlib.Path) -> None:
    output = tmp_path / 'out'

    assert _run(output, 'evaluate') == EXIT_USAGE
    assert not output.exists() or not any(output.iterdir())


def test_unknown_command(tmp_path: pathlib.Path) -> None:
    assert _run(tmp_path, 'frobnicate') == EXIT_USAGE


def test_missing_snapshot_is_a_data_error(tmp_path: pathlib.Path) -> None:
    output = tmp_path / 'empty'
    output.mkdir()

    assert _run(output, 'recognize', '--d-c', '0.5') == EXIT_DATA
    assert not any(output.iterdir())


@pytest.mark.parametrize('value', ['zero', '-1'])
def test_invalid_cutoff_is_a_usage_error(corpus_file: pathlib.Path, tmp_path: pathlib.Path, value: str) -> None:
    output = tmp_path / 'out'
    assert _run(output, 'ingest', '--input', str(corpus_file)) == EXIT_OK

    assert _run(output, 'recognize', '--d-c', value) == EXIT_USAGE
    assert not (output / 'teams-higher-order.json').exists()


def test_manifest_leaves_out_run_environment(corpus_file: pathlib.Path, tmp_path: pathlib.Path) -> None:
    output = tmp_path / 'out'
    assert _run(output, 'ingest', '--input', str(corpus_file), workers=8) == EXIT_OK
    assert _run(output, 'profile', workers=8) == EXIT_OK

    manifest = orjson.loads((output / 'profile.manifest.json').read_bytes())
    assert 'workers' not in manifest['config']
    assert 'output_dir' not in manifest['config']
    assert sorted(manifest['inputs']) == ['edges.tsv', 'nodes.tsv']


@pytest.mark.parametrize('args', [['profile', '--no-such-option'], ['recognize', '--centers']])
def test_parser_errors_are_usage_errors(tmp_path: pathlib.Path, args: List[str]) -> None:
    assert _run(tmp_path / 'out', *args) == EXIT_USAGE
