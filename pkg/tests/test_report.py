import json
import os

import pytest

from quantum_pencils.metrics import Judge
from quantum_pencils.report import (REPORT_SCHEMA_VERSION, build_report,
                                    canonical, diff_reports, flatten,
                                    load_report, tables, write_report,
                                    write_tables)
from quantum_pencils.utils import ReportError


def make_report(second_passes=True, elapsed=0.5, suite='braided'):
    judge = Judge(suite)
    judge.feed_outcome('%s/a' % suite, True, details={'dims': [1, 4, 10]})
    judge.feed_outcome('%s/b' % suite, second_passes,
                       witnesses=[] if second_passes else ['k=2'])
    artifacts = {'%s/c0' % suite: [{'k': 0, 'c0': '(0)'},
                                   {'k': 1, 'c0': '(M^2)'}]}
    return build_report(judge, {'suite': suite, 'n': 2}, artifacts,
                        {'%s/a' % suite: elapsed})


def test_build_report():
    report = make_report(second_passes=False)
    assert report['schema_version'] == REPORT_SCHEMA_VERSION
    assert report['summary'] == {'passed': False, 'n_checks': 2,
                                 'n_passed': 1,
                                 'first_failure': 'braided/b'}
    assert [c['name'] for c in report['checks']] == ['braided/a',
                                                     'braided/b']


def test_canonical_ignores_timings():
    assert canonical(make_report(elapsed=0.5)) == \
        canonical(make_report(elapsed=7.25))
    assert 'timings' not in json.loads(canonical(make_report()))


def test_write_and_load(tmp_path):
    path = str(tmp_path / 'out' / 'report.json')
    report = make_report()
    write_report(report, path)
    assert load_report(path) == report


def test_load_errors(tmp_path):
    with pytest.raises(ReportError):
        load_report(str(tmp_path / 'missing.json'))
    broken = tmp_path / 'broken.json'
    broken.write_text('{"schema_version": ')
    with pytest.raises(ReportError):
        load_report(str(broken))
    old = tmp_path / 'old.json'
    old.write_text(json.dumps({'schema_version': '0.1'}))
    with pytest.raises(ReportError):
        load_report(str(old))


def test_flatten():
    flat = flatten(make_report(second_passes=False))
    assert flat['suite'] == 'braided'
    assert flat['config.n'] == 2
    assert flat['checks.braided/b.verdict'] == 'FAIL'
    assert flat['checks.braided/b.witnesses'] == '["k=2"]'
    assert not any(field.startswith('timings') for field in flat)


def test_diff_reports():
    same = diff_reports(make_report(elapsed=1.0), make_report(elapsed=2.0))
    assert same.empty
    assert list(same.columns) == ['field', 'a', 'b']
    diff = diff_reports(make_report(), make_report(second_passes=False))
    fields = diff['field'].tolist()
    assert 'checks.braided/b.verdict' in fields
    assert 'summary.passed' in fields
    with pytest.raises(ReportError):
        diff_reports(make_report(), make_report(suite='cybe'))


def test_tables(tmp_path):
    report = make_report()
    found = tables(report)
    assert sorted(found) == ['braided/c0', 'checks']
    assert list(found['checks'].columns) == ['name', 'verdict', 'mode']
    assert found['braided/c0']['k'].tolist() == [0, 1]
    written = write_tables(report, str(tmp_path / 'report.json'))
    assert sorted(os.path.basename(p) for p in written) == \
        ['report.braided_c0.csv', 'report.checks.csv']
    assert all(os.path.exists(p) for p in written)
