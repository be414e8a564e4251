__copyright__ = \
"""
Copyright (c) 2026 The quantum-pencils developers.
All rights reserved.

This software is distributed for research use in computer algebra.

Last Modified: 10/17/2026
"""
__license__ = "BSD-3-Clause"
__authors__ = "The quantum-pencils developers"
__version__ = "1.0.0"

import json
import logging
import math
import os

import pandas as pd

from .utils import ReportError

log = logging.getLogger(__name__)

REPORT_SCHEMA_VERSION = '1.0'

# Top-level keys left out of the comparison canon
NON_CANONICAL = ('timings',)


def build_report(judge, config, artifacts=None, timings=None):
    """
    :param judge: metrics.Judge with every check of the run.
    :param config: dict echo of the effective configuration.
    :param artifacts: dict check name -> table or document.
    :param timings: dict check name -> seconds.
    :return: dict following schema REPORT_SCHEMA_VERSION.
    """
    return {'schema_version': REPORT_SCHEMA_VERSION,
            'suite': judge.suite,
            'config': dict(sorted(config.items())),
            'checks': [c.as_dict() for c in judge.checks],
            'summary': {'passed': judge.passed,
                        'n_checks': judge.n_checks,
                        'n_passed': judge.n_passed,
                        'first_failure': judge.first_failure},
            'artifacts': dict(sorted((artifacts or {}).items())),
            'timings': {k: round(v, 6)
                        for k, v in sorted((timings or {}).items())}}


def canonical(report):
    """Byte-stable text of a report without its timings."""
    body = {k: v for k, v in report.items() if k not in NON_CANONICAL}
    return json.dumps(body, sort_keys=True, indent=2)


def write_report(report, path):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w') as f:
        f.write(json.dumps(report, sort_keys=True, indent=2))
        f.write('\n')
    log.info('report written to %s', path)


def load_report(path):
    try:
        with open(path) as f:
            report = json.load(f)
    except (OSError, ValueError) as e:
        raise ReportError('cannot read report %s: %s' % (path, e))
    version = report.get('schema_version')
    if version != REPORT_SCHEMA_VERSION:
        raise ReportError('%s has schema version %r, expected %r'
                          % (path, version, REPORT_SCHEMA_VERSION))
    return report


def _missing(value):
    return value is None or (isinstance(value, float) and math.isnan(value))


def _cell(value):
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return value


def flatten(report):
    """dict dotted field -> value, checks keyed by name, timings dropped."""
    body = {k: v for k, v in report.items()
            if k not in NON_CANONICAL + ('checks',)}
    flat = {}
    if body:
        row = pd.json_normalize(body, sep='.').iloc[0]
        flat.update({k: _cell(v) for k, v in row.items() if not _missing(v)})
    checks = report.get('checks', [])
    if checks:
        table = pd.json_normalize(checks, sep='.')
        for _, row in table.iterrows():
            for column, value in row.items():
                if column != 'name' and not _missing(value):
                    flat['checks.%s.%s' % (row['name'], column)] = _cell(value)
    return flat


def diff_reports(a, b):
    """
    Field-level differences between two reports of the same suite,
    timings ignored.

    :return: pandas DataFrame with columns field, a, b (empty if equal).
    """
    if a.get('suite') != b.get('suite'):
        raise ReportError('cannot diff reports of suites %r and %r'
                          % (a.get('suite'), b.get('suite')))
    left, right = flatten(a), flatten(b)
    rows = []
    for field in sorted(set(left) | set(right)):
        x, y = left.get(field), right.get(field)
        if x != y:
            rows.append({'field': field, 'a': x, 'b': y})
    return pd.DataFrame(rows, columns=['field', 'a', 'b'])


def tables(report):
    """Artifacts that are lists of flat rows, as DataFrames keyed by name."""
    out = {}
    for name, artifact in report.get('artifacts', {}).items():
        if isinstance(artifact, list) and artifact \
                and all(isinstance(row, dict) for row in artifact):
            out[name] = pd.DataFrame(artifact)
    checks = pd.json_normalize(report.get('checks', []), sep='.')
    if not checks.empty:
        out['checks'] = checks[['name', 'verdict', 'mode']]
    return out


def write_tables(report, path):
    """One CSV per table next to the JSON report at `path`."""
    stem = os.path.splitext(path)[0]
    written = []
    for name, df in tables(report).items():
        target = '%s.%s.csv' % (stem, name.replace('/', '_'))
        df.to_csv(target, index=False)
        written.append(target)
    return written
