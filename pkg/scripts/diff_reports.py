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

import argparse
import sys

import pandas as pd

from quantum_pencils import report
from quantum_pencils.utils import ReportError

# Parse command-line arguments
parser = argparse.ArgumentParser(
    description='Field-level differences between two reports of the same '
                'suite. Timings are ignored. Exit status 1 if they differ.',
    formatter_class=argparse.ArgumentDefaultsHelpFormatter)
required_args = parser.add_argument_group('MANDATORY arguments')
optional_args = parser._action_groups.pop()
required_args.add_argument('a',
                           help='First JSON report.')
required_args.add_argument('b',
                           help='Second JSON report.')
optional_args.add_argument('--csv',
                           type=str,
                           default=None,
                           help='Also write the differences to this CSV file.')
parser._action_groups.append(optional_args)
args = parser.parse_args()

try:
    diff = report.diff_reports(report.load_report(args.a),
                               report.load_report(args.b))
except ReportError as e:
    print(f'E: {e}')
    sys.exit(2)

if args.csv:
    diff.to_csv(args.csv, index=False)

if diff.empty:
    print('reports agree')
    sys.exit(0)

with pd.option_context('display.max_rows', None,
                       'display.max_colwidth', 80):
    print(diff.to_string(index=False))
sys.exit(1)
