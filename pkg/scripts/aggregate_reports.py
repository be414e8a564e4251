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

from tqdm import tqdm
import pandas as pd

from quantum_pencils import report

# Parse command-line arguments
parser = argparse.ArgumentParser(
    description='Gather the checks of many JSON reports into one CSV '
                '(one row per report and check).',
    formatter_class=argparse.ArgumentDefaultsHelpFormatter)
required_args = parser.add_argument_group('MANDATORY arguments')
optional_args = parser._action_groups.pop()
required_args.add_argument('reports',
                           nargs='+',
                           help='JSON reports written by quantum_pencils.')
required_args.add_argument('--out',
                           type=str,
                           required=True,
                           help='Output CSV file.')
optional_args.add_argument('--timings',
                           action='store_true',
                           default=False,
                           help='Add a column with the seconds of each check.')
parser._action_groups.append(optional_args)
args = parser.parse_args()

frames = []
for path in tqdm(args.reports):
    rep = report.load_report(path)
    df = report.tables(rep).get('checks')
    if df is None:
        print(f'W: {path} holds no checks')
        continue
    df = df.copy()
    df.insert(0, 'report', path)
    for key, value in sorted(rep['config'].items()):
        df['config.%s' % key] = value
    if args.timings:
        df['seconds'] = df['name'].map(rep.get('timings', {}))
    frames.append(df)

if not frames:
    parser.error('none of the reports holds checks')

df_all = pd.concat(frames, ignore_index=True)
df_all.index.name = 'idx'

# Write CSV of checks to disk
df_all.to_csv(args.out)
print('%d checks from %d reports, %d not passed'
      % (len(df_all), len(frames), (df_all['verdict'] != 'PASS').sum()))
