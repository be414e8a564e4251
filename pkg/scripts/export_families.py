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
import os

from tqdm import tqdm

from quantum_pencils import poisson
from quantum_pencils import rmatrix
from quantum_pencils.algebra import export_family

FAMILIES = ('i_minus', 'i_plus', 'j_hq', 'elliptic_quantum', 're')
TABLES = {'sklyanin2': poisson.sklyanin2,
          'linear1': poisson.linear1,
          'gl': poisson.gl}

# Parse command-line arguments
parser = argparse.ArgumentParser(
    description='Write the cataloged relation families and bracket tables '
                'as text files that --relations and the loaders read back.',
    formatter_class=argparse.ArgumentDefaultsHelpFormatter)
required_args = parser.add_argument_group('MANDATORY arguments')
optional_args = parser._action_groups.pop()
required_args.add_argument('out_dir',
                           help='Directory where the files are written.')
optional_args.add_argument('--n',
                           type=int,
                           default=2,
                           help='Matrix size of Fun(Mat(n)).')
parser._action_groups.append(optional_args)
args = parser.parse_args()

os.makedirs(args.out_dir, exist_ok=True)

for name in tqdm(FAMILIES, desc='families'):
    family = rmatrix.family(name, args.n)
    path = os.path.join(args.out_dir, '%s_n%d.rel' % (name, args.n))
    with open(path, 'w') as f:
        f.write(export_family(family))

for name, build in tqdm(sorted(TABLES.items()), desc='tables'):
    path = os.path.join(args.out_dir, '%s_n%d.bracket' % (name, args.n))
    with open(path, 'w') as f:
        f.write(poisson.table_str(build(args.n)))

print('%d files written to %s' % (len(FAMILIES) + len(TABLES), args.out_dir))
