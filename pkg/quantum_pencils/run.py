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

import logging
import sys

from . import argparser
from . import peterpy
from . import report
from . import suites
from . import utils
from .utils import QuantumPencilsError

EX_OK = 0
EX_FAILED = 1
EX_NOT_OK = 2


def main(argv=None):
    """
    Run one verification suite and write its report.

    Keyword Arguments:
        argv (list): commandline arguments (e.g. sys.argv[1:])
    Returns:
        int: EX_OK if every check passed, EX_FAILED if some check did
             not, EX_NOT_OK on a configuration or input error
    """
    argv = list(argv) if argv is not None else sys.argv[1:]
    try:
        args = argparser.parse_command_args(argv)
    except QuantumPencilsError as e:
        print(f'E: {e}')
        return EX_NOT_OK

    loglevel = logging.INFO
    if args.verbose:
        loglevel = logging.DEBUG
    elif args.quiet:
        loglevel = logging.ERROR
    logging.basicConfig(level=loglevel)
    log = logging.getLogger()
    log.debug('argv: %r', argv)
    log.debug('args: %r', args)
    utils.SHOW_PROGRESS = not args.no_progress

    try:
        config = suites.RunConfig.from_args(args)
        with peterpy.peter('Running suite %s' % config.suite,
                           quiet=args.quiet):
            result = suites.run_suite(config)
        report.write_report(result, args.out)
        if args.csv:
            for path in report.write_tables(result, args.out):
                log.info('table written to %s', path)
    except QuantumPencilsError as e:
        print(f'E: {e}')
        return EX_NOT_OK

    summary = result['summary']
    if not args.quiet:
        print('%d of %d checks passed' % (summary['n_passed'],
                                           summary['n_checks']))
    if not summary['passed']:
        print('E: check %s did not pass' % summary['first_failure'])
        return EX_FAILED
    return EX_OK


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
