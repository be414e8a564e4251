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

from parse import parse

from .scalar import _as_rational
from .suites import SUITE_NAMES
from .utils import ConfigError


def parse_command_args(argv=None):
    """
    Parse the arguments passed by the user from the command line,
    merged with the --config file if one is given.
    Also performs some sanity checks.

    :param argv: List of arguments (default: sys.argv[1:]).
    Returns: args object containing the arguments
             as properties (args.argument_name)
    """
    argv = list(argv) if argv is not None else sys.argv[1:]

    parser = argparse.ArgumentParser(
        description='Exact verification suites for quantized Poisson '
                    'pencils, R-matrices and braided modules.',
        formatter_class=CustomFormatter,
        allow_abbrev=False)
    optional_args = parser._action_groups.pop()
    required_args = parser.add_argument_group('MANDATORY arguments')
    required_args.add_argument('--suite',
                               choices=SUITE_NAMES,
                               help='Verification suite to run. '
                                    'May also be given in the --config file.')
    optional_args.add_argument('--n',
                               type=strictly_positive_int,
                               default=2,
                               metavar='N',
                               help='Matrix size of Fun(Mat(n)).')
    optional_args.add_argument('--degree', '-D',
                               type=strictly_positive_int,
                               default=3,
                               metavar='D',
                               help='Truncation degree of the quotients.')
    optional_args.add_argument('--mode',
                               choices=('symbolic', 'probabilistic'),
                               default='symbolic',
                               help='symbolic: exact over Q(params). '
                                    'probabilistic: exact over QQ at random '
                                    'rational points.')
    optional_args.add_argument('--seed',
                               type=int,
                               default=1,
                               metavar='S',
                               help='Random seed of the sample points.')
    optional_args.add_argument('--samples',
                               type=strictly_positive_int,
                               default=3,
                               metavar='N',
                               help='Sample points per probabilistic check '
                                    '(at least 3).')
    optional_args.add_argument('--kmax',
                               type=nonnegative_int,
                               default=5,
                               metavar='K',
                               help='Largest highest weight k of the '
                                    'braided modules irrep(k).')
    optional_args.add_argument('--specialize',
                               type=str,
                               default='',
                               metavar='"q=2,M=1"',
                               help='Parameters held fixed at every sample '
                                    'point.')
    optional_args.add_argument('--relations',
                               default='',
                               type=str,
                               metavar='PATH',
                               help='Extra relations file whose quotient '
                                    'is measured by the flatness suite.')
    optional_args.add_argument('--config',
                               default='',
                               type=str,
                               metavar='PATH',
                               help='Flat "key = value" file with defaults '
                                    'for the long flags. Flags given on the '
                                    'command line win.')
    optional_args.add_argument('--out',
                               default='report.json',
                               type=str,
                               metavar='PATH',
                               help='Where to write the JSON report.')
    optional_args.add_argument('--csv',
                               default=False,
                               action='store_true',
                               help='Also write the tables of the report '
                                    'as CSV files next to it.')
    optional_args.add_argument('--nThreads', '-j',
                               default=1,
                               type=strictly_positive_int,
                               metavar='N',
                               help='Number of threads running checks '
                                    'concurrently.')
    optional_args.add_argument('--no-progress',
                               default=False,
                               action='store_true',
                               help='Disable progress bars.')
    optional_args.add_argument('--verbose', '-v',
                               default=False,
                               action='store_true',
                               help='Log debug messages.')
    optional_args.add_argument('--quiet', '-q',
                               default=False,
                               action='store_true',
                               help='Only log errors.')
    parser._action_groups.append(optional_args)
    args = parser.parse_args(argv)

    if args.config:
        apply_config_file(parser, args, args.config, argv)

    if args.suite is None:
        parser.error('--suite is required (on the command line '
                     'or in the --config file)')
    if args.suite not in SUITE_NAMES:
        raise ConfigError("unknown suite '%s' (known: %s)"
                          % (args.suite, ', '.join(SUITE_NAMES)))
    if args.verbose and args.quiet:
        print('W: both --verbose and --quiet given, using --verbose')
        args.quiet = False

    # "q=2,M=1" -> {'q': 2, 'M': 1}
    args.fixed = parse_specialization(args.specialize)

    return args


def parse_specialization(text):
    """'q=2, M=1/3' -> dict name -> QQ."""
    fixed = {}
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        parsed = parse('{name}={value}', item.replace(' ', ''))
        if parsed is None:
            raise ConfigError('specialization must read "name=value", got %r'
                              % item)
        try:
            fixed[parsed['name']] = _as_rational(parsed['value'])
        except (ValueError, TypeError, ZeroDivisionError):
            raise ConfigError('%s is not a rational number in %r'
                              % (parsed['value'], item))
    return fixed


def _explicit(parser, argv):
    """Destinations of the options present in argv."""
    given = set()
    for action in parser._actions:
        for option in action.option_strings:
            # '--seed=3', '-j4'
            prefix = option + '=' if option.startswith('--') else option
            if any(token == option or token.startswith(prefix)
                   for token in argv):
                given.add(action.dest)
    return given


def apply_config_file(parser, args, path, argv):
    """
    Fill `args` from a flat 'key = value' file. Keys are long flag
    names with or without leading dashes ('nThreads', 'no-progress').
    """
    try:
        with open(path) as f:
            lines = f.read().splitlines()
    except OSError as e:
        raise ConfigError('cannot read config file %s: %s' % (path, e))
    actions = {}
    for action in parser._actions:
        for option in action.option_strings:
            if option.startswith('--'):
                actions[option[2:]] = action
                actions[option[2:].replace('-', '_')] = action
    given = _explicit(parser, argv)
    for lineno, line in enumerate(lines, start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        parsed = parse('{key} = {value}', line)
        if parsed is None:
            raise ConfigError('%s:%d: expected "key = value", got %r'
                              % (path, lineno, line))
        key = parsed['key'].strip().lstrip('-')
        value = parsed['value'].strip()
        action = actions.get(key)
        if action is None or action.dest in ('config', 'help'):
            raise ConfigError('%s:%d: unknown key %r' % (path, lineno, key))
        if action.dest in given:
            continue
        if isinstance(action, argparse._StoreTrueAction):
            value = value.lower() in ('1', 'true', 'yes', 'on')
        else:
            try:
                value = action.type(value) if action.type else value
            except (argparse.ArgumentTypeError, ValueError) as e:
                raise ConfigError('%s:%d: bad value for %s: %s'
                                  % (path, lineno, key, e))
            if action.choices is not None and value not in action.choices:
                raise ConfigError('%s:%d: %s must be one of %s, got %r'
                                  % (path, lineno, key,
                                     ', '.join(action.choices), value))
        setattr(args, action.dest, value)


class CustomFormatter(argparse.RawDescriptionHelpFormatter):
    def _get_help_string(self, action):
        help = action.help
        if '%(default)' not in action.help:
            if action.default is not argparse.SUPPRESS:
                defaulting_nargs = [argparse.OPTIONAL, argparse.ZERO_OR_MORE]
                if action.option_strings or action.nargs in defaulting_nargs:
                    if action.default is not None and action.default != '' \
                            and action.default is not False:
                        help += ' (default: ' + str(action.default) + ')'
        help += '\n\n'

        return help


def _integral(val):
    val = float(val)
    if not val.is_integer():
        raise argparse.ArgumentTypeError("Should be an integer.")
    return int(val)


def strictly_positive_int(val):
    """Convert to a strictly positive integer."""
    val = _integral(val)
    if not val > 0:
        raise argparse.ArgumentTypeError("Should be strictly positive.")
    return val


def nonnegative_int(val):
    """Convert to an integer >= 0."""
    val = _integral(val)
    if val < 0:
        raise argparse.ArgumentTypeError("Should be nonnegative.")
    return val
