import argparse

import pytest
from sympy.polys.domains import QQ

from quantum_pencils.argparser import (nonnegative_int, parse_command_args,
                                       parse_specialization,
                                       strictly_positive_int)
from quantum_pencils.utils import ConfigError


def write_config(tmp_path, text):
    path = tmp_path / 'run.cfg'
    path.write_text(text)
    return str(path)


def test_defaults():
    args = parse_command_args(['--suite', 'qybe'])
    assert args.suite == 'qybe'
    assert args.n == 2
    assert args.degree == 3
    assert args.mode == 'symbolic'
    assert args.samples == 3
    assert args.nThreads == 1
    assert args.out == 'report.json'
    assert args.fixed == {}
    assert not args.csv


def test_short_flags():
    args = parse_command_args(['--suite', 'flatness', '-D', '4', '-j', '2'])
    assert args.degree == 4
    assert args.nThreads == 2


def test_suite_is_required():
    with pytest.raises(SystemExit):
        parse_command_args([])
    with pytest.raises(SystemExit):
        parse_command_args(['--suite', 'nonsense'])


def test_abbreviations_are_refused():
    with pytest.raises(SystemExit):
        parse_command_args(['--suite', 'qybe', '--deg', '4'])


def test_strictly_positive_int():
    assert strictly_positive_int('3') == 3
    assert strictly_positive_int('4.0') == 4
    for text in ('0', '2.9', '0.5'):
        with pytest.raises(argparse.ArgumentTypeError):
            strictly_positive_int(text)
    with pytest.raises(SystemExit):
        parse_command_args(['--suite', 'qybe', '--n', '-2'])
    with pytest.raises(SystemExit):
        parse_command_args(['--suite', 'qybe', '--n', '2.9'])


def test_nonnegative_int():
    assert nonnegative_int('0') == 0
    assert nonnegative_int('7') == 7
    for text in ('-1', '1.5'):
        with pytest.raises(argparse.ArgumentTypeError):
            nonnegative_int(text)


def test_kmax_may_be_zero(tmp_path):
    args = parse_command_args(['--suite', 'braided', '--kmax', '0'])
    assert args.kmax == 0
    path = write_config(tmp_path, 'suite = braided\nkmax = 0\n')
    assert parse_command_args(['--config', path]).kmax == 0
    with pytest.raises(SystemExit):
        parse_command_args(['--suite', 'braided', '--kmax', '-1'])


def test_specialization():
    assert parse_specialization('q=2, M=1/3') == {'q': QQ(2), 'M': QQ(1, 3)}
    assert parse_specialization('') == {}
    with pytest.raises(ConfigError):
        parse_specialization('q:2')
    with pytest.raises(ConfigError):
        parse_specialization('q=two')
    args = parse_command_args(['--suite', 'braided', '--specialize', 'q=3'])
    assert args.fixed == {'q': QQ(3)}


def test_verbose_wins_over_quiet(capsys):
    args = parse_command_args(['--suite', 'cybe', '-v', '-q'])
    assert args.verbose
    assert not args.quiet
    assert capsys.readouterr().out.startswith('W: ')


def test_config_file(tmp_path):
    path = write_config(tmp_path,
                        '# nightly run\n'
                        'suite = flatness\n'
                        'n = 3\n'
                        'mode = probabilistic  # cheaper\n'
                        'no-progress = true\n'
                        'nThreads = 4\n')
    args = parse_command_args(['--config', path, '--n', '2'])
    assert args.suite == 'flatness'
    assert args.n == 2
    assert args.mode == 'probabilistic'
    assert args.no_progress is True
    assert args.nThreads == 4


def test_command_line_wins_in_every_spelling(tmp_path):
    path = write_config(tmp_path, 'suite = qybe\nseed = 5\nnThreads = 4\n')
    args = parse_command_args(['--config', path, '--seed=9', '-j2'])
    assert args.seed == 9
    assert args.nThreads == 2
    args = parse_command_args(['--config', path, '--suite', 'cybe'])
    assert args.suite == 'cybe'
    assert args.seed == 5


def test_config_file_errors(tmp_path):
    with pytest.raises(ConfigError) as e:
        parse_command_args(['--config', write_config(tmp_path,
                                                     'suite = qybe\n'
                                                     'colour = blue\n')])
    assert ':2:' in str(e.value)
    with pytest.raises(ConfigError):
        parse_command_args(['--config', write_config(tmp_path,
                                                     'suite = qybe\n'
                                                     'mode = numeric\n')])
    with pytest.raises(ConfigError):
        parse_command_args(['--config', write_config(tmp_path,
                                                     'suite = qybe\n'
                                                     'n = 0\n')])
    with pytest.raises(ConfigError):
        parse_command_args(['--config', write_config(tmp_path,
                                                     'suite = qybe\n'
                                                     'just words\n')])
    with pytest.raises(ConfigError):
        parse_command_args(['--config', str(tmp_path / 'missing.cfg')])
    with pytest.raises(ConfigError):
        parse_command_args(['--config', write_config(tmp_path,
                                                     'suite = everything\n')])
