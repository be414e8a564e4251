from fractions import Fraction

import pytest
from sympy.polys.domains import QQ

from quantum_pencils.scalar import (ParamSet, reduce_imaginary, scalar_arith,
                                    scalar_eq, scalar_parse,
                                    scalar_specialize, scalar_str)
from quantum_pencils.utils import (FieldDivisionError, ParameterError,
                                   ParseError, SpecializationError)


def test_param_set_rejects_duplicates_and_bad_names():
    with pytest.raises(ParameterError):
        ParamSet(('q', 'q'))
    with pytest.raises(ParameterError):
        ParamSet(('2q',))


def test_unknown_parameter(params_q):
    with pytest.raises(ParameterError):
        params_q['h']


def test_canonical_text(params_q):
    q = params_q['q']
    a = (q ** 2 - 1) / q
    assert scalar_str(a) == '(q^2-1)/(q)'
    assert scalar_str(q + 1) == '(q+1)'
    assert scalar_eq(scalar_parse(scalar_str(a), params_q), a)


def test_parse_hand_written_text():
    params = ParamSet(('q', 'h'))
    a = params.scalar('h/(q-1)')
    assert scalar_eq(a * (params['q'] - 1), params['h'])


def test_parse_rejects_undeclared_parameters(params_q):
    with pytest.raises(ParseError):
        scalar_parse('x + 1', params_q)
    with pytest.raises(ParseError):
        scalar_parse('', params_q)


def test_arithmetic(params_q):
    q = params_q['q']
    assert scalar_eq(scalar_arith(q, q, 'mul'), q ** 2)
    assert scalar_eq(scalar_arith(q, q, 'sub'), 0)
    with pytest.raises(FieldDivisionError):
        scalar_arith(q, params_q.zero, 'div')
    with pytest.raises(ValueError):
        scalar_arith(q, q, 'pow')


def test_arithmetic_needs_one_field(params_q):
    other = ParamSet(('q', 'h'))
    with pytest.raises(ParameterError):
        scalar_arith(params_q['q'], other['q'], 'add')


def test_specialize(params_q):
    q = params_q['q']
    a = (q ** 2 - 1) / q
    assert scalar_specialize(a, {'q': 2}) == QQ(3, 2)
    assert scalar_specialize(a, {'q': Fraction(1, 2)}) == QQ(-3, 2)
    assert scalar_specialize(a, {'q': '1/2'}) == QQ(-3, 2)


def test_specialize_at_a_pole(params_q):
    q = params_q['q']
    with pytest.raises(SpecializationError) as e:
        scalar_specialize(1 / (q - 2), {'q': 2})
    assert e.value.assignment == {'q': QQ(2)}


def test_specialize_omits_absent_parameters():
    params = ParamSet(('q', 'h'))
    assert scalar_specialize(params['q'] + 1, {'q': 3}) == QQ(4)


def test_extend_and_embed(params_q):
    bigger = params_q.extend('h', 'q')
    assert bigger.names == ('q', 'h')
    a = (params_q['q'] + 1) / params_q['q']
    assert scalar_eq(bigger.embed(a), (bigger['q'] + 1) / bigger['q'])


def test_check(params_q):
    params_q.check(params_q['q'])
    with pytest.raises(ParameterError):
        params_q.check(ParamSet(('h',))['h'])


def test_reduce_imaginary():
    params = ParamSet(('J12', 'i'))
    i = params['i']
    assert scalar_eq(reduce_imaginary(i ** 2), -1)
    assert scalar_eq(reduce_imaginary(i ** 3 + params['J12']),
                     params['J12'] - i)
