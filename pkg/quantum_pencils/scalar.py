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

# Scalars are elements of the fraction field Q(p_1, ..., p_m) of integer
# polynomials in a declared, ordered set of formal parameters: sympy
# FracElements over ZZ in graded-lex order. Numerator and denominator are
# kept coprime; verdicts compare by cross-multiplication (scalar_eq).

import re

from sympy import Symbol, sympify
from sympy.polys.domains import QQ, ZZ
from sympy.polys.fields import FracField
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import CoercionFailed

from .utils import (FieldDivisionError, ParameterError, ParseError,
                    SpecializationError)

_NAME = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')


class ParamSet():
    """
    Ordered set of formal parameters and the rational function field
    built on them.
    """

    def __init__(self, names):
        """
        :param names: Iterable of distinct identifiers, e.g. ('q', 'h').
                      The order fixes the monomial order forever.
        """
        names = tuple(names)

        # Watchdog
        if len(set(names)) != len(names):
            raise ParameterError('parameter names must be unique, got %s'
                                 % (names,))
        for name in names:
            if not _NAME.match(name):
                raise ParameterError('invalid parameter name %r' % name)

        self.names = names
        if names:
            self.field = FracField(names, ZZ, grlex)
        else:
            # A field over no symbols still needs one; use a dummy that
            # never appears in any numerator.
            self.field = FracField(('_',), ZZ, grlex)
        self.ring = self.field.ring
        self.domain = self.field.to_domain()
        self.zero = self.field.zero
        self.one = self.field.one
        self._symbols = {name: Symbol(name) for name in names}

    def __repr__(self):
        return 'ParamSet(%s)' % ', '.join(self.names)

    def __eq__(self, other):
        return isinstance(other, ParamSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __getitem__(self, name):
        """The parameter `name` as a Scalar."""
        if name not in self.names:
            raise ParameterError('unknown parameter %r (declared: %s)'
                                 % (name, ', '.join(self.names)))
        return self.field.gens[self.names.index(name)]

    def __contains__(self, name):
        return name in self.names

    def gens(self):
        return {name: self[name] for name in self.names}

    def scalar(self, value):
        """
        Coerce an int, a rational, a Scalar of this ParamSet,
        or canonical text into a Scalar.
        """
        if isinstance(value, str):
            return scalar_parse(value, self)
        if self.field.is_element(value):
            return value
        try:
            return self.field(value)
        except (CoercionFailed, NotImplementedError) as e:
            raise ParameterError('cannot read %r as a scalar over %s: %s'
                                 % (value, self, e))

    def check(self, *scalars):
        """Raise if some scalar does not live in this ParamSet's field."""
        for a in scalars:
            if not self.field.is_element(a):
                raise ParameterError('scalar %s does not belong to %s'
                                     % (a, self))

    def extend(self, *names):
        """A new ParamSet with `names` appended (existing ones are kept)."""
        return ParamSet(self.names + tuple(n for n in names
                                           if n not in self.names))

    def embed(self, a):
        """Move a Scalar from a smaller ParamSet into this one."""
        if self.field.is_element(a):
            return a
        text = scalar_str(a)
        return scalar_parse(text, self)


def scalar_arith(a, b, op):
    """
    Exact field arithmetic.

    :param a: Scalar.
    :param b: Scalar of the same field.
    :param op: One of 'add', 'sub', 'mul', 'div'.
    :return: Scalar.
    """
    if a.field != b.field:
        raise ParameterError('scalars over different parameter sets: '
                             '%s and %s' % (a.field.symbols, b.field.symbols))
    if op == 'add':
        return a + b
    elif op == 'sub':
        return a - b
    elif op == 'mul':
        return a * b
    elif op == 'div':
        if not b:
            raise FieldDivisionError('division of %s by the zero scalar'
                                     % scalar_str(a))
        return a / b
    else:
        raise ValueError("op must be 'add', 'sub', 'mul' or 'div', got %r"
                         % op)


def scalar_eq(a, b):
    """
    True iff a*denom(b) - b*denom(a) is the zero polynomial.
    Integers are accepted on either side.
    """
    if isinstance(b, int):
        b = a.field(b)
    if isinstance(a, int):
        a = b.field(a)
    if a.field != b.field:
        raise ParameterError('scalars over different parameter sets: '
                             '%s and %s' % (a.field.symbols, b.field.symbols))
    return not (a.numer * b.denom - b.numer * a.denom)


def _poly_value(poly, names, assignment):
    total = QQ.zero
    for monom, coeff in poly.terms():
        term = QQ(int(coeff))
        for name, exponent in zip(names, monom):
            if not exponent:
                continue
            if name not in assignment:
                raise ParameterError('no value given for parameter %r' % name)
            term *= assignment[name] ** exponent
        total += term
    return total


def _as_rational(value):
    if isinstance(value, str):
        num, _, den = value.partition('/')
        return QQ(int(num), int(den or 1))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ(int(value.numerator), int(value.denominator))
    return QQ.convert(value)


def scalar_specialize(a, assignment):
    """
    Evaluate a Scalar at a rational point.

    :param a: Scalar.
    :param assignment: dict parameter name -> rational (int, QQ element,
                       fractions.Fraction or 'p/q' text). Parameters not
                       occurring in `a` may be omitted.
    :return: exact QQ element.
    """
    names = [str(s) for s in a.field.symbols]
    values = {k: _as_rational(v) for k, v in assignment.items()}
    denominator = _poly_value(a.denom, names, values)
    if not denominator:
        raise SpecializationError('denominator %s vanishes at %s'
                                  % (_poly_str(a.denom), _point_str(values)),
                                  assignment=values)
    return _poly_value(a.numer, names, values) / denominator


def _point_str(values):
    return ', '.join('%s=%s' % (k, values[k]) for k in sorted(values))


def _poly_str(poly):
    return str(poly).replace('**', '^').replace(' ', '')


def scalar_str(a):
    """
    Canonical text of a Scalar: "(N)/(D)", or "(N)" when D = 1.
    """
    numer = _poly_str(a.numer)
    if a.denom == a.field.ring.one:
        return '(%s)' % numer
    return '(%s)/(%s)' % (numer, _poly_str(a.denom))


def scalar_parse(text, param_set):
    """
    Read a Scalar from text. Accepts the canonical form of scalar_str
    and any rational expression in the parameters using + - * / ^ and
    parentheses.
    """
    text = text.strip()
    if not text:
        raise ParseError('empty scalar')
    try:
        expr = sympify(text.replace('^', '**'), locals=param_set._symbols)
    except Exception as e:
        raise ParseError('cannot parse scalar %r: %s' % (text, e))
    stray = {str(s) for s in expr.free_symbols} - set(param_set.names)
    if stray:
        raise ParseError('scalar %r uses undeclared parameters %s'
                         % (text, ', '.join(sorted(stray))))
    try:
        return param_set.field.from_expr(expr)
    except (ValueError, CoercionFailed, ZeroDivisionError) as e:
        raise ParseError('scalar %r is not a rational function: %s'
                         % (text, e))


def reduce_imaginary(a, name='i'):
    """
    Reduce numerator and denominator of `a` modulo name^2 + 1,
    for scalars that carry a formal imaginary unit.
    """
    field = a.field
    names = [str(s) for s in field.symbols]
    if name not in names:
        return a
    unit = field.ring.gens[names.index(name)]
    modulus = unit ** 2 + 1
    numer = a.numer.rem(modulus)
    denom = a.denom.rem(modulus)
    if not denom:
        raise FieldDivisionError('denominator of %s vanishes modulo %s^2+1'
                                 % (scalar_str(a), name))
    return field.new(numer, denom)
