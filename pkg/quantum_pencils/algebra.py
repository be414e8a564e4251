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

import itertools
import logging
import os

from parse import parse
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from .scalar import ParamSet, scalar_parse, scalar_specialize, scalar_str
from .utils import ParseError, ShapeError, SpecializationError

log = logging.getLogger(__name__)


class GeneratorSet():
    """
    Ordered generator names. The order fixes monomial orders,
    word orders and matrix index conventions.
    """

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ShapeError('generator names must be unique, got %s'
                             % (names,))
        if not names:
            raise ShapeError('a generator set needs at least one generator')
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, GeneratorSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return 'GeneratorSet(%s)' % ', '.join(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ShapeError('unknown generator %r' % name)

    def words(self, degree):
        """All words of a given length, in word order."""
        return list(itertools.product(range(len(self.names)), repeat=degree))

    def words_upto(self, degree):
        out = []
        for d in range(degree, -1, -1):
            out.extend(self.words(d))
        return out

    def word_str(self, word):
        return '*'.join(self.names[i] for i in word)


def matrix_generators(n, letter='a'):
    """
    Generators a_i^j of Mat(n), i = row, j = column, row-major.
    Index of a_i^j (1-based i, j) is (i-1)*n + (j-1).
    """
    return GeneratorSet('%s_%d^%d' % (letter, i, j)
                        for i in range(1, n + 1)
                        for j in range(1, n + 1))


def word_key(word):
    """Word order: higher degree first, then lexicographic by generator index."""
    return (-len(word), word)


# -----------------------------------------------------------------------
# Commutative polynomials: sympy PolyRing over the parameter field
# -----------------------------------------------------------------------

_RINGS = {}


def cpoly_ring(generators, param_set):
    """
    PolyRing over Q(params) whose i-th variable is generators.names[i].
    Internal symbol names are opaque; text goes through cpoly_str.
    """
    key = (generators, param_set)
    if key not in _RINGS:
        symbols = ['__g%d' % i for i in range(len(generators))]
        _RINGS[key] = PolyRing(symbols, param_set.domain, grlex)
    return _RINGS[key]


def cpoly_gen(generators, param_set, name):
    return cpoly_ring(generators, param_set).gens[generators.index(name)]


def cpoly_str(poly, generators):
    """Canonical text, e.g. "(2)*a_1^2*a_2^1 + (-q)*a_1^1"."""
    if not poly:
        return '0'
    terms = []
    for monom, coeff in poly.terms():
        factors = []
        for i, exponent in enumerate(monom):
            factors.extend([generators.names[i]] * exponent)
        terms.append('*'.join([scalar_str(coeff)] + factors))
    return ' + '.join(terms)


def cpoly_from_ncpoly(p):
    """Commutative image of a noncommutative polynomial."""
    ring = cpoly_ring(p.generators, p.params)
    out = {}
    for word, coeff in p.terms.items():
        monom = [0] * len(p.generators)
        for i in word:
            monom[i] += 1
        monom = tuple(monom)
        out[monom] = out.get(monom, p.params.zero) + coeff
    return ring.from_dict({m: c for m, c in out.items() if c})


def cpoly_parse(text, generators, param_set):
    return cpoly_from_ncpoly(ncpoly_parse(text, generators, param_set))


# -----------------------------------------------------------------------
# Free algebra
# -----------------------------------------------------------------------

class NCPoly():
    """
    Element of the free algebra T(V) over Q(params): a map from words
    (tuples of generator indices) to nonzero Scalars. The empty word is 1.
    A homogeneous NCPoly of degree d doubles as a vector of V^{(x)d}.
    """

    __slots__ = ('generators', 'params', 'terms')

    def __init__(self, generators, params, terms=None):
        self.generators = generators
        self.params = params
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, generators, params, word, coeff=None):
        coeff = params.one if coeff is None else params.scalar(coeff)
        return cls(generators, params, {tuple(word): coeff})

    @classmethod
    def gen(cls, generators, params, name):
        return cls.word(generators, params, (generators.index(name),))

    @classmethod
    def constant(cls, generators, params, value):
        return cls.word(generators, params, (), value)

    def _check(self, other):
        if self.generators != other.generators or self.params != other.params:
            raise ShapeError('polynomials over different generators/parameters')

    def new(self, terms):
        return NCPoly(self.generators, self.params, terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return (self.generators == other.generators
                and not (self - other).terms)

    def __hash__(self):
        return hash(self.__str__())

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, self.params.zero) + c
        return self.new(out)

    def __neg__(self):
        return self.new({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.params.scalar(c)
        if not c:
            return self.new({})
        return self.new({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, self.params.zero) + c1 * c2
        return self.new(out)

    def __rmul__(self, other):
        return self.scale(other)

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def is_homogeneous(self):
        return len({len(w) for w in self.terms}) <= 1

    def part(self, degree):
        """Homogeneous component of a given degree."""
        return self.new({w: c for w, c in self.terms.items()
                         if len(w) == degree})

    def top(self):
        return self.part(self.degree())

    def reversed(self):
        """Image under the anti-automorphism reversing every word."""
        return self.new({tuple(reversed(w)): c for w, c in self.terms.items()})

    def substitute(self, images):
        """
        Algebra map sending generator i to images[i] (an NCPoly).
        Generators absent from `images` are kept.
        """
        result = self.new({})
        for word, coeff in self.terms.items():
            term = NCPoly.constant(self.generators, self.params, coeff)
            for i in word:
                factor = images.get(i)
                if factor is None:
                    factor = NCPoly.word(self.generators, self.params, (i,))
                term = term * factor
            result = result + term
        return result

    def specialize(self, values):
        """
        Map coefficients to exact rationals (see scalar_specialize);
        returns a plain dict word -> QQ, zero entries dropped.
        """
        out = {}
        for w, c in self.terms.items():
            v = scalar_specialize(c, values)
            if v:
                out[w] = v
        return out

    def __str__(self):
        return ncpoly_str(self)

    def __repr__(self):
        return 'NCPoly(%s)' % ncpoly_str(self)


def ncpoly_str(p):
    """Canonical text: terms in word order, "(scalar)*g1*g2" each."""
    if not p.terms:
        return '0'
    parts = []
    for word in sorted(p.terms, key=word_key):
        coeff = scalar_str(p.terms[word])
        parts.append('*'.join([coeff] + [p.generators.names[i] for i in word]))
    return ' + '.join(parts)


def _split_top_level(text, separators):
    """Split at separators that are not inside parentheses; keep the sign."""
    pieces, depth, start = [], 0, 0
    for pos, char in enumerate(text):
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
            if depth < 0:
                raise ParseError('unbalanced parentheses in %r' % text)
        elif depth == 0 and char in separators and pos > start:
            # "a_1^-2" style exponents are never produced; a sign right
            # after '*' or '^' belongs to the factor
            if text[pos - 1] in '*^(':
                continue
            pieces.append(text[start:pos])
            start = pos
    if depth != 0:
        raise ParseError('unbalanced parentheses in %r' % text)
    pieces.append(text[start:])
    return [p for p in pieces if p.strip()]


def _split_factors(term):
    factors, depth, current = [], 0, ''
    for char in term:
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        if char == '*' and depth == 0:
            factors.append(current)
            current = ''
        else:
            current += char
    factors.append(current)
    return [f.strip() for f in factors]


def ncpoly_parse(text, generators, param_set):
    """
    Read a polynomial in canonical (or hand-written) text:
    terms separated by + / -, each a '*'-product of an optional scalar
    and generator names. Non-generator factors are read as scalars.
    """
    text = text.replace(' ', '').replace('\t', '')
    if text in ('', '0'):
        return NCPoly(generators, param_set)
    result = NCPoly(generators, param_set)
    for piece in _split_top_level(text, '+-'):
        sign = param_set.one
        if piece[0] in '+-':
            if piece[0] == '-':
                sign = -sign
            piece = piece[1:]
        coeff = sign
        word = []
        for factor in _split_factors(piece):
            if not factor:
                raise ParseError('empty factor in %r' % text)
            if factor in generators._index:
                word.append(generators._index[factor])
            else:
                coeff = coeff * scalar_parse(factor, param_set)
        result = result + NCPoly.word(generators, param_set, word, coeff)
    return result


# -----------------------------------------------------------------------
# Relation families
# -----------------------------------------------------------------------

class RelationFamily():
    """
    Named list of relations of degree <= 2 in a free algebra.
    'graded' families are homogeneous quadratic; 'filtered' ones may
    carry linear and constant tails.
    """

    def __init__(self, name, generators, params, relations, kind='graded'):
        # Watchdog
        if kind not in ('graded', 'filtered'):
            raise ValueError("kind must be 'graded' or 'filtered', got %r"
                             % kind)
        relations = [r for r in relations if r]
        for r in relations:
            if r.generators != generators:
                raise ShapeError('relation %s is not over %s' % (r, generators))
            if r.degree() > 2:
                raise ShapeError('relation %s has degree %s > 2'
                                 % (r, r.degree()))
            if kind == 'graded' and not (r.is_homogeneous()
                                         and r.degree() == 2):
                raise ShapeError('graded family %s has a non-quadratic '
                                 'relation %s' % (name, r))
        self.name = name
        self.generators = generators
        self.params = params
        self.relations = relations
        self.kind = kind

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def __repr__(self):
        return 'RelationFamily(%s, %s, %d relations)' % (self.name,
                                                          self.kind,
                                                          len(self))

    def top_parts(self):
        """Quadratic parts of the relations, as a graded family."""
        return RelationFamily(self.name + '/top', self.generators, self.params,
                              [r.part(2) for r in self.relations], 'graded')

    def substitute_params(self, values, params=None):
        """
        Family with some parameters replaced by Scalars of `params`
        (default: same ParamSet). `values` maps names to Scalars or text.
        """
        params = params or self.params
        names = list(self.params.names)
        images = []
        for name in names:
            if name in values:
                images.append(params.scalar(values[name]))
            else:
                images.append(params[name])
        relations = []
        for r in self.relations:
            terms = {}
            for w, c in r.terms.items():
                terms[w] = _compose_scalar(c, images, params)
            relations.append(NCPoly(self.generators, params, terms))
        return RelationFamily(self.name, self.generators, params, relations,
                              self.kind)


def _compose_scalar(c, images, params):
    """Evaluate the rational function c at Scalars `images` of `params`."""
    def value(poly):
        total = params.zero
        for monom, coeff in poly.terms():
            term = params.scalar(int(coeff))
            for image, exponent in zip(images, monom):
                if exponent:
                    term = term * image ** exponent
            total = total + term
        return total
    denominator = value(c.denom)
    if not denominator:
        raise SpecializationError('denominator of %s vanishes under '
                                  'the substitution'
                                  % scalar_str(c))
    return value(c.numer) / denominator


def export_family(family):
    """Text of the declarative relations file format."""
    lines = ['# relations file',
             'name = %s' % family.name,
             'kind = %s' % family.kind]
    if family.params.names:
        lines.append('parameters = %s' % ', '.join(family.params.names))
    lines.append('generators = %s' % ', '.join(family.generators.names))
    lines.extend('relation = %s' % ncpoly_str(r) for r in family.relations)
    return '\n'.join(lines) + '\n'


def _read_lines(path_or_text):
    if os.path.exists(path_or_text):
        with open(path_or_text) as f:
            return path_or_text, f.read().splitlines()
    return None, path_or_text.splitlines()


def load_family(path_or_text):
    """
    Read a relations file (path or text). Keys: name, kind,
    parameters, generators, relation (repeatable). '#' starts a comment.
    """
    filename, lines = _read_lines(path_or_text)
    header = {}
    relation_lines = []
    for lineno, line in enumerate(lines, start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        parsed = parse('{key} = {value}', line)
        if parsed is None:
            raise ParseError('expected "key = value", got %r' % line,
                             filename, lineno)
        key = parsed['key'].strip()
        if key == 'relation':
            relation_lines.append((lineno, parsed['value']))
        elif key in ('name', 'kind', 'parameters', 'generators'):
            header[key] = parsed['value'].strip()
        else:
            raise ParseError('unknown key %r' % key, filename, lineno)
    for key in ('name', 'generators'):
        if key not in header:
            raise ParseError('missing "%s = ..." line' % key, filename)
    generators = GeneratorSet(_split_names(header['generators']))
    param_set = ParamSet(_split_names(header.get('parameters', '')))
    relations = []
    for lineno, text in relation_lines:
        try:
            relations.append(ncpoly_parse(text, generators, param_set))
        except (ParseError, ShapeError) as e:
            raise ParseError(str(e), filename, lineno)
    try:
        return RelationFamily(header['name'], generators, param_set,
                              relations, header.get('kind', 'graded'))
    except (ShapeError, ValueError) as e:
        raise ParseError(str(e), filename)


def _split_names(text):
    return [name.strip() for name in text.split(',') if name.strip()]
