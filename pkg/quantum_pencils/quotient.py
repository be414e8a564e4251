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
from math import comb

from sympy import groebner

from .algebra import NCPoly, RelationFamily, cpoly_from_ncpoly, word_key
from .linalg import (Echelon, Subspace, ideal_combination, ideal_rank,
                     subspace_ops)
from .sampling import SamplePoints, denominators_of, point_str
from .scalar import ParamSet, scalar_str
from .utils import ShapeError, humanize, progress

log = logging.getLogger(__name__)

MODES = ('symbolic', 'probabilistic')


class QuotientPresentation():
    """T(V)/{relations}, looked at up to the truncation degree."""

    def __init__(self, family, degree=3):
        # Watchdog
        if degree < 2:
            raise ShapeError('truncation degree must be at least 2, got %s'
                             % degree)
        self.family = family
        self.degree = degree

    @property
    def generators(self):
        return self.family.generators

    @property
    def name(self):
        return self.family.name

    def __repr__(self):
        return 'QuotientPresentation(%s, D=%d)' % (self.name, self.degree)


class HilbertResult():
    """Dimensions of a truncated quotient, per degree d = 0..D."""

    def __init__(self, name, kind, mode, dims, points=(), per_point=(),
                 collapse=False, witness=None):
        self.name = name
        self.kind = kind
        self.mode = mode
        self.dims = list(dims)
        self.points = list(points)
        self.per_point = [list(d) for d in per_point]
        self.collapse = collapse
        self.witness = witness
        self.witness_combination = None
        self.echelon = None

    @property
    def cumulative(self):
        return self.kind == 'filtered'

    def as_dict(self):
        out = {'family': self.name,
               'kind': self.kind,
               'mode': self.mode,
               'degrees': list(range(len(self.dims))),
               'dims': self.dims,
               'collapse': self.collapse}
        if self.points:
            out['points'] = [point_str(p) for p in self.points]
            out['dims_per_point'] = self.per_point
        if self.witness is not None:
            out['witness'] = self.witness
        return out


def free_dims(ngens, degree, cumulative=False):
    dims = [ngens ** d for d in range(degree + 1)]
    if cumulative:
        dims = list(itertools.accumulate(dims))
    return dims


def _pivot_counts(echelon, degree):
    counts = [0] * (degree + 1)
    for pivot in echelon.rows:
        counts[len(pivot)] += 1
    return counts


def _quotient_dims(ngens, degree, counts, cumulative):
    if cumulative:
        return list(itertools.accumulate(
            ngens ** d - counts[d] for d in range(degree + 1)))
    return [ngens ** d - counts[d] for d in range(degree + 1)]


def _coeff_str(c):
    if hasattr(c, 'numer') and hasattr(c, 'field'):
        return scalar_str(c)
    return '(%s)' % c


def vector_str(vector, generators):
    """Text of a word -> coefficient dict (Scalars or rationals)."""
    if not vector:
        return '0'
    parts = []
    for word in sorted(vector, key=word_key):
        parts.append('*'.join([_coeff_str(vector[word])]
                              + [generators.names[i] for i in word]))
    return ' + '.join(parts)


def combination_str(combination, family):
    """
    Text of sum c * x*[r]*y over the items (x, relation index, y) -> c
    returned by linalg.ideal_combination.
    """
    names = family.generators.names
    parts = []
    for (left, index, right) in sorted(combination, key=lambda t: (
            t[1], word_key(t[0]), word_key(t[2]))):
        factors = [names[i] for i in left] \
            + ['[%s]' % family.relations[index]] \
            + [names[i] for i in right]
        parts.append('*'.join([_coeff_str(combination[(left, index, right)])]
                              + factors))
    return ' + '.join(parts)


def _hilbert_at(family, degree, point):
    echelon = ideal_rank(family, degree, point)
    counts = _pivot_counts(echelon, degree)
    cumulative = family.kind == 'filtered'
    dims = _quotient_dims(len(family.generators), degree, counts, cumulative)
    collapse = () in echelon.rows
    return dims, collapse, echelon


def _collapse_witness(result, family, degree, point):
    found = ideal_combination(family, degree, (), point)
    if found is None:
        result.witness = '1 lies in the ideal truncated at degree %d' % degree
        return
    combination, element = found
    result.witness_combination = combination
    result.witness = '%s = %s' % (combination_str(combination, family),
                                  vector_str(element, family.generators))


def hilbert(Q, mode='symbolic', sampler=None, samples=3):
    """
    Dimensions of the quotient: degree-d graded pieces for graded
    families, images of words of length <= d (cumulative) for filtered ones.

    The ideal is truncated once at Q.degree; the dimension of its
    degree <= d part is the number of echelon pivots of length <= d.

    :param mode: 'symbolic' (exact over Q(params)) or 'probabilistic'
                 (exact over QQ at `samples` random points; the largest
                 rank wins).
    :param sampler: SamplePoints, required in probabilistic mode.
    :return: HilbertResult.
    """
    if mode not in MODES:
        raise ValueError("mode must be 'symbolic' or 'probabilistic', got %r"
                         % mode)
    family, degree = Q.family, Q.degree
    if mode == 'symbolic' or not family.params.names:
        dims, collapse, echelon = _hilbert_at(family, degree, None)
        point = None
        result = HilbertResult(family.name, family.kind, 'symbolic', dims,
                               collapse=collapse)
    else:
        if samples < 3:
            raise ValueError('probabilistic mode needs at least 3 sample '
                             'points, got %s' % samples)
        sampler = sampler or SamplePoints()
        points = sampler.points(family.params.names, samples,
                                denominators_of(family.relations))
        per_point, best = [], None
        for point in progress(points, desc='hilbert %s' % family.name):
            dims, collapse, echelon = _hilbert_at(family, degree, point)
            per_point.append(dims)
            if best is None or sum(dims) < sum(best[0]):
                best = (dims, collapse, echelon, point)
        dims, collapse, echelon, point = best
        result = HilbertResult(family.name, family.kind, 'probabilistic',
                               dims, points, per_point, collapse)
    result.echelon = echelon
    if result.collapse:
        _collapse_witness(result, family, degree, point)
        log.warning('quotient %s collapses: %s', family.name, result.witness)
    log.info('hilbert %s (%s): %s', family.name, result.mode, result.dims)
    return result


class FlatnessVerdict():

    def __init__(self, hilbert_result, reference, first_bad=None,
                 witness=None):
        self.hilbert = hilbert_result
        self.reference = list(reference)
        self.first_bad = first_bad
        self.witness = witness

    @property
    def passed(self):
        return self.first_bad is None and not self.hilbert.collapse

    def as_dict(self):
        out = self.hilbert.as_dict()
        out.update({'reference': self.reference,
                    'verdict': 'PASS' if self.passed else 'FAIL'})
        if self.first_bad is not None:
            out['first_bad_degree'] = self.first_bad
        if self.witness is not None:
            out['witness'] = self.witness
        return out


def flatness_verdict(Q, reference, mode='symbolic', sampler=None, samples=3,
                     reference_family=None):
    """
    PASS iff hilbert(Q) equals `reference` through Q.degree.
    On FAIL, the witness is an element of the ideal in the first
    deviating degree whose leading word is not a leading word of
    `reference_family`'s ideal (when given).
    """
    result = hilbert(Q, mode, sampler, samples)
    reference = list(reference)[:Q.degree + 1]
    if len(reference) < Q.degree + 1:
        raise ShapeError('reference has %d degrees, need %d'
                         % (len(reference), Q.degree + 1))
    first_bad = next((d for d, (a, b) in enumerate(zip(result.dims,
                                                        reference))
                      if a != b), None)
    witness = result.witness
    if first_bad is not None and not result.collapse:
        known = set()
        if reference_family is not None:
            point = result.points[0] if result.points else None
            known = set(ideal_rank(reference_family, Q.degree, point).rows)
        rows = result.echelon.rows
        candidates = [p for p in sorted(rows, key=word_key)
                      if len(p) == first_bad and p not in known]
        if candidates:
            witness = vector_str(rows[candidates[0]], Q.generators)
        log.warning('%s is not flat: degree %d has dimension %d, '
                    'expected %d', Q.name, first_bad, result.dims[first_bad],
                    reference[first_bad])
    return FlatnessVerdict(result, reference, first_bad, witness)


def commutative_hilbert(relations, ngens, degree, cumulative=False):
    """
    Commutative-elimination oracle: dimensions of Sym(V)/(relations)
    truncated at `degree`, relations given as sympy PolyElements.
    """
    if not relations:
        return free_commutative_dims(ngens, degree, cumulative)
    ring = relations[0].ring
    echelon = Echelon(ring.domain, key=lambda m: (-sum(m), m), reduced=False)
    for r in relations:
        top = max(sum(m) for m in r.monoms())
        for extra in range(degree - top + 1):
            for exps in itertools.product(range(extra + 1), repeat=ngens):
                if sum(exps) != extra:
                    continue
                monomial = ring.one
                for x, e in zip(ring.gens, exps):
                    monomial *= x ** e
                echelon.insert(dict((r * monomial).terms()))
    counts = [0] * (degree + 1)
    for pivot in echelon.rows:
        counts[sum(pivot)] += 1
    free = free_commutative_dims(ngens, degree)
    dims = [free[d] - counts[d] for d in range(degree + 1)]
    if cumulative:
        dims = list(itertools.accumulate(dims))
    return dims


def classical_point_dims(family, degree, values):
    """
    Hilbert dimensions of a family at a point where its relations contain
    every commutator (q=1, h=0 for the quantum families), next to the
    dimensions commutative elimination gives for the commutative images.

    :param values: dict assigning every parameter of the family.
    :return: (dims from hilbert, dims from commutative_hilbert)
    """
    missing = [name for name in family.params.names if name not in values]
    if missing:
        raise ShapeError('no value for parameter(s) %s' % ', '.join(missing))
    at_point = family.substitute_params(values, ParamSet(()))
    dims = hilbert(QuotientPresentation(at_point, degree)).dims
    images = [p for p in map(cpoly_from_ncpoly, at_point.relations) if p]
    oracle = commutative_hilbert(images, len(family.generators), degree,
                                 cumulative=family.kind == 'filtered')
    return dims, oracle


def free_commutative_dims(ngens, degree, cumulative=False):
    dims = [comb(ngens + d - 1, d) for d in range(degree + 1)]
    if cumulative:
        dims = list(itertools.accumulate(dims))
    return dims


# -----------------------------------------------------------------------
# PBW conditions for (V, I, nu_0, nu_1)
# -----------------------------------------------------------------------

class NuData():
    """
    Data of a nonhomogeneous quadratic algebra with relations
    x - nu_1(x) - nu_0(x), x in I.
    """

    def __init__(self, generators, params, I, nu1, nu0, name='nu'):
        """
        :param I: Subspace of V (x) V (ambient (generators, 2)).
        :param nu1: dict pair -> dict generator index -> Scalar,
                    the map V (x) V -> V on basis pairs.
        :param nu0: dict pair -> Scalar, the map V (x) V -> k.
        """
        if I.ambient != (generators, 2):
            raise ShapeError('I must be a subspace of V (x) V')
        self.generators = generators
        self.params = params
        self.I = I
        self.nu1 = nu1
        self.nu0 = nu0
        self.name = name

    def apply_nu1(self, vector):
        zero = self.params.zero
        out = {}
        for pair, c in vector.items():
            for x, v in self.nu1.get(pair, {}).items():
                out[x] = out.get(x, zero) + c * v
        return {k: v for k, v in out.items() if v}

    def apply_nu0(self, vector):
        total = self.params.zero
        for pair, c in vector.items():
            v = self.nu0.get(pair)
            if v:
                total += c * v
        return total

    def relations(self):
        """x - nu_1(x) - nu_0(x) for a basis x of I, as a filtered family."""
        relations = []
        for x in self.I.basis():
            terms = dict(x)
            for g, c in self.apply_nu1(x).items():
                terms[(g,)] = terms.get((g,), self.params.zero) - c
            constant = self.apply_nu0(x)
            if constant:
                terms[()] = -constant
            relations.append(NCPoly(self.generators, self.params, terms))
        return RelationFamily(self.name, self.generators, self.params,
                              relations, 'filtered')


def overlap_space(I):
    """K = (I (x) V) intersect (V (x) I) inside V^(x)3."""
    generators = I.ambient[0]
    n = len(generators)
    left, right = [], []
    for x in I.basis():
        for g in range(n):
            left.append({w + (g,): c for w, c in x.items()})
            right.append({(g,) + w: c for w, c in x.items()})
    ambient = (generators, 3)
    A = Subspace(ambient, I.domain, left)
    B = Subspace(ambient, I.domain, right)
    return subspace_ops(A, B, 'intersect')


class NuVerdict():

    def __init__(self, overlap_dim, residuals, constraints, basis):
        self.overlap_dim = overlap_dim
        self.residuals = residuals
        self.constraints = constraints
        self.basis = basis

    @property
    def identically(self):
        return not self.constraints

    @property
    def consistent(self):
        return self.identically or list(self.basis.exprs) != [1]

    def as_dict(self):
        return {'overlap_dim': self.overlap_dim,
                'identically_satisfied': self.identically,
                'consistent': self.consistent,
                'constraints': [str(e).replace('**', '^').replace(' ', '')
                                for e in (self.basis.exprs
                                          if self.basis is not None else [])],
                'residuals': self.residuals}


def pbw_nu_check(N):
    """
    With K = I(x)V intersect V(x)I and phi = (nu_1(x)1 - 1(x)nu_1)(k):
      1. phi lies in I;
      2. nu_1(phi) + (nu_0(x)1 - 1(x)nu_0)(k) = 0;
      3. nu_0(phi) = 0;
    for every k in K. Returns the polynomial conditions on the
    parameters (reduced Groebner basis) under which all three hold.
    """
    K = overlap_space(N.I)
    zero = N.params.zero
    residuals = {'phi_in_I': [], 'nu1_phi': [], 'nu0_phi': []}
    conditions = []

    def record(kind, value):
        residuals[kind].append(value)
        for c in (value.values() if isinstance(value, dict) else [value]):
            if c:
                conditions.append(c.numer.as_expr())

    for k in progress(K.basis(), desc='PBW conditions'):
        phi = {}
        shifted = {}
        for (a, b, c), coeff in k.items():
            for g, v in N.nu1.get((a, b), {}).items():
                phi[(g, c)] = phi.get((g, c), zero) + coeff * v
            for g, v in N.nu1.get((b, c), {}).items():
                phi[(a, g)] = phi.get((a, g), zero) - coeff * v
            left, right = N.nu0.get((a, b)), N.nu0.get((b, c))
            if left:
                shifted[c] = shifted.get(c, zero) + coeff * left
            if right:
                shifted[a] = shifted.get(a, zero) - coeff * right
        phi = {w: c for w, c in phi.items() if c}
        record('phi_in_I', N.I.residue(phi))
        second = N.apply_nu1(phi)
        for g, v in shifted.items():
            second[g] = second.get(g, zero) + v
        record('nu1_phi', {g: v for g, v in second.items() if v})
        record('nu0_phi', N.apply_nu0(phi))
    basis = None
    if conditions:
        basis = groebner(conditions, *N.params.field.symbols,
                         order='grevlex')
    text = {kind: [vector_str({(g,) if isinstance(g, int) else g: v
                               for g, v in value.items()}, N.generators)
                   if isinstance(value, dict) else scalar_str(value)
                   for value in values if value]
            for kind, values in residuals.items()}
    log.info('PBW conditions for %s: overlap dimension %s, %s conditions',
             N.name, humanize(K.dim), humanize(len(conditions)))
    return NuVerdict(K.dim, text, conditions, basis)


# -----------------------------------------------------------------------
# Quotients built from a q-Lie bracket
# -----------------------------------------------------------------------

def u_hq_family(bracket, h=None):
    """
    U(g)_{h,q}: relations x - h [x]_q for x in the V_- component of V (x) V.

    :param bracket: q-Lie bracket exposing generators, params,
                    minus_basis() and apply(vector).
    """
    params = bracket.params
    h = params['h'] if h is None else params.scalar(h)
    relations = []
    for x in bracket.minus_basis():
        terms = dict(x)
        for g, c in bracket.apply(x).items():
            terms[(g,)] = terms.get((g,), params.zero) - h * c
        relations.append(NCPoly(bracket.generators, params, terms))
    return RelationFamily('u_hq', bracket.generators, params, relations,
                          'filtered')


def first_type_ideal(bracket, c0=None, h=None, degree=3):
    """
    U(g)_{h,q} modulo C_q - c_0; for sl(2) no other components appear.
    """
    params = bracket.params
    c0 = params['c0'] if c0 is None else params.scalar(c0)
    family = u_hq_family(bracket, h)
    casimir = dict(bracket.casimir)
    casimir[()] = casimir.get((), params.zero) - c0
    relations = family.relations + [NCPoly(bracket.generators, params,
                                           casimir)]
    family = RelationFamily('first_type', bracket.generators, params,
                            relations, 'filtered')
    return QuotientPresentation(family, degree)
