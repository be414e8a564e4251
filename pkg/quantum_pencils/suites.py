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

import functools
import itertools
import logging
import os
import zlib
from concurrent.futures import ThreadPoolExecutor
from math import comb

from sympy import groebner

from . import peterpy
from .algebra import GeneratorSet, cpoly_gen, load_family
from .braided import (BRAIDED_PARAMS, Conjugation, braided_casimir,
                      braided_structure, c0_table, classify_diagonal_conjugations,
                      conjugation_violations, decompose_end,
                      end_product_equivariance, even_closure_check,
                      general_conjugation_scan, irrep, odd_subalgebra_check,
                      printed_table, q_lie_bracket, quantum_trace,
                      quantum_trace_invariance, sl2_nu_data)
from .metrics import ERROR, FAIL, PASS, Check, Judge
from .poisson import (constraints_str, cybe_defect, delta_shift,
                      diagonal_monomials, elliptic, elliptic_constraints,
                      elliptic_shift, generator_triples, gl,
                      alternating_normalization, is_ad_invariant,
                      is_alternating, jacobi_violations, linear1, r_twisted,
                      rmatrix_bracket_orbit_check, shift_and_linearize, sl,
                      sklyanin2, tensor_str)
from .quotient import (MODES, QuotientPresentation, classical_point_dims,
                       first_type_ideal, flatness_verdict,
                       free_commutative_dims, hilbert, pbw_nu_check,
                       u_hq_family)
from .report import build_report
from .rmatrix import (check_hecke, elliptic_classical_limit_check, has_eigenvalue,
                      hecke_s, i_minus_family, i_plus_family, iq_spans,
                      j_hq_family, qybe_witness, re_family, s_w,
                      same_relation_span, shift_family)
from .sampling import SamplePoints, point_str
from .scalar import ParamSet, scalar_eq, scalar_str
from .utils import ConfigError, QuantumPencilsError, humanize, progress

log = logging.getLogger(__name__)

# Run order of 'all'
SUITES = ('poisson-pencil', 'cybe', 'qybe', 'spans', 'flatness', 'pbw-nu',
          'braided', 'conjugations')
SUITE_NAMES = SUITES + ('all',)


class RunConfig():
    """Everything that determines the verdicts of a run."""

    def __init__(self, suite, n=2, degree=3, mode='symbolic', seed=1,
                 samples=3, kmax=5, fixed=None, relations='', nThreads=1):
        """
        :param suite: One of SUITE_NAMES.
        :param n: Matrix size of Fun(Mat(n)).
        :param degree: Truncation degree D of the quotients.
        :param mode: 'symbolic' or 'probabilistic'.
        :param seed: Seed of the sample points (unused by symbolic checks).
        :param samples: Sample points per probabilistic check.
        :param kmax: Largest highest weight of the braided modules.
        :param fixed: dict parameter name -> rational held fixed.
        :param relations: Optional relations file for the flatness suite.
        :param nThreads: Worker threads.
        """
        # Watchdog
        if suite not in SUITE_NAMES:
            raise ConfigError("unknown suite '%s' (known: %s)"
                              % (suite, ', '.join(SUITE_NAMES)))
        if mode not in MODES:
            raise ConfigError("mode must be 'symbolic' or 'probabilistic', "
                              "got %r" % mode)
        if n < 2:
            raise ConfigError('n must be at least 2, got %s' % n)
        if degree < 2:
            raise ConfigError('truncation degree must be at least 2, got %s'
                              % degree)
        if samples < 3:
            raise ConfigError('at least 3 sample points are needed, got %s'
                              % samples)
        if kmax < 0:
            raise ConfigError('kmax must be nonnegative, got %s' % kmax)
        if nThreads < 1:
            raise ConfigError('number of threads must be strictly positive, '
                              'got %s' % nThreads)
        if relations and not os.path.isfile(relations):
            raise ConfigError('relations file %s does not exist' % relations)

        self.suite = suite
        self.n = n
        self.degree = degree
        self.mode = mode
        self.seed = seed
        self.samples = samples
        self.kmax = kmax
        self.fixed = dict(fixed or {})
        self.relations = relations
        self.nThreads = nThreads

    @classmethod
    def from_args(cls, args):
        return cls(args.suite, n=args.n, degree=args.degree, mode=args.mode,
                   seed=args.seed, samples=args.samples, kmax=args.kmax,
                   fixed=args.fixed, relations=args.relations,
                   nThreads=args.nThreads)

    @property
    def symbolic(self):
        return self.mode == 'symbolic'

    def sampler(self, check_name):
        """Sample points of one check, independent of scheduling."""
        return SamplePoints(seed=[self.seed, zlib.crc32(check_name.encode())],
                            fixed=self.fixed)

    def as_dict(self):
        return {'suite': self.suite,
                'n': self.n,
                'degree': self.degree,
                'mode': self.mode,
                'seed': self.seed,
                'samples': self.samples,
                'kmax': self.kmax,
                'specialize': point_str(self.fixed),
                'relations': self.relations}


class Outcome():
    """What a check function hands back to the runner."""

    def __init__(self, passed, witnesses=(), details=None, artifact=None,
                 mode='symbolic'):
        self.passed = bool(passed)
        self.witnesses = [str(w) for w in witnesses]
        self.details = dict(details or {})
        self.artifact = artifact
        self.mode = mode


def _sample(config, sampler, names):
    """[None] in symbolic mode, else config.samples points."""
    if config.symbolic:
        return [None]
    return sampler.points(names, config.samples)


def _at_points(config, sampler, names, test):
    """
    Run test(point) once symbolically or at every sample point.
    test returns a witness text, or None when it holds.
    """
    points = _sample(config, sampler, names)
    witnesses = []
    for point in points:
        witness = test(point)
        if witness:
            witnesses.append(witness if point is None
                             else '%s: %s' % (point_str(point), witness))
    details = {}
    if not config.symbolic:
        details['points'] = [point_str(p) for p in points]
    return Outcome(not witnesses, witnesses, details, mode=config.mode)


def _triples_text(violations):
    return ['{%s}: %s' % (', '.join(names), text)
            for names, text in violations]


def _table_differences(A, B):
    names = A.generators.names
    return ['{%s, %s}' % (names[i], names[j])
            for i, j in itertools.combinations(range(len(names)), 2)
            if A.entry(i, j) != B.entry(i, j)]


def _flatness_outcome(verdict, expect_flat=True):
    witnesses = []
    if verdict.passed != expect_flat:
        if expect_flat:
            witnesses.append(verdict.witness or 'dimensions %s, expected %s'
                             % (verdict.hilbert.dims, verdict.reference))
        else:
            witnesses.append('quotient is flat through degree %d'
                             % (len(verdict.reference) - 1))
    return Outcome(verdict.passed == expect_flat, witnesses,
                   {'dims': verdict.hilbert.dims,
                    'reference': verdict.reference},
                   artifact=verdict.as_dict(), mode=verdict.hilbert.mode)


# -----------------------------------------------------------------------
# poisson-pencil
# -----------------------------------------------------------------------

def _jacobi(build, config, sampler):
    T = build(config.n)
    bad = jacobi_violations(T)
    return Outcome(not bad, _triples_text(bad),
                   {'table': T.name, 'triples': len(generator_triples(T))})


def _compatibility(config, sampler):
    bad = jacobi_violations(linear1(config.n), other=sklyanin2(config.n))
    return Outcome(not bad, _triples_text(bad))


def _linearization(config, sampler):
    shifted = shift_and_linearize(sklyanin2(config.n), delta_shift(config.n))
    differences = _table_differences(shifted.linear, linear1(config.n))
    return Outcome(not differences, differences,
                   {'degree_in_h': shifted.degree_in_h()})


def _diagonal_monomials(config, sampler):
    n = config.n
    T = sklyanin2(n)
    witnesses = ['{%s, %s} contains %s' % (pair + (monomial,))
                 for pair, monomial in diagonal_monomials(T, n)]
    second = shift_and_linearize(T, delta_shift(n)).orders[2]
    names = T.generators.names
    witnesses.extend('h^2 coefficient of {%s, %s} is nonzero'
                     % (names[i], names[j]) for i, j in sorted(second.table))
    return Outcome(not witnesses, witnesses)


def _r_twist(config, sampler):
    differences = _table_differences(linear1(config.n), r_twisted(config.n))
    return Outcome(not differences, differences)


def _elliptic_constraints(config, sampler):
    T = elliptic()
    G = elliptic_constraints(T)
    symbols = T.params.field.symbols
    expected = groebner([sum(symbols)], *symbols, order='grevlex')
    found = constraints_str(G)
    witnesses = [] if list(G.exprs) == list(expected.exprs) \
        else ['constraints %s, expected %s' % (found,
                                               constraints_str(expected))]
    return Outcome(not witnesses, witnesses, artifact=found)


def _elliptic_pencil(config, sampler):
    T = elliptic()
    G = elliptic_constraints(T)
    linear = shift_and_linearize(T, elliptic_shift()).linear
    bad = jacobi_violations(linear) \
        + jacobi_violations(linear, modulo=G, other=T)
    return Outcome(not bad, _triples_text(bad),
                   {'linear': linear.is_linear()})


def poisson_pencil_checks(config):
    return [('jacobi_sklyanin2', functools.partial(_jacobi, sklyanin2)),
            ('jacobi_linear1', functools.partial(_jacobi, linear1)),
            ('jacobi_gl', functools.partial(_jacobi, gl)),
            ('compatibility', _compatibility),
            ('linearization', _linearization),
            ('diagonal_monomials', _diagonal_monomials),
            ('r_twist', _r_twist),
            ('elliptic_constraints', _elliptic_constraints),
            ('elliptic_pencil', _elliptic_pencil)]


# -----------------------------------------------------------------------
# cybe
# -----------------------------------------------------------------------

def _cybe(rank, config, sampler):
    L = sl(rank)
    defect = cybe_defect(L)
    details = {'terms': len(defect), 'alternating': is_alternating(defect)}
    normalization = alternating_normalization(L, defect)
    if normalization is not None:
        details['normalization'] = scalar_str(normalization)
    witnesses = []
    if not defect:
        witnesses.append('the defect vanishes')
    if not is_ad_invariant(L, defect):
        witnesses.append('the defect is not ad-invariant')
    return Outcome(not witnesses, witnesses, details,
                   artifact=tensor_str(L, defect) if rank == 2 else None)


def _orbit(config, sampler):
    result = rmatrix_bracket_orbit_check(sl(2))
    return Outcome(result['jacobi_in_ideal'] and result['casimir_in_ideal'],
                   result['witnesses'], {'invariant': result['invariant']},
                   artifact=result)


def _orbit_control(config, sampler):
    L = sl(2)
    generators = GeneratorSet(L.basis)
    product = cpoly_gen(generators, L.params, 'e_1^2') \
        * cpoly_gen(generators, L.params, 'e_2^1')
    result = rmatrix_bracket_orbit_check(L, product)
    witnesses = [] if not result['casimir_in_ideal'] \
        else ['{C, x}_R lies in the ideal of %s' % result['invariant']]
    return Outcome(not witnesses, witnesses,
                   {'invariant': result['invariant']})


def cybe_checks(config):
    return [('defect_sl2', functools.partial(_cybe, 2)),
            ('defect_sl3', functools.partial(_cybe, 3)),
            ('orbit', _orbit),
            ('orbit_control', _orbit_control)]


# -----------------------------------------------------------------------
# qybe
# -----------------------------------------------------------------------

def _qybe(config, sampler, cross=None):
    S = hecke_s(config.n, cross=cross)
    return _at_points(config, sampler, ('q',),
                      lambda point: qybe_witness(S, point))


def _hecke(config, sampler):
    S = hecke_s(config.n)
    return _at_points(config, sampler, ('q',),
                      lambda point: None if check_hecke(S, point=point)
                      else '(S - q)(S + q^-1) != 0')


def _s_w_qybe(config, sampler):
    S = s_w(hecke_s(config.n))
    if config.symbolic:
        return _at_points(config, sampler, ('q',),
                          lambda point: qybe_witness(S))
    return _at_points(config, sampler, ('q',),
                      lambda point: qybe_witness(S, point, sampler))


def _s_w_eigenvalues(config, sampler):
    S = s_w(hecke_s(config.n))

    def test(point):
        q = S.q if point is None else point['q']
        one = S.domain.one if point is None else 1
        missing = ['%s' % name
                   for name, value in (('1', one), ('-q^2', -q ** 2),
                                       ('-q^-2', -one / q ** 2))
                   if not has_eigenvalue(S, value, point)]
        return 'no eigenvalue %s' % ', '.join(missing) if missing else None

    return _at_points(config, sampler, ('q',), test)


def _qybe_control(config, sampler):
    params = ParamSet(('q',))
    q = params['q']
    outcome = _qybe(config, sampler, cross=2 * (q - params.one / q))
    return Outcome(not outcome.passed,
                   [] if not outcome.passed
                   else ['doubled cross term satisfies QYBE'],
                   {'violations': outcome.witnesses}, mode=outcome.mode)


def _deleted_cross_control(config, sampler):
    params = ParamSet(('q',))
    S = hecke_s(config.n, params, cross=0)
    qybe = _at_points(config, sampler, ('q',),
                      lambda point: qybe_witness(S, point))
    hecke = _at_points(config, sampler, ('q',),
                       lambda point: None if check_hecke(S, point=point)
                       else 'Hecke fails')
    witnesses = list(qybe.witnesses)
    if hecke.passed:
        witnesses.append('deleted cross term satisfies the Hecke relation')
    return Outcome(not witnesses, witnesses, mode=config.mode)


def qybe_checks(config):
    return [('hecke_s_qybe', _qybe),
            ('hecke_s_hecke', _hecke),
            ('s_w_qybe', _s_w_qybe),
            ('s_w_eigenvalues', _s_w_eigenvalues),
            ('control_doubled_cross', _qybe_control),
            ('control_deleted_cross', _deleted_cross_control)]


# -----------------------------------------------------------------------
# spans
# -----------------------------------------------------------------------

def _iq_spans(config, sampler):
    n = config.n
    expected = (n * n * (n * n - 1) // 2, n * n * (n * n + 1) // 2)
    dims = {}

    def test(point):
        spans = iq_spans(n, point)
        dims[point_str(point or {})] = list(spans.dims)
        witnesses = []
        if spans.dims != expected:
            witnesses.append('dimensions %s, expected %s'
                             % (spans.dims, expected))
        if not spans.minus_matches:
            witnesses.append('Im(S_W - id) differs from the listed I_-^q')
        if not spans.plus_matches:
            witnesses.append('Ker(S_W - id) differs from the listed I_+^q')
        if not spans.is_direct_sum:
            witnesses.append('I_-^q + I_+^q is not all of W (x) W')
        return '; '.join(witnesses) or None

    outcome = _at_points(config, sampler, ('q',), test)
    outcome.details['dims'] = dims
    return outcome


def _h_zero(config, sampler):
    reduced = j_hq_family(config.n).substitute_params({'h': 0},
                                                      ParamSet(('q',)))
    minus = i_minus_family(config.n)
    return _at_points(config, sampler, ('q',),
                      lambda point: None
                      if same_relation_span(reduced, minus, point)
                      else 'j_hq at h=0 differs from i_minus')


def _shift(config, sampler):
    n = config.n
    shifted = shift_family(i_minus_family(n), delta_shift(n), 'h/(q-1)')
    target = j_hq_family(n)
    return _at_points(config, sampler, ('q', 'h'),
                      lambda point: None
                      if same_relation_span(shifted, target, point)
                      else 'shifted i_minus differs from j_hq')


def _i_plus(config, sampler):
    n = config.n
    top = 3 if n == 2 else 2
    result = hilbert(QuotientPresentation(i_plus_family(n), top),
                     config.mode, sampler, config.samples)
    expected = [comb(n * n, d) for d in range(top + 1)]
    witnesses = [] if result.dims == expected \
        else ['dimensions %s, expected %s' % (result.dims, expected)]
    return Outcome(not witnesses, witnesses, {'dims': result.dims},
                   artifact=result.as_dict(), mode=result.mode)


def _elliptic_limit(config, sampler):
    results = elliptic_classical_limit_check()
    witnesses = [text for text, verdict in results if not verdict]
    return Outcome(not witnesses, witnesses, {'relations': len(results)})


def spans_checks(config):
    return [('iq_spans', _iq_spans),
            ('j_hq_at_h0', _h_zero),
            ('shift_i_minus', _shift),
            ('i_plus_hilbert', _i_plus),
            ('elliptic_classical_limit', _elliptic_limit)]


# -----------------------------------------------------------------------
# flatness
# -----------------------------------------------------------------------

def _a0q(config, sampler):
    n, D = config.n, config.degree
    verdict = flatness_verdict(QuotientPresentation(i_minus_family(n), D),
                               free_commutative_dims(n * n, D), config.mode,
                               sampler, config.samples)
    return _flatness_outcome(verdict)


def _ahq(config, sampler):
    n, D = config.n, config.degree
    verdict = flatness_verdict(QuotientPresentation(j_hq_family(n), D),
                               free_commutative_dims(n * n, D,
                                                     cumulative=True),
                               config.mode, sampler, config.samples)
    return _flatness_outcome(verdict)


def _perturbed_row(config, sampler):
    n = config.n
    D = max(config.degree, 3)
    params = ParamSet(('q',))
    perturbed = i_minus_family(n, params, row_q=params['q'] ** 2)
    verdict = flatness_verdict(QuotientPresentation(perturbed, D),
                               free_commutative_dims(n * n, D), config.mode,
                               sampler, config.samples,
                               reference_family=i_minus_family(n, params))
    outcome = _flatness_outcome(verdict, expect_flat=False)
    if verdict.witness is not None:
        outcome.details['witness'] = verdict.witness
    return outcome


def _reflection_equation(config, sampler):
    n = config.n
    D = min(config.degree, 3)
    verdict = flatness_verdict(QuotientPresentation(re_family(hecke_s(n)), D),
                               free_commutative_dims(n * n, D),
                               'probabilistic', sampler, config.samples)
    return _flatness_outcome(verdict)


def _classical_families(config):
    """(family, values at q=1 and h=0) for the quantum families."""
    params = _braided_params()
    classical = q_lie_bracket(params, params.one)
    first_type = first_type_ideal(classical, degree=config.degree).family
    return [(i_minus_family(config.n), {'q': 1}),
            (j_hq_family(config.n), {'q': 1, 'h': 0}),
            (first_type, {'q': 1, 'M': 1, 'h': 0, 'c0': 2})]


def _classical_point(config, sampler):
    found, witnesses = {}, []
    for family, values in _classical_families(config):
        dims, oracle = classical_point_dims(family, config.degree, values)
        found[family.name] = {'hilbert': dims, 'commutative': oracle}
        if dims != oracle:
            witnesses.append('%s at %s: dimensions %s, commutative '
                             'elimination gives %s'
                             % (family.name, point_str(values), dims, oracle))
    return Outcome(not witnesses, witnesses, artifact=found)


def _relations_file(family, config, sampler):
    D = config.degree
    reference = free_commutative_dims(len(family.generators), D,
                                      cumulative=family.kind == 'filtered')
    verdict = flatness_verdict(QuotientPresentation(family, D), reference,
                               config.mode, sampler, config.samples)
    return _flatness_outcome(verdict)


def flatness_checks(config, family=None):
    checks = [('a0q', _a0q),
              ('ahq', _ahq),
              ('control_perturbed_row', _perturbed_row),
              ('reflection_equation', _reflection_equation),
              ('classical_point', _classical_point)]
    if family is not None:
        checks.append(('relations_file',
                       functools.partial(_relations_file, family)))
    return checks


# -----------------------------------------------------------------------
# pbw-nu
# -----------------------------------------------------------------------

def _braided_params():
    return ParamSet(BRAIDED_PARAMS)


def _nu_outcome(verdict, identically):
    passed = verdict.identically if identically else verdict.consistent
    witnesses = [] if passed else verdict.as_dict()['constraints']
    return Outcome(passed, witnesses,
                   {'overlap_dim': verdict.overlap_dim,
                    'identically_satisfied': verdict.identically},
                   artifact=verdict.as_dict())


def _nu_zero(config, sampler):
    return _nu_outcome(pbw_nu_check(sl2_nu_data(zero=True)), True)


def _nu_classical(config, sampler):
    params = _braided_params()
    bracket = q_lie_bracket(params, params.one)
    return _nu_outcome(pbw_nu_check(sl2_nu_data(bracket)), True)


def _nu_quantum(config, sampler):
    return _nu_outcome(pbw_nu_check(sl2_nu_data(q_lie_bracket())), False)


def _first_type(config, sampler):
    D = config.degree
    verdict = flatness_verdict(first_type_ideal(q_lie_bracket(), degree=D),
                               [(d + 1) ** 2 for d in range(D + 1)],
                               config.mode, sampler, config.samples)
    return _flatness_outcome(verdict)


def _u_hq(config, sampler):
    D = config.degree
    Q = QuotientPresentation(u_hq_family(q_lie_bracket()), D)
    verdict = flatness_verdict(Q, free_commutative_dims(3, D, cumulative=True),
                               config.mode, sampler, config.samples)
    return _flatness_outcome(verdict)


def pbw_nu_checks(config):
    return [('nu_zero', _nu_zero),
            ('nu_classical', _nu_classical),
            ('nu_quantum', _nu_quantum),
            ('first_type_flatness', _first_type),
            ('u_hq_flatness', _u_hq)]


# -----------------------------------------------------------------------
# braided
# -----------------------------------------------------------------------

def _table_mismatches(bracket, printed):
    zero = bracket.params.zero
    names = bracket.generators.names
    mismatches = []
    for pair in sorted(printed):
        computed, expected = bracket.table.get(pair, {}), printed[pair]
        if any(not scalar_eq(computed.get(g, zero), expected.get(g, zero))
               for g in set(computed) | set(expected)):
            mismatches.append('[%s,%s]' % (names[pair[0]], names[pair[1]]))
    return mismatches


def _q_lie_table(config, sampler):
    bracket = q_lie_bracket()
    mismatches = _table_mismatches(bracket, printed_table(bracket.params,
                                                          bracket.q,
                                                          bracket.M))
    return Outcome(not mismatches, mismatches, artifact=bracket.as_dict())


def _classical_table(config, sampler):
    params = _braided_params()
    bracket = q_lie_bracket(params, params.one)
    mismatches = _table_mismatches(bracket, printed_table(params, params.one,
                                                          params['M']))
    return Outcome(not mismatches, mismatches, artifact=bracket.as_dict())


def _end_decomposition(config, sampler):
    found, witnesses = {}, []
    for k in range(config.kmax + 1):
        decomposition = decompose_end(irrep(k))
        found['irrep(%d)' % k] = [list(x) for x in decomposition]
        if decomposition != [(2 * j, 1) for j in range(k, -1, -1)]:
            witnesses.append('End(irrep(%d)) = %s' % (k, decomposition))
    return Outcome(not witnesses, witnesses, artifact=found)


def _c0_table(config, sampler):
    rows = c0_table(config.kmax)
    witnesses = ['k=%d: c0 at q=1 is %s' % (row['k'], row['c0_q1'])
                 for row in rows if not row['classical_match']]
    witnesses.extend('k=%d: nu vanishes' % row['k']
                     for row in rows if row['k'] > 0 and row['nu'] is None)
    return Outcome(not witnesses, witnesses, artifact=rows)


def _c0_fundamental(config, sampler):
    params = _braided_params()
    q, M = params['q'], params['M']
    structure = braided_structure(irrep(1, params))
    witnesses = []
    expected = M ** 2 * (q ** 4 + q ** 2 + 1) / 2
    if not scalar_eq(structure.c0, expected):
        witnesses.append('c0 = %s, expected %s' % (scalar_str(structure.c0),
                                                   scalar_str(expected)))
    if not scalar_eq(structure.almost.nu, params.one / (q * M)):
        witnesses.append('nu = %s, expected 1/(q*M)'
                         % scalar_str(structure.almost.nu))
    trivial = braided_structure(irrep(0, params))
    if trivial.c0:
        witnesses.append('c0 on irrep(0) is %s' % scalar_str(trivial.c0))
    return Outcome(not witnesses, witnesses, artifact=structure.as_dict())


def _casimir(config, sampler):
    params = _braided_params()
    q, one = params['q'], params.one
    s = q + one / q
    half = one / 2
    expected = {
        'quantum': (q_lie_bracket(params),
                    {(0, 2): -s / (2 * q ** 2), (1, 1): half, (2, 0): -s / 2}),
        'classical': (q_lie_bracket(params, one),
                      {(0, 2): -one, (1, 1): half, (2, 0): -one})}
    witnesses = []
    for name, (bracket, vector) in sorted(expected.items()):
        casimir = braided_casimir(bracket)
        for word in sorted(set(casimir) | set(vector)):
            if not scalar_eq(casimir.get(word, params.zero),
                             vector.get(word, params.zero)):
                witnesses.append('%s C_q at v_%d (x) v_%d' % ((name,) + word))
    return Outcome(not witnesses, witnesses)


def _quantum_trace(config, sampler):
    params = _braided_params()
    q = params['q']
    witnesses = []
    U = irrep(1, params)
    value = quantum_trace(U, U.identity())
    if not scalar_eq(value, q + params.one / q):
        witnesses.append('qtr(id) on irrep(1) is %s' % scalar_str(value))
    for k in (1, 2):
        U = irrep(k, params)
        M = U.end_matrix(sampler.rng.integers(-3, 4, size=(U.dim, U.dim))
                         .tolist())
        witnesses.extend('qtr not invariant under %s on irrep(%d)' % (a, k)
                         for a in quantum_trace_invariance(U, M))
    return Outcome(not witnesses, witnesses)


def _end_product(config, sampler):
    witnesses = []
    for k in (1, 2):
        witnesses.extend('%s on irrep(%d)' % (a, k)
                         for a in end_product_equivariance(irrep(k), sampler))
    return Outcome(not witnesses, witnesses)


def braided_checks(config):
    return [('q_lie_table', _q_lie_table),
            ('classical_table', _classical_table),
            ('end_decomposition', _end_decomposition),
            ('c0_table', _c0_table),
            ('c0_fundamental', _c0_fundamental),
            ('casimir', _casimir),
            ('quantum_trace', _quantum_trace),
            ('end_product', _end_product)]


# -----------------------------------------------------------------------
# conjugations
# -----------------------------------------------------------------------

COMPATIBLE_SIGNS = ((1, -1, 1), (-1, -1, -1))


def _compatible(bracket):
    return [Conjugation.diagonal(signs, bracket.params)
            for signs in COMPATIBLE_SIGNS]


def _conjugations(config, sampler):
    bracket = q_lie_bracket()
    witnesses = ['%s: %s' % (T.name, ', '.join(bad))
                 for T in _compatible(bracket)
                 for bad in [conjugation_violations(T, bracket)] if bad]
    return Outcome(not witnesses, witnesses)


def _identity_control(config, sampler):
    bracket = q_lie_bracket()
    T = Conjugation.diagonal((1, 1, 1), bracket.params)
    violations = conjugation_violations(T, bracket)
    return Outcome(bool(violations),
                   [] if violations else ['identity is compatible'],
                   {'violations': violations})


def _diagonal_scan(config, sampler):
    found = [T.name for T in classify_diagonal_conjugations()]
    expected = [T.name for T in _compatible(q_lie_bracket())]
    witnesses = [] if found == expected \
        else ['found %s, expected %s' % (found, expected)]
    return Outcome(not witnesses, witnesses, artifact=found)


def _scan_points(config, sampler):
    point = {'q': 2, 'M': 1}
    point.update({k: v for k, v in config.fixed.items() if k in point})
    points = [point]
    if not config.symbolic:
        points.extend(sampler.points(('q', 'M'), config.samples))
    return points


def _general_scan(config, sampler):
    bracket = q_lie_bracket()
    results = [general_conjugation_scan(bracket, point)
               for point in progress(_scan_points(config, sampler),
                                     desc='conjugation scans')]
    witnesses = []
    for result in results:
        if result['empty']:
            witnesses.append('%s: no conjugation at all' % result['point'])
        witnesses.extend('%s: %s is not a solution' % (result['point'], name)
                         for name, ok in sorted(result['known_points'].items())
                         if not ok)
    return Outcome(not witnesses, witnesses, artifact=results,
                   mode=config.mode)


def _classical_scan(config, sampler):
    params = _braided_params()
    result = general_conjugation_scan(q_lie_bracket(params, params.one),
                                      {'q': 1, 'M': 1})
    witnesses = ['%s is not a solution' % name
                 for name, ok in sorted(result['known_points'].items())
                 if not ok]
    return Outcome(not witnesses, witnesses,
                   {'zero_dimensional': result['zero_dimensional']},
                   artifact=result)


def _odd_subalgebra(config, sampler):
    bracket = q_lie_bracket()
    witnesses = [T.name for T in _compatible(bracket)
                 if not odd_subalgebra_check(T, bracket, sampler)]
    return Outcome(not witnesses, witnesses)


def _even_closure(config, sampler):
    bracket = q_lie_bracket()
    zero, one = bracket.params.zero, bracket.params.one
    witnesses = [T.name for T in _compatible(bracket)
                 if not even_closure_check(T, bracket, sampler)]
    u = ([one, zero, zero], [zero, zero, zero])
    w = ([zero, zero, one], [zero, zero, zero])
    T = Conjugation.diagonal(COMPATIBLE_SIGNS[0], bracket.params)
    if not even_closure_check(T, bracket, pairs=[(u, w)]):
        witnesses.append('%s: i[u,w]_q is not even' % T.name)
    return Outcome(not witnesses, witnesses)


def conjugations_checks(config):
    return [('compatible', _conjugations),
            ('control_identity', _identity_control),
            ('diagonal_scan', _diagonal_scan),
            ('general_scan', _general_scan),
            ('classical_scan', _classical_scan),
            ('odd_subalgebra', _odd_subalgebra),
            ('even_closure', _even_closure)]


# -----------------------------------------------------------------------
# Runner
# -----------------------------------------------------------------------

def suite_checks(config, family=None):
    """Ordered list of (check name, function) of config.suite."""
    builders = {'poisson-pencil': poisson_pencil_checks,
                'cybe': cybe_checks,
                'qybe': qybe_checks,
                'spans': spans_checks,
                'flatness': functools.partial(flatness_checks,
                                              family=family),
                'pbw-nu': pbw_nu_checks,
                'braided': braided_checks,
                'conjugations': conjugations_checks}
    names = SUITES if config.suite == 'all' else (config.suite,)
    return [('%s/%s' % (suite, name), function)
            for suite in names
            for name, function in builders[suite](config)]


def run_check(name, function, config):
    """
    Run one check. Library errors become an ERROR verdict with the
    message as witness; anything else propagates.

    :return: (Check, artifact or None)
    """
    timer = peterpy.peter(name, quiet=True)
    try:
        with timer:
            outcome = function(config, config.sampler(name))
    except QuantumPencilsError as e:
        log.error('%s: %s', name, e)
        return Check(name, ERROR, config.mode, [str(e)],
                     elapsed=timer.elapsed), None
    return Check(name, PASS if outcome.passed else FAIL, outcome.mode,
                 outcome.witnesses, outcome.details,
                 timer.elapsed), outcome.artifact


def run_suite(config):
    """
    Execute every check of config.suite on config.nThreads threads.

    :return: Report dict (see report.build_report).
    """
    family = None
    if config.relations and config.suite in ('flatness', 'all'):
        family = load_family(config.relations)
    checks = suite_checks(config, family)
    log.info('suite %s: %s checks on %s thread(s)', config.suite,
             humanize(len(checks)), config.nThreads)

    with ThreadPoolExecutor(max_workers=config.nThreads) as executor:
        futures = {name: executor.submit(run_check, name, function, config)
                   for name, function in checks}
        results = {name: future.result()
                   for name, future in progress(futures.items(),
                                                desc=config.suite,
                                                total=len(futures))}

    judge = Judge(config.suite)
    artifacts, timings = {}, {}
    for name in sorted(results):
        check, artifact = results[name]
        judge.feed(check)
        timings[name] = check.elapsed
        if artifact is not None:
            artifacts[name] = artifact
    return build_report(judge, config.as_dict(), artifacts, timings)
