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

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .algebra import (GeneratorSet, NCPoly, RelationFamily, cpoly_from_ncpoly,
                      matrix_generators, word_key)
from .linalg import (fraction_free_rank, operator_image, operator_kernel, span,
                     subspace_ops, ideal_truncation)
from .poisson import bracket_eval, elliptic
from .scalar import ParamSet, scalar_specialize
from .utils import ShapeError, SpecializationError, progress

log = logging.getLogger(__name__)


class YBOperator():
    """
    Linear operator on X(x)X for a space X with basis 0..dim-1, stored
    as images of basis pairs: S(x_i (x) x_j) = sum S_ij^kl x_k (x) x_l.
    """

    def __init__(self, name, dim, domain, images, params=None, q=None):
        """
        :param dim: Dimension of the tensor factor X.
        :param domain: sympy domain of the entries (Q(params) or QQ).
        :param images: dict (i, j) -> dict (k, l) -> entry.
        :param params: ParamSet when the entries are symbolic, else None.
        :param q: Value of the parameter q in `domain`, if any.
        """
        self.name = name
        self.dim = dim
        self.domain = domain
        self.params = params
        self.q = q
        self.images = {}
        for pair, image in images.items():
            for i in pair:
                if not 0 <= i < dim:
                    raise ShapeError('basis index %s out of range for '
                                     'dimension %d' % (i, dim))
            image = {kl: c for kl, c in image.items() if c}
            if image:
                self.images[pair] = image

    def __repr__(self):
        return 'YBOperator(%s, dim=%d)' % (self.name, self.dim)

    def pairs(self):
        return list(itertools.product(range(self.dim), repeat=2))

    def image(self, i, j):
        return self.images.get((i, j), {})

    def apply(self, vector, slot=0):
        """
        Apply to a vector of X^(x)m given as a dict word -> entry,
        acting on tensor positions (slot, slot+1).
        """
        zero = self.domain.zero
        out = {}
        for word, c in vector.items():
            if slot + 1 >= len(word):
                raise ShapeError('cannot act on positions %d, %d of a word '
                                 'of length %d' % (slot, slot + 1, len(word)))
            head, tail = word[:slot], word[slot + 2:]
            for (k, l), s in self.image(word[slot], word[slot + 1]).items():
                key = head + (k, l) + tail
                out[key] = out.get(key, zero) + s * c
        return {k: v for k, v in out.items() if v}

    def shifted(self, value, name=None):
        """S - value*id."""
        value = self.domain.convert(value) if not self.params \
            else self.params.scalar(value)
        images = {}
        for pair in self.pairs():
            image = dict(self.image(*pair))
            image[pair] = image.get(pair, self.domain.zero) - value
            images[pair] = image
        return YBOperator(name or '%s-(%s)' % (self.name, value), self.dim,
                          self.domain, images, self.params, self.q)

    def to_matrix(self):
        """DomainMatrix with entry [row (k,l), column (i,j)] = S_ij^kl."""
        dok = {}
        for (i, j), image in self.images.items():
            for (k, l), c in image.items():
                dok[(k * self.dim + l, i * self.dim + j)] = c
        size = self.dim ** 2
        return DomainMatrix.from_dok(dok, (size, size), self.domain)

    def inverse(self):
        try:
            inverse = self.to_matrix().to_field().inv()
        except DMNonInvertibleMatrixError:
            raise SpecializationError('%s is not invertible' % self.name)
        images = {}
        for (row, col), c in inverse.to_dok().items():
            pair = divmod(col, self.dim)
            images.setdefault(pair, {})[divmod(row, self.dim)] = c
        return YBOperator(self.name + '^-1', self.dim, self.domain, images,
                          self.params, self.q)

    def specialize(self, point):
        """Entries evaluated at a rational point; the result lives over QQ."""
        if self.params is None:
            return self
        images = {pair: {kl: scalar_specialize(c, point)
                         for kl, c in image.items()}
                  for pair, image in self.images.items()}
        q = scalar_specialize(self.q, point) if self.q is not None else None
        return YBOperator('%s@%s' % (self.name, ','.join(
            '%s=%s' % (k, point[k]) for k in sorted(point))),
            self.dim, QQ, images, None, q)

    def is_flip(self):
        return all(self.image(i, j) == {(j, i): self.domain.one}
                   for i, j in self.pairs())


def _default_params(params):
    return params if params is not None else ParamSet(('q',))


def hecke_s(n, params=None, cross=None):
    """
    S(a_i (x) a_j) = (q-1) d_ij a_i (x) a_j + a_j (x) a_i
                     + [i<j] (q - q^-1) a_i (x) a_j.

    :param cross: Replaces the coefficient q - q^-1 of the i<j term.
    """
    if n < 1:
        raise ValueError('dimension must be strictly positive, got %s' % n)
    params = _default_params(params)
    q = params['q']
    cross = q - params.one / q if cross is None else params.scalar(cross)
    images = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                images[(i, j)] = {(i, i): q}
            elif i < j:
                images[(i, j)] = {(j, i): params.one, (i, j): cross}
            else:
                images[(i, j)] = {(j, i): params.one}
    return YBOperator('S(%d)' % n, n, params.domain, images, params, q)


def flip(n, params=None):
    params = _default_params(params)
    images = {(i, j): {(j, i): params.one}
              for i in range(n) for j in range(n)}
    q = params['q'] if 'q' in params else None
    return YBOperator('flip(%d)' % n, n, params.domain, images, params, q)


def _random_vector(S, rng, length=3):
    vector = {}
    for word in itertools.product(range(S.dim), repeat=length):
        value = int(rng.integers(-9, 10))
        if value:
            vector[word] = S.domain.convert(value)
    return vector


def qybe_witness(S, point=None, sampler=None, vectors=3):
    """
    First violation of S12 S23 S12 = S23 S12 S23, or None.

    Exact on every basis triple, unless `sampler` is given: then both
    sides are compared on `vectors` random integer vectors (after
    specializing at `point`).
    """
    if point is not None:
        S = S.specialize(point)
    if sampler is not None:
        tests = [_random_vector(S, sampler.rng) for _ in range(vectors)]
    else:
        tests = [{word: S.domain.one}
                 for word in itertools.product(range(S.dim), repeat=3)]
    for vector in progress(tests, desc='QYBE %s' % S.name):
        lhs = S.apply(S.apply(S.apply(vector, 0), 1), 0)
        rhs = S.apply(S.apply(S.apply(vector, 1), 0), 1)
        for word in set(lhs) | set(rhs):
            left = lhs.get(word, S.domain.zero)
            right = rhs.get(word, S.domain.zero)
            if left != right:
                source = next(iter(vector)) if len(vector) == 1 else 'random'
                return '%s -> %s: %s != %s' % (source, word, left, right)
    return None


def check_qybe(S, point=None, sampler=None):
    return qybe_witness(S, point, sampler) is None


def check_hecke(S, eigenvalues=None, point=None):
    """
    True iff (S - a)(S - b) = 0, with (a, b) = (q, -q^-1) by default.
    """
    if point is not None:
        S = S.specialize(point)
    if eigenvalues is None:
        if S.q is None:
            raise ShapeError('%s carries no parameter q; give the '
                             'eigenvalues explicitly' % S.name)
        eigenvalues = (S.q, -S.domain.one / S.q)
    a, b = eigenvalues
    first = S.shifted(a)
    second = S.shifted(b)
    for pair in S.pairs():
        if second.apply(first.apply({pair: S.domain.one})):
            log.debug('Hecke relation fails for %s on %s', S.name, pair)
            return False
    return True


def s_w(S):
    """
    S_W = S (x) (S*)^-1 on W (x) W, W = V (x) V*, a_i^k = a_i (x) a^k:
    S_W(a_i^k (x) a_j^l) = S_ij^mn (S^-1)_pq^kl a_m^p (x) a_n^q.
    W basis index of a_i^k is i*n + k.
    """
    n = S.dim
    inverse = S.inverse()
    # (k, l) -> [((p, q), (S^-1)_pq^kl)]
    reverse = {}
    for pq, image in inverse.images.items():
        for kl, c in image.items():
            reverse.setdefault(kl, []).append((pq, c))
    zero = S.domain.zero
    images = {}
    for i, k, j, l in itertools.product(range(n), repeat=4):
        out = {}
        for (m, nn), s in S.image(i, j).items():
            for (p, q), t in reverse.get((k, l), ()):
                key = (m * n + p, nn * n + q)
                out[key] = out.get(key, zero) + s * t
        images[(i * n + k, j * n + l)] = out
    return YBOperator('S_W(%s)' % S.name, n * n, S.domain, images, S.params,
                      S.q)


def has_eigenvalue(S, value, point=None):
    """Fraction-free rank test: S - value*id has a nonzero kernel."""
    if point is not None:
        S = S.specialize(point)
    shifted = S.shifted(value)
    size = S.dim ** 2
    rows = [dict() for _ in range(size)]
    for (row, col), c in shifted.to_matrix().to_dok().items():
        rows[row][col] = c
    rank = fraction_free_rank(rows, size, S.params)
    log.debug('rank of %s - %s: %d of %d', S.name, value, rank, size)
    return rank < size


# -----------------------------------------------------------------------
# I_-^q and I_+^q
# -----------------------------------------------------------------------

class IqSpans():
    """Computed and listed I_-^q, I_+^q for one n (and optional point)."""

    def __init__(self, n, minus, plus, listed_minus, listed_plus, point=None):
        self.n = n
        self.minus = minus
        self.plus = plus
        self.listed_minus = listed_minus
        self.listed_plus = listed_plus
        self.point = point

    @property
    def dims(self):
        return (self.minus.dim, self.plus.dim)

    @property
    def minus_matches(self):
        return subspace_ops(self.minus, self.listed_minus, 'equals')

    @property
    def plus_matches(self):
        return subspace_ops(self.plus, self.listed_plus, 'equals')

    @property
    def is_direct_sum(self):
        total = subspace_ops(self.minus, self.plus, 'sum')
        return total.dim == self.n ** 4 and \
            self.minus.dim + self.plus.dim == self.n ** 4


def iq_spans(n, point=None, params=None):
    """
    Im(S_W - id) and Ker(S_W - id) for S = hecke_s(n), next to the spans
    of the listed families. With `point` everything is specialized.
    """
    params = _default_params(params)
    S = s_w(hecke_s(n, params))
    generators = matrix_generators(n)
    ambient = (generators, 2)
    if point is not None:
        S = S.specialize(point)
    shifted = S.shifted(1)
    images = {pair: shifted.image(*pair) for pair in shifted.pairs()}
    minus = operator_image(images, S.domain, word_key, ambient)
    plus = operator_kernel(images, S.domain, word_key, ambient)
    listed = []
    for family in (i_minus_family(n, params), i_plus_family(n, params)):
        if point is None:
            listed.append(span(family.relations))
        else:
            listed.append(span([r.specialize(point)
                                for r in family.relations],
                               domain=QQ, ambient=ambient))
    log.info('I_-^q, I_+^q for n=%d: dimensions %d, %d',
             n, minus.dim, plus.dim)
    return IqSpans(n, minus, plus, listed[0], listed[1], point)


# -----------------------------------------------------------------------
# Relation families
# -----------------------------------------------------------------------

def _mat_word(generators, params, pairs, coeff=None):
    word = tuple(generators.index('a_%d^%d' % pair) for pair in pairs)
    return NCPoly.word(generators, params, word, coeff)


def _index_cases(n):
    """
    ('row', k, i, j) and ('col', k, i, j) with i < j, and
    ('cross', i, k, j, l) with i < k, j < l; indices 1-based.
    """
    cases = []
    for k in range(1, n + 1):
        for i, j in itertools.combinations(range(1, n + 1), 2):
            cases.append(('row', k, i, j))
            cases.append(('col', k, i, j))
    for i, k in itertools.combinations(range(1, n + 1), 2):
        for j, l in itertools.combinations(range(1, n + 1), 2):
            cases.append(('cross', i, k, j, l))
    return cases


def _quantum_family(n, params, name, kind, build):
    generators = matrix_generators(n)

    def word(*pairs, coeff=None):
        return _mat_word(generators, params, pairs, coeff)

    relations = []
    for case in _index_cases(n):
        relations.extend(build(case, word))
    return RelationFamily(name, generators, params, relations, kind)


def i_minus_family(n, params=None, row_q=None):
    """
    The listed generators of I_-^q.

    :param row_q: Replaces q in the row relations (a perturbation handle).
    """
    params = _default_params(params)
    q = params['q']
    lam = q - params.one / q
    row_q = q if row_q is None else params.scalar(row_q)

    def build(case, word):
        if case[0] == 'row':
            _, k, i, j = case
            return [word((k, i), (k, j)) - word((k, j), (k, i), coeff=row_q)]
        if case[0] == 'col':
            _, k, i, j = case
            return [word((i, k), (j, k)) - word((j, k), (i, k), coeff=q)]
        _, i, k, j, l = case
        return [word((i, l), (k, j)) - word((k, j), (i, l)),
                word((i, j), (k, l)) - word((k, l), (i, j))
                - word((k, j), (i, l), coeff=lam)]

    return _quantum_family(n, params, 'i_minus(%d)' % n, 'graded', build)


def i_plus_family(n, params=None):
    """The listed generators of I_+^q."""
    params = _default_params(params)
    q = params['q']
    lam = q - params.one / q
    generators = matrix_generators(n)
    squares = [NCPoly.word(generators, params, (g, g))
               for g in range(len(generators))]

    def build(case, word):
        if case[0] == 'row':
            _, k, i, j = case
            return [word((k, i), (k, j), coeff=q) + word((k, j), (k, i))]
        if case[0] == 'col':
            _, k, i, j = case
            return [word((i, k), (j, k), coeff=q) + word((j, k), (i, k))]
        _, i, k, j, l = case
        return [word((i, j), (k, l)) + word((k, l), (i, j)),
                word((i, l), (k, j)) + word((k, j), (i, l))
                + word((i, j), (k, l), coeff=lam)]

    family = _quantum_family(n, params, 'i_plus(%d)' % n, 'graded', build)
    family.relations = squares + family.relations
    return family


def j_hq_family(n, params=None):
    """
    J_{h,q} with the substitution h(q-1) -> h already made,
    m = 1 + q^-1.
    """
    params = params if params is not None else ParamSet(('q', 'h'))
    q, h = params['q'], params['h']
    lam = q - params.one / q
    m = params.one + params.one / q
    generators = matrix_generators(n)

    def gen(i, j):
        return NCPoly.word(generators, params,
                           (generators.index('a_%d^%d' % (i, j)),))

    def tail(d1, a1, a2, d2):
        # h (d1 * a1 + a2 * d2) with Kronecker symbols d1, d2
        out = NCPoly(generators, params)
        if d1:
            out = out + gen(*a1)
        if d2:
            out = out + gen(*a2)
        return out

    def build(case, word):
        if case[0] == 'row':
            _, k, i, j = case
            return [word((k, i), (k, j)) - word((k, j), (k, i), coeff=q)
                    - tail(k == i, (k, j), (k, i), k == j).scale(h)]
        if case[0] == 'col':
            _, k, i, j = case
            return [word((i, k), (j, k)) - word((j, k), (i, k), coeff=q)
                    - tail(i == k, (j, k), (i, k), j == k).scale(h)]
        _, i, k, j, l = case
        return [word((i, l), (k, j)) - word((k, j), (i, l)),
                word((i, j), (k, l)) - word((k, l), (i, j))
                - word((k, j), (i, l), coeff=lam)
                - tail(i == l, (k, j), (i, l), k == j).scale(h * m)]

    return _quantum_family(n, params, 'j_hq(%d)' % n, 'filtered', build)


ELLIPTIC_QUANTUM_PARAMS = ('J12', 'J23', 'J31', 'i')
_CYCLIC = ((1, 2, 3), (2, 3, 1), (3, 1, 2))


def _j_name(b, c):
    return {frozenset((1, 2)): 'J12', frozenset((2, 3)): 'J23',
            frozenset((3, 1)): 'J31'}[frozenset((b, c))]


def elliptic_quantum_family(params=None):
    """
    S_a S_0 - S_0 S_a + i J_bc (S_b S_c + S_c S_b),
    S_a S_b - S_b S_a - i (S_0 S_c + S_c S_0), cyclic in (1, 2, 3).
    """
    params = params if params is not None \
        else ParamSet(ELLIPTIC_QUANTUM_PARAMS)
    generators = GeneratorSet(['S_0', 'S_1', 'S_2', 'S_3'])
    i = params['i']

    def w(x, y, coeff=None):
        return NCPoly.word(generators, params, (x, y), coeff)

    relations = []
    for a, b, c in _CYCLIC:
        J = params[_j_name(b, c)]
        relations.append(w(a, 0) - w(0, a) + (w(b, c) + w(c, b)).scale(i * J))
        relations.append(w(a, b) - w(b, a) - (w(0, c) + w(c, 0)).scale(i))
    return RelationFamily('elliptic_quantum', generators, params, relations,
                          'graded')


def _matrix_product(A, B, zero):
    size = len(A)
    out = [[zero for _ in range(size)] for _ in range(size)]
    for r in range(size):
        for c in range(size):
            total = zero
            for t in range(size):
                if A[r][t] and B[t][c]:
                    total = total + A[r][t] * B[t][c]
            out[r][c] = total
    return out


def re_family(S):
    """
    Entries of S u_1 S u_1 - u_1 S u_1 S, u = (u_i^j), u_1 = u (x) 1;
    n^4 entries of an n^2 x n^2 matrix identity.
    """
    if S.params is None:
        raise ShapeError('the reflection equation needs a symbolic operator')
    n, params = S.dim, S.params
    generators = matrix_generators(n, letter='u')
    zero = NCPoly(generators, params)
    size = n * n

    def const(c):
        return NCPoly.constant(generators, params, c) if c else zero

    S_mat = [[zero] * size for _ in range(size)]
    for (row, col), c in S.to_matrix().to_dok().items():
        S_mat[row][col] = const(c)
    # u_1 on basis index a*n + b: (u (x) 1)[(a,b),(c,d)] = u_a^c d_bd
    u1 = [[zero] * size for _ in range(size)]
    for a, b, c in itertools.product(range(n), repeat=3):
        u1[a * n + b][c * n + b] = NCPoly.word(generators, params,
                                               (a * n + c,))
    left = _matrix_product(_matrix_product(_matrix_product(S_mat, u1, zero),
                                           S_mat, zero), u1, zero)
    right = _matrix_product(_matrix_product(_matrix_product(u1, S_mat, zero),
                                            u1, zero), S_mat, zero)
    relations = [left[r][c] - right[r][c]
                 for r in range(size) for c in range(size)]
    return RelationFamily('re(%s)' % S.name, generators, params, relations,
                          'graded')


def family(name, n=2, params=None):
    """Catalog lookup: i_minus, i_plus, j_hq, elliptic_quantum, re."""
    if name == 'i_minus':
        return i_minus_family(n, params)
    elif name == 'i_plus':
        return i_plus_family(n, params)
    elif name == 'j_hq':
        return j_hq_family(n, params)
    elif name == 'elliptic_quantum':
        return elliptic_quantum_family(params)
    elif name == 're':
        return re_family(hecke_s(n, params))
    else:
        raise ValueError('unknown relation family %r (known: i_minus, '
                         'i_plus, j_hq, elliptic_quantum, re)' % name)


def shift_family(F, trace_like, h, params=None):
    """
    Apply x -> x + h * c(x) to every relation; the result is filtered.

    :param trace_like: dict generator name -> scalar c(x) (missing: 0).
    :param h: Scalar or text over `params` (default: F's parameters
              with 'h' appended).
    """
    params = params or F.params.extend('h')
    lifted = F.substitute_params({}, params)
    h = params.scalar(h)
    images = {}
    for name, c in trace_like.items():
        c = params.scalar(c)
        if not c:
            continue
        index = F.generators.index(name)
        images[index] = NCPoly.word(F.generators, params, (index,)) \
            + NCPoly.constant(F.generators, params, h * c)
    relations = [r.substitute(images) for r in lifted.relations]
    return RelationFamily('shift(%s)' % F.name, F.generators, params,
                          relations, 'filtered')


def same_relation_span(F1, F2, point=None):
    """Equality of the degree <= 2 slices of the two ideals."""
    return subspace_ops(ideal_truncation(F1, 2, point),
                        ideal_truncation(F2, 2, point), 'equals')


def elliptic_classical_limit_check(F=None):
    """
    For each quantum elliptic relation r = sum A_xy (xy - yx) + s with s
    symmetric: the commutative image of s equals i * sum A_xy {x, y}.

    :return: list of (relation text, verdict).
    """
    F = F or elliptic_quantum_family()
    params = F.params
    T = elliptic(params)
    ring_gens = T.gens()
    results = []
    for r in F.relations:
        antisymmetric = {}
        symmetric = dict(r.terms)
        pairs = sorted({(min(w), max(w)) for w in r.terms if w[0] != w[1]})
        for x, y in pairs:
            a = (r.terms.get((x, y), params.zero)
                 - r.terms.get((y, x), params.zero)) / 2
            if a:
                antisymmetric[(x, y)] = a
                symmetric[(x, y)] = symmetric.get((x, y), params.zero) - a
                symmetric[(y, x)] = symmetric.get((y, x), params.zero) + a
        s = cpoly_from_ncpoly(NCPoly(F.generators, params, symmetric))
        expected = T.ring.zero
        for (x, y), a in antisymmetric.items():
            expected += bracket_eval(T, ring_gens[x], ring_gens[y]) \
                .mul_ground(a * params['i'])
        results.append((str(r), s == expected))
    return results
