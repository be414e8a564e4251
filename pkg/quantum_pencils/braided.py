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

from sympy import expand, groebner, solve, symbols
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .algebra import GeneratorSet, NCPoly, ncpoly_str
from .linalg import Subspace, kernel, operator_kernel
from .quotient import NuData
from .sampling import point_str
from .scalar import ParamSet, scalar_eq, scalar_specialize, scalar_str
from .utils import ConventionError, SpecializationError, humanize, progress

log = logging.getLogger(__name__)

# Parameters of the braided layer: deformation q, bracket scale M,
# filtration parameter h and Casimir value c0.
BRAIDED_PARAMS = ('q', 'M', 'h', 'c0')

UVW = GeneratorSet(('u', 'v', 'w'))

# Counit on the algebra generators
COUNIT = {'E': 0, 'F': 0, 'K': 1, 'Kinv': 1}


def _resolve(params, q):
    params = ParamSet(BRAIDED_PARAMS) if params is None else params
    q = params['q'] if q is None else params.scalar(q)
    return params, q


def q_integer(m, q, one):
    """[m] = q^(m-1) + q^(m-3) + ... + q^(1-m), [-m] = -[m]; [m] = m at q = 1."""
    if m < 0:
        return -q_integer(-m, q, one)
    total = one - one
    for t in range(m):
        total += q ** (m - 1 - 2 * t)
    return total


def _matrix(entries, size, domain):
    """Dense size x size DomainMatrix from a dict (row, col) -> element."""
    rows = [[entries.get((r, c), domain.zero) for c in range(size)]
            for r in range(size)]
    return DomainMatrix(rows, (size, size), domain)


def _is_zero(A):
    return not A.to_dok()


def _add(vector, key, value, zero):
    vector[key] = vector.get(key, zero) + value


def _clean(vector):
    return {k: v for k, v in vector.items() if v}


# -----------------------------------------------------------------------
# Weight-basis irreps of U_q(sl2)
# -----------------------------------------------------------------------

class WeightRep():
    """
    The (k+1)-dimensional irreducible U_q(sl2)-module in the weight basis
    v_0, ..., v_k (v_0 highest):

        K v_j = q^(k-2j) v_j,   E v_j = [k-j+1] v_(j-1),   F v_j = [j+1] v_(j+1)

    so that K E K^-1 = q^2 E, K F K^-1 = q^-2 F and EF - FE = [k - 2j]
    on v_j. With q = 1 (params.one) these are the classical spin-k/2
    matrices with H = diag(k, k-2, ..., -k).
    """

    GENERATORS = ('E', 'F', 'K', 'Kinv')

    def __init__(self, k, params=None, q=None):
        # Watchdog
        if k < 0:
            raise ValueError('highest weight must be nonnegative, got %s' % k)

        self.k = k
        self.dim = k + 1
        self.params, self.q = _resolve(params, q)
        one = self.params.one
        self.images = {name: {} for name in self.GENERATORS}
        for j in range(self.dim):
            weight = k - 2 * j
            self.images['K'][j] = {j: self.q ** weight}
            self.images['Kinv'][j] = {j: self.q ** (-weight)}
            if j > 0:
                self.images['E'][j] = {j - 1: q_integer(k - j + 1, self.q, one)}
            if j < k:
                self.images['F'][j] = {j + 1: q_integer(j + 1, self.q, one)}
        self.matrices = {
            name: _matrix({(i, j): c
                           for j, image in self.images[name].items()
                           for i, c in image.items()},
                          self.dim, self.params.domain)
            for name in self.GENERATORS}
        self.check_relations()

    def __repr__(self):
        return 'WeightRep(k=%d, q=%s)' % (self.k, scalar_str(self.q))

    def identity(self):
        one = self.params.one
        return _matrix({(j, j): one for j in range(self.dim)}, self.dim,
                       self.params.domain)

    def end_matrix(self, rows):
        """End(U) element from a list of rows of ints, rationals or Scalars."""
        entries = {(r, c): self.params.scalar(x)
                   for r, row in enumerate(rows) for c, x in enumerate(row)}
        return _matrix(entries, self.dim, self.params.domain)

    def check_relations(self):
        E, F, K, Kinv = (self.matrices[g] for g in self.GENERATORS)
        one = self.params.one
        q2 = self.q ** 2
        H = _matrix({(j, j): q_integer(self.k - 2 * j, self.q, one)
                     for j in range(self.dim)}, self.dim, self.params.domain)
        failures = []
        if not _is_zero(K * Kinv - self.identity()):
            failures.append('K K^-1 = 1')
        if not _is_zero(K * E * Kinv - E.scalarmul(q2)):
            failures.append('K E K^-1 = q^2 E')
        if not _is_zero(K * F * Kinv - F.scalarmul(one / q2)):
            failures.append('K F K^-1 = q^-2 F')
        if not _is_zero(E * F - F * E - H):
            failures.append('EF - FE = (K - K^-1)/(q - q^-1)')
        if failures:
            raise ConventionError('irrep(%d) violates %s'
                                  % (self.k, ', '.join(failures)))

    def weight(self, word):
        return sum(self.k - 2 * j for j in word)

    def act(self, name, vector):
        """
        Action of E, F, K or Kinv on a vector of U^(x)m, a dict
        word -> Scalar, through the coproduct

            D(E) = E (x) 1 + K (x) E,   D(F) = F (x) K^-1 + 1 (x) F,   D(K) = K (x) K.
        """
        if name not in self.GENERATORS:
            raise ValueError('unknown generator %r (expected one of %s)'
                             % (name, ', '.join(self.GENERATORS)))
        zero = self.params.zero
        out = {}
        for word, c in vector.items():
            if name in ('K', 'Kinv'):
                factor = c
                for j in word:
                    factor = factor * self.images[name][j][j]
                _add(out, word, factor, zero)
                continue
            for pos, j in enumerate(word):
                factor = c
                if name == 'E':
                    for t in word[:pos]:
                        factor = factor * self.images['K'][t][t]
                else:
                    for t in word[pos + 1:]:
                        factor = factor * self.images['Kinv'][t][t]
                for i, e in self.images[name].get(j, {}).items():
                    _add(out, word[:pos] + (i,) + word[pos + 1:],
                         factor * e, zero)
        return _clean(out)

    def highest_weight_vectors(self, m, weight):
        """Basis of the vectors of U^(x)m of a given weight killed by E."""
        words = [w for w in itertools.product(range(self.dim), repeat=m)
                 if self.weight(w) == weight]
        images = {w: self.act('E', {w: self.params.one}) for w in words}
        space = operator_kernel(images, self.params.domain,
                                ambient=('U', self.k, m, weight))
        return space.basis()


def irrep(k, params=None, q=None):
    return WeightRep(k, params, q)


class Component():
    """Irreducible summand of a tensor power: highest weight vector x and x, Fx, F^2x, ..."""

    def __init__(self, weight, vectors):
        self.weight = weight
        self.vectors = vectors

    @property
    def dim(self):
        return len(self.vectors)

    def __repr__(self):
        return 'Component(weight=%d)' % self.weight


def decompose_tensor(U, m=2):
    components = []
    for weight in range(m * U.k, -1, -2):
        for x in U.highest_weight_vectors(m, weight):
            chain = [x]
            for _ in range(weight):
                chain.append(U.act('F', chain[-1]))
            components.append(Component(weight, chain))
    total = sum(c.dim for c in components)
    if total != U.dim ** m:
        raise ConventionError('F-chains of U^(x)%d span %d of %d dimensions'
                              % (m, total, U.dim ** m))
    return components


class ComponentBasis():
    """Coordinates of U^(x)m vectors along the F-chains of a decomposition."""

    def __init__(self, U, components, m=2):
        domain = U.params.domain
        self.zero = U.params.zero
        words = list(itertools.product(range(U.dim), repeat=m))
        self.labels = [(index, t) for index, c in enumerate(components)
                       for t in range(c.dim)]
        columns = [components[i].vectors[t] for i, t in self.labels]
        P = DomainMatrix([[col.get(w, domain.zero) for col in columns]
                          for w in words], (len(words), len(columns)), domain)
        try:
            inverse = P.inv().to_dok()
        except DMNonInvertibleMatrixError:
            raise ConventionError('F-chains of U^(x)%d are not a basis' % m)
        self._columns = {w: [] for w in words}
        for (r, col), v in inverse.items():
            self._columns[words[col]].append((self.labels[r], v))

    def coordinates(self, vector):
        """dict (component index, chain position) -> Scalar."""
        out = {}
        for w, c in vector.items():
            for label, v in self._columns[w]:
                _add(out, label, v * c, self.zero)
        return _clean(out)


# -----------------------------------------------------------------------
# q-Lie bracket on V = irrep(2)
# -----------------------------------------------------------------------

def printed_table(params, q, M):
    """The bracket on (u, v, w) = (0, 1, 2): dict pair -> dict index -> Scalar."""
    s = q + params.one / q
    return {(0, 0): {},
            (0, 1): {0: -q ** 2 * M},
            (0, 2): {1: M / s},
            (1, 0): {0: M},
            (1, 1): {1: (params.one - q ** 2) * M},
            (1, 2): {2: -q ** 2 * M},
            (2, 0): {1: -M / s},
            (2, 1): {2: M},
            (2, 2): {}}


# Candidate assignments (u, v, w) -> weight vectors, tried in turn
ORDERS = ((2, 1, 0), (0, 1, 2))


class QLieBracket():
    """
    Equivariant bracket [,]_q = M * iota o proj on V (x) V, V = irrep(2),
    vanishing off the weight-2 component. B = iota o proj is normalized by
    B(v_0 (x) v_1) = v_0. The basis (u, v, w) is e_a = scales[a] * v_order[a].
    """

    def __init__(self, V, M, components, basis, B, casimir_v, order,
                 scales, factor, table):
        self.V = V
        self.params = V.params
        self.q = V.q
        self.M = M
        self.generators = UVW
        self.components = components
        self.basis = basis
        self.B = B
        self.casimir_v = casimir_v
        self.order = order
        self.scales = scales
        self.factor = factor
        self.table = table
        self.minus_index = [c.weight for c in components].index(2)
        self.singlet_index = [c.weight for c in components].index(0)
        self._casimir_scale = casimir_v[(1, 1)] / components[
            self.singlet_index].vectors[0][(1, 1)]

    def to_uvw(self, vector):
        """v-basis words -> uvw words."""
        position = {r: a for a, r in enumerate(self.order)}
        out = {}
        for word, c in vector.items():
            letters = tuple(position[r] for r in word)
            scale = self.params.one
            for a in letters:
                scale = scale * self.scales[a]
            out[letters] = c / scale
        return _clean(out)

    def from_uvw(self, vector):
        out = {}
        for word, c in vector.items():
            scale = self.params.one
            for a in word:
                scale = scale * self.scales[a]
            out[tuple(self.order[a] for a in word)] = c * scale
        return _clean(out)

    def bracket_v(self, vector):
        """[,]_q on a v-basis vector of V (x) V; returns dict index -> Scalar."""
        out = {}
        for pair, c in vector.items():
            for r, b in self.B[pair].items():
                _add(out, r, self.factor * b * c, self.params.zero)
        return _clean(out)

    def apply(self, vector):
        """[,]_q on a uvw vector of V (x) V; returns dict index -> Scalar."""
        out = {}
        for pair, c in vector.items():
            for g, b in self.table[pair].items():
                _add(out, g, b * c, self.params.zero)
        return _clean(out)

    def bracket(self, a, b):
        """Bracket of two coordinate lists over (u, v, w)."""
        zero = self.params.zero
        out = [zero, zero, zero]
        for i, j in itertools.product(range(3), repeat=2):
            if a[i] and b[j]:
                for g, c in self.table[(i, j)].items():
                    out[g] += a[i] * b[j] * c
        return out

    def minus_indices(self):
        """
        Components of V (x) V spanning I_-^q: those whose highest weight
        vector is antisymmetric under the flip at q=1.
        """
        one = self.params.one
        classical = self if self.q == one else q_lie_bracket(self.params,
                                                             one, self.M)
        weights = [c.weight for c in self.components]
        out = []
        for c in classical.components:
            top = c.vectors[0]
            if all(top.get((j, i), self.params.zero) == -v
                   for (i, j), v in top.items()):
                out.append(weights.index(c.weight))
        return sorted(out)

    def minus_basis(self):
        return [self.to_uvw(x)
                for x in self.components[self.minus_index].vectors]

    @property
    def casimir(self):
        return self.to_uvw(self.casimir_v)

    def zero_coordinate(self, pair):
        """Coordinate of e_a (x) e_b along C_q in the component decomposition."""
        coordinates = self.basis.coordinates(self.from_uvw({pair: self.params.one}))
        raw = coordinates.get((self.singlet_index, 0), self.params.zero)
        return raw / self._casimir_scale

    def change_of_basis(self):
        names = self.generators.names
        out = {names[a]: '%s*v_%d' % (scalar_str(self.scales[a]), r)
               for a, r in enumerate(self.order)}
        out['factor'] = scalar_str(self.factor)
        return out

    def table_str(self):
        out = {}
        for (a, b), image in sorted(self.table.items()):
            key = '[%s,%s]' % (UVW.names[a], UVW.names[b])
            out[key] = ncpoly_str(NCPoly(UVW, self.params,
                                         {(g,): c for g, c in image.items()}))
        return out

    def as_dict(self):
        return {'table': self.table_str(),
                'change_of_basis': self.change_of_basis(),
                'casimir': ncpoly_str(NCPoly(UVW, self.params, self.casimir))}


def _rescaled(B, order, scales, factor):
    position = {r: a for a, r in enumerate(order)}
    table = {}
    for a, b in itertools.product(range(3), repeat=2):
        image = {}
        for r, c in B[(order[a], order[b])].items():
            g = position[r]
            image[g] = factor * scales[a] * scales[b] * c / scales[g]
        table[(a, b)] = _clean(image)
    return table


def _same_table(a, b, zero):
    for pair in set(a) | set(b):
        left, right = a.get(pair, {}), b.get(pair, {})
        for g in set(left) | set(right):
            if not scalar_eq(left.get(g, zero), right.get(g, zero)):
                return False
    return True


_BRACKETS = {}


def q_lie_bracket(params=None, q=None, M=None):
    """
    Build [,]_q from scratch: decompose V (x) V, project onto the weight-2
    component, map it back onto V along the F-chains, and match the
    result against the printed table on (u, v, w) by one basis change.

    :param q: Deformation parameter; params.one gives the classical bracket.
    :param M: Overall scale (the parameter 'M' by default).
    :raises ConventionError: If no candidate basis change reproduces
                             all nine table entries.
    """
    params, q = _resolve(params, q)
    M = params['M'] if M is None else params.scalar(M)
    key = (params, scalar_str(q), scalar_str(M))
    if key in _BRACKETS:
        return _BRACKETS[key]

    V = irrep(2, params, q)
    one = params.one
    components = decompose_tensor(V, 2)
    weights = sorted(c.weight for c in components)
    if weights != [0, 2, 4]:
        raise ConventionError('V (x) V decomposes with highest weights %s, '
                              'expected 0, 2, 4' % weights)
    basis = ComponentBasis(V, components, 2)
    minus = [c.weight for c in components].index(2)

    # F^t v_0 in V
    chain = [{(0,): one}]
    for _ in range(2):
        chain.append(V.act('F', chain[-1]))

    B = {}
    for pair in itertools.product(range(3), repeat=2):
        coordinates = basis.coordinates({pair: one})
        image = {}
        for t in range(3):
            c = coordinates.get((minus, t))
            if c:
                for (r,), e in chain[t].items():
                    _add(image, r, c * e, params.zero)
        B[pair] = _clean(image)
    normalization = B[(0, 1)].get(0)
    if not normalization:
        raise ConventionError('projection of v_0 (x) v_1 onto V has no v_0 part')
    B = {pair: {r: c / normalization for r, c in image.items()}
         for pair, image in B.items()}

    singlet = components[[c.weight for c in components].index(0)].vectors[0]
    if not singlet.get((1, 1)):
        raise ConventionError('invariant of V (x) V has no v_1 (x) v_1 part')
    half = one / (one + one)
    casimir_v = {w: c * half / singlet[(1, 1)] for w, c in singlet.items()}

    s = q + one / q
    printed = printed_table(params, q, M)
    for order in ORDERS:
        b_vu = B[(order[1], order[0])].get(order[0])
        b_uw = B[(order[0], order[2])].get(order[1])
        if not b_vu or not b_uw:
            continue
        factor = M / b_vu
        gamma = (M / s) / (factor * b_uw)
        scales = (one, one, gamma)
        table = _rescaled(B, order, scales, factor)
        if _same_table(table, printed, params.zero):
            bracket = QLieBracket(V, M, components, basis, B, casimir_v,
                                  order, scales, factor, table)
            log.info('q-Lie bracket matched with u, v, w = %s',
                     ', '.join('%s' % v for v in
                               bracket.change_of_basis().values()))
            _BRACKETS[key] = bracket
            return bracket
    raise ConventionError('no basis change of V reproduces the bracket table '
                          '[u,v] = -q^2*M*u, [u,w] = (M/(q+q^-1))*v, ...')


def braided_casimir(bracket=None):
    """C_q in V (x) V on the v-basis, with v_1 (x) v_1 coefficient 1/2."""
    bracket = q_lie_bracket() if bracket is None else bracket
    return dict(bracket.casimir_v)


# -----------------------------------------------------------------------
# End(U) as a U_q(sl2)-module
# -----------------------------------------------------------------------

class EndModule():
    """
    End(U) with a.M = rho(a_1) M rho(gamma(a_2)):

        E.M = EM - KMK^-1 E,   F.M = (FM - MF) K,   K.M = KMK^-1.
    """

    def __init__(self, U):
        self.U = U

    def act(self, name, M):
        E, F, K, Kinv = (self.U.matrices[g] for g in WeightRep.GENERATORS)
        if name == 'E':
            return E * M - K * M * Kinv * E
        elif name == 'F':
            return (F * M - M * F) * K
        elif name == 'K':
            return K * M * Kinv
        elif name == 'Kinv':
            return Kinv * M * K
        raise ValueError('unknown generator %r' % name)

    def unit(self, r, c):
        return _matrix({(r, c): self.U.params.one}, self.U.dim,
                       self.U.params.domain)

    def highest_weight_vectors(self, weight):
        """Matrices of weight `weight` (spanned by e_rc, c - r = weight/2) killed by E."""
        d = weight // 2
        units = [(r, r + d) for r in range(self.U.dim - d)]
        images = {rc: self.act('E', self.unit(*rc)).to_dok() for rc in units}
        space = operator_kernel(images, self.U.params.domain,
                                key=lambda rc: rc,
                                ambient=('End', self.U.k, weight))
        return [_matrix(v, self.U.dim, self.U.params.domain)
                for v in space.basis()]

    def decompose(self):
        """list of (highest weight, multiplicity), highest first."""
        out = []
        for weight in range(2 * self.U.k, -1, -2):
            multiplicity = len(self.highest_weight_vectors(weight))
            if multiplicity:
                out.append((weight, multiplicity))
        total = sum((w + 1) * m for w, m in out)
        if total != self.U.dim ** 2:
            raise ConventionError('End(irrep(%d)) decomposes into %d of %d '
                                  'dimensions' % (self.U.k, total,
                                                  self.U.dim ** 2))
        return out


def decompose_end(U):
    return EndModule(U).decompose()


def quantum_trace(U, M):
    """qtr(M) = tr(K^-1 M); the identity of irrep(1) has qtr = q + q^-1."""
    total = U.params.zero
    for (r, c), v in M.to_dok().items():
        if r == c:
            total += U.images['Kinv'][r][r] * v
    return total


def quantum_trace_invariance(U, M):
    """Generators a for which qtr(a.M) != counit(a) qtr(M)."""
    end = EndModule(U)
    value = quantum_trace(U, M)
    return [name for name in ('E', 'F', 'K')
            if quantum_trace(U, end.act(name, M)) != value * COUNIT[name]]


def end_product_equivariance(U, sampler, trials=2, height=3):
    """
    Generators a for which a.(M1 M2) differs from (a_1.M1)(a_2.M2) on
    random integer matrices.
    """
    end = EndModule(U)
    failures = set()
    for _ in range(trials):
        M1, M2 = (U.end_matrix(sampler.rng.integers(-height, height + 1,
                                                    size=(U.dim, U.dim)).tolist())
                  for _ in range(2))
        product = M1 * M2
        expected = {
            'E': end.act('E', M1) * M2 + end.act('K', M1) * end.act('E', M2),
            'F': end.act('F', M1) * end.act('Kinv', M2) + M1 * end.act('F', M2),
            'K': end.act('K', M1) * end.act('K', M2)}
        for name, value in expected.items():
            if not _is_zero(end.act(name, product) - value):
                failures.add(name)
    return sorted(failures)


# -----------------------------------------------------------------------
# Almost representations and braided modules
# -----------------------------------------------------------------------

def _rho_of(rho, vector, zero_matrix):
    """rho extended linearly to a dict index -> Scalar."""
    out = zero_matrix
    for j, c in vector.items():
        out = out + rho[j].scalarmul(c)
    return out


def _quadratic(rho, vector, zero_matrix):
    """sum x_ij rho(v_i) rho(v_j) for a v-basis vector of V (x) V."""
    out = zero_matrix
    for (i, j), c in vector.items():
        out = out + (rho[i] * rho[j]).scalarmul(c)
    return out


class AlmostRepresentation():

    def __init__(self, U, bracket, rho, nu, decomposition, spurious=()):
        self.U = U
        self.bracket = bracket
        self.rho = rho
        self.nu = nu
        self.decomposition = decomposition
        # highest weights of the I_-^q components, other than V_-^q,
        # on which x (x) y -> rho(x) rho(y) does not vanish
        self.spurious = list(spurious)

    @property
    def degenerate(self):
        return self.nu is None

    @property
    def condition1(self):
        return not self.spurious

    def as_dict(self):
        return {'k': self.U.k,
                'decomposition': [list(x) for x in self.decomposition],
                'degenerate': self.degenerate,
                'condition1': self.condition1,
                'spurious': self.spurious,
                'nu': None if self.nu is None else scalar_str(self.nu)}


def _spurious_weights(rho, bracket, zero_matrix):
    out = []
    for index in bracket.minus_indices():
        if index == bracket.minus_index:
            continue
        component = bracket.components[index]
        if not all(_is_zero(_quadratic(rho, x, zero_matrix))
                   for x in component.vectors):
            out.append(component.weight)
    return out


def almost_representation(U, bracket=None):
    """
    The equivariant map rho: V -> End(U), unique up to scale, with
    rho(v_0) the weight-2 highest weight vector of End(U), together with
    the factor nu of sum x_ij rho(v_i) rho(v_j) = nu rho([x]_q), x in V_-.

    :raises ConventionError: If End(U) does not contain V exactly once,
                             rho is not equivariant or nu vanishes.
    """
    bracket = q_lie_bracket(U.params, U.q) if bracket is None else bracket
    end = EndModule(U)
    decomposition = end.decompose()
    zero_matrix = _matrix({}, U.dim, U.params.domain)
    multiplicities = dict(decomposition)

    if U.k == 0:
        log.info('irrep(0): the zero map is the only morphism V -> End')
        rho = {j: zero_matrix for j in range(3)}
        return AlmostRepresentation(U, bracket, rho, None, decomposition,
                                    _spurious_weights(rho, bracket,
                                                      zero_matrix))

    # Watchdog
    if multiplicities.get(2) != 1:
        raise ConventionError('End(irrep(%d)) contains %s copies of V, '
                              'expected exactly one'
                              % (U.k, multiplicities.get(2, 0)))

    top = end.highest_weight_vectors(2)[0]
    s = q_integer(2, U.q, U.params.one)
    rho = {0: top}
    rho[1] = end.act('F', rho[0])
    rho[2] = end.act('F', rho[1]).scalarmul(U.params.one / s)

    V = bracket.V
    for name in ('E', 'F', 'K'):
        for j in range(3):
            lhs = _rho_of(rho, V.images[name].get(j, {}), zero_matrix)
            if not _is_zero(lhs - end.act(name, rho[j])):
                raise ConventionError('rho(%s v_%d) != %s.rho(v_%d) on '
                                      'irrep(%d)' % (name, j, name, j, U.k))

    nu = None
    for x in bracket.components[bracket.minus_index].vectors:
        L = _quadratic(rho, x, zero_matrix)
        R = _rho_of(rho, bracket.bracket_v(x), zero_matrix)
        entries = R.to_dok()
        if not entries:
            raise ConventionError('rho kills the bracket of V_- on irrep(%d)'
                                  % U.k)
        if nu is None:
            rc = min(entries)
            nu = L.to_dok().get(rc, U.params.zero) / entries[rc]
        if not _is_zero(L - R.scalarmul(nu)):
            raise ConventionError('rho(x)rho(y) is not proportional to '
                                  'rho([x,y]_q) on irrep(%d)' % U.k)
    if not nu:
        raise ConventionError('nu vanishes on irrep(%d)' % U.k)
    log.debug('irrep(%d): nu = %s', U.k, scalar_str(nu))
    return AlmostRepresentation(U, bracket, rho, nu, decomposition,
                                _spurious_weights(rho, bracket, zero_matrix))


class BraidedStructure():

    def __init__(self, almost, rho_nu, c0):
        self.almost = almost
        self.rho_nu = rho_nu
        self.c0 = c0

    @property
    def k(self):
        return self.almost.U.k

    def c0_at(self, h):
        """Casimir value of the representation h*rho_nu of U(g)_{h,q}."""
        return h ** 2 * self.c0

    def as_dict(self):
        out = self.almost.as_dict()
        out['c0'] = scalar_str(self.c0)
        return out


def braided_structure(U, bracket=None):
    """
    rho_nu = nu^-1 rho, a representation of U(g)_{1,q}, and the scalar c0
    by which C_q acts.

    :raises ConventionError: If rho(x)rho(y) survives on a component of
                             I_-^q other than V_-^q, rho_nu is not a
                             representation or C_q does not act by a
                             scalar.
    """
    almost = almost_representation(U, bracket)
    zero_matrix = _matrix({}, U.dim, U.params.domain)
    if almost.degenerate:
        return BraidedStructure(almost, dict(almost.rho), U.params.zero)
    if not almost.condition1:
        raise ConventionError('rho(x)rho(y) does not vanish on the weight %s '
                              'component(s) of I_-^q on irrep(%d)'
                              % (', '.join(map(str, almost.spurious)), U.k))

    bracket = almost.bracket
    inverse = U.params.one / almost.nu
    rho_nu = {j: m.scalarmul(inverse) for j, m in almost.rho.items()}
    for x in bracket.components[bracket.minus_index].vectors:
        L = _quadratic(rho_nu, x, zero_matrix)
        if not _is_zero(L - _rho_of(rho_nu, bracket.bracket_v(x), zero_matrix)):
            raise ConventionError('rho_nu is not a representation on irrep(%d)'
                                  % U.k)

    image = _quadratic(rho_nu, bracket.casimir_v, zero_matrix).to_dok()
    c0 = image.get((0, 0), U.params.zero)
    off_diagonal = [rc for rc in image if rc[0] != rc[1]]
    uneven = [j for j in range(U.dim)
              if image.get((j, j), U.params.zero) != c0]
    if off_diagonal or uneven:
        raise ConventionError('braided Casimir acts on irrep(%d) by a '
                              'non-scalar matrix' % U.k)
    log.info('irrep(%d): c0 = %s', U.k, scalar_str(c0))
    return BraidedStructure(almost, rho_nu, c0)


def at_q1(value, params):
    """Specialize q to 1 in a Scalar, keeping the other parameters."""
    try:
        return value.subs(params['q'], 1)
    except ZeroDivisionError:
        raise SpecializationError('%s has a pole at q=1' % scalar_str(value),
                                  assignment={'q': 1})


def c0_table(kmax, params=None, h=None):
    """
    c0 on irrep(k), k = 0..kmax, with its q = 1 value against the
    classical M^2 k(k+2)/2.

    :param h: If given, c0 is reported for U(g)_{h,q}, i.e. times h^2.
    :return: list of dicts, one per k.
    """
    params, _ = _resolve(params, None)
    bracket = q_lie_bracket(params)
    M = params['M']
    rows = []
    for k in progress(range(kmax + 1), desc='c0 table'):
        structure = braided_structure(irrep(k, params), bracket)
        c0 = structure.c0 if h is None else structure.c0_at(params.scalar(h))
        classical = at_q1(structure.c0, params)
        expected = M ** 2 * k * (k + 2) / 2
        rows.append({'k': k,
                     'c0': scalar_str(c0),
                     'c0_q1': scalar_str(classical),
                     'classical_match': classical == expected,
                     'nu': None if structure.almost.nu is None
                     else scalar_str(structure.almost.nu)})
    log.info('c0 table computed for %s values of k', humanize(len(rows)))
    return rows


def sl2_nu_data(bracket=None, h=None, c0=None, zero=False):
    """
    PBW data of U(g)_{h,q}/(C_q - c0): I = V_- + k C_q,
    nu_1 = h [,]_q and nu_0 = c0 times the C_q coordinate.

    :param zero: Use nu_1 = nu_0 = 0 (the quadratic algebra itself).
    """
    bracket = q_lie_bracket() if bracket is None else bracket
    params = bracket.params
    I = Subspace((UVW, 2), params.domain,
                 bracket.minus_basis() + [bracket.casimir])
    if zero:
        return NuData(UVW, params, I, {}, {}, 'sl2_zero')
    h = params['h'] if h is None else params.scalar(h)
    c0 = params['c0'] if c0 is None else params.scalar(c0)
    nu1 = {pair: {g: h * c for g, c in image.items()}
           for pair, image in bracket.table.items() if image}
    nu0 = {}
    for pair in itertools.product(range(3), repeat=2):
        value = c0 * bracket.zero_coordinate(pair)
        if value:
            nu0[pair] = value
    name = 'sl2_classical' if bracket.q == params.one else 'sl2_quantum'
    return NuData(UVW, params, I, nu1, nu0, name)


# -----------------------------------------------------------------------
# Conjugations of V_C compatible with the bracket
# -----------------------------------------------------------------------

class Conjugation():
    """z -> T z-bar on the complexified span of (u, v, w); T e_j = sum_i T[i][j] e_i."""

    def __init__(self, matrix, params, name=None):
        self.params = params
        self.matrix = [[params.scalar(x) for x in row] for row in matrix]
        self.name = name or str(self)

    @classmethod
    def diagonal(cls, signs, params):
        return cls([[signs[i] if i == j else 0 for j in range(3)]
                    for i in range(3)], params,
                   'diag(%s)' % ','.join('%d' % s for s in signs))

    def apply(self, vector):
        """T applied to a real coordinate list."""
        zero = self.params.zero
        return [sum((self.matrix[i][j] * vector[j] for j in range(3)), zero)
                for i in range(3)]

    def column(self, j):
        return [self.matrix[i][j] for i in range(3)]

    def is_involutive(self):
        for i, j in itertools.product(range(3), repeat=2):
            value = sum((self.matrix[i][t] * self.matrix[t][j]
                         for t in range(3)), self.params.zero)
            if value != (self.params.one if i == j else self.params.zero):
                return False
        return True

    def eigenspace(self, sign):
        """Basis (coordinate lists) of {x : T x = sign x}."""
        rows = [[self.matrix[i][j] - (sign * self.params.one if i == j
                                      else self.params.zero)
                 for j in range(3)] for i in range(3)]
        space = kernel(rows, self.params.domain)
        return [[v.get(j, self.params.zero) for j in range(3)]
                for v in space.basis()]

    def __str__(self):
        return '[%s]' % '; '.join(', '.join(scalar_str(x) for x in row)
                                  for row in self.matrix)


def conjugation_violations(T, bracket):
    """Basis pairs (a, b) where T[e_a,e_b] != -[Te_a,Te_b]; 'T^2' if T is not involutive."""
    out = [] if T.is_involutive() else ['T^2']
    unit = [[bracket.params.one if i == j else bracket.params.zero
             for i in range(3)] for j in range(3)]
    for a, b in itertools.product(range(3), repeat=2):
        lhs = T.apply(bracket.bracket(unit[a], unit[b]))
        rhs = bracket.bracket(T.column(a), T.column(b))
        if any(x + y for x, y in zip(lhs, rhs)):
            out.append('(%s, %s)' % (UVW.names[a], UVW.names[b]))
    return out


def conjugation_check(T, bracket=None):
    bracket = q_lie_bracket() if bracket is None else bracket
    return not conjugation_violations(T, bracket)


def classify_diagonal_conjugations(bracket=None):
    """All compatible T = diag(+-1, +-1, +-1)."""
    bracket = q_lie_bracket() if bracket is None else bracket
    found = []
    for signs in itertools.product((1, -1), repeat=3):
        T = Conjugation.diagonal(signs, bracket.params)
        if conjugation_check(T, bracket):
            found.append(T)
    log.info('compatible diagonal conjugations: %s',
             ', '.join(T.name for T in found))
    return found


def _specialized_table(bracket, point):
    return {pair: {g: QQ.to_sympy(scalar_specialize(c, point))
                   for g, c in image.items()}
            for pair, image in bracket.table.items()}


def _solution_str(solution, t):
    rows = [', '.join(str(solution.get(t[3 * i + j], t[3 * i + j]))
                      for j in range(3)) for i in range(3)]
    return '[%s]' % '; '.join(rows)


def general_conjugation_scan(bracket, point):
    """
    Solve T^2 = id, T[e_a,e_b] = -[Te_a,Te_b] for a general real 3x3 T
    at a rational point (q, M) by a Groebner basis in the nine entries.

    :return: dict with the point, whether the solution set is finite, its
             size and real solutions when finite, and whether the two
             diagonal conjugations lie on it.
    """
    table = _specialized_table(bracket, point)
    t = symbols('t0:9')
    T = [[t[3 * i + j] for j in range(3)] for i in range(3)]
    equations = []
    for i, j in itertools.product(range(3), repeat=2):
        equations.append(sum(T[i][x] * T[x][j] for x in range(3))
                         - (1 if i == j else 0))
    for a, b in itertools.product(range(3), repeat=2):
        for d in range(3):
            lhs = sum(c * T[d][g] for g, c in table[(a, b)].items())
            rhs = sum(T[x][a] * T[y][b] * table[(x, y)].get(d, 0)
                      for x, y in itertools.product(range(3), repeat=2))
            equation = expand(lhs + rhs)
            if equation != 0:
                equations.append(equation)
    G = groebner(equations, *t, order='grevlex')

    known = {}
    for signs in ((1, -1, 1), (-1, -1, -1)):
        values = {t[3 * i + j]: (signs[i] if i == j else 0)
                  for i in range(3) for j in range(3)}
        known['diag(%s)' % ','.join('%d' % s for s in signs)] = \
            all(e.subs(values) == 0 for e in equations)

    result = {'point': point_str(point),
              'empty': list(G.exprs) == [1],
              'zero_dimensional': bool(G.is_zero_dimensional),
              'groebner_size': len(G.exprs),
              'known_points': known,
              'solutions': None}
    if G.is_zero_dimensional and not result['empty']:
        solutions = solve(list(G.exprs), t, dict=True)
        real = [s for s in solutions if all(v.is_real for v in s.values())]
        result['solutions'] = len(solutions)
        result['real_solutions'] = [_solution_str(s, t) for s in real]
    log.info('conjugation scan at %s: %s', point_str(point),
             'finite' if result['zero_dimensional'] else 'positive dimensional')
    return result


def _combination(basis, rng, zero, height=5):
    out = [zero, zero, zero]
    for vector in basis:
        c = int(rng.integers(-height, height + 1))
        out = [x + c * y for x, y in zip(out, vector)]
    return out


def _complex_bracket(bracket, a, b):
    """[a_re + i a_im, b_re + i b_im] as (re, im)."""
    re = [x - y for x, y in zip(bracket.bracket(a[0], b[0]),
                                bracket.bracket(a[1], b[1]))]
    im = [x + y for x, y in zip(bracket.bracket(a[0], b[1]),
                                bracket.bracket(a[1], b[0]))]
    return re, im


def _has_parity(T, z, sign):
    """z* = sign * z, with z* = T re - i T im."""
    re, im = z
    return (all(x == sign * y for x, y in zip(T.apply(re), re))
            and all(-x == sign * y for x, y in zip(T.apply(im), im)))


def _random_elements(T, sign, sampler, trials):
    # z* = sign z  <=>  T re = sign re  and  T im = -sign im
    real_part = T.eigenspace(sign)
    imaginary_part = T.eigenspace(-sign)
    zero = T.params.zero
    return [(_combination(real_part, sampler.rng, zero),
             _combination(imaginary_part, sampler.rng, zero))
            for _ in range(trials)]


def odd_subalgebra_check(T, bracket, sampler, trials=3):
    """[a,b]_q is odd for random odd a, b (z* = -z)."""
    odd = _random_elements(T, -1, sampler, trials)
    for a, b in itertools.product(odd, repeat=2):
        if not _has_parity(T, _complex_bracket(bracket, a, b), -1):
            return False
    return True


def even_closure_check(T, bracket, sampler=None, trials=3, pairs=None):
    """
    i[a,b]_q is even for even a, b (z* = z).

    :param pairs: Explicit list of (a, b), each a (re, im) pair of
                  coordinate lists; random even elements otherwise.
    """
    if pairs is None:
        even = _random_elements(T, 1, sampler, trials)
        pairs = list(itertools.product(even, repeat=2))
    for a, b in pairs:
        re, im = _complex_bracket(bracket, a, b)
        if not _has_parity(T, ([-x for x in im], re), 1):
            return False
    return True
