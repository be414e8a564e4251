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

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .algebra import NCPoly, word_key
from .utils import ShapeError, humanize, progress

log = logging.getLogger(__name__)


def axpy(target, row, factor, zero):
    """target += factor*row, in place, dropping cancelled entries."""
    for k, v in row.items():
        value = target.get(k, zero) + factor * v
        if value:
            target[k] = value
        else:
            target.pop(k, None)


class Echelon():
    """
    Sparse row echelon form over an exact field.

    Rows are dicts basis_key -> field element. The pivot of a row is its
    minimal key under `key` (word_key by default: highest degree first).
    With reduced=True every pivot column is zero outside its own row
    (canonical RREF); with reduced=False only forward elimination is done,
    which is enough for ranks and membership.
    """

    def __init__(self, domain, key=word_key, reduced=True):
        """
        :param domain: sympy domain of the entries (a FractionField over
                       the parameters, or QQ after specialization).
        :param key: Sort key on basis keys. Smaller means pivot first.
        :param reduced: Keep the rows fully reduced.
        """
        self.domain = domain
        self.key = key
        self.reduced = reduced
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self):
        return len(self.rows)

    def copy(self):
        other = Echelon(self.domain, self.key, self.reduced)
        other.rows = {p: dict(r) for p, r in self.rows.items()}
        return other

    def reduce(self, vector):
        """
        Remainder of `vector` modulo the rows. In reduced mode the
        remainder is the canonical representative; otherwise it is only
        guaranteed to be zero iff the vector lies in the span.
        """
        zero = self.domain.zero
        vec = {k: v for k, v in vector.items() if v}
        if self.reduced:
            for k in [k for k in vec if k in self.rows]:
                factor = vec.get(k)
                if factor:
                    axpy(vec, self.rows[k], -factor, zero)
            return vec
        while vec:
            pivot = min(vec, key=self.key)
            row = self.rows.get(pivot)
            if row is None:
                return vec
            axpy(vec, row, -vec[pivot], zero)
        return vec

    def insert(self, vector):
        """Add a vector to the span. Returns True iff the dimension grew."""
        vec = self.reduce(vector)
        if not vec:
            return False
        pivot = min(vec, key=self.key)
        inverse = self.domain.one / vec[pivot]
        vec = {k: v * inverse for k, v in vec.items()}
        if self.reduced:
            zero = self.domain.zero
            for row in self.rows.values():
                factor = row.get(pivot)
                if factor:
                    axpy(row, vec, -factor, zero)
        self.rows[pivot] = vec
        return True

    def extend(self, vectors):
        for v in vectors:
            self.insert(v)
        return self

    def contains(self, vector):
        return not self.reduce(vector)

    def pivots(self):
        return sorted(self.rows, key=self.key)

    def basis(self):
        """Rows ordered by pivot."""
        return [self.rows[p] for p in self.pivots()]


class Subspace():
    """
    Subspace of a fixed ambient space, held in canonical RREF.
    `ambient` is any hashable description of the ambient basis
    (for tensor words: (generators, degree)); operations between
    subspaces with different ambients are refused.
    """

    def __init__(self, ambient, domain, vectors=(), key=word_key):
        self.ambient = ambient
        self.domain = domain
        self.key = key
        self.echelon = Echelon(domain, key=key, reduced=True)
        self.echelon.extend(vectors)

    @property
    def dim(self):
        return self.echelon.dim

    def basis(self):
        return self.echelon.basis()

    def contains(self, vector):
        if isinstance(vector, NCPoly):
            vector = vector.terms
        return self.echelon.contains(vector)

    def residue(self, vector):
        if isinstance(vector, NCPoly):
            vector = vector.terms
        return self.echelon.reduce(vector)

    def _check(self, other):
        if self.ambient != other.ambient:
            raise ShapeError('subspaces of different ambient spaces: %s and %s'
                             % (self.ambient, other.ambient))

    def __repr__(self):
        return 'Subspace(dim=%d, ambient=%s)' % (self.dim, self.ambient)


def _ambient_of(vectors):
    """(generators, degree) of a list of homogeneous NCPoly."""
    degrees = {v.degree() for v in vectors if v}
    if len(degrees) > 1:
        raise ShapeError('span of vectors of mixed degrees %s'
                         % sorted(degrees))
    for v in vectors:
        if v and not v.is_homogeneous():
            raise ShapeError('span of a non-homogeneous vector %s' % v)
    generators = {v.generators for v in vectors}
    if len(generators) > 1:
        raise ShapeError('span of vectors over different generators')
    return generators.pop(), (degrees.pop() if degrees else None)


def span(vectors, domain=None, ambient=None):
    """
    Canonical span of homogeneous tensor vectors (NCPoly of one degree).

    :param vectors: list of NCPoly (or plain dicts, then `ambient`
                    and `domain` are required).
    :return: Subspace.
    """
    vectors = list(vectors)
    if vectors and isinstance(vectors[0], NCPoly):
        generators, degree = _ambient_of(vectors)
        if ambient is None:
            ambient = (generators, degree)
        if domain is None:
            domain = vectors[0].params.domain
        vectors = [v.terms for v in vectors]
    if domain is None:
        raise ShapeError('span of plain vectors needs an explicit domain')
    return Subspace(ambient, domain, vectors)


def subspace_ops(A, B, op):
    """
    :param op: 'sum', 'intersect', 'equals' or 'contains'
               ('contains' is True iff A is contained in B).
    :return: Subspace for sum/intersect, bool otherwise.
    """
    A._check(B)
    if op == 'sum':
        return Subspace(A.ambient, A.domain, A.basis() + B.basis(), A.key)
    elif op == 'contains':
        return all(B.echelon.contains(v) for v in A.basis())
    elif op == 'equals':
        return (A.dim == B.dim
                and all(B.echelon.contains(v) for v in A.basis()))
    elif op == 'intersect':
        return _zassenhaus(A, B)
    else:
        raise ValueError("op must be 'sum', 'intersect', 'equals' or "
                         "'contains', got %r" % op)


def _tagged_key(base):
    return lambda tk: (tk[0], base(tk[1]))


def _zassenhaus(A, B):
    # Rows (a | a) for a in A and (b | 0) for b in B; the rows whose
    # pivot lies in the right block have a zero left block and span A∩B.
    echelon = Echelon(A.domain, key=_tagged_key(A.key), reduced=False)
    for a in A.basis():
        row = {(0, k): v for k, v in a.items()}
        row.update({(1, k): v for k, v in a.items()})
        echelon.insert(row)
    for b in B.basis():
        echelon.insert({(0, k): v for k, v in b.items()})
    meet = [{k: v for (tag, k), v in row.items()}
            for pivot, row in echelon.rows.items() if pivot[0] == 1]
    return Subspace(A.ambient, A.domain, meet, A.key)


def operator_kernel(images, domain, key=word_key, ambient=None):
    """
    Kernel of the linear map sending basis vector j to images[j].

    :param images: dict basis_key -> dict (image vector).
    :return: Subspace of the source space, keyed like `images`.
    """
    echelon = Echelon(domain, key=_tagged_key(key), reduced=False)
    for j, image in images.items():
        row = {(0, k): v for k, v in image.items()}
        row[(1, j)] = domain.one
        echelon.insert(row)
    kernel = [{k: v for (tag, k), v in row.items()}
              for pivot, row in echelon.rows.items() if pivot[0] == 1]
    return Subspace(ambient, domain, kernel, key)


def operator_image(images, domain, key=word_key, ambient=None):
    return Subspace(ambient, domain, list(images.values()), key)


def kernel(matrix, domain):
    """
    Kernel of a matrix given as a list of rows.

    :param matrix: list of equal-length lists of field elements.
    :return: Subspace of column-index vectors.
    """
    if not matrix:
        raise ShapeError('empty matrix')
    ncols = len(matrix[0])
    if any(len(row) != ncols for row in matrix):
        raise ShapeError('rows of different lengths in %s x ? matrix'
                         % len(matrix))
    columns = {j: {i: row[j] for i, row in enumerate(matrix) if row[j]}
               for j in range(ncols)}
    return operator_kernel(columns, domain, key=lambda j: j,
                           ambient=('columns', ncols))


def fraction_free_rank(rows, ncols, param_set=None):
    """
    Rank of a matrix of Scalars by fraction-free elimination over the
    integer polynomial ring (DomainMatrix.rref_den). Rows are dicts
    column -> Scalar (or QQ when param_set is None).
    """
    if param_set is None:
        dense = [[row.get(j, QQ.zero) for j in range(ncols)] for row in rows]
        return DomainMatrix(dense, (len(rows), ncols), QQ).rank()
    ring = param_set.ring
    dense = []
    for row in rows:
        common = ring.one
        for v in row.values():
            common = common.lcm(v.denom)
        scale = param_set.field.new(common)
        dense.append([(row[j] * scale).numer if j in row else ring.zero
                      for j in range(ncols)])
    matrix = DomainMatrix(dense, (len(rows), ncols), ring.to_domain())
    _, _, pivots = matrix.rref_den()
    return len(pivots)


# -----------------------------------------------------------------------
# Truncated two-sided ideals in the free algebra
# -----------------------------------------------------------------------

def _relation_vectors(family, point=None):
    """Relations as plain dicts, specialized at `point` when given."""
    if point is None:
        return [r.terms for r in family.relations]
    return [r.specialize(point) for r in family.relations]


def _sandwich(left, vec, right):
    return {left + w + right: c for w, c in vec.items()}


def _tagged_elements(family, degree, point=None, graded_slice=False):
    """(relation index, x, y, x*r*y) with deg(x r y) <= degree."""
    if degree < 2:
        raise ShapeError('truncation degree %s is below the relation '
                         'degree 2' % degree)
    generators = family.generators
    relations = _relation_vectors(family, point)
    for index, (r, vec) in enumerate(zip(family.relations, relations)):
        if not vec:
            continue
        top = r.degree()
        free = range(degree - top, -1, -1)
        if graded_slice:
            free = [degree - top]
        for extra in free:
            for left_len in range(extra + 1):
                for left in generators.words(left_len):
                    for right in generators.words(extra - left_len):
                        yield index, left, right, _sandwich(left, vec, right)


def ideal_elements(family, degree, point=None, graded_slice=False):
    """
    Generate x*r*y for words x, y with deg(x r y) <= degree
    (== degree when graded_slice).
    """
    for _, _, _, vec in _tagged_elements(family, degree, point,
                                         graded_slice):
        yield vec


def ideal_combination(family, degree, target=(), point=None):
    """
    An element of the truncated ideal with leading word `target`, together
    with the combination of relations it is made of. Forward elimination
    in the order of ideal_elements, each row carrying its combination.

    :return: (combination, element) where combination maps
             (x, relation index, y) -> coefficient and element is the
             reduced vector, or None if no element leads with `target`.
    """
    domain = QQ if point is not None else family.params.domain
    zero = domain.zero
    rows = {}
    for index, left, right, vec in _tagged_elements(family, degree, point):
        vec = dict(vec)
        combination = {(left, index, right): domain.one}
        while vec:
            pivot = min(vec, key=word_key)
            if pivot not in rows:
                break
            row, row_combination = rows[pivot]
            factor = vec[pivot] / row[pivot]
            axpy(vec, row, -factor, zero)
            axpy(combination, row_combination, -factor, zero)
        if not vec:
            continue
        pivot = min(vec, key=word_key)
        if pivot == target:
            return combination, vec
        rows[pivot] = (vec, combination)
    return None


def ideal_truncation(family, degree, point=None):
    """
    Degree <= d slice of the two-sided ideal generated by a family,
    filtered tails included. With `point`, coefficients are first
    specialized to QQ.
    """
    domain = QQ if point is not None else family.params.domain
    subspace = Subspace(('truncation', family.generators, degree), domain)
    for vec in progress(ideal_elements(family, degree, point),
                        desc='ideal to degree %d' % degree):
        subspace.echelon.insert(vec)
    log.debug('ideal %s truncated at %d: dimension %s',
              family.name, degree, humanize(subspace.dim))
    return subspace


def ideal_rank(family, degree, point=None, graded_slice=False):
    """Dimension only (forward elimination, no canonical form)."""
    domain = QQ if point is not None else family.params.domain
    echelon = Echelon(domain, reduced=False)
    for vec in ideal_elements(family, degree, point, graded_slice):
        echelon.insert(vec)
    return echelon
