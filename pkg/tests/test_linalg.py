import pytest
from sympy.polys.domains import QQ

from quantum_pencils.algebra import GeneratorSet, NCPoly, RelationFamily
from quantum_pencils.linalg import (Echelon, Subspace, fraction_free_rank,
                                    ideal_rank, ideal_truncation, kernel,
                                    operator_image, operator_kernel, span,
                                    subspace_ops)
from quantum_pencils.utils import ShapeError


def unit(*indices):
    return {i: QQ(1) for i in indices}


def ordered(i):
    return i


@pytest.fixture
def commutator_family(params_q):
    generators = GeneratorSet(('x', 'y'))
    x = NCPoly.gen(generators, params_q, 'x')
    y = NCPoly.gen(generators, params_q, 'y')
    return RelationFamily('sym', generators, params_q, [x * y - y * x])


def test_echelon_insert_and_contains():
    E = Echelon(QQ, key=ordered)
    assert E.insert({0: QQ(1), 1: QQ(2)})
    assert E.insert({1: QQ(1)})
    assert not E.insert({0: QQ(3), 1: QQ(5)})
    assert E.dim == 2
    assert E.contains({0: QQ(7)})
    assert E.pivots() == [0, 1]
    # reduced rows: the pivot columns are cleared elsewhere
    assert E.basis() == [{0: QQ(1)}, {1: QQ(1)}]


def test_forward_elimination_membership():
    E = Echelon(QQ, key=ordered, reduced=False)
    E.extend([{0: QQ(1), 2: QQ(1)}, {1: QQ(1), 2: QQ(-1)}])
    assert E.contains({0: QQ(1), 1: QQ(1)})
    assert not E.contains({2: QQ(1)})


def test_subspace_operations():
    A = Subspace('QQ^3', QQ, [unit(0), unit(1)], key=ordered)
    B = Subspace('QQ^3', QQ, [unit(1), unit(2)], key=ordered)
    meet = subspace_ops(A, B, 'intersect')
    assert meet.dim == 1
    assert meet.contains(unit(1))
    assert subspace_ops(A, B, 'sum').dim == 3
    assert not subspace_ops(A, B, 'equals')
    assert subspace_ops(meet, A, 'contains')
    with pytest.raises(ValueError):
        subspace_ops(A, B, 'union')


def test_intersection_of_skew_planes():
    A = Subspace('QQ^3', QQ, [unit(0, 1), unit(2)], key=ordered)
    B = Subspace('QQ^3', QQ, [unit(0), {1: QQ(1), 2: QQ(1)}], key=ordered)
    meet = subspace_ops(A, B, 'intersect')
    assert meet.dim == 1
    assert meet.contains({0: QQ(1), 1: QQ(1), 2: QQ(1)})


def test_different_ambients_are_refused():
    A = Subspace('QQ^2', QQ, [unit(0)], key=ordered)
    B = Subspace('QQ^3', QQ, [unit(0)], key=ordered)
    with pytest.raises(ShapeError):
        subspace_ops(A, B, 'sum')


def test_span_of_tensor_vectors(params_q):
    generators = GeneratorSet(('x', 'y'))
    x = NCPoly.gen(generators, params_q, 'x')
    y = NCPoly.gen(generators, params_q, 'y')
    S = span([x * y - y * x, y * x - x * y, x * x])
    assert S.dim == 2
    assert S.ambient == (generators, 2)
    assert S.contains(x * x + x * y - y * x)
    assert not S.contains(x * y)
    with pytest.raises(ShapeError):
        span([x * y, x])
    with pytest.raises(ShapeError):
        span([{(0, 1): QQ(1)}])


def test_kernel():
    K = kernel([[QQ(1), QQ(1)], [QQ(2), QQ(2)]], QQ)
    assert K.dim == 1
    assert K.contains({0: QQ(1), 1: QQ(-1)})
    with pytest.raises(ShapeError):
        kernel([], QQ)
    with pytest.raises(ShapeError):
        kernel([[QQ(1)], [QQ(1), QQ(2)]], QQ)


def test_operator_kernel_and_image():
    # projection onto the first coordinate of QQ^2
    images = {0: unit(0), 1: {}}
    assert operator_kernel(images, QQ, key=ordered).basis() == [unit(1)]
    assert operator_image(images, QQ, key=ordered).dim == 1


def test_fraction_free_rank(params_q):
    q = params_q['q']
    one = params_q.one
    singular = [{0: q, 1: one}, {0: q ** 2, 1: q}]
    regular = [{0: q, 1: one}, {0: one, 1: q}]
    assert fraction_free_rank(singular, 2, params_q) == 1
    assert fraction_free_rank(regular, 2, params_q) == 2
    fractions = [{0: one / q, 1: one}, {0: one, 1: q}]
    assert fraction_free_rank(fractions, 2, params_q) == 1
    assert fraction_free_rank([{0: QQ(1)}, {1: QQ(2)}], 2) == 2


def test_ideal_of_the_commutator(commutator_family):
    # Sym(x, y): the ideal has dimension 1 in degree 2 and 8 - 4 in degree 3
    truncation = ideal_truncation(commutator_family, 3)
    assert truncation.dim == 5
    echelon = ideal_rank(commutator_family, 3, graded_slice=True)
    assert echelon.dim == 4
    assert ideal_rank(commutator_family, 2, point={'q': 2}).dim == 1
    with pytest.raises(ShapeError):
        ideal_rank(commutator_family, 1)
