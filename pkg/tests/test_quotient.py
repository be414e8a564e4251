import pytest

from quantum_pencils.algebra import (GeneratorSet, NCPoly, RelationFamily,
                                     cpoly_ring, ncpoly_parse)
from quantum_pencils.braided import sl2_nu_data
from quantum_pencils.linalg import Subspace
from quantum_pencils.quotient import (NuData, QuotientPresentation,
                                      classical_point_dims,
                                      commutative_hilbert, first_type_ideal,
                                      flatness_verdict, free_commutative_dims,
                                      free_dims, hilbert, overlap_space,
                                      pbw_nu_check, u_hq_family, vector_str)
from quantum_pencils.rmatrix import i_minus_family, j_hq_family
from quantum_pencils.sampling import SamplePoints
from quantum_pencils.scalar import ParamSet
from quantum_pencils.utils import ShapeError


def free_family(names, relations_text, kind='graded', params=()):
    generators = GeneratorSet(names)
    params = ParamSet(params)
    relations = [ncpoly_parse(text, generators, params)
                 for text in relations_text]
    return RelationFamily('test', generators, params, relations, kind)


def test_reference_dimensions():
    assert free_dims(2, 3) == [1, 2, 4, 8]
    assert free_dims(2, 2, cumulative=True) == [1, 3, 7]
    assert free_commutative_dims(4, 3) == [1, 4, 10, 20]
    assert free_commutative_dims(4, 3, cumulative=True) == [1, 5, 15, 35]


def test_truncation_degree_watchdog():
    with pytest.raises(ShapeError):
        QuotientPresentation(i_minus_family(2), 1)


def test_quantum_matrix_space_is_flat():
    Q = QuotientPresentation(i_minus_family(2), 3)
    result = hilbert(Q)
    assert result.dims == [1, 4, 10, 20]
    assert result.mode == 'symbolic'
    assert not result.collapse


def test_probabilistic_mode():
    Q = QuotientPresentation(i_minus_family(2), 3)
    result = hilbert(Q, 'probabilistic', SamplePoints(seed=3), 3)
    assert result.dims == [1, 4, 10, 20]
    assert len(result.points) == 3
    assert result.per_point == [[1, 4, 10, 20]] * 3
    assert result.as_dict()['dims_per_point'] == result.per_point
    with pytest.raises(ValueError):
        hilbert(Q, 'probabilistic', SamplePoints(), 2)
    with pytest.raises(ValueError):
        hilbert(Q, 'numeric')


def test_families_without_parameters_are_always_symbolic():
    Q = QuotientPresentation(free_family(('x', 'y'), ['x*y - y*x']), 3)
    result = hilbert(Q, 'probabilistic', SamplePoints(), 3)
    assert result.mode == 'symbolic'
    assert result.dims == [1, 2, 3, 4]


def test_filtered_quotients_count_cumulatively():
    weyl = free_family(('x', 'y'), ['x*y - y*x - 1'], 'filtered')
    result = hilbert(QuotientPresentation(weyl, 3))
    assert result.cumulative
    assert result.dims == [1, 3, 6, 10]


def rebuild(combination, family):
    """sum c * x*r*y in the free algebra."""
    generators, params = family.generators, family.params
    total = NCPoly(generators, params)
    for (left, index, right), c in combination.items():
        total = total + (NCPoly.word(generators, params, left, c)
                         * family.relations[index]
                         * NCPoly.word(generators, params, right))
    return total


def test_collapse():
    family = free_family(('x',), ['x*x - x', 'x*x - x - 1'], 'filtered')
    Q = QuotientPresentation(family, 2)
    result = hilbert(Q)
    assert result.collapse
    total = rebuild(result.witness_combination, family)
    assert list(total.terms) == [()]
    assert '[' in result.witness
    assert result.witness.endswith('= %s' % vector_str(total.terms,
                                                       family.generators))
    verdict = flatness_verdict(Q, free_commutative_dims(1, 2, True))
    assert not verdict.passed
    assert verdict.witness == result.witness


def test_collapse_in_two_generators():
    family = free_family(('x', 'y'), ['x*y - y*x - 1', 'x*y - y*x'],
                         'filtered')
    result = hilbert(QuotientPresentation(family, 3))
    assert result.collapse
    assert list(rebuild(result.witness_combination, family).terms) == [()]


def test_collapse_at_sample_points():
    family = free_family(('x',), ['x*x - c*x', 'x*x - c*x - c'], 'filtered',
                         params=('c',))
    result = hilbert(QuotientPresentation(family, 2), 'probabilistic',
                     SamplePoints(seed=3))
    assert result.collapse
    assert result.witness_combination
    assert result.witness.endswith(')')


def test_j_hq_is_flat():
    Q = QuotientPresentation(j_hq_family(2), 3)
    verdict = flatness_verdict(Q, free_commutative_dims(4, 3, True))
    assert verdict.passed
    assert verdict.as_dict()['verdict'] == 'PASS'


def test_perturbed_row_relation_is_not_flat(params_q):
    perturbed = i_minus_family(2, params_q, row_q=params_q['q'] ** 2)
    verdict = flatness_verdict(QuotientPresentation(perturbed, 3),
                               free_commutative_dims(4, 3),
                               reference_family=i_minus_family(2, params_q))
    assert not verdict.passed
    assert verdict.first_bad == 3
    assert verdict.hilbert.dims[:3] == [1, 4, 10]
    assert verdict.as_dict()['first_bad_degree'] == 3


def test_reference_must_cover_the_truncation():
    Q = QuotientPresentation(i_minus_family(2), 3)
    with pytest.raises(ShapeError):
        flatness_verdict(Q, [1, 4, 10])


def test_commutative_oracle(params_q):
    generators = GeneratorSet(('x', 'y'))
    x, y = cpoly_ring(generators, params_q).gens
    assert commutative_hilbert([x * y], 2, 3) == [1, 2, 2, 2]
    assert commutative_hilbert([], 2, 2) == [1, 2, 3]
    assert commutative_hilbert([x * y], 2, 2, cumulative=True) == [1, 3, 5]


def lie_nu_data():
    """
    [x, y] = y, [x, z] = a z, [y, z] = x on Lambda^2; Jacobi holds iff a = -1.
    """
    generators = GeneratorSet(('x', 'y', 'z'))
    params = ParamSet(('a',))
    one, a = params.one, params['a']
    I = Subspace((generators, 2), params.domain,
                 [{(i, j): one, (j, i): -one}
                  for i, j in ((0, 1), (0, 2), (1, 2))])
    brackets = {(0, 1): {1: one}, (0, 2): {2: a}, (1, 2): {0: one}}
    nu1 = {}
    for (i, j), image in brackets.items():
        nu1[(i, j)] = {g: c / 2 for g, c in image.items()}
        nu1[(j, i)] = {g: -c / 2 for g, c in image.items()}
    return NuData(generators, params, I, nu1, {}, 'lie')


def test_nu_data_relations():
    family = lie_nu_data().relations()
    assert family.kind == 'filtered'
    assert len(family) == 3
    assert all(r.degree() == 2 for r in family)


def test_overlap_of_the_exterior_square():
    assert overlap_space(lie_nu_data().I).dim == 1


def test_pbw_conditions_recover_jacobi():
    verdict = pbw_nu_check(lie_nu_data())
    assert verdict.overlap_dim == 1
    assert not verdict.identically
    assert verdict.consistent
    assert verdict.as_dict()['constraints'] == ['a+1']


def test_nu_data_watchdog():
    generators = GeneratorSet(('x', 'y'))
    params = ParamSet(())
    I = Subspace((generators, 3), params.domain)
    with pytest.raises(ShapeError):
        NuData(generators, params, I, {}, {})


def test_sl2_pbw_conditions(bracket, classical_bracket):
    assert pbw_nu_check(sl2_nu_data(bracket, zero=True)).identically
    assert pbw_nu_check(sl2_nu_data(classical_bracket)).identically
    quantum = pbw_nu_check(sl2_nu_data(bracket))
    assert quantum.consistent


def test_u_hq_is_flat(bracket):
    family = u_hq_family(bracket)
    assert family.kind == 'filtered'
    assert len(family) == 3
    verdict = flatness_verdict(QuotientPresentation(family, 3),
                               free_commutative_dims(3, 3, cumulative=True))
    assert verdict.passed


def test_first_type_quotient_has_square_dimensions(bracket):
    Q = first_type_ideal(bracket, degree=3)
    assert len(Q.family) == 4
    verdict = flatness_verdict(Q, [(d + 1) ** 2 for d in range(4)],
                               'probabilistic', SamplePoints(seed=9), 3)
    assert verdict.passed


def test_classical_point_of_i_minus():
    dims, oracle = classical_point_dims(i_minus_family(2), 3, {'q': 1})
    assert dims == oracle == [1, 4, 10, 20]


def test_classical_point_of_j_hq():
    dims, oracle = classical_point_dims(j_hq_family(2), 3,
                                        {'q': 1, 'h': 0})
    assert dims == oracle == [1, 5, 15, 35]


def test_classical_point_of_first_type(classical_bracket):
    family = first_type_ideal(classical_bracket, degree=3).family
    dims, oracle = classical_point_dims(family, 3, {'q': 1, 'M': 1,
                                                    'h': 0, 'c0': 2})
    assert dims == oracle == [1, 4, 9, 16]


def test_classical_point_needs_every_parameter():
    with pytest.raises(ShapeError):
        classical_point_dims(j_hq_family(2), 2, {'q': 1})


@pytest.mark.parametrize('relations_text', [
    ['x*y - y*x - c'],
    ['x*y - y*x - c*x'],
])
def test_filtered_dims_grow_below_the_free_algebra(relations_text):
    family = free_family(['x', 'y'], relations_text, 'filtered', ('c',))
    dims = hilbert(QuotientPresentation(family, 4)).dims
    assert all(a <= b for a, b in zip(dims, dims[1:]))
    assert all(d <= f for d, f in zip(dims, free_dims(2, 4,
                                                      cumulative=True)))


def test_u_hq_dims_grow_below_the_free_algebra(bracket):
    dims = hilbert(QuotientPresentation(u_hq_family(bracket), 3)).dims
    assert dims == sorted(dims)
    assert all(d <= f for d, f in zip(dims, free_dims(3, 3,
                                                      cumulative=True)))
