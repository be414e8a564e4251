import pytest
from sympy import groebner, symbols

from quantum_pencils.algebra import cpoly_ring, GeneratorSet
from quantum_pencils.poisson import (BracketTable, alternating_normalization,
                                     constraints_str, cybe_defect,
                                     delta_shift, diagonal_monomials,
                                     elliptic, elliptic_constraints,
                                     elliptic_shift, gl, in_principal_ideal,
                                     is_ad_invariant, is_alternating,
                                     jacobi_violations, kks, linear1,
                                     load_bracket_table, r_twisted,
                                     r_twisted_check, rmatrix_bracket_orbit_check,
                                     shift_and_linearize, sklyanin2, sl,
                                     table_str)
from quantum_pencils.scalar import ParamSet
from quantum_pencils.utils import ParseError, ShapeError


@pytest.mark.parametrize('build', [sklyanin2, linear1, gl])
def test_catalog_tables_satisfy_jacobi(build):
    assert jacobi_violations(build(2)) == []


@pytest.mark.slow
@pytest.mark.parametrize('build', [sklyanin2, linear1, gl])
def test_catalog_tables_satisfy_jacobi_n3(build):
    assert jacobi_violations(build(3)) == []


def test_pencil_is_compatible():
    assert jacobi_violations(sklyanin2(2), other=linear1(2)) == []


def test_shift_linearizes_the_quadratic_bracket():
    shifted = shift_and_linearize(sklyanin2(2), delta_shift(2))
    assert shifted.orders[0] == sklyanin2(2)
    assert shifted.linear == linear1(2)
    assert shifted.linear.is_linear()
    assert shifted.degree_in_h() == 1
    assert not shifted.orders[2].table


def test_no_diagonal_monomials():
    assert diagonal_monomials(sklyanin2(2), 2) == []
    assert diagonal_monomials(sklyanin2(3), 3) == []


def test_linear_bracket_is_r_twisted_gl():
    assert r_twisted_check(2)
    assert r_twisted_check(3)
    assert r_twisted(2) == linear1(2)


def test_r_twist_needs_the_sign():
    assert not r_twisted_check(2, sign=lambda x: 1)


def test_elliptic_constraints():
    basis = elliptic_constraints()
    J12, J23, J31 = symbols('J12 J23 J31')
    expected = groebner([J12 + J23 + J31], J12, J23, J31, order='grevlex')
    assert list(basis.exprs) == list(expected.exprs)
    assert constraints_str(basis) == ['J12+J23+J31']


def test_elliptic_jacobi_holds_only_on_the_constraint():
    T = elliptic()
    assert jacobi_violations(T) != []
    assert jacobi_violations(T, modulo=elliptic_constraints(T)) == []


def test_elliptic_shift_is_linear():
    shifted = shift_and_linearize(elliptic(), elliptic_shift())
    assert shifted.linear.is_linear()
    assert shifted.linear.table


def test_elliptic_pencil_is_compatible_on_the_constraint():
    T = elliptic()
    linear = shift_and_linearize(T, elliptic_shift()).linear
    assert jacobi_violations(linear) == []
    assert jacobi_violations(linear, modulo=elliptic_constraints(T),
                             other=T) == []


def test_bracket_table_watchdogs():
    generators = GeneratorSet(('x', 'y'))
    params = ParamSet(())
    with pytest.raises(ShapeError):
        BracketTable('t', generators, params, {('x', 'x'): 'x'})
    with pytest.raises(ShapeError):
        BracketTable('t', generators, params,
                     {('x', 'y'): 'x', ('y', 'x'): 'x'})
    T = BracketTable('t', generators, params,
                     {('x', 'y'): 'x', ('y', 'x'): '-x'})
    assert T.entry(1, 0) == -T.entry(0, 1)


def test_shift_needs_quadratic_tables():
    generators = GeneratorSet(('x', 'y'))
    T = BracketTable('cubic', generators, ParamSet(()), {('x', 'y'): 'x*x*y'})
    with pytest.raises(ShapeError):
        shift_and_linearize(T, {'x': 1})


def test_table_text_round_trip(tmp_path):
    T = sklyanin2(2)
    assert load_bracket_table(table_str(T)) == T
    path = tmp_path / 'sklyanin.bracket'
    path.write_text(table_str(T))
    assert load_bracket_table(str(path)) == T
    E = elliptic()
    assert load_bracket_table(table_str(E)) == E


def test_table_text_errors():
    with pytest.raises(ParseError):
        load_bracket_table('name = t\n{x, y} = x\n')
    with pytest.raises(ParseError) as e:
        load_bracket_table('generators = x, y\n{x, y} = x*z\n')
    assert e.value.lineno == 2


def test_sl2_casimir():
    L = sl(2)
    assert L.basis == ['h_1', 'e_1^2', 'e_2^1']
    h, e, f = cpoly_ring(GeneratorSet(L.basis), L.params).gens
    half = L.params.one / 2
    assert L.casimir() == (h * h).mul_ground(half) + 2 * e * f


def test_kks_is_poisson():
    assert jacobi_violations(kks(sl(2))) == []


def test_sl2_cybe_defect():
    L = sl(2)
    defect = cybe_defect(L)
    assert defect
    assert is_ad_invariant(L, defect)
    assert is_alternating(defect)
    assert alternating_normalization(L, defect) is not None


@pytest.mark.slow
def test_sl3_cybe_defect():
    L = sl(3)
    defect = cybe_defect(L)
    assert defect
    assert is_ad_invariant(L, defect)
    assert alternating_normalization(L, defect) is None


def test_principal_ideal_membership():
    L = sl(2)
    C = L.casimir()
    h, e, f = C.ring.gens
    assert in_principal_ideal(C * e, C)
    assert in_principal_ideal(C.ring.zero, C)
    assert not in_principal_ideal(e * f * h, C)
    assert not in_principal_ideal(h, C)
    with pytest.raises(ShapeError):
        in_principal_ideal(h * h + e, C)


def test_r_matrix_bracket_on_the_orbit():
    result = rmatrix_bracket_orbit_check()
    assert result['jacobi_in_ideal']
    assert result['casimir_in_ideal']
    assert result['witnesses'] == []


def test_orbit_control_with_a_wrong_invariant():
    L = sl(2)
    _, e, f = cpoly_ring(GeneratorSet(L.basis), L.params).gens
    result = rmatrix_bracket_orbit_check(L, invariant=e * f)
    assert not result['casimir_in_ideal']
    assert result['witnesses']
