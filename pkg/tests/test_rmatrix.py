import pytest
from sympy.polys.domains import QQ

from quantum_pencils.algebra import matrix_generators
from quantum_pencils.poisson import delta_shift
from quantum_pencils.rmatrix import (check_hecke, check_qybe,
                                     elliptic_classical_limit_check,
                                     elliptic_quantum_family, family, flip,
                                     has_eigenvalue, hecke_s, i_minus_family,
                                     i_plus_family, iq_spans, j_hq_family,
                                     qybe_witness, re_family, s_w,
                                     same_relation_span, shift_family)
from quantum_pencils.sampling import SamplePoints
from quantum_pencils.scalar import ParamSet
from quantum_pencils.utils import ShapeError


def test_hecke_s_satisfies_qybe_and_hecke():
    S = hecke_s(2)
    assert check_qybe(S)
    assert check_hecke(S)


@pytest.mark.slow
def test_hecke_s_n3():
    S = hecke_s(3)
    assert check_qybe(S)
    assert check_hecke(S)


def test_specialized_operator():
    S = hecke_s(2).specialize({'q': 2})
    assert S.domain == QQ
    assert S.params is None
    assert S.q == 2
    assert check_qybe(S)
    assert check_hecke(S)
    assert check_hecke(hecke_s(2), point={'q': QQ(1, 3)})


def test_random_vectors_find_no_violation():
    S = hecke_s(3)
    assert qybe_witness(S, {'q': 3}, SamplePoints(seed=2)) is None


def test_flip():
    P = flip(3)
    assert P.is_flip()
    assert check_qybe(P)
    assert check_hecke(P, eigenvalues=(1, -1))
    assert not hecke_s(2).is_flip()


def test_inverse():
    S = hecke_s(2)
    inverse = S.inverse()
    for pair in S.pairs():
        assert inverse.apply(S.apply({pair: S.domain.one})) == \
            {pair: S.domain.one}


def test_doubled_cross_term_breaks_qybe(params_q):
    q = params_q['q']
    S = hecke_s(2, params_q, cross=2 * (q - params_q.one / q))
    assert qybe_witness(S) is not None


def test_deleted_cross_term_keeps_qybe_and_breaks_hecke(params_q):
    S = hecke_s(2, params_q, cross=0)
    assert check_qybe(S)
    assert not check_hecke(S)


def test_apply_checks_the_word_length():
    with pytest.raises(ShapeError):
        hecke_s(2).apply({(0,): QQ(1)})


def test_s_w(params_q):
    q = params_q['q']
    W = s_w(hecke_s(2, params_q))
    assert W.dim == 4
    assert check_qybe(W, point={'q': 2})
    assert has_eigenvalue(W, 1)
    assert has_eigenvalue(W, -q ** 2)
    assert has_eigenvalue(W, -params_q.one / q ** 2)
    assert not has_eigenvalue(W, q)
    assert has_eigenvalue(W, -4, point={'q': 2})


def test_iq_spans_n2():
    spans = iq_spans(2)
    assert spans.dims == (6, 10)
    assert spans.minus_matches
    assert spans.plus_matches
    assert spans.is_direct_sum


@pytest.mark.slow
def test_iq_spans_n3():
    spans = iq_spans(3, point={'q': 3})
    assert spans.dims == (36, 45)
    assert spans.minus_matches
    assert spans.plus_matches
    assert spans.is_direct_sum


def test_family_sizes():
    assert len(i_minus_family(2)) == 6
    assert len(i_plus_family(2)) == 10
    assert len(j_hq_family(2)) == 6
    assert len(elliptic_quantum_family()) == 6
    assert j_hq_family(2).kind == 'filtered'


def test_reflection_equation_family():
    F = re_family(hecke_s(2))
    assert F.generators == matrix_generators(2, letter='u')
    assert 0 < len(F) <= 16
    assert all(r.is_homogeneous() and r.degree() == 2 for r in F)
    with pytest.raises(ShapeError):
        re_family(hecke_s(2).specialize({'q': 2}))


def test_catalog_lookup():
    assert family('i_minus', 2).name == 'i_minus(2)'
    assert family('re', 2).name.startswith('re(')
    with pytest.raises(ValueError):
        family('o_minus', 2)


def test_j_hq_at_h0_is_i_minus():
    reduced = j_hq_family(2).substitute_params({'h': 0}, ParamSet(('q',)))
    assert same_relation_span(reduced, i_minus_family(2))


def test_shifted_i_minus_is_j_hq():
    shifted = shift_family(i_minus_family(2), delta_shift(2), 'h/(q-1)')
    assert shifted.kind == 'filtered'
    assert shifted.params.names == ('q', 'h')
    assert same_relation_span(shifted, j_hq_family(2))
    assert same_relation_span(shifted, j_hq_family(2), point={'q': 3, 'h': 5})


def test_plain_shift_is_not_j_hq():
    shifted = shift_family(i_minus_family(2), delta_shift(2), 'h')
    assert not same_relation_span(shifted, j_hq_family(2))


def test_elliptic_classical_limit():
    results = elliptic_classical_limit_check()
    assert len(results) == 6
    assert all(verdict for _, verdict in results)
