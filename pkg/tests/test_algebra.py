import pytest

from quantum_pencils.algebra import (GeneratorSet, NCPoly, RelationFamily,
                                     cpoly_from_ncpoly, cpoly_parse,
                                     cpoly_str, export_family, load_family,
                                     matrix_generators, ncpoly_parse,
                                     ncpoly_str, word_key)
from quantum_pencils.rmatrix import i_minus_family, j_hq_family
from quantum_pencils.scalar import ParamSet, scalar_eq
from quantum_pencils.utils import ParseError, ShapeError


@pytest.fixture
def xy(params_q):
    generators = GeneratorSet(('x', 'y'))
    x = NCPoly.gen(generators, params_q, 'x')
    y = NCPoly.gen(generators, params_q, 'y')
    return generators, x, y


def test_generator_set():
    g = GeneratorSet(('x', 'y', 'z'))
    assert g.index('z') == 2
    assert len(g.words(2)) == 9
    assert g.words_upto(1) == [(0,), (1,), (2,), ()]
    assert g.word_str((0, 2)) == 'x*z'
    with pytest.raises(ShapeError):
        g.index('t')
    with pytest.raises(ShapeError):
        GeneratorSet(('x', 'x'))
    with pytest.raises(ShapeError):
        GeneratorSet(())


def test_matrix_generators_are_row_major():
    assert matrix_generators(2).names == ('a_1^1', 'a_1^2', 'a_2^1', 'a_2^2')
    assert matrix_generators(3).index('a_2^3') == 5


def test_word_order():
    assert sorted([(0,), (), (1, 0), (0, 1)], key=word_key) == \
        [(0, 1), (1, 0), (0,), ()]


def test_free_algebra_is_noncommutative(xy, params_q):
    _, x, y = xy
    assert x * y != y * x
    assert (x * y).terms == {(0, 1): params_q.one}
    commutator = x * y - y * x
    assert commutator.degree() == 2
    assert commutator.is_homogeneous()
    assert not cpoly_from_ncpoly(commutator)


def test_parts_and_reversal(xy, params_q):
    _, x, y = xy
    q = params_q['q']
    p = x * y - (y * x).scale(q) + x + NCPoly.constant(x.generators, params_q,
                                                        q)
    assert p.degree() == 2
    assert not p.is_homogeneous()
    assert p.top() == x * y - (y * x).scale(q)
    assert p.part(0) == NCPoly.constant(x.generators, params_q, q)
    assert p.reversed().part(2) == y * x - (x * y).scale(q)


def test_substitute(xy, params_q):
    _, x, y = xy
    shift = x + NCPoly.constant(x.generators, params_q, params_q['q'])
    assert (x * y).substitute({0: shift}) == x * y + y.scale(params_q['q'])


def test_specialize(xy, params_q):
    _, x, y = xy
    p = (x * y).scale(params_q['q'] - 2) + y
    assert p.specialize({'q': 2}) == {(1,): 1}


def test_text_round_trip(xy, params_q):
    generators, x, y = xy
    q = params_q['q']
    p = x * y - (y * x).scale(q) + NCPoly.constant(generators, params_q, 1)
    assert ncpoly_parse(ncpoly_str(p), generators, params_q) == p
    hand = ncpoly_parse('x*y - q*y*x + 1', generators, params_q)
    assert hand == p
    assert ncpoly_str(NCPoly(generators, params_q)) == '0'


def test_parse_errors(xy, params_q):
    generators, _, _ = xy
    with pytest.raises(ParseError):
        ncpoly_parse('x*(y', generators, params_q)
    with pytest.raises(ParseError):
        ncpoly_parse('x**y', generators, params_q)


def test_commutative_polynomials(params_q):
    generators = GeneratorSet(('x', 'y'))
    p = cpoly_parse('y*x - q*x*y', generators, params_q)
    assert cpoly_str(p, generators) == '(-q+1)*x*y'


def test_relation_family_watchdogs(xy, params_q):
    generators, x, y = xy
    with pytest.raises(ValueError):
        RelationFamily('f', generators, params_q, [x * y], kind='weird')
    with pytest.raises(ShapeError):
        RelationFamily('f', generators, params_q, [x * x * y], 'filtered')
    with pytest.raises(ShapeError):
        RelationFamily('f', generators, params_q, [x * y + x])
    family = RelationFamily('f', generators, params_q,
                            [x * y - y * x, x - x], 'graded')
    assert len(family) == 1


def test_top_parts(xy, params_q):
    generators, x, y = xy
    family = RelationFamily('f', generators, params_q, [x * y - y * x - x],
                            'filtered')
    top = family.top_parts()
    assert top.kind == 'graded'
    assert top.relations == [x * y - y * x]


def test_substitute_params_drops_h():
    family = j_hq_family(2)
    reduced = family.substitute_params({'h': 0}, ParamSet(('q',)))
    assert reduced.kind == 'filtered'
    assert all(r.is_homogeneous() and r.degree() == 2 for r in reduced)
    assert len(reduced) == len(family)


def test_export_and_load():
    family = i_minus_family(2)
    loaded = load_family(export_family(family))
    assert loaded.name == family.name
    assert loaded.kind == 'graded'
    assert loaded.generators == family.generators
    assert [str(r) for r in loaded] == [str(r) for r in family]


def test_export_and_load_without_parameters():
    generators = GeneratorSet(('x', 'y'))
    params = ParamSet(())
    x = NCPoly.gen(generators, params, 'x')
    y = NCPoly.gen(generators, params, 'y')
    family = RelationFamily('sym', generators, params, [x * y - y * x])
    loaded = load_family(export_family(family))
    assert loaded.params.names == ()
    assert loaded.relations == family.relations


def test_load_from_file(tmp_path):
    path = tmp_path / 'weyl.rel'
    path.write_text('# Weyl algebra\n'
                    'name = weyl\n'
                    'kind = filtered\n'
                    'parameters = c\n'
                    'generators = x, y\n'
                    'relation = x*y - y*x - c\n')
    family = load_family(str(path))
    assert family.kind == 'filtered'
    constant = family.relations[0].terms[()]
    assert scalar_eq(constant, -family.params['c'])


def test_load_errors_name_the_line(tmp_path):
    path = tmp_path / 'broken.rel'
    path.write_text('name = broken\n'
                    'generators = x, y\n'
                    'relation = x*y - z\n')
    with pytest.raises(ParseError) as e:
        load_family(str(path))
    assert e.value.lineno == 3
    assert str(path) in str(e.value)

    with pytest.raises(ParseError) as e:
        load_family('name = f\ngenerators = x\ncolour = blue\n')
    assert e.value.lineno == 3

    with pytest.raises(ParseError):
        load_family('name = f\nrelation = x*x\n')
