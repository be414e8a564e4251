import pytest
from sympy.polys.domains import QQ

from quantum_pencils.rmatrix import i_minus_family
from quantum_pencils.sampling import (BAD_VALUES, SamplePoints,
                                      denominators_of, point_str)
from quantum_pencils.scalar import scalar_eq
from quantum_pencils.utils import SpecializationError


def test_points_are_reproducible():
    a = SamplePoints(seed=3).points(('q', 'h'), 5)
    b = SamplePoints(seed=3).points(('q', 'h'), 5)
    assert a == b
    assert a != SamplePoints(seed=4).points(('q', 'h'), 5)


def test_points_avoid_bad_values():
    points = SamplePoints(seed=11, max_height=2).points(('q',), 50)
    assert all(p['q'] not in BAD_VALUES for p in points)


def test_points_avoid_zeros_of_denominators(params_q):
    sampler = SamplePoints(seed=5, max_height=2)
    points = sampler.points(('q',), 30, [params_q['q'] - 2])
    assert len(points) == 30
    assert all(p['q'] != 2 for p in points)


def test_fixed_values(params_q):
    sampler = SamplePoints(seed=1, fixed={'q': QQ(2)})
    assert all(p['q'] == 2 for p in sampler.points(('q', 'h'), 4))
    with pytest.raises(SpecializationError):
        sampler.point(('q',), [params_q['q'] - 2])
    assert sampler.rejected == [{'q': QQ(2)}]


def test_count_must_be_positive():
    with pytest.raises(ValueError):
        SamplePoints().points(('q',), 0)


def test_point_str():
    assert point_str({'q': QQ(1, 2), 'h': QQ(3)}) == 'h=3, q=1/2'
    assert point_str({}) == ''


def test_denominators_of_i_minus():
    family = i_minus_family(2)
    denominators = denominators_of(family.relations)
    assert len(denominators) == 1
    assert scalar_eq(denominators[0], family.params['q'])
