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

import numpy as np
from sympy.polys.domains import QQ

from .scalar import scalar_specialize
from .utils import SpecializationError

log = logging.getLogger(__name__)

# Values never used as sample points for a generic parameter
BAD_VALUES = (QQ(0), QQ(1), QQ(-1))


class SamplePoints():
    """
    Seeded source of random rational parameter values with small
    numerators and denominators, avoiding 0, +-1 and the zeros of
    every denominator it is told about.
    """

    def __init__(self, seed=1, max_height=9, fixed=None):
        """
        :param seed: Seed of the numpy Generator. Fully determines the points.
        :param max_height: Bound on |numerator| and denominator.
        :param fixed: dict name -> rational kept fixed at every point
                      (parameter specializations from the configuration).
        """
        self.seed = seed
        self.max_height = max_height
        self.fixed = dict(fixed or {})
        self.rng = np.random.default_rng(seed)
        self.rejected = []

    def _draw(self):
        while True:
            numerator = int(self.rng.integers(-self.max_height,
                                              self.max_height + 1))
            denominator = int(self.rng.integers(1, self.max_height + 1))
            value = QQ(numerator, denominator)
            if value not in BAD_VALUES:
                return value

    def point(self, names, denominators=()):
        """
        One random point.

        :param names: Parameters to assign.
        :param denominators: Scalars whose value must be finite and nonzero
                             at the point (their numerators and denominators
                             are both checked).
        :return: dict name -> QQ.
        """
        while True:
            point = {name: self.fixed[name] if name in self.fixed
                     else self._draw() for name in names}
            try:
                for d in denominators:
                    if not scalar_specialize(d, point):
                        raise SpecializationError('vanishes', point)
            except SpecializationError:
                self.rejected.append(point)
                log.info('rejected sample point %s (hits a pole or a zero)',
                         ', '.join('%s=%s' % (k, point[k])
                                   for k in sorted(point)))
                if not set(names) - set(self.fixed):
                    raise
                continue
            return point

    def points(self, names, count, denominators=()):
        if count < 1:
            raise ValueError('number of sample points must be strictly '
                             'positive, got %s' % count)
        return [self.point(names, denominators) for _ in range(count)]


def point_str(point):
    return ', '.join('%s=%s' % (k, point[k]) for k in sorted(point))


def denominators_of(polys):
    """All distinct coefficient denominators of a list of NCPoly, as Scalars."""
    seen = {}
    for p in polys:
        for c in p.terms.values():
            if c.denom != c.field.ring.one:
                d = c.field.new(c.denom)
                seen[str(d)] = d
    return [seen[k] for k in sorted(seen)]
