"""
Realizable COMs: affine hyperplane arrangements restricted to an open
convex polyhedron, with exact rational cell enumeration.
"""
from __future__ import absolute_import, division, print_function

from collections import OrderedDict
from fractions import Fraction

import logging

from comkit.exceptions import ConsistencyError, DimensionError, EmptyResultError, PreconditionError, check_guard
from comkit.signs import MINUS, PLUS, ZERO, GroundSet, SignSystem, SignVector
from comkit.simplex import lp_strict_feasible
from comkit.utils import time_call

_LOG = logging.getLogger(__name__)


def _rational_vector(values):
    return tuple(Fraction(v) for v in values)


def _dot(a, x):
    return sum(u * v for u, v in zip(a, x))


class AffineHyperplane(object):
    """{x : normal . x = offset}; the positive side is normal . x > offset."""

    def __init__(self, normal, offset, label):
        self.normal = _rational_vector(normal)
        self.offset = Fraction(offset)
        self.label = str(label)
        if not any(self.normal):
            raise PreconditionError("Hyperplane %s has a zero normal" % self.label, locator=self.label)

    @property
    def dimension(self):
        return len(self.normal)

    def sign(self, x):
        value = _dot(self.normal, x) - self.offset
        if value > 0:
            return PLUS
        if value < 0:
            return MINUS
        return ZERO

    def side(self, sign):
        """The strict constraint (c, r) meaning c . x > r for the given open side."""
        return tuple(sign * v for v in self.normal), sign * self.offset

    def __repr__(self):
        return "AffineHyperplane(%s: %s | %s)" % (self.label, " ".join(str(v) for v in self.normal), self.offset)


class OpenPolyhedron(object):
    """Intersection of open halfspaces c . x > r; no constraints means the whole space."""

    def __init__(self, strict_constraints=()):
        self.strict_constraints = [(_rational_vector(c), Fraction(r)) for c, r in strict_constraints]

    def contains(self, x):
        return all(_dot(c, x) > r for c, r in self.strict_constraints)

    def __len__(self):
        return len(self.strict_constraints)


class RealizationProblem(object):
    def __init__(self, hyperplanes, region=None, dimension=None):
        self.hyperplanes = list(hyperplanes)
        self.region = region if region is not None else OpenPolyhedron()
        if dimension is None:
            if not self.hyperplanes:
                raise DimensionError("Dimension is needed for an empty arrangement")
            dimension = self.hyperplanes[0].dimension
        self.dimension = dimension
        for h in self.hyperplanes:
            if h.dimension != dimension:
                raise DimensionError("Hyperplane %s has dimension %d, expected %d" % (
                    h.label, h.dimension, dimension), locator=h.label)
        for c, _ in self.region.strict_constraints:
            if len(c) != dimension:
                raise DimensionError("Region constraint of dimension %d, expected %d" % (len(c), dimension))

    @property
    def ground(self):
        return GroundSet([h.label for h in self.hyperplanes])

    def sign_vector(self, x):
        return SignVector([h.sign(x) for h in self.hyperplanes])

    def witness_ok(self, covector, x):
        return self.region.contains(x) and self.sign_vector(x) == covector


def enumerate_cells(problem, guard=None):
    """Map every covector of the restricted arrangement to an exact witness point.

    Signs are assigned element by element; an infeasible partial assignment
    prunes everything below it.
    """
    check_guard(len(problem.hyperplanes), guard)
    if not problem.hyperplanes:
        raise EmptyResultError("The arrangement has no hyperplanes")
    region = list(problem.region.strict_constraints)
    root = lp_strict_feasible([], region, problem.dimension)
    if root is None:
        raise EmptyResultError("The region is empty")
    cells = {}
    calls = [0]

    def extend(prefix, equalities, stricts, witness):
        i = len(prefix)
        if i == len(problem.hyperplanes):
            cells[SignVector(prefix)] = witness
            return
        h = problem.hyperplanes[i]
        for sign in (ZERO, PLUS, MINUS):
            if sign == ZERO:
                eqs, sts = equalities + [(h.normal, h.offset)], stricts
            else:
                eqs, sts = equalities, stricts + [h.side(sign)]
            calls[0] += 1
            point = lp_strict_feasible(eqs, sts, problem.dimension)
            if point is not None:
                extend(prefix + [sign], eqs, sts, point)

    extend([], [], region, root)
    for covector, witness in cells.items():
        if not problem.witness_ok(covector, witness):
            raise ConsistencyError("Witness %s does not realize %s" % (witness, covector))
    _LOG.debug("%d cells from %d feasibility programs", len(cells), calls[0])
    return OrderedDict(sorted(cells.items(), key=lambda kv: kv[0].sort_key))


@time_call
def region_covectors(problem, guard=None):
    return SignSystem(problem.ground, enumerate_cells(problem, guard=guard).keys())


def realize_ranking(poset):
    """The braid arrangement of the incomparable pairs, restricted to the order cone of the poset."""
    n = poset.n

    def unit_difference(a, b):
        vec = [0] * n
        vec[poset.index[b]] = 1
        vec[poset.index[a]] = -1
        return vec

    hyperplanes = [AffineHyperplane(unit_difference(a, b), 0, poset.pair_label(a, b))
                   for a, b in poset.incomparable_pairs()]
    if not hyperplanes:
        raise EmptyResultError("A chain has an empty braid arrangement")
    region = OpenPolyhedron((unit_difference(a, b), 0) for a, b in sorted(poset.covers))
    return RealizationProblem(hyperplanes, region, n)
