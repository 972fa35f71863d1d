import random
from fractions import Fraction

import pytest

from comkit.axioms import classify
from comkit.catalog import (arrangement_problem, chain_plus_point, coordinate_problem, fence_poset,
                            fibonacci_poset, hexagon_problem)
from comkit.exceptions import ConsistencyError, DimensionError, EmptyResultError, GuardExceeded, PreconditionError
from comkit.ranking import Poset, ranking_com
from comkit.realize import (AffineHyperplane, OpenPolyhedron, RealizationProblem, enumerate_cells,
                            realize_ranking, region_covectors)
from comkit.signs import MINUS, PLUS, ZERO, SignVector, popcount
from comkit.simplex import SimplexTableau, lp_strict_feasible, OPTIMAL, UNBOUNDED


def test_lp_without_constraints():
    assert lp_strict_feasible([], [], 3) == (0, 0, 0)


def test_lp_open_quadrant():
    x = lp_strict_feasible([([1, 1], 1)], [([1, 0], 0), ([0, 1], 0)], 2)
    assert x[0] + x[1] == 1
    assert x[0] > 0 and x[1] > 0


def test_lp_negative_coordinates():
    x = lp_strict_feasible([], [([-1, 0], 3), ([0, -1], Fraction(1, 2))], 2)
    assert x[0] < -3
    assert x[1] < Fraction(-1, 2)


def test_lp_infeasible():
    assert lp_strict_feasible([], [([1], 1), ([-1], 0)], 1) is None
    # x > 0 and -x > 0 only meet in the boundary
    assert lp_strict_feasible([], [([1], 0), ([-1], 0)], 1) is None
    assert lp_strict_feasible([([1], 1), ([1], 2)], [], 1) is None


def test_lp_redundant_equalities():
    x = lp_strict_feasible([([1, 1], 2), ([2, 2], 4)], [([1, -1], 0)], 2)
    assert x[0] + x[1] == 2
    assert x[0] > x[1]


def test_lp_dimension_check():
    with pytest.raises(DimensionError):
        lp_strict_feasible([([1, 1], 0)], [], 3)


def test_simplex_tableau():
    # maximize y1 subject to y1 + y2 = 4 after the artificial is pivoted out
    tableau = SimplexTableau([[1, 1]], [4])
    assert tableau.bland_primal([0, 0, -1], {0, 1, 2}) == OPTIMAL
    tableau.drive_out_artificials()
    assert tableau.bland_primal([1, 0, 0], {0, 1}) == OPTIMAL
    assert tableau.value([1, 0, 0]) == 4
    assert tableau.solution()[:2] == [4, 0]


def test_simplex_unbounded():
    tableau = SimplexTableau([[1, -1]], [1])
    tableau.bland_primal([0, 0, -1], {0, 1, 2})
    tableau.drive_out_artificials()
    assert tableau.bland_primal([0, 1, 0], {0, 1}) == UNBOUNDED


def test_hyperplane():
    h = AffineHyperplane([1, -1], Fraction(1, 2), "h")
    assert h.sign([1, 0]) == PLUS
    assert h.sign([0, 0]) == MINUS
    assert h.sign([Fraction(1, 2), 0]) == ZERO
    assert h.side(MINUS) == ((-1, 1), Fraction(-1, 2))
    with pytest.raises(PreconditionError):
        AffineHyperplane([0, 0], 1, "z")


def test_problem_dimensions():
    with pytest.raises(DimensionError):
        RealizationProblem([AffineHyperplane([1, 0], 0, "a"), AffineHyperplane([1], 0, "b")])
    with pytest.raises(DimensionError):
        RealizationProblem([AffineHyperplane([1, 0], 0, "a")], OpenPolyhedron([([1], 0)]))
    with pytest.raises(DimensionError):
        RealizationProblem([])


def test_arrangement_cells():
    problem = arrangement_problem()
    cells = enumerate_cells(problem)
    assert len(cells) == 29
    zeros = [popcount(x.zero_set) for x in cells]
    assert zeros.count(0) == 11
    assert zeros.count(1) == 14
    assert list(cells) == sorted(cells)
    for covector, point in cells.items():
        assert problem.witness_ok(covector, point)


def test_arrangement_is_a_com():
    report = classify(region_covectors(arrangement_problem()))
    assert report.is_com
    assert not report.is_om


def test_coordinate_lopsided():
    system = region_covectors(coordinate_problem())
    assert system.ground.labels == ("x", "y")
    assert system.to_strings() == ["0+", "+0", "++", "+-", "-+"]
    assert classify(system).is_lopsided


def test_central_arrangement_is_an_om():
    system = region_covectors(hexagon_problem())
    assert len(system) == 13
    assert SignVector("000") in system
    assert classify(system).is_om


def test_empty_region():
    problem = RealizationProblem([AffineHyperplane([1, 0], 0, "a")],
                                 OpenPolyhedron([([1, 0], 1), ([-1, 0], 0)]))
    with pytest.raises(EmptyResultError):
        enumerate_cells(problem)


def test_cell_guard():
    with pytest.raises(GuardExceeded):
        enumerate_cells(arrangement_problem(), guard=3)


def test_bad_witness_is_caught(monkeypatch):
    monkeypatch.setattr("comkit.realize.lp_strict_feasible", lambda eqs, sts, d: tuple(Fraction(7) for _ in range(d)))
    with pytest.raises(ConsistencyError):
        enumerate_cells(coordinate_problem())


@pytest.mark.parametrize("poset", [Poset.antichain(3), chain_plus_point(), fence_poset(), fibonacci_poset()],
                         ids=["antichain3", "chain_plus_point", "fence", "fibonacci"])
def test_ranking_coms_are_realizable(poset):
    assert region_covectors(realize_ranking(poset)) == ranking_com(poset)


def test_chain_has_no_braid_arrangement():
    with pytest.raises(EmptyResultError):
        realize_ranking(Poset.chain(3))


@pytest.mark.parametrize("seed", range(5))
def test_random_arrangements_are_coms(seed):
    rnd = random.Random(seed)
    coefficients = [c for c in range(-2, 3) if c]
    lines = [AffineHyperplane([rnd.choice(coefficients), rnd.choice(coefficients)], rnd.randint(-2, 2), "h%d" % i)
             for i in range(4)]
    region = OpenPolyhedron([([rnd.choice(coefficients), rnd.choice(coefficients)], -3)])
    problem = RealizationProblem(lines, region)
    cells = enumerate_cells(problem)
    for covector, point in cells.items():
        assert problem.witness_ok(covector, point)
    assert classify(region_covectors(problem)).is_com


def _random_normal(rnd, dimension):
    normal = [rnd.randint(-2, 2) for _ in range(dimension)]
    if not any(normal):
        normal[rnd.randrange(dimension)] = 1
    return normal


def _region_around(rnd, point, count):
    """Open halfspaces that all contain the given integer point."""
    constraints = []
    for _ in range(count):
        c = _random_normal(rnd, len(point))
        constraints.append((c, sum(a * b for a, b in zip(c, point)) - rnd.randint(1, 2)))
    return OpenPolyhedron(constraints)


@pytest.mark.parametrize("seed", range(200))
def test_random_restricted_arrangements(seed):
    rnd = random.Random(seed)
    dimension = rnd.randint(1, 3)
    hyperplanes = [AffineHyperplane(_random_normal(rnd, dimension), rnd.randint(-2, 2), "h%d" % i)
                   for i in range(rnd.randint(1, 6))]
    point = [rnd.randint(-2, 2) for _ in range(dimension)]
    problem = RealizationProblem(hyperplanes, _region_around(rnd, point, rnd.randint(0, 2)), dimension)
    cells = enumerate_cells(problem)
    for covector, witness in cells.items():
        assert problem.witness_ok(covector, witness)
    assert problem.sign_vector(point) in cells
    assert classify(region_covectors(problem)).is_com


@pytest.mark.parametrize("seed", range(40))
def test_random_central_arrangements_are_oms(seed):
    rnd = random.Random(seed)
    dimension = rnd.randint(1, 3)
    hyperplanes = [AffineHyperplane(_random_normal(rnd, dimension), 0, "h%d" % i)
                   for i in range(rnd.randint(1, 6))]
    system = region_covectors(RealizationProblem(hyperplanes, dimension=dimension))
    assert SignVector([ZERO] * len(hyperplanes)) in system
    assert classify(system).is_om


@pytest.mark.parametrize("seed", range(40))
def test_random_coordinate_arrangements_are_lopsided(seed):
    rnd = random.Random(seed)
    dimension = rnd.randint(1, 3)
    hyperplanes = []
    for axis in range(dimension):
        normal = [0] * dimension
        normal[axis] = 1
        hyperplanes.append(AffineHyperplane(normal, rnd.randint(-2, 2), "x%d" % axis))
    point = [rnd.randint(-2, 2) for _ in range(dimension)]
    problem = RealizationProblem(hyperplanes, _region_around(rnd, point, rnd.randint(0, 2)), dimension)
    assert classify(region_covectors(problem)).is_lopsided
