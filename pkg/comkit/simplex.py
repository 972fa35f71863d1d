"""
Exact rational two-phase simplex with Bland's rule, used to decide strict
feasibility of the linear systems behind realizable COMs.
"""
from __future__ import absolute_import, division, print_function

from fractions import Fraction

import logging

from comkit.exceptions import ConsistencyError, DimensionError

_LOG = logging.getLogger(__name__)

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"


class SimplexTableau(object):
    """Dense tableau for  A y = b, y >= 0  with b >= 0 and an artificial basis."""

    def __init__(self, rows, rhs):
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        self.rows = []
        for row, b in zip(rows, rhs):
            row = [Fraction(v) for v in row]
            b = Fraction(b)
            if b < 0:
                row = [-v for v in row]
                b = -b
            self.rows.append(row + [b])
        # artificial columns n .. n+m-1 form the starting basis
        for i, row in enumerate(self.rows):
            rhs_value = row.pop()
            row.extend(Fraction(1) if k == i else Fraction(0) for k in range(self.m))
            row.append(rhs_value)
        self.basis = [self.n + i for i in range(self.m)]
        self.pivots = 0

    @property
    def width(self):
        return self.n + self.m

    def rhs(self, i):
        return self.rows[i][-1]

    def pivot(self, i, j):
        piv = self.rows[i][j]
        self.rows[i] = [v / piv for v in self.rows[i]]
        for k in range(len(self.rows)):
            if k != i and self.rows[k][j] != 0:
                f = self.rows[k][j]
                self.rows[k] = [a - f * b for a, b in zip(self.rows[k], self.rows[i])]
        self.basis[i] = j
        self.pivots += 1

    def reduced_costs(self, cost):
        costs = []
        for j in range(self.width):
            z = cost[j] - sum(cost[self.basis[i]] * self.rows[i][j] for i in range(len(self.rows)))
            costs.append(z)
        return costs

    def bland_primal(self, cost, allowed):
        """Maximize cost . y over the allowed columns."""
        while True:
            reduced = self.reduced_costs(cost)
            entering = next((j for j in range(self.width) if j in allowed and reduced[j] > 0), None)
            if entering is None:
                return OPTIMAL
            candidates = [(self.rhs(i) / self.rows[i][entering], self.basis[i], i)
                          for i in range(len(self.rows)) if self.rows[i][entering] > 0]
            if not candidates:
                return UNBOUNDED
            _, _, leaving = min(candidates)
            self.pivot(leaving, entering)

    def value(self, cost):
        return sum(cost[self.basis[i]] * self.rhs(i) for i in range(len(self.rows)))

    def solution(self):
        values = [Fraction(0)] * self.width
        for i, j in enumerate(self.basis):
            values[j] = self.rhs(i)
        return values

    def drive_out_artificials(self):
        """Pivot basic artificials out of the basis; drop the rows where that is impossible."""
        i = 0
        while i < len(self.rows):
            if self.basis[i] >= self.n:
                j = next((k for k in range(self.n) if self.rows[i][k] != 0), None)
                if j is None:
                    del self.rows[i]
                    del self.basis[i]
                    continue
                self.pivot(i, j)
            i += 1


def _dot(a, x):
    return sum(u * v for u, v in zip(a, x))


def lp_strict_feasible(equalities, stricts, d):
    """A rational x with a.x = b for every (a, b) and c.x > r for every (c, r), or None.

    x is split as p - q with p, q >= 0; t <= 1 is maximized subject to
    c.x - r >= t, and the strict system is solvable iff the optimum is positive.
    """
    equalities = [([Fraction(v) for v in a], Fraction(b)) for a, b in equalities]
    stricts = [([Fraction(v) for v in c], Fraction(r)) for c, r in stricts]
    for vec, _ in equalities + stricts:
        if len(vec) != d:
            raise DimensionError("Constraint of length %d in dimension %d" % (len(vec), d))
    if not equalities and not stricts:
        return tuple(Fraction(0) for _ in range(d))

    k = len(stricts)
    # columns: p (d), q (d), t, s (k), w
    t_col = 2 * d
    s_col = t_col + 1
    w_col = s_col + k
    n = w_col + 1
    rows, rhs = [], []
    for a, b in equalities:
        rows.append(list(a) + [-v for v in a] + [0] * (n - 2 * d))
        rhs.append(b)
    for idx, (c, r) in enumerate(stricts):
        row = list(c) + [-v for v in c] + [0] * (n - 2 * d)
        row[t_col] = -1
        row[s_col + idx] = -1
        rows.append(row)
        rhs.append(r)
    cap = [0] * n
    cap[t_col] = 1
    cap[w_col] = 1
    rows.append(cap)
    rhs.append(1)

    tableau = SimplexTableau(rows, rhs)
    phase_one = [Fraction(0)] * n + [Fraction(-1)] * tableau.m
    tableau.bland_primal(phase_one, set(range(tableau.width)))
    if tableau.value(phase_one) < 0:
        return None
    tableau.drive_out_artificials()

    phase_two = [Fraction(0)] * tableau.width
    phase_two[t_col] = Fraction(1)
    status = tableau.bland_primal(phase_two, set(range(n)))
    if status != OPTIMAL:
        raise ConsistencyError("Bounded strict-feasibility program reported unbounded")
    if tableau.value(phase_two) <= 0:
        return None
    y = tableau.solution()
    x = tuple(y[i] - y[d + i] for i in range(d))
    for a, b in equalities:
        if _dot(a, x) != b:
            raise ConsistencyError("LP witness violates an equality")
    for c, r in stricts:
        if not _dot(c, x) > r:
            raise ConsistencyError("LP witness violates a strict inequality")
    _LOG.debug("strict feasibility witness after %d pivots", tableau.pivots)
    return x
