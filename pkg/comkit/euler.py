"""
Ranks and Euler-type alternating sums of COMs and lopsided systems.
"""
from __future__ import absolute_import, division, print_function

from itertools import product

import logging

from comkit.axioms import COM_AXIOMS, classify
from comkit.exceptions import ConsistencyError, PreconditionError, check_guard
from comkit.minors import topal_fibers
from comkit.signs import MINUS, PLUS, SignSystem, bits, cover_relation, popcount
from comkit.utils import time_call

_LOG = logging.getLogger(__name__)


class RankTable(object):
    def __init__(self, rank, graded):
        self.rank = rank
        self.graded = graded

    @property
    def is_graded(self):
        return all(self.graded.values())

    def __getitem__(self, x):
        return self.rank[x]

    def as_dict(self):
        return {
            "rank": {str(x): r for x, r in sorted(self.rank.items(), key=lambda kv: kv[0].sort_key)},
            "graded": self.is_graded,
        }


def _require_com(system):
    report = classify(system)
    if not report.is_com:
        raise PreconditionError("Ranks are defined for COMs", axiom_report=report.failure(COM_AXIOMS))


def rank_table(system, strict=True):
    """Longest cover chain from each covector up to a tope of its face."""
    _require_com(system)
    covers = cover_relation(system)
    longest, shortest = {}, {}
    for x in sorted(system.covectors, key=lambda v: -popcount(v.support)):
        ups = covers[x]
        if not ups:
            longest[x] = shortest[x] = 0
        else:
            longest[x] = 1 + max(longest[y] for y in ups)
            shortest[x] = 1 + min(shortest[y] for y in ups)
    graded = {x: longest[x] == shortest[x] for x in system.covectors}
    table = RankTable(longest, graded)
    if not table.is_graded:
        bad = [str(x) for x in system.covectors if not graded[x]]
        if strict:
            raise ConsistencyError("Face intervals of a COM are not graded above: %s" % " ".join(bad))
        _LOG.warning("Non-graded face intervals above %s", " ".join(bad))
    return table


def rank(system, x):
    system.check_member(x)
    return rank_table(system)[x]


def euler_poincare(system):
    table = rank_table(system)
    return sum((-1) ** table[x] for x in system.covectors)


def _zero_sum(vectors, mask):
    return sum((-1) ** popcount(v.zero_set & mask) for v in vectors)


def euler_zero_sets(system):
    return _zero_sum(system.covectors, system.ground.full_mask)


def _submasks(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            break
        sub = (sub - 1) & mask


def _tope_completions_closed(system):
    for x in system.covectors:
        zeros = list(bits(x.zero_set))
        for fill in product((PLUS, MINUS), repeat=len(zeros)):
            y = x
            for i, v in zip(zeros, fill):
                y = y.with_value(i, v)
            if y not in system:
                _LOG.debug("%s cannot be completed to %s", x, y)
                return False
    return True


@time_call
def lopsided_by_euler(system, variant="iii", guard=None):
    """Lopsidedness through the zero-set Euler formula on topal fibers.

    variant "ii": every topal fiber satisfies the formula and every covector
    composes with every tope pattern into the system.
    variant "iii": every non-empty contraction of every topal fiber
    satisfies the formula.
    """
    if variant not in ("ii", "iii"):
        raise PreconditionError("Unknown lopsided characterization variant: %s" % variant)
    check_guard(system.n, guard)
    full = system.ground.full_mask
    for a_mask, members in topal_fibers(system, guard=guard):
        if variant == "ii":
            if _zero_sum(members, full) != 1:
                _LOG.debug("Topal fiber over %s fails the zero-set formula", system.ground.labels_of(a_mask))
                return False
            continue
        for b_mask in _submasks(a_mask):
            vanishing = [y for y in members if not y.support & b_mask]
            if vanishing and _zero_sum(vanishing, full & ~b_mask) != 1:
                _LOG.debug("Contraction by %s of a topal fiber over %s fails the zero-set formula",
                           system.ground.labels_of(b_mask), system.ground.labels_of(a_mask))
                return False
    if variant == "ii":
        return _tope_completions_closed(system)
    return True


def euler_inclusion_exclusion(decomposition):
    """Rank-based Euler sums of an amalgam add up over lower, upper and their overlap.

    Every part must be a COM; a non-COM part raises PreconditionError. Overlap
    covectors must also keep their rank in each part.
    """
    lower, upper, overlap = decomposition.lower, decomposition.upper, decomposition.overlap
    whole = SignSystem(lower.ground, lower.members | upper.members)
    tables = [rank_table(part) for part in (whole, lower, upper, overlap)]
    sums = [sum((-1) ** table[x] for x in part.covectors)
            for table, part in zip(tables, (whole, lower, upper, overlap))]
    for x in overlap.covectors:
        if len({table[x] for table in tables}) != 1:
            _LOG.info("Covector %s changes rank across the amalgam parts", x)
            return False
    return sums[0] == sums[1] + sums[2] - sums[3]
