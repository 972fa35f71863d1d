"""
Decomposition of a COM along a halfspace and the reverse amalgamation.
"""
from __future__ import absolute_import, division, print_function

from collections import deque

import logging

from comkit.axioms import COM_AXIOMS, classify
from comkit.exceptions import ConsistencyError, PreconditionError, check_guard
from comkit.minors import delete
from comkit.signs import MINUS, PLUS, SignSystem, ZERO, bits, compose, minimal_elements, nonconstant_mask
from comkit.substructures import SubstructureKind, substructure
from comkit.utils import log_call, time_call

_LOG = logging.getLogger(__name__)


class Decomposition(object):
    def __init__(self, pivot, side, lower, upper, overlap, x, y):
        self.pivot = pivot
        self.side = side
        self.lower = lower
        self.upper = upper
        self.overlap = overlap
        self.x = x
        self.y = y

    @property
    def pivot_label(self):
        return self.lower.ground.labels[self.pivot]

    def as_dict(self):
        return {
            "pivot": self.pivot_label,
            "side": "+" if self.side == PLUS else "-",
            "cocircuits": [str(self.x), str(self.y)],
            "lower": self.lower.to_strings(),
            "upper": self.upper.to_strings(),
            "overlap": self.overlap.to_strings(),
        }


_OPEN = {PLUS: SubstructureKind.HALF_POS, MINUS: SubstructureKind.HALF_NEG}
_CLOSED = {PLUS: SubstructureKind.CLOSED_HALF_POS, MINUS: SubstructureKind.CLOSED_HALF_NEG}
_CARRIER = {PLUS: SubstructureKind.CARRIER_POS, MINUS: SubstructureKind.CARRIER_NEG}


def _require_semisimple_com(system):
    report = classify(system)
    if not (report.is_com and report.is_semisimple):
        raise PreconditionError("Decomposition needs a semisimple COM",
                                axiom_report=report.failure(COM_AXIOMS, semisimple=True))


@time_call
def decompose(system):
    """Split along the first (X, Y, e) with X, Y improper cocircuits and e in supp(X) and zero in Y.

    Returns None when there is a single improper cocircuit.
    """
    _require_semisimple_com(system)
    mins = minimal_elements(system)
    if len(mins) == 1:
        return None
    for x in mins:
        for y in mins:
            eligible = x.support & y.zero_set
            if x == y or not eligible:
                continue
            e = next(bits(eligible))
            side = x[e]
            decomposition = Decomposition(
                e, side,
                substructure(system, e, _OPEN[side]),
                substructure(system, e, _CLOSED[-side]),
                substructure(system, e, _CARRIER[side]),
                x, y)
            _LOG.debug("Decomposing at %s between %s and %s", decomposition.pivot_label, x, y)
            return decomposition
    raise ConsistencyError("Several improper cocircuits but no decomposition pivot")


class AmalgamReport(object):
    def __init__(self, conditions, witnesses):
        self.conditions = conditions
        self.witnesses = witnesses

    @property
    def holds(self):
        return all(self.conditions.values())

    def __bool__(self):
        return self.holds

    def as_dict(self):
        return {
            "holds": self.holds,
            "conditions": dict(self.conditions),
            "witnesses": dict(self.witnesses),
        }


def _monotone_path(members, x, y):
    """Shortest hypercube path from X to Y in the deletion of X's zero set.

    Vertices and edge barycenters only have to be restrictions of members to
    the support of X; their values on the zero set of X are free.
    """
    keep = x.support
    shadows = {(v.pos & keep, v.neg & keep) for v in members}
    target = (y.pos, y.neg)
    start = (x.pos, x.neg)
    queue = deque([start])
    seen = {start}
    while queue:
        pos, neg = queue.popleft()
        if (pos, neg) == target:
            return True
        for f in bits((pos & y.neg) | (neg & y.pos)):
            bit = 1 << f
            if (pos & ~bit, neg & ~bit) not in shadows:
                continue
            w = ((pos & ~bit) | (y.pos & bit), (neg & ~bit) | (y.neg & bit))
            if w in shadows and w not in seen:
                seen.add(w)
                queue.append(w)
    return False



def verify_amalgam(lower, upper, whole, guard=None):
    if not (lower.ground == upper.ground == whole.ground):
        raise PreconditionError("Amalgam parts live on different ground sets")
    if guard is None:
        from comkit.comkit_configuration import get_config
        guard = get_config().amalgam_path_guard
    low, up = lower.members, upper.members
    overlap = low & up
    conditions = {}
    witnesses = {}

    conditions["union"] = (low | up) == whole.members and bool(low - up) and bool(up - low) and bool(overlap)
    if not conditions["union"]:
        witnesses["union"] = "parts must cover the system with non-empty differences and overlap"

    if overlap:
        report = classify(SignSystem(whole.ground, overlap))
        conditions["overlap_semisimple_com"] = report.is_com and report.is_semisimple
    else:
        conditions["overlap_semisimple_com"] = False
    if not conditions["overlap_semisimple_com"]:
        witnesses["overlap_semisimple_com"] = "overlap is not a semisimple COM"

    conditions["compositions"] = True
    for x in lower.covectors:
        for y in upper.covectors:
            if compose(x, y) not in low:
                conditions["compositions"] = False
                witnesses["compositions"] = "%s o %s not in lower" % (x, y)
            elif compose(y, x) not in up:
                conditions["compositions"] = False
                witnesses["compositions"] = "%s o %s not in upper" % (y, x)
            if not conditions["compositions"]:
                break
        if not conditions["compositions"]:
            break

    conditions["paths"] = True
    members = whole.members
    for x in sorted(low - up, key=lambda v: v.sort_key):
        for y in sorted(up - low, key=lambda v: v.sort_key):
            if x.zero_set != y.zero_set:
                continue
            check_guard(whole.n - bin(x.zero_set).count("1"), guard, "path search space")
            if not _monotone_path(members, x, y):
                conditions["paths"] = False
                witnesses["paths"] = "no shortest path from %s to %s" % (x, y)
                break
        if not conditions["paths"]:
            break
    return AmalgamReport(conditions, witnesses)


@log_call
def amalgamate(lower, upper, guard=None):
    whole = SignSystem(lower.ground, lower.members | upper.members)
    report = verify_amalgam(lower, upper, whole, guard=guard)
    if not report.holds:
        raise PreconditionError("Amalgam conditions fail: %s" % ", ".join(
            k for k, v in report.conditions.items() if not v), axiom_report=report)
    result = classify(whole)
    if not (result.is_com and result.is_semisimple):
        raise ConsistencyError("An amalgam of COMs is not a semisimple COM")
    return whole


class DecompositionNode(object):
    def __init__(self, system, decomposition=None, lower=None, upper=None):
        self.system = system
        self.decomposition = decomposition
        self.lower = lower
        self.upper = upper

    @property
    def is_leaf(self):
        return self.decomposition is None

    def leaves(self):
        if self.is_leaf:
            yield self.system
        else:
            for leaf in self.lower.leaves():
                yield leaf
            for leaf in self.upper.leaves():
                yield leaf

    def depth(self):
        if self.is_leaf:
            return 0
        return 1 + max(self.lower.depth(), self.upper.depth())


def decompose_fully(system):
    decomposition = decompose(system)
    if decomposition is None:
        return DecompositionNode(system)
    return DecompositionNode(system, decomposition,
                             decompose_fully(decomposition.lower),
                             decompose_fully(decomposition.upper))


def reamalgamate(node, guard=None):
    if node.is_leaf:
        return node.system
    return amalgamate(reamalgamate(node.lower, guard), reamalgamate(node.upper, guard), guard=guard)


def leaf_is_om(system):
    """A face with a single improper cocircuit is an OM once its constant coordinates are dropped."""
    constant = system.ground.full_mask & ~nonconstant_mask(system)
    if constant == system.ground.full_mask:
        return len(system) == 1
    reduced = delete(system, list(bits(constant))) if constant else system
    return classify(reduced).is_om
