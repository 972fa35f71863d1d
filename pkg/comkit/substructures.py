"""
Hyperplanes, halfspaces and carriers of a sign-vector system, and the
recursive characterization of strong elimination systems, COMs and
oriented matroids through their hyperplanes.
"""
from __future__ import absolute_import, division, print_function

from enum import Enum

import logging

from comkit.axioms import AxiomId, Redundancy, check_axiom, check_nonredundancy, classify
from comkit.exceptions import ConsistencyError, EmptyResultError, PreconditionError
from comkit.minors import contract, delete, parallel_classes
from comkit.signs import MINUS, PLUS, ZERO, coloop_mask, leq, negate
from comkit.topes import TopeGraph, is_partial_cube, topes
from comkit.utils import time_call

_LOG = logging.getLogger(__name__)


class SubstructureKind(Enum):
    HYPERPLANE = "hyperplane"
    HALF_POS = "half+"
    HALF_NEG = "half-"
    CARRIER = "carrier"
    CARRIER_POS = "carrier+"
    CARRIER_NEG = "carrier-"
    CLOSED_HALF_POS = "closed+"
    CLOSED_HALF_NEG = "closed-"


def _carrier_members(system, e):
    zeros = [w for w in system.covectors if w[e] == ZERO]
    return [x for x in system.covectors if any(leq(w, x) for w in zeros)]


def substructure(system, element, kind):
    kind = SubstructureKind(kind)
    e = system.ground.position(element) if not isinstance(element, int) else element
    if kind == SubstructureKind.HYPERPLANE:
        members = [x for x in system.covectors if x[e] == ZERO]
    elif kind in (SubstructureKind.HALF_POS, SubstructureKind.HALF_NEG):
        sign = PLUS if kind == SubstructureKind.HALF_POS else MINUS
        members = [x for x in system.covectors if x[e] == sign]
    else:
        carrier = _carrier_members(system, e)
        if kind == SubstructureKind.CARRIER:
            members = carrier
        elif kind == SubstructureKind.CARRIER_POS:
            members = [x for x in carrier if x[e] == PLUS]
        elif kind == SubstructureKind.CARRIER_NEG:
            members = [x for x in carrier if x[e] == MINUS]
        else:
            sign = PLUS if kind == SubstructureKind.CLOSED_HALF_POS else MINUS
            members = set(carrier)
            members.update(x for x in system.covectors if x[e] == sign)
    if not members:
        raise EmptyResultError("The %s at %s is empty" % (kind.value, system.ground.labels[e]),
                               locator=system.ground.labels[e])
    return system.with_covectors(members)


class RecursiveReport(object):
    def __init__(self, conditions):
        self.conditions = conditions
        c = conditions
        self.is_strong_elimination = c["composition"] and c["hyperplanes_ses"] and c["partial_cube"] and \
            c["edge_barycenters"]
        self.is_com = c["composition"] and c["hyperplanes_com"] and c["partial_cube"] and c["edge_barycenters"]
        self.is_om = c["composition"] and c["hyperplanes_om"] and c["symmetric_partial_cube"] and \
            c["edge_barycenters"]

    def verdict(self):
        return self.is_strong_elimination, self.is_com, self.is_om

    def as_dict(self):
        return {
            "conditions": dict(self.conditions),
            "is_strong_elimination": self.is_strong_elimination,
            "is_com": self.is_com,
            "is_om": self.is_om,
        }


class _Recursion(object):
    def __init__(self):
        self.memo = {}
        self.hits = 0

    def decide(self, system):
        """(ses, com, om) for any system, recursing where the system reduces to a semisimple one."""
        key = (system.ground.labels, system.members)
        if key in self.memo:
            self.hits += 1
            return self.memo[key]
        reduced = _strip(system)
        if reduced is None:
            verdict = (True, True, True)
        elif _semisimple(reduced):
            verdict = self.conditions(reduced).verdict()
        else:
            direct = classify(reduced)
            verdict = (direct.is_strong_elimination, direct.is_com, direct.is_om)
        self.memo[key] = verdict
        return verdict

    def conditions(self, system):
        graph = TopeGraph(system.ground, topes(system))
        tope_set = set(graph.vertices)
        hyper = [True, True, True]
        for e in range(system.n):
            if not any(x[e] == ZERO for x in system.covectors):
                continue
            if system.n == 1:
                sub = (True, True, True)
            else:
                sub = self.decide(contract(system, [e]))
            hyper = [h and s for h, s in zip(hyper, sub)]
        conditions = {
            "composition": check_axiom(system, AxiomId.C).holds,
            "partial_cube": is_partial_cube(graph),
            "edge_barycenters": all(graph.barycenter(i, j) in system for i, j in graph.edges),
            "hyperplanes_ses": hyper[0],
            "hyperplanes_com": hyper[1],
            "hyperplanes_om": hyper[2],
        }
        conditions["symmetric_partial_cube"] = conditions["partial_cube"] and all(
            negate(t) in tope_set for t in tope_set)
        return RecursiveReport(conditions)


def _strip(system):
    """Delete coloops and all but the first member of each parallel class; None if nothing is left."""
    coloops = coloop_mask(system)
    remaining = [i for i in range(system.n) if not coloops >> i & 1]
    keep = {cls[0] for cls in parallel_classes(system, remaining)}
    drop = [i for i in range(system.n) if i not in keep]
    if len(drop) == system.n:
        return None
    return delete(system, drop) if drop else system


def _semisimple(system):
    return (check_nonredundancy(system, Redundancy.RN1_STAR).holds
            and check_nonredundancy(system, Redundancy.RN2_STAR).holds)


@time_call
def recursive_characterize(system):
    """Hyperplane recursion for a semisimple system, cross-checked against direct classification."""
    direct = classify(system)
    if not direct.is_semisimple:
        raise PreconditionError("The recursive characterization needs a semisimple system",
                                axiom_report=direct.failure(semisimple=True))
    recursion = _Recursion()
    report = recursion.conditions(system)
    _LOG.debug("recursive characterization: %d memo entries, %d hits", len(recursion.memo), recursion.hits)
    if report.verdict() != (direct.is_strong_elimination, direct.is_com, direct.is_om):
        raise ConsistencyError("Recursive characterization %s disagrees with axioms %s" % (
            report.verdict(), (direct.is_strong_elimination, direct.is_com, direct.is_om)))
    return report
