"""
Generating sets of sign-vector systems: W-sets, the lopsided envelope,
irreducibles, cocircuits and conformal closures.
"""
from __future__ import absolute_import, division, print_function

import logging

from comkit.axioms import AxiomId, check_axiom, is_reducible, w_members
from comkit.exceptions import PreconditionError
from comkit.signs import (SignSystem, bits, compose, conformal_compose, cover_relation, leq, minimal_elements,
                          negate, separator_mask, upset)

_LOG = logging.getLogger(__name__)


def w_set(system, x, y, elements=()):
    """W_A(X,Y) as a canonically ordered list."""
    system.check_member(x)
    system.check_member(y)
    return w_members(system, x, y, system.ground.mask_of(elements))


def lopsided_envelope(system, guard=None):
    """The upset of a system satisfying weak elimination."""
    report = check_axiom(system, AxiomId.WE)
    if not report.holds:
        raise PreconditionError("The lopsided envelope needs weak elimination", axiom_report=report)
    return upset(system, guard=guard)


def irreducibles(system):
    """Covectors that are not the supremum of other covectors."""
    return [x for x in system.covectors if not is_reducible(system, x)]


def conformal_closure(system):
    """Closure under conformal composition of sign-consistent pairs."""
    result = set(system.covectors)
    queue = list(system.covectors)
    while queue:
        x = queue.pop()
        for y in list(result):
            if separator_mask(x, y):
                continue
            z = compose(x, y)
            if z not in result:
                result.add(z)
                queue.append(z)
    _LOG.debug("conformal closure: %d generators, %d members", len(system), len(result))
    return SignSystem(system.ground, result)


class CocircuitDecomposition(object):
    def __init__(self, ground, minimal, proper, irreducible, covers):
        self.ground = ground
        self.minimal = minimal
        self.proper = proper
        self.irreducibles = irreducible
        self.covers = covers
        members = set(minimal) | set(proper) | set(irreducible)
        self.cocircuits = sorted(members, key=lambda v: v.sort_key)

    def system(self):
        return SignSystem(self.ground, self.cocircuits)

    def as_dict(self):
        return {
            "minimal": [str(x) for x in self.minimal],
            "proper": [str(x) for x in self.proper],
            "irreducibles": [str(x) for x in self.irreducibles],
            "cocircuits": [str(x) for x in self.cocircuits],
        }


def cocircuits(system):
    covers = cover_relation(system)
    minimal = minimal_elements(system)
    proper = set()
    for w in minimal:
        proper.update(covers[w])
    proper = sorted(proper, key=lambda v: v.sort_key)
    return CocircuitDecomposition(system.ground, minimal, proper, irreducibles(system), covers)


def generate_from_cocircuits(system):
    return conformal_closure(cocircuits(system).system())


def supremum_decomposition(system, x, generators=None):
    """At most |E| generators below X whose supremum is X, or None.

    One generator is chosen per support element, first in canonical order.
    """
    system.check_member(x)
    if generators is None:
        generators = cocircuits(system).cocircuits
    below = [g for g in generators if leq(g, x)]
    if not x.support:
        return [x] if x in below else None
    chosen = []
    for e in bits(x.support):
        pick = next((g for g in below if g[e] == x[e]), None)
        if pick is None:
            return None
        if pick not in chosen:
            chosen.append(pick)
    if conformal_compose(chosen) != x:
        return None
    return chosen


def _fs_prec_within(cset, system, covers):
    """(FS<) for a cocircuit set, with the covering relation taken in the generated system."""
    members = set(cset.covectors)
    for w in minimal_elements(system):
        if w not in members:
            continue
        for y in covers[w]:
            if y in members and compose(w, negate(y)) not in members:
                return False
    return True


class GenerationReport(object):
    def __init__(self, checks, details):
        self.checks = checks
        self.details = details

    @property
    def is_strong_elimination(self):
        return self.checks["ses_composition"]

    @property
    def is_com(self):
        return self.checks["com_covectors"]

    @property
    def passes(self):
        return self.is_com

    @property
    def consistent(self):
        ses = [self.checks[k] for k in ("ses_composition", "ses_conformal", "ses_generating_set",
                                        "ses_irreducibles")]
        com = [self.checks[k] for k in ("com_covectors", "com_irreducibles", "com_cocircuits")]
        return len(set(ses)) == 1 and len(set(com)) == 1

    def as_dict(self):
        return {
            "checks": dict(self.checks),
            "details": {k: v.as_dict() for k, v in self.details.items()},
            "consistent": self.consistent,
        }


def verify_generation_theorems(system):
    """Evaluate the strong elimination and COM characterizations by generating sets."""
    decomposition = cocircuits(system)
    j_sys = SignSystem(system.ground, decomposition.irreducibles)
    c_sys = decomposition.system()
    k_sys = SignSystem(system.ground, set(decomposition.cocircuits) | set(decomposition.irreducibles))

    details = {
        "C": check_axiom(system, AxiomId.C),
        "SE": check_axiom(system, AxiomId.SE),
        "CC": check_axiom(system, AxiomId.CC),
        "SE1": check_axiom(system, AxiomId.SE1),
        "FS_PREC": check_axiom(system, AxiomId.FS_PREC),
        "J.SE1": check_axiom(j_sys, AxiomId.SE1),
        "J.IRR": check_axiom(j_sys, AxiomId.IRR),
        "K.SE1": check_axiom(k_sys, AxiomId.SE1),
        "cocircuits.SE1": check_axiom(c_sys, AxiomId.SE1),
        "cocircuits.COC": check_axiom(c_sys, AxiomId.COC),
    }
    closure_j = conformal_closure(j_sys)
    closure_c = conformal_closure(c_sys)
    fs_prec_c = _fs_prec_within(c_sys, system, decomposition.covers)

    cc = details["CC"].holds
    checks = {
        "irreducibles_generate": closure_j == system,
        "cocircuits_generate": closure_c == system,
        "ses_composition": details["C"].holds and details["SE"].holds,
        "ses_conformal": cc and details["SE1"].holds,
        "ses_generating_set": cc and details["K.SE1"].holds,
        "ses_irreducibles": cc and details["J.SE1"].holds,
        "com_covectors": cc and details["SE1"].holds and details["FS_PREC"].holds,
        "com_irreducibles": (closure_j == system and fs_prec_c and details["J.SE1"].holds
                             and details["J.IRR"].holds),
        "com_cocircuits": (closure_c == system and fs_prec_c and details["cocircuits.SE1"].holds
                           and details["cocircuits.COC"].holds),
        "fs_prec_cocircuits": fs_prec_c,
    }
    report = GenerationReport(checks, details)
    if not report.consistent:
        _LOG.warning("Generation characterizations disagree: %s", checks)
    return report
