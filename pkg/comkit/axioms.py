"""
Axiom checkers for sign-vector systems and the classification into strong
elimination systems, COMs, oriented matroids and lopsided systems.

Every checker is exhaustive.  On failure the first counterexample is
returned, scanning X in canonical order, the partner Y by decreasing support
size (ties canonically), then elements in ground order.
"""
from __future__ import absolute_import, division, print_function

from enum import Enum

import logging

from comkit.exceptions import ConsistencyError, UnknownAxiom
from comkit.signs import (MINUS, PLUS, ZERO, SignVector, bits, compose, conformal_compose, cover_relation,
                          leq, minimal_elements, negate, nonconstant_mask, popcount, separator_mask)
from comkit.utils import time_call

_LOG = logging.getLogger(__name__)


class AxiomId(Enum):
    C = "C"
    FS = "FS"
    FS_LE = "FS_LE"
    FS_PREC = "FS_PREC"
    SE = "SE"
    SE_EQ = "SE_EQ"
    SE1 = "SE1"
    SE1_EQ = "SE1_EQ"
    SYM = "SYM"
    IC = "IC"
    Z = "Z"
    CC = "CC"
    WE = "WE"
    IRR = "IRR"
    COC = "COC"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        key = str(name).strip().upper()
        key = _AXIOM_ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise UnknownAxiom("Unknown axiom: %s" % name, locator=str(name))


_AXIOM_ALIASES = {
    "FS<=": "FS_LE", "FS≤": "FS_LE", "FS_PRECEQ": "FS_LE",
    "FS<": "FS_PREC", "FS≺": "FS_PREC",
    "SE=": "SE_EQ", "SE1=": "SE1_EQ",
}


class Redundancy(Enum):
    N0 = "N0"
    N1 = "N1"
    N1_STAR = "N1*"
    N2 = "N2"
    N2_STAR = "N2*"
    RN1 = "RN1"
    RN1_STAR = "RN1*"
    RN2 = "RN2"
    RN2_STAR = "RN2*"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        key = str(name).strip().upper().replace("_STAR", "*")
        try:
            return cls(key)
        except ValueError:
            raise UnknownAxiom("Unknown non-redundancy flavor: %s" % name, locator=str(name))


class Witness(object):
    """A counterexample: the vectors and elements involved and, when determined, the missing vector."""

    def __init__(self, x=None, y=None, e=None, f=None, missing=None, required=None):
        self.x = x
        self.y = y
        self.e = e
        self.f = f
        self.missing = missing
        self.required = required

    def as_dict(self, ground=None):
        def label(i):
            if i is None:
                return None
            return ground.labels[i] if ground is not None else i

        def vec(v):
            return None if v is None else str(v)
        return {
            "X": vec(self.x),
            "Y": vec(self.y),
            "e": label(self.e),
            "f": label(self.f),
            "missing": vec(self.missing),
            "required": self.required,
        }

    def __repr__(self):
        return "Witness(%s)" % ", ".join("%s=%s" % (k, v) for k, v in self.as_dict().items() if v is not None)


class AxiomReport(object):
    def __init__(self, axiom, holds, witness=None, ground=None):
        if not holds and witness is None:
            raise ConsistencyError("Failed axiom %s reported without a witness" % _name(axiom))
        self.axiom = axiom
        self.holds = holds
        self.witness = witness
        self.ground = ground

    def __bool__(self):
        return self.holds

    def as_dict(self):
        return {
            "axiom": _name(self.axiom),
            "holds": self.holds,
            "witness": self.witness.as_dict(self.ground) if self.witness is not None else None,
        }

    def __repr__(self):
        return "AxiomReport(%s, holds=%s, witness=%r)" % (_name(self.axiom), self.holds, self.witness)


def _name(axiom):
    return getattr(axiom, "value", axiom)


def _partner_order(system):
    return sorted(system.covectors, key=lambda v: (-popcount(v.support), v.sort_key))


def _pattern(target, free_mask, zero_at):
    chars = []
    for i in range(target.n):
        if i == zero_at:
            chars.append("0")
        elif free_mask >> i & 1:
            chars.append("*")
        else:
            chars.append({PLUS: "+", MINUS: "-", ZERO: "0"}[target[i]])
    return "".join(chars)


def _fail(axiom, system, **kwargs):
    return AxiomReport(axiom, False, Witness(**kwargs), system.ground)


def _ok(axiom, system):
    return AxiomReport(axiom, True, ground=system.ground)


def _check_composition(axiom, system, make, pairs):
    for x, y in pairs:
        z = make(x, y)
        if z not in system:
            return _fail(axiom, system, x=x, y=y, missing=z)
    return _ok(axiom, system)


def _all_pairs(system):
    partners = _partner_order(system)
    for x in system.covectors:
        for y in partners:
            yield x, y


def check_composition(system):
    return _check_composition(AxiomId.C, system, compose, _all_pairs(system))


def check_face_symmetry(system):
    return _check_composition(AxiomId.FS, system, lambda x, y: compose(x, negate(y)), _all_pairs(system))


def check_face_symmetry_le(system):
    pairs = ((x, y) for x, y in _all_pairs(system) if leq(x, y))
    return _check_composition(AxiomId.FS_LE, system, lambda x, y: compose(x, negate(y)), pairs)


def check_face_symmetry_prec(system):
    covers = cover_relation(system)
    pairs = []
    for w in minimal_elements(system):
        ups = sorted(covers[w], key=lambda v: (-popcount(v.support), v.sort_key))
        pairs.extend((w, y) for y in ups)
    return _check_composition(AxiomId.FS_PREC, system, lambda x, y: compose(x, negate(y)), pairs)


def check_conformal_composition(system):
    pairs = ((x, y) for x, y in _all_pairs(system) if separator_mask(x, y) == 0)
    return _check_composition(AxiomId.CC, system, compose, pairs)


def check_symmetry(system):
    for x in system.covectors:
        if negate(x) not in system:
            return _fail(AxiomId.SYM, system, x=x, missing=negate(x))
    return _ok(AxiomId.SYM, system)


def check_zero(system):
    zero = SignVector.zero(system.n)
    if zero not in system:
        return _fail(AxiomId.Z, system, missing=zero)
    return _ok(AxiomId.Z, system)


def check_ideal_composition(system):
    """(IC) via the local condition: every zero of a covector can be raised to either sign."""
    for x in system.covectors:
        for e in bits(x.zero_set):
            for sign in (PLUS, MINUS):
                z = x.with_value(e, sign)
                if z not in system:
                    return _fail(AxiomId.IC, system, x=x, e=e, missing=z)
    return _ok(AxiomId.IC, system)


def _agrees_off(z, target, mask):
    return (z.pos & mask) == (target.pos & mask) and (z.neg & mask) == (target.neg & mask)


def _strong_elimination(axiom, system, equal_support):
    full = system.ground.full_mask
    vecs = system.covectors
    for x, y in _all_pairs(system):
        if equal_support and (x == y or x.support != y.support):
            continue
        sep = separator_mask(x, y)
        if not sep:
            continue
        target = compose(x, y)
        off = full & ~sep
        candidates = [z for z in vecs if _agrees_off(z, target, off)]
        for e in bits(sep):
            if not any(not z.support >> e & 1 for z in candidates):
                missing = target.with_value(e, ZERO) if popcount(sep) == 1 else None
                return _fail(axiom, system, x=x, y=y, e=e, missing=missing,
                             required=_pattern(target, sep, e))
    return _ok(axiom, system)


def w_members(system, x, y, a_mask=0):
    """W_A(X,Y): covectors Z with Z_g in {0, X_g, Y_g} everywhere and Z_h in {0, X_h} on A."""
    pos = x.pos | (y.pos & ~a_mask)
    neg = x.neg | (y.neg & ~a_mask)
    return [z for z in system.covectors if not (z.pos & ~pos) and not (z.neg & ~neg)]


def _strong_elimination_one(axiom, system, equal_support):
    full = system.ground.full_mask
    for x, y in _all_pairs(system):
        if equal_support and (x == y or x.support != y.support):
            continue
        sep = separator_mask(x, y)
        if not sep:
            continue
        target = compose(x, y)
        off = full & ~sep
        wset = w_members(system, x, y)
        for e in bits(sep):
            cands = [z for z in wset if not z.support >> e & 1]
            if not cands:
                # also covers S(X,Y) = E, where there is no f to pair with e
                return _fail(axiom, system, x=x, y=y, e=e, required=_pattern(target, full & ~(1 << e), e))
            for f in bits(off):
                want = target[f]
                if not any(z[f] == want for z in cands):
                    return _fail(axiom, system, x=x, y=y, e=e, f=f,
                                 required=_pattern(target, full & ~(1 << e) & ~(1 << f), e))
    return _ok(axiom, system)


def check_weak_elimination(system):
    for x, y in _all_pairs(system):
        sep = separator_mask(x, y)
        if not sep:
            continue
        wset = w_members(system, x, y)
        for e in bits(sep):
            if not any(not z.support >> e & 1 for z in wset):
                return _fail(AxiomId.WE, system, x=x, y=y, e=e)
    return _ok(AxiomId.WE, system)


def is_reducible(system, x):
    below = [z for z in system.covectors if z != x and leq(z, x)]
    return bool(below) and conformal_compose(below) == x


def check_irreducibility(system):
    """(IRR) read on the system itself: no member is the supremum of other members."""
    for x in system.covectors:
        if is_reducible(system, x):
            return _fail(AxiomId.IRR, system, x=x)
    return _ok(AxiomId.IRR, system)


def check_cocircuit_covering(system):
    """(COC) read on the system as a cocircuit set C: C = Min(C) plus the covers of Min(C) in its closure."""
    # local import: generation builds on this module
    from comkit.generation import conformal_closure
    closure = conformal_closure(system)
    covers = cover_relation(closure)
    mins = minimal_elements(system)
    expected = set(mins)
    for w in mins:
        expected.update(covers[w])
    for x in closure.covectors:
        if (x in expected) != (x in system):
            if x in expected:
                return _fail(AxiomId.COC, system, x=x, missing=x)
            return _fail(AxiomId.COC, system, x=x)
    return _ok(AxiomId.COC, system)


_CHECKERS = {
    AxiomId.C: check_composition,
    AxiomId.FS: check_face_symmetry,
    AxiomId.FS_LE: check_face_symmetry_le,
    AxiomId.FS_PREC: check_face_symmetry_prec,
    AxiomId.SE: lambda s: _strong_elimination(AxiomId.SE, s, False),
    AxiomId.SE_EQ: lambda s: _strong_elimination(AxiomId.SE_EQ, s, True),
    AxiomId.SE1: lambda s: _strong_elimination_one(AxiomId.SE1, s, False),
    AxiomId.SE1_EQ: lambda s: _strong_elimination_one(AxiomId.SE1_EQ, s, True),
    AxiomId.SYM: check_symmetry,
    AxiomId.IC: check_ideal_composition,
    AxiomId.Z: check_zero,
    AxiomId.CC: check_conformal_composition,
    AxiomId.WE: check_weak_elimination,
    AxiomId.IRR: check_irreducibility,
    AxiomId.COC: check_cocircuit_covering,
}


def check_axiom(system, axiom):
    axiom = AxiomId.parse(axiom)
    report = _CHECKERS[axiom](system)
    if not report.holds:
        _LOG.debug("Axiom %s fails: %r", axiom.value, report.witness)
    return report


def check_nonredundancy(system, flavor):
    flavor = Redundancy.parse(flavor)
    if flavor.value.startswith("R"):
        scope = nonconstant_mask(system)
    else:
        scope = system.ground.full_mask
    base = flavor.value.lstrip("R")
    vecs = system.covectors
    if base == "N0":
        for e in bits(scope):
            if not any(x.support >> e & 1 for x in vecs):
                return _fail(flavor, system, e=e)
    elif base in ("N1", "N1*"):
        wanted = {PLUS, MINUS} if base == "N1" else {PLUS, MINUS, ZERO}
        for e in bits(scope):
            vals = system.column_values(e)
            if not wanted <= vals:
                return _fail(flavor, system, e=e, required=" ".join(
                    {PLUS: "+", MINUS: "-", ZERO: "0"}[v] for v in sorted(wanted - vals, reverse=True)))
    else:
        positions = list(bits(scope))
        for i, e in enumerate(positions):
            for f in positions[i + 1:]:
                products = set(x[e] * x[f] for x in vecs)
                if base == "N2":
                    differ = any(x[e] != x[f] for x in vecs)
                    anti = any(x[e] != -x[f] for x in vecs)
                    ok = differ and anti
                else:
                    ok = PLUS in products and MINUS in products
                if not ok:
                    return _fail(flavor, system, e=e, f=f)
    return _ok(flavor, system)


class ClassificationReport(object):
    def __init__(self, reports, flags):
        self.reports = reports
        self.flags = flags
        holds = {k: r.holds for k, r in reports.items()}
        self.is_strong_elimination = holds[AxiomId.C] and holds[AxiomId.SE]
        self.is_com = holds[AxiomId.FS] and holds[AxiomId.SE]
        self.is_om = holds[AxiomId.C] and holds[AxiomId.SYM] and holds[AxiomId.SE]
        self.is_lopsided = holds[AxiomId.IC] and holds[AxiomId.SE]
        self.is_simple = flags[Redundancy.N1_STAR].holds and flags[Redundancy.N2_STAR].holds
        self.is_semisimple = flags[Redundancy.RN1_STAR].holds and flags[Redundancy.RN2_STAR].holds
        self._check_lattice()

    def _check_lattice(self):
        implications = [
            (self.is_om, self.is_com, "OM without COM"),
            (self.is_com, self.is_strong_elimination, "COM without strong elimination"),
            (self.is_lopsided, self.is_com, "lopsided without COM"),
            (self.is_simple, self.is_semisimple, "simple without semisimple"),
        ]
        for premise, conclusion, msg in implications:
            if premise and not conclusion:
                raise ConsistencyError("Classification inconsistent: %s" % msg)

    def failure(self, axioms=(), semisimple=False):
        """First failed report among the named axioms, then the semisimplicity flags."""
        for axiom in axioms:
            if not self.reports[axiom].holds:
                return self.reports[axiom]
        if semisimple:
            for flavor in (Redundancy.RN1_STAR, Redundancy.RN2_STAR):
                if not self.flags[flavor].holds:
                    return self.flags[flavor]
        return None

    @property
    def kind(self):
        if self.is_om:
            return "OM"
        if self.is_lopsided:
            return "lopsided"
        if self.is_com:
            return "COM"
        if self.is_strong_elimination:
            return "SES"
        return "none"

    def as_dict(self):
        return {
            "kind": self.kind,
            "is_strong_elimination": self.is_strong_elimination,
            "is_com": self.is_com,
            "is_om": self.is_om,
            "is_lopsided": self.is_lopsided,
            "is_simple": self.is_simple,
            "is_semisimple": self.is_semisimple,
            "axioms": {k.value: r.as_dict() for k, r in self.reports.items()},
            "nonredundancy": {k.value: r.holds for k, r in self.flags.items()},
        }


CLASSIFYING_AXIOMS = (AxiomId.C, AxiomId.FS, AxiomId.SE, AxiomId.SYM, AxiomId.IC, AxiomId.Z)
SES_AXIOMS = (AxiomId.C, AxiomId.SE)
COM_AXIOMS = (AxiomId.FS, AxiomId.SE)
OM_AXIOMS = (AxiomId.C, AxiomId.SYM, AxiomId.SE)


@time_call
def classify(system):
    reports = {a: check_axiom(system, a) for a in CLASSIFYING_AXIOMS}
    flags = {r: check_nonredundancy(system, r) for r in Redundancy}
    report = ClassificationReport(reports, flags)
    _LOG.debug("Classified %d covectors on %d elements as %s", len(system), system.n, report.kind)
    return report


def check_om_alternative(system):
    """Oriented matroid via (FS), (Z) and (SE), cross-checked with (C), (Sym) and (SE)."""
    alt = [check_axiom(system, a) for a in (AxiomId.FS, AxiomId.Z, AxiomId.SE)]
    std = [check_axiom(system, a) for a in (AxiomId.C, AxiomId.SYM, AxiomId.SE)]
    holds = all(r.holds for r in alt)
    if holds != all(r.holds for r in std):
        raise ConsistencyError("The two oriented matroid axiom systems disagree")
    witness = next((r.witness for r in alt if not r.holds), None)
    return AxiomReport("FS+Z+SE", holds, witness, system.ground)


def verify_witness(system, report):
    """Re-check that a failed report's witness really violates its axiom."""
    if report.holds:
        return False
    w = report.witness
    axiom = report.axiom
    if isinstance(axiom, AxiomId):
        if axiom in (AxiomId.C, AxiomId.CC):
            return compose(w.x, w.y) not in system and (
                axiom == AxiomId.C or separator_mask(w.x, w.y) == 0)
        if axiom in (AxiomId.FS, AxiomId.FS_LE, AxiomId.FS_PREC):
            return compose(w.x, negate(w.y)) not in system
        if axiom == AxiomId.SYM:
            return negate(w.x) not in system
        if axiom == AxiomId.Z:
            return w.missing not in system
        if axiom == AxiomId.IC:
            return w.missing not in system and leq(w.x, w.missing)
        if axiom in (AxiomId.SE, AxiomId.SE_EQ):
            sep = separator_mask(w.x, w.y)
            target = compose(w.x, w.y)
            off = system.ground.full_mask & ~sep
            return not any(_agrees_off(z, target, off) and not z.support >> w.e & 1
                           for z in system.covectors)
        if axiom in (AxiomId.SE1, AxiomId.SE1_EQ):
            cands = [z for z in w_members(system, w.x, w.y) if not z.support >> w.e & 1]
            if w.f is None:
                return not cands
            want = compose(w.x, w.y)[w.f]
            return not any(z[w.f] == want for z in cands)
        if axiom == AxiomId.WE:
            return not any(not z.support >> w.e & 1 for z in w_members(system, w.x, w.y))
        if axiom == AxiomId.IRR:
            return is_reducible(system, w.x)
        if axiom == AxiomId.COC:
            return not check_cocircuit_covering(system).holds
    if isinstance(axiom, Redundancy):
        return not check_nonredundancy(system, axiom).holds
    return not check_om_alternative(system).holds
