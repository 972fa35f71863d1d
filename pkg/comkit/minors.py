"""
Deletion, contraction, fibers, faces, reorientation and the
simplification transforms.

Element arguments are collections of ground-set labels (integer positions
are accepted as well).
"""
from __future__ import absolute_import, division, print_function

from collections import OrderedDict

import logging

from comkit.axioms import check_axiom, AxiomId
from comkit.exceptions import EmptyResultError, PreconditionError, check_guard
from comkit.signs import SignSystem, SignVector, bits, coloop_mask, column_values, compose, nonconstant_mask

_LOG = logging.getLogger(__name__)


def _mask(system, elements):
    if isinstance(elements, int) and not isinstance(elements, bool):
        return system.ground.mask_of([elements])
    if isinstance(elements, str):
        elements = [elements]
    return system.ground.mask_of(elements)


def restrict_to(system, keep, vectors=None):
    """The system on the positions in keep, rebuilt from vectors (default: all covectors)."""
    keep = list(keep)
    if not keep:
        raise EmptyResultError("The minor has an empty ground set")
    ground = system.ground.restrict(keep)
    vectors = system.covectors if vectors is None else vectors
    return SignSystem(ground, (x.restrict(keep) for x in vectors))


def delete(system, elements):
    mask = _mask(system, elements)
    keep = [i for i in range(system.n) if not mask >> i & 1]
    return restrict_to(system, keep)


def contract(system, elements):
    mask = _mask(system, elements)
    vanishing = [x for x in system.covectors if not x.support & mask]
    if not vanishing:
        raise EmptyResultError("No covector vanishes on %s" % " ".join(system.ground.labels_of(mask)),
                               locator="contract")
    keep = [i for i in range(system.n) if not mask >> i & 1]
    return restrict_to(system, keep, vanishing)


class MinorSpec(object):
    def __init__(self, delete=(), contract=()):
        self.delete = tuple(delete)
        self.contract = tuple(contract)
        if set(self.delete) & set(self.contract):
            raise PreconditionError("Deleted and contracted elements must be disjoint")

    def apply(self, system):
        result = system
        if self.contract:
            result = contract(result, self.contract)
        if self.delete:
            result = delete(result, self.delete)
        return result


class Fiber(object):
    def __init__(self, system, topal, face):
        self.system = system
        self.topal = topal
        self.face = face

    def __repr__(self):
        return "Fiber(%r, topal=%s, face=%s)" % (self.system, self.topal, self.face)


def _agree_off(x, y, off):
    return (x.pos & off) == (y.pos & off) and (x.neg & off) == (y.neg & off)


def fiber(system, x, elements):
    """Covectors agreeing with X outside A."""
    system.check_member(x)
    a_mask = _mask(system, elements)
    off = system.ground.full_mask & ~a_mask
    members = [y for y in system.covectors if _agree_off(x, y, off)]
    topal = not (x.zero_set & off)
    face = topal and any(y.zero_set == a_mask for y in members)
    return Fiber(SignSystem(system.ground, members), topal, face)


def topal_fibers(system, guard=None):
    """All topal fibers, as (A mask, member list) pairs, A ascending."""
    check_guard(system.n, guard)
    full = system.ground.full_mask
    for a_mask in range(full + 1):
        off = full & ~a_mask
        groups = OrderedDict()
        for y in system.covectors:
            if y.zero_set & off:
                continue
            groups.setdefault((y.pos & off, y.neg & off), []).append(y)
        for members in groups.values():
            yield a_mask, members


def face(system, x):
    """F(X) = {X o Y : Y in L}."""
    system.check_member(x)
    report = check_axiom(system, AxiomId.C)
    if not report.holds:
        raise PreconditionError("Faces need the composition axiom", axiom_report=report)
    return SignSystem(system.ground, (compose(x, y) for y in system.covectors))


def reorient(system, elements):
    """Flip the signs of the given coordinates in every covector."""
    mask = _mask(system, elements)
    flipped = []
    for x in system.covectors:
        pos = (x.pos & ~mask) | (x.neg & mask)
        neg = (x.neg & ~mask) | (x.pos & mask)
        flipped.append(SignVector.from_masks(pos, neg, x.n))
    return SignSystem(system.ground, flipped)


class RedundancyProfile(object):
    def __init__(self, ground, e0, e_pm, e2, parallel_classes):
        self.ground = ground
        self.e0 = e0
        self.e_pm = e_pm
        self.e1 = e0 | (ground.full_mask & ~e_pm)
        self.e2 = e2
        self.parallel_classes = parallel_classes

    def labels(self, mask):
        return set(self.ground.labels_of(mask))

    @property
    def coloops(self):
        return self.labels(self.e0)

    def as_dict(self):
        return {
            "E0": sorted(self.labels(self.e0)),
            "E_pm": sorted(self.labels(self.e_pm)),
            "E1": sorted(self.labels(self.e1)),
            "E2": sorted(self.labels(self.e2)),
            "parallel_classes": [[self.ground.labels[i] for i in cls] for cls in self.parallel_classes],
        }


def _parallel(cols_e, cols_f):
    return cols_e == cols_f or cols_e == tuple(-v for v in cols_f)


def parallel_classes(system, positions=None):
    """Partition of the positions into classes of equal-or-opposite columns, by smallest member."""
    positions = list(range(system.n)) if positions is None else list(positions)
    columns = {i: tuple(x[i] for x in system.covectors) for i in positions}
    classes = []
    for i in positions:
        for cls in classes:
            if _parallel(columns[cls[0]], columns[i]):
                cls.append(i)
                break
        else:
            classes.append([i])
    return [tuple(c) for c in classes]


def redundancy_profile(system):
    e2 = 0
    for i, vals in enumerate(column_values(system)):
        if len(vals) == 2:
            e2 |= 1 << i
    return RedundancyProfile(system.ground, coloop_mask(system), nonconstant_mask(system), e2,
                             parallel_classes(system))


def simplify(system):
    """Delete E1 and E2, then keep the smallest member of each parallel class."""
    profile = redundancy_profile(system)
    drop = profile.e1 | profile.e2
    remaining = [i for i in range(system.n) if not drop >> i & 1]
    keep = sorted(cls[0] for cls in parallel_classes(system, remaining))
    _LOG.debug("simplify keeps %d of %d elements", len(keep), system.n)
    return restrict_to(system, keep)


def semisimplify(system):
    """Like simplify, but the non-zero constant columns are all kept."""
    profile = redundancy_profile(system)
    drop = profile.e0 | profile.e2
    constant = profile.ground.full_mask & ~profile.e_pm
    remaining = [i for i in range(system.n) if not drop >> i & 1 and not constant >> i & 1]
    keep = [cls[0] for cls in parallel_classes(system, remaining)]
    keep.extend(i for i in bits(constant & ~drop))
    keep.sort()
    _LOG.debug("semisimplify keeps %d of %d elements", len(keep), system.n)
    return restrict_to(system, keep)


def zero_count(x, mask):
    """Number of zeros of X inside mask."""
    return bin(x.zero_set & mask).count("1")
