"""
Ground sets, sign vectors and sign-vector systems.

A sign vector is stored as two bit masks over positions 0..n-1: the
positive support and the negative support.  All values are immutable.
"""
from __future__ import absolute_import, division, print_function

from itertools import product

import logging

from comkit.exceptions import DimensionError, EmptyResultError, ParseError, PreconditionError, check_guard

_LOG = logging.getLogger(__name__)

PLUS = 1
ZERO = 0
MINUS = -1

SIGN_CHARS = {PLUS: "+", ZERO: "0", MINUS: "-"}
CHAR_SIGNS = {"+": PLUS, "0": ZERO, "-": MINUS, "−": MINUS}


def bits(mask):
    """Positions of the set bits of mask, ascending."""
    pos = 0
    while mask:
        if mask & 1:
            yield pos
        mask >>= 1
        pos += 1


def popcount(mask):
    return bin(mask).count("1")


class GroundSet(object):
    def __init__(self, labels):
        labels = tuple(str(l) for l in labels)
        if not labels:
            raise EmptyResultError("A ground set must be non-empty")
        if len(set(labels)) != len(labels):
            raise ParseError("Ground set labels must be distinct: %s" % " ".join(labels))
        for l in labels:
            if not l or any(c.isspace() for c in l):
                raise ParseError("Invalid element label: %r" % l)
        self.labels = labels
        self.index = {l: i for i, l in enumerate(labels)}

    @classmethod
    def auto(cls, n):
        return cls(["e%d" % (i + 1) for i in range(n)])

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return "GroundSet(%s)" % ", ".join(self.labels)

    @property
    def full_mask(self):
        return (1 << len(self.labels)) - 1

    def position(self, label):
        try:
            return self.index[label]
        except KeyError:
            raise PreconditionError("Unknown element label: %s" % label, locator=str(label))

    def mask_of(self, labels):
        """Bit mask for a collection of element labels (integer positions are accepted too)."""
        mask = 0
        for l in labels:
            if isinstance(l, int):
                if not 0 <= l < len(self.labels):
                    raise PreconditionError("Element position out of range: %d" % l)
                mask |= 1 << l
            else:
                mask |= 1 << self.position(l)
        return mask

    def labels_of(self, mask):
        return [self.labels[i] for i in bits(mask)]

    def restrict(self, keep):
        return GroundSet([self.labels[i] for i in keep])


class SignVector(object):
    __slots__ = ("pos", "neg", "n", "_key")

    def __init__(self, values):
        if isinstance(values, str):
            values = [_parse_char(c) for c in values]
        else:
            values = list(values)
        pos = neg = 0
        for i, v in enumerate(values):
            if v > 0:
                pos |= 1 << i
            elif v < 0:
                neg |= 1 << i
        self.pos = pos
        self.neg = neg
        self.n = len(values)
        self._key = None

    @classmethod
    def from_masks(cls, pos, neg, n):
        if pos & neg:
            raise DimensionError("Positive and negative supports intersect")
        vec = cls.__new__(cls)
        vec.pos = pos
        vec.neg = neg
        vec.n = n
        vec._key = None
        return vec

    @classmethod
    def zero(cls, n):
        return cls.from_masks(0, 0, n)

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        if not 0 <= i < self.n:
            raise IndexError(i)
        bit = 1 << i
        if self.pos & bit:
            return PLUS
        if self.neg & bit:
            return MINUS
        return ZERO

    def values(self):
        return tuple(self[i] for i in range(self.n))

    @property
    def support(self):
        return self.pos | self.neg

    @property
    def zero_set(self):
        return ((1 << self.n) - 1) & ~(self.pos | self.neg)

    @property
    def sort_key(self):
        if self._key is None:
            self._key = tuple(1 if self.pos >> i & 1 else (2 if self.neg >> i & 1 else 0)
                              for i in range(self.n))
        return self._key

    def __eq__(self, other):
        return (isinstance(other, SignVector) and self.n == other.n
                and self.pos == other.pos and self.neg == other.neg)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.pos, self.neg, self.n))

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __neg__(self):
        return negate(self)

    def __str__(self):
        return "".join(SIGN_CHARS[v] for v in self.values())

    def __repr__(self):
        return "SignVector(%r)" % str(self)

    def compose(self, other):
        return compose(self, other)

    def with_value(self, i, value):
        bit = 1 << i
        pos = self.pos & ~bit
        neg = self.neg & ~bit
        if value > 0:
            pos |= bit
        elif value < 0:
            neg |= bit
        return SignVector.from_masks(pos, neg, self.n)

    def restrict(self, keep):
        """The sign vector on the positions in keep (in that order)."""
        pos = neg = 0
        for j, i in enumerate(keep):
            if self.pos >> i & 1:
                pos |= 1 << j
            elif self.neg >> i & 1:
                neg |= 1 << j
        return SignVector.from_masks(pos, neg, len(keep))


def _parse_char(c):
    try:
        return CHAR_SIGNS[c]
    except KeyError:
        raise ParseError("Bad sign character: %r" % c)


def _same_length(x, y):
    if x.n != y.n:
        raise DimensionError("Sign vectors of length %d and %d" % (x.n, y.n))


def compose(x, y):
    _same_length(x, y)
    free = ~(x.pos | x.neg)
    return SignVector.from_masks(x.pos | (y.pos & free), x.neg | (y.neg & free), x.n)


def separator_mask(x, y):
    _same_length(x, y)
    return (x.pos & y.neg) | (x.neg & y.pos)


def separator(x, y):
    """Positions f with X_f * Y_f = -1."""
    return frozenset(bits(separator_mask(x, y)))


def leq(x, y):
    """Sign order with 0 below both signs."""
    _same_length(x, y)
    return (x.pos & ~y.pos) == 0 and (x.neg & ~y.neg) == 0


def negate(x):
    return SignVector.from_masks(x.neg, x.pos, x.n)


def conformal_compose(vectors):
    """Supremum of pairwise sign-consistent vectors, or None when two of them conflict."""
    vectors = list(vectors)
    if not vectors:
        raise PreconditionError("Conformal composition of an empty sequence")
    n = vectors[0].n
    pos = neg = 0
    for v in vectors:
        if v.n != n:
            raise DimensionError("Sign vectors of length %d and %d" % (n, v.n))
        pos |= v.pos
        neg |= v.neg
    if pos & neg:
        return None
    return SignVector.from_masks(pos, neg, n)


class SignSystem(object):
    """A non-empty set of sign vectors over a ground set, kept in canonical order."""

    def __init__(self, ground, covectors):
        if not isinstance(ground, GroundSet):
            ground = GroundSet(ground)
        members = frozenset(covectors)
        if not members:
            raise EmptyResultError("A sign system needs at least one covector")
        n = len(ground)
        for x in members:
            if x.n != n:
                raise DimensionError("Covector %s has length %d, ground set has %d" % (x, x.n, n))
        self.ground = ground
        self.members = members
        self.covectors = tuple(sorted(members, key=lambda v: v.sort_key))

    @classmethod
    def from_strings(cls, rows, labels=None):
        rows = [r.strip() for r in rows]
        vectors = [SignVector(r) for r in rows]
        if not vectors:
            raise EmptyResultError("A sign system needs at least one covector")
        n = vectors[0].n
        if labels is None:
            ground = GroundSet.auto(n)
        else:
            ground = GroundSet(labels)
        return cls(ground, vectors)

    @property
    def n(self):
        return len(self.ground)

    def __len__(self):
        return len(self.covectors)

    def __iter__(self):
        return iter(self.covectors)

    def __contains__(self, x):
        return x in self.members

    def __eq__(self, other):
        return (isinstance(other, SignSystem) and self.ground == other.ground
                and self.members == other.members)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ground, self.members))

    def __repr__(self):
        return "SignSystem(%s: %s)" % (" ".join(self.ground.labels), " ".join(self.to_strings()))

    def to_strings(self):
        return [str(x) for x in self.covectors]

    def with_covectors(self, covectors):
        """A system on the same ground set."""
        return SignSystem(self.ground, covectors)

    def subsystem(self, predicate, what="subsystem"):
        selected = [x for x in self.covectors if predicate(x)]
        if not selected:
            raise EmptyResultError("The %s is empty" % what, locator=what)
        return SignSystem(self.ground, selected)

    def column_values(self, i):
        return frozenset(x[i] for x in self.covectors)

    def check_member(self, x):
        if x.n != self.n:
            raise DimensionError("Sign vector %s has length %d, ground set has %d" % (x, x.n, self.n))
        if x not in self.members:
            raise PreconditionError("%s is not a covector of the system" % x, locator=str(x))


def upset(system, guard=None):
    """All sign vectors above some covector of the system."""
    check_guard(system.n, guard)
    result = set()
    for x in system:
        zeros = list(bits(x.zero_set))
        for fill in product((ZERO, PLUS, MINUS), repeat=len(zeros)):
            pos, neg = x.pos, x.neg
            for i, v in zip(zeros, fill):
                if v == PLUS:
                    pos |= 1 << i
                elif v == MINUS:
                    neg |= 1 << i
            result.add(SignVector.from_masks(pos, neg, x.n))
    _LOG.debug("upset of %d covectors has %d members", len(system), len(result))
    return SignSystem(system.ground, result)


def full_system(n, labels=None):
    """{+,-,0}^n."""
    ground = GroundSet(labels) if labels else GroundSet.auto(n)
    return SignSystem(ground, (SignVector(v) for v in product((ZERO, PLUS, MINUS), repeat=n)))


def minimal_elements(system):
    """Min(L) under the sign order, in canonical order."""
    vecs = system.covectors
    return [x for x in vecs if not any(y != x and leq(y, x) for y in vecs)]


def maximal_elements(system):
    vecs = system.covectors
    return [x for x in vecs if not any(y != x and leq(x, y) for y in vecs)]


def strictly_above(system, x):
    return [y for y in system.covectors if y != x and leq(x, y)]


def cover_relation(system):
    """Map X -> list of Y in L covering X (X < Y with nothing of L strictly between)."""
    covers = {}
    for x in system.covectors:
        above = strictly_above(system, x)
        covers[x] = [y for y in above if not any(z != y and leq(z, y) for z in above)]
    return covers


def column_values(system):
    """The set of values taken by each coordinate, per position."""
    return [system.column_values(i) for i in range(system.n)]


def nonconstant_mask(system):
    """E+-: positions whose column is not constantly + and not constantly -."""
    mask = 0
    for i, vals in enumerate(column_values(system)):
        if vals != frozenset([PLUS]) and vals != frozenset([MINUS]):
            mask |= 1 << i
    return mask


def coloop_mask(system):
    mask = 0
    for i, vals in enumerate(column_values(system)):
        if vals == frozenset([ZERO]):
            mask |= 1 << i
    return mask
