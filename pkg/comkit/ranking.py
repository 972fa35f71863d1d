"""
Posets, their ranking (weak order) extensions and the ranking COM built
from the sign-vector encodings of those extensions.
"""
from __future__ import absolute_import, division, print_function

from itertools import combinations
from math import factorial

import logging

import networkx as nx

from comkit.axioms import classify
from comkit.exceptions import ConsistencyError, GuardExceeded, ParseError, PreconditionError
from comkit.minors import simplify
from comkit.signs import MINUS, PLUS, ZERO, GroundSet, SignSystem, SignVector, minimal_elements
from comkit.topes import is_median_graph, is_partial_cube, tope_graph
from comkit.utils import time_call

_LOG = logging.getLogger(__name__)

BRUTE_FORCE_WIDTH_LIMIT = 12


def natural_order(labels):
    labels = list(labels)
    if all(l.isdigit() for l in labels):
        return sorted(labels, key=int)
    return labels


class Poset(object):
    """A finite strict order given by its cover pairs.

    The element order identifies the labels with 1..n; the 2-subsets of
    elements are ordered lexicographically by that identification.
    """

    def __init__(self, elements, covers=()):
        self.elements = tuple(str(e) for e in elements)
        if len(set(self.elements)) != len(self.elements):
            raise ParseError("Poset elements must be distinct")
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(self.elements)
        for a, b in covers:
            a, b = str(a), str(b)
            for x in (a, b):
                if x not in self.index:
                    raise ParseError("Unknown poset element: %s" % x, locator=x)
            if a == b:
                raise ParseError("Reflexive cover %s < %s" % (a, b), locator=a)
            self.graph.add_edge(a, b)
        if not nx.is_directed_acyclic_graph(self.graph):
            cycle = nx.find_cycle(self.graph)
            raise ParseError("Cycle in poset covers: %s" % " < ".join(u for u, _ in cycle), locator="covers")
        self.closure = frozenset(nx.transitive_closure_dag(self.graph).edges())
        self.covers = frozenset(nx.transitive_reduction(self.graph).edges())

    @classmethod
    def from_covers(cls, covers, elements=None):
        covers = [(str(a), str(b)) for a, b in covers]
        if elements is None:
            seen = []
            for pair in covers:
                for x in pair:
                    if x not in seen:
                        seen.append(x)
            elements = natural_order(seen)
        return cls(elements, covers)

    @classmethod
    def antichain(cls, n):
        return cls([str(i + 1) for i in range(n)])

    @classmethod
    def chain(cls, n):
        labels = [str(i + 1) for i in range(n)]
        return cls(labels, zip(labels, labels[1:]))

    @property
    def n(self):
        return len(self.elements)

    def less(self, a, b):
        return (a, b) in self.closure

    def comparable(self, a, b):
        return self.less(a, b) or self.less(b, a)

    def pairs(self):
        """All 2-subsets (a, b) with a before b, lexicographically."""
        return list(combinations(self.elements, 2))

    def pair_label(self, a, b):
        if all(len(e) == 1 for e in self.elements):
            return a + b
        return "%s-%s" % (a, b)

    def pair_ground(self):
        return GroundSet([self.pair_label(a, b) for a, b in self.pairs()])

    def incomparable_pairs(self):
        return [(a, b) for a, b in self.pairs() if not self.comparable(a, b)]

    def minimal(self, remaining):
        return [x for x in self.elements if x in remaining
                and not any(self.less(y, x) for y in remaining)]

    def __repr__(self):
        return "Poset(%s; %s)" % (" ".join(self.elements),
                                  ", ".join("%s<%s" % c for c in sorted(self.covers)))


class Ranking(object):
    """An ordered partition into non-empty levels; x < y iff x's level comes first."""

    def __init__(self, levels):
        self.levels = tuple(frozenset(str(x) for x in level) for level in levels)
        if any(not level for level in self.levels):
            raise PreconditionError("Ranking levels must be non-empty")
        self.level_of = {}
        for i, level in enumerate(self.levels):
            for x in level:
                if x in self.level_of:
                    raise PreconditionError("Element %s occurs in two levels" % x, locator=x)
                self.level_of[x] = i

    def less(self, a, b):
        return self.level_of[a] < self.level_of[b]

    def extends(self, poset):
        if set(self.level_of) != set(poset.elements):
            return False
        return all(self.less(a, b) for a, b in poset.closure)

    def refine(self, other):
        """Order each level of this ranking by the other ranking."""
        levels = []
        for level in self.levels:
            by_other = {}
            for x in level:
                by_other.setdefault(other.level_of[x], set()).add(x)
            levels.extend(by_other[k] for k in sorted(by_other))
        return Ranking(levels)

    @property
    def is_linear(self):
        return all(len(level) == 1 for level in self.levels)

    def __eq__(self, other):
        return isinstance(other, Ranking) and self.levels == other.levels

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.levels)

    def __str__(self):
        sep = "" if all(len(x) == 1 for x in self.level_of) else ","
        return "|".join(sep.join(sorted(level, key=_element_key)) for level in self.levels)

    def __repr__(self):
        return "Ranking(%s)" % self


def _element_key(label):
    return (0, int(label), label) if label.isdigit() else (1, 0, label)


def _ranking_guard(guard):
    if guard is None:
        from comkit.comkit_configuration import get_config
        guard = get_config().ranking_guard
    return guard


def ranking_extensions(poset, guard=None):
    """All rankings extending the poset; each level is a non-empty set of minimal remaining elements."""
    guard = _ranking_guard(guard)
    result = []

    def extend(prefix, remaining):
        if not remaining:
            result.append(Ranking(prefix))
            if len(result) > guard:
                raise GuardExceeded("More than %d ranking extensions" % guard, locator="rankings")
            return
        mins = poset.minimal(remaining)
        for size in range(1, len(mins) + 1):
            for level in combinations(mins, size):
                extend(prefix + [level], remaining - set(level))

    extend([], set(poset.elements))
    _LOG.debug("%d ranking extensions of %d elements", len(result), poset.n)
    return result


def encode_ranking(poset, ranking):
    if not ranking.extends(poset):
        raise PreconditionError("%s does not extend %r" % (ranking, poset), locator=str(ranking))
    values = []
    for a, b in poset.pairs():
        if ranking.less(a, b):
            values.append(PLUS)
        elif ranking.less(b, a):
            values.append(MINUS)
        else:
            values.append(ZERO)
    return SignVector(values)


def decode(poset, x):
    """The ranking whose encoding over all 2-subsets is X."""
    pairs = poset.pairs()
    if x.n != len(pairs):
        raise PreconditionError("Sign vector of length %d does not index %d pairs" % (x.n, len(pairs)))
    below = {e: 0 for e in poset.elements}
    for (a, b), v in zip(pairs, x.values()):
        if v == PLUS:
            below[b] += 1
        elif v == MINUS:
            below[a] += 1
    levels = {}
    for e in poset.elements:
        levels.setdefault(below[e], set()).add(e)
    ranking = Ranking([levels[k] for k in sorted(levels)])
    if encode_ranking(poset, ranking) != x:
        raise PreconditionError("%s does not encode a ranking extension" % x, locator=str(x))
    return ranking


def encoding_system(poset, guard=None):
    """The unsimplified system of all ranking encodings, with the rankings they encode."""
    if poset.n < 2:
        raise PreconditionError("Ranking encodings need at least two elements")
    rankings = ranking_extensions(poset, guard=guard)
    encoded = {encode_ranking(poset, r): r for r in rankings}
    return SignSystem(poset.pair_ground(), encoded), encoded


@time_call
def ranking_com(poset, simplify_system=True, guard=None):
    system, _ = encoding_system(poset, guard=guard)
    if not simplify_system:
        return system
    return simplify(system)


def minimal_rankings(poset, guard=None):
    system, encoded = encoding_system(poset, guard=guard)
    return [encoded[x] for x in minimal_elements(system)]


def linear_extensions(poset):
    return [Ranking([[x] for x in order]) for order in nx.all_topological_sorts(poset.graph)]


def _largest_antichain_brute(poset):
    for size in range(poset.n, 0, -1):
        for group in combinations(poset.elements, size):
            if not any(poset.comparable(a, b) for a, b in combinations(group, 2)):
                return size
    return 0


def _width_by_matching(poset):
    # Dilworth: width = n - maximum matching of the comparability bipartite graph
    bipartite = nx.Graph()
    left = [("l", e) for e in poset.elements]
    bipartite.add_nodes_from(left)
    bipartite.add_nodes_from(("r", e) for e in poset.elements)
    bipartite.add_edges_from((("l", a), ("r", b)) for a, b in poset.closure)
    matching = nx.bipartite.maximum_matching(bipartite, top_nodes=left)
    return poset.n - len(matching) // 2


def width(poset):
    if poset.n <= BRUTE_FORCE_WIDTH_LIMIT:
        return _largest_antichain_brute(poset)
    return _width_by_matching(poset)


def is_ranking(poset):
    """Incomparability is transitive."""
    for a in poset.elements:
        for b in poset.elements:
            if a == b or poset.comparable(a, b):
                continue
            for c in poset.elements:
                if c not in (a, b) and not poset.comparable(b, c) and poset.comparable(a, c):
                    return False
    return True


def ranking_levels(poset):
    """Levels of a poset that is itself a ranking."""
    if not is_ranking(poset):
        raise PreconditionError("%r is not a ranking" % poset)
    depth = {e: sum(1 for f in poset.elements if poset.less(f, e)) for e in poset.elements}
    levels = {}
    for e in poset.elements:
        levels.setdefault(depth[e], []).append(e)
    return [levels[k] for k in sorted(levels)]


def permutohedron_counts(sizes):
    """(vertices, edges) of a product of permutohedra with the given factor orders."""
    vertices = 1
    for m in sizes:
        vertices *= factorial(m)
    edges = sum(vertices * (m - 1) // 2 for m in sizes)
    return vertices, edges


class RankingReport(object):
    def __init__(self, checks):
        self.checks = checks

    def __getitem__(self, key):
        return self.checks[key]

    def as_dict(self):
        return dict(self.checks)


def verify_ranking_props(poset, guard=None):
    """Cross-check the OM and lopsided characterizations of ranking COMs."""
    system = ranking_com(poset, guard=guard)
    report = classify(system)
    w = width(poset)
    ranking = is_ranking(poset)
    graph = tope_graph(system)
    checks = {
        "width": w,
        "is_ranking": ranking,
        "is_com": report.is_com,
        "is_om": report.is_om,
        "is_lopsided": report.is_lopsided,
        "topes": len(graph),
        "linear_extensions": len(linear_extensions(poset)),
        "partial_cube": is_partial_cube(graph),
    }
    if ranking:
        expected = permutohedron_counts([len(level) for level in ranking_levels(poset)])
        checks["permutohedron_product"] = (len(graph), len(graph.edges)) == expected
    if w <= 2:
        checks["median_graph"] = is_median_graph(graph)
    consistent = (report.is_com and report.is_om == ranking and report.is_lopsided == (w <= 2)
                  and checks["topes"] == checks["linear_extensions"]
                  and checks.get("permutohedron_product", True) and checks.get("median_graph", True))
    if not consistent:
        raise ConsistencyError("Ranking COM properties disagree: %s" % checks)
    return RankingReport(checks)
