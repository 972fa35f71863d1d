"""
Topes, the tope graph and partial cube checks.
"""
from __future__ import absolute_import, division, print_function

from itertools import combinations

import logging

import networkx as nx

from comkit.axioms import COM_AXIOMS, SES_AXIOMS, classify
from comkit.exceptions import PreconditionError
from comkit.signs import ZERO, bits, coloop_mask, maximal_elements, popcount

_LOG = logging.getLogger(__name__)


def topes(system):
    """Maximal covectors, in canonical order."""
    return maximal_elements(system)


def hamming_mask(x, y):
    return (x.pos ^ y.pos) | (x.neg ^ y.neg)


def hamming(x, y):
    return popcount(hamming_mask(x, y))


class TopeGraph(object):
    """The subgraph of the hypercube induced by a set of topes.

    Vertices are indices into ``vertices``; every edge carries the position
    of the single coordinate in which its ends differ as ``label``.
    """

    def __init__(self, ground, vertices, semisimple=True):
        self.ground = ground
        self.vertices = tuple(vertices)
        self.semisimple = semisimple
        self.graph = nx.Graph()
        for i, t in enumerate(self.vertices):
            self.graph.add_node(i, covector=str(t))
        for i, j in combinations(range(len(self.vertices)), 2):
            diff = hamming_mask(self.vertices[i], self.vertices[j])
            if popcount(diff) == 1:
                self.graph.add_edge(i, j, label=next(bits(diff)))

    @property
    def edges(self):
        return sorted(tuple(sorted(e)) for e in self.graph.edges())

    def edge_label(self, i, j):
        return self.ground.labels[self.graph.edges[i, j]["label"]]

    def barycenter(self, i, j):
        return self.vertices[i].with_value(self.graph.edges[i, j]["label"], ZERO)

    def index(self, tope):
        return self.vertices.index(tope)

    def __len__(self):
        return len(self.vertices)

    def as_dict(self):
        return {
            "vertices": [str(t) for t in self.vertices],
            "edges": [{"source": i, "target": j, "label": self.edge_label(i, j)} for i, j in self.edges],
            "semisimple": self.semisimple,
        }


def tope_graph(system):
    semisimple = classify(system).is_semisimple
    if not semisimple:
        _LOG.warning("Tope graph of a system that is not semisimple")
    return TopeGraph(system.ground, topes(system), semisimple=semisimple)


def _as_nx(g):
    return g.graph if isinstance(g, TopeGraph) else g


def partial_cube_witness(g):
    """First vertex pair whose graph distance differs from the Hamming distance, or None.

    Unreachable pairs are reported with distance None.
    """
    for source in range(len(g.vertices)):
        dist = nx.single_source_shortest_path_length(g.graph, source)
        for target in range(source + 1, len(g.vertices)):
            expected = hamming(g.vertices[source], g.vertices[target])
            if dist.get(target) != expected:
                return source, target, dist.get(target), expected
    return None


def is_partial_cube(g):
    witness = partial_cube_witness(g)
    if witness is not None:
        _LOG.debug("Not a partial cube: vertices %d and %d at distance %s, Hamming distance %d", *witness)
    return witness is None


def is_median_graph(g):
    """Every triple of vertices has exactly one median."""
    graph = _as_nx(g)
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        return False
    dist = dict(nx.all_pairs_shortest_path_length(graph))
    nodes = list(graph.nodes())

    def between(u, v):
        return {x for x in nodes if dist[u][x] + dist[x][v] == dist[u][v]}

    intervals = {}
    for u, v in combinations(nodes, 2):
        intervals[u, v] = intervals[v, u] = between(u, v)
    for u in nodes:
        intervals[u, u] = {u}
    for u, v, w in combinations(nodes, 3):
        if len(intervals[u, v] & intervals[v, w] & intervals[u, w]) != 1:
            return False
    return True


def edge_covectors(g):
    return {(i, j): g.barycenter(i, j) for i, j in g.edges}


def edge_covector_check(system):
    """Tope-graph edges correspond one to one to covectors with a single zero off the coloops."""
    report = classify(system)
    if not (report.is_semisimple and report.is_strong_elimination):
        raise PreconditionError("Edge covector correspondence needs a semisimple strong elimination system",
                                axiom_report=report.failure(SES_AXIOMS, semisimple=True))
    g = tope_graph(system)
    barycenters = set(edge_covectors(g).values())
    live = system.ground.full_mask & ~coloop_mask(system)
    singles = {x for x in system.covectors if popcount(x.zero_set & live) == 1}
    return barycenters == singles and len(g.edges) == len(singles)


def verify_tope_determination(a, b):
    """(topes(a) == topes(b)) implies a == b, for semisimple COMs on a common ground set."""
    if a.ground != b.ground:
        raise PreconditionError("Systems live on different ground sets")
    for system in (a, b):
        report = classify(system)
        if not (report.is_com and report.is_semisimple):
            raise PreconditionError("Tope determination needs semisimple COMs",
                                    axiom_report=report.failure(COM_AXIOMS, semisimple=True))
    if set(topes(a)) == set(topes(b)):
        return a == b
    return True
