"""
Named example systems, posets and arrangements.
"""
from __future__ import absolute_import, division, print_function

from collections import OrderedDict
from fractions import Fraction
from itertools import combinations

import networkx as nx

from comkit.ranking import Poset, ranking_com
from comkit.realize import AffineHyperplane, OpenPolyhedron, RealizationProblem, region_covectors
from comkit.signs import GroundSet, SignSystem, SignVector, full_system
from comkit.substructures import SubstructureKind, substructure

HALF = Fraction(1, 2)


def face_symmetry_counterexample():
    """A closed halfspace of {+,-,0}^2: composition and strong elimination hold, face symmetry fails."""
    return SignSystem.from_strings(["+-", "+0", "++", "0+", "-+", "00"])


def weak_elimination_example():
    """Weak elimination holds; strong elimination of ++ and +- at e2 needs +0."""
    return SignSystem.from_strings(["++", "+-", "--", "00"])


def plus_zero_zero():
    return SignSystem.from_strings(["+00"])


def single_tope():
    return SignSystem.from_strings(["+-"])


def cube_path():
    """A non-isometric path of five vertices of the 3-cube with its edge barycenters."""
    return SignSystem.from_strings(["---", "+--", "++-", "+++", "-++",
                                    "0--", "+0-", "++0", "0++"])


def arrangement_problem():
    """Five lines (two parallel pairs and a diagonal through the crossing of two of them) in an open 4-gon."""
    lines = [
        AffineHyperplane([1, 0], 2, "e1"),
        AffineHyperplane([1, 0], 0, "e2"),
        AffineHyperplane([0, 1], 0, "e3"),
        AffineHyperplane([0, 1], 1, "e4"),
        AffineHyperplane([-1, 1], 0, "e5"),
    ]
    region = OpenPolyhedron([
        ([1, 0], -HALF),
        ([-1, 1], -HALF),
        ([HALF, -1], Fraction(-3, 2)),
        ([-1, 0], Fraction(-5, 2)),
    ])
    return RealizationProblem(lines, region, 2)


def arrangement_com():
    return region_covectors(arrangement_problem())


def coordinate_problem():
    """Coordinate lines of the plane, restricted to x + y > 1/2."""
    lines = [AffineHyperplane([1, 0], 0, "x"), AffineHyperplane([0, 1], 0, "y")]
    return RealizationProblem(lines, OpenPolyhedron([([1, 1], HALF)]), 2)


def coordinate_lopsided():
    return region_covectors(coordinate_problem())


def hexagon_problem():
    """Three lines through the origin of the plane."""
    lines = [AffineHyperplane([1, 0], 0, "e1"), AffineHyperplane([0, 1], 0, "e2"),
             AffineHyperplane([-1, 1], 0, "e3")]
    return RealizationProblem(lines, OpenPolyhedron(), 2)


def hexagon_om():
    return region_covectors(hexagon_problem())


def hexagon_halfspace():
    return substructure(hexagon_om(), "e1", SubstructureKind.HALF_POS)


def _theta_classes(graph):
    """Djokovic-Winkler classes of a partial cube, each as (a, b) of its first edge plus its edges."""
    dist = dict(nx.all_pairs_shortest_path_length(graph))
    edges = sorted(tuple(sorted(e)) for e in graph.edges())
    relation = nx.Graph()
    relation.add_nodes_from(edges)
    for (a, b), (x, y) in combinations(edges, 2):
        if dist[a][x] + dist[b][y] != dist[a][y] + dist[b][x]:
            relation.add_edge((a, b), (x, y))
    classes = [sorted(c) for c in nx.connected_components(relation)]
    classes.sort(key=lambda c: c[0])
    return dist, classes


def benzenoid(graph, faces):
    """The COM of a benzenoid: vertices, edges and inner hexagons as covectors over its cut classes."""
    dist, classes = _theta_classes(graph)
    ground = GroundSet(["c%d" % (i + 1) for i in range(len(classes))])

    def vertex_sign(v, cls):
        a, b = cls[0]
        return 1 if dist[v][a] < dist[v][b] else -1

    def covector(vertices, zero_classes):
        v = vertices[0]
        return SignVector([0 if i in zero_classes else vertex_sign(v, cls) for i, cls in enumerate(classes)])

    class_of = {}
    for i, cls in enumerate(classes):
        for e in cls:
            class_of[e] = i
    covectors = [covector([v], set()) for v in graph.nodes()]
    covectors.extend(covector([a], {class_of[(a, b)]}) for a, b in (tuple(sorted(e)) for e in graph.edges()))
    for face in faces:
        cycle = list(zip(face, face[1:] + face[:1]))
        covectors.append(covector(list(face), {class_of[tuple(sorted(e))] for e in cycle}))
    return SignSystem(ground, covectors)


def benzene():
    return benzenoid(nx.cycle_graph(6), [[0, 1, 2, 3, 4, 5]])


def naphthalene():
    graph = nx.Graph([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
                      (2, 6), (6, 7), (7, 8), (8, 9), (9, 3)])
    return benzenoid(graph, [[0, 1, 2, 3, 4, 5], [2, 6, 7, 8, 9, 3]])


def antichain_poset(n=3):
    return Poset.antichain(n)


def fibonacci_poset():
    """Covers i < i+2 and i < i+3 on 1..6."""
    return Poset.from_covers([(1, 3), (3, 5), (2, 4), (4, 6), (1, 4), (2, 5), (3, 6)])


def fence_poset():
    return Poset.from_covers([(1, 4), (2, 4), (2, 5), (3, 5)])


def chain_plus_point():
    return Poset(["1", "2", "3"], [("1", "2")])


def posets():
    return OrderedDict([
        ("antichain3", antichain_poset(3)),
        ("chain_plus_point", chain_plus_point()),
        ("fence", fence_poset()),
        ("fibonacci", fibonacci_poset()),
    ])


def com_fixtures():
    """COMs used across the test suite, keyed by name."""
    fixtures = OrderedDict([
        ("full2", full_system(2)),
        ("single_tope", single_tope()),
        ("arrangement", arrangement_com()),
        ("coordinate_lopsided", coordinate_lopsided()),
        ("hexagon_om", hexagon_om()),
        ("hexagon_halfspace", hexagon_halfspace()),
        ("benzene", benzene()),
        ("naphthalene", naphthalene()),
    ])
    for name, poset in posets().items():
        fixtures["ranking_" + name] = ranking_com(poset)
    return fixtures
