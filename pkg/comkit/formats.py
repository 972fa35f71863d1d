"""
Text formats:

  .svs  one sign vector per line over +, - and 0, optionally preceded by a
        header ``elements: a b c`` naming the ground set
  .pos  poset cover lines ``a < b`` (chains ``a < b < c`` allowed), single
        labels declare isolated elements, optional ``elements:`` header
  .arr  ``dim: d``, hyperplane lines ``label: a1 ... ad | b`` and region
        lines ``strict: c1 ... cd | r`` with integer or p/q rationals

'#' starts a comment in all three.
"""
from __future__ import absolute_import, division, print_function

from fractions import Fraction

import logging

from comkit.exceptions import DimensionError, EmptyResultError, ParseError
from comkit.ranking import Poset, natural_order
from comkit.realize import AffineHyperplane, OpenPolyhedron, RealizationProblem
from comkit.signs import GroundSet, SignSystem, SignVector

_LOG = logging.getLogger(__name__)

HEADER = "elements:"


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _header_labels(line):
    if line.startswith(HEADER):
        labels = line[len(HEADER):].split()
        if not labels:
            raise ParseError("Empty elements header")
        return labels
    return None


def parse_svs(text):
    labels = None
    rows = []
    seen = set()
    width = None
    for lineno, line in _content_lines(text):
        header = _header_labels(line)
        if header is not None:
            if rows or labels is not None:
                raise ParseError("The elements header must come first", locator="line %d" % lineno)
            labels = header
            continue
        row = "".join(line.split())
        try:
            vec = SignVector(row)
        except ParseError as e:
            raise ParseError("%s on line %d" % (e.errors[0]["msg"], lineno), locator="line %d" % lineno)
        if width is None:
            width = vec.n
        elif vec.n != width:
            raise ParseError("Ragged row of length %d (expected %d) on line %d" % (vec.n, width, lineno),
                             locator="line %d" % lineno)
        if vec in seen:
            _LOG.warning("Duplicate covector %s on line %d ignored", vec, lineno)
            continue
        seen.add(vec)
        rows.append(vec)
    if not rows:
        raise ParseError("No sign vectors in input")
    if labels is not None and len(labels) != width:
        raise DimensionError("Header names %d elements, rows have %d" % (len(labels), width))
    ground = GroundSet(labels) if labels is not None else GroundSet.auto(width)
    return SignSystem(ground, rows)


def emit_svs(system):
    lines = ["%s %s" % (HEADER, " ".join(system.ground.labels))]
    lines.extend(system.to_strings())
    return "\n".join(lines) + "\n"


def parse_poset(text):
    elements = None
    seen = []
    covers = []
    for lineno, line in _content_lines(text):
        header = _header_labels(line)
        if header is not None:
            elements = header
            continue
        parts = [p.strip() for p in line.split("<")]
        if any(not p or len(p.split()) != 1 for p in parts):
            raise ParseError("Malformed poset line %d: %s" % (lineno, line), locator="line %d" % lineno)
        for p in parts:
            if p not in seen:
                seen.append(p)
        covers.extend(zip(parts, parts[1:]))
    if elements is None:
        if not seen:
            raise ParseError("No poset elements in input")
        return Poset.from_covers(covers, elements=natural_order(seen))
    missing = [p for p in seen if p not in elements]
    if missing:
        raise ParseError("Elements missing from the header: %s" % " ".join(missing))
    return Poset(elements, covers)


def emit_poset(poset):
    lines = ["%s %s" % (HEADER, " ".join(poset.elements))]
    order = poset.index
    for a, b in sorted(poset.covers, key=lambda c: (order[c[0]], order[c[1]])):
        lines.append("%s < %s" % (a, b))
    return "\n".join(lines) + "\n"


def _rational(token, lineno):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError("Malformed rational %r on line %d" % (token, lineno), locator="line %d" % lineno)


def _vector_and_bound(body, lineno, dim):
    if body.count("|") != 1:
        raise ParseError("Expected 'coefficients | bound' on line %d" % lineno, locator="line %d" % lineno)
    coeffs, bound = body.split("|")
    vec = [_rational(t, lineno) for t in coeffs.split()]
    bound = bound.split()
    if len(bound) != 1:
        raise ParseError("Expected a single bound on line %d" % lineno, locator="line %d" % lineno)
    if len(vec) != dim:
        raise DimensionError("%d coefficients on line %d, dimension is %d" % (len(vec), lineno, dim),
                             locator="line %d" % lineno)
    return vec, _rational(bound[0], lineno)


def parse_arrangement(text):
    dim = None
    hyperplanes = []
    region = []
    for lineno, line in _content_lines(text):
        if ":" not in line:
            raise ParseError("Malformed arrangement line %d: %s" % (lineno, line), locator="line %d" % lineno)
        key, body = [s.strip() for s in line.split(":", 1)]
        if key == "dim":
            if dim is not None:
                raise ParseError("Dimension given twice", locator="line %d" % lineno)
            try:
                dim = int(body)
            except ValueError:
                raise ParseError("Malformed dimension %r" % body, locator="line %d" % lineno)
            if dim <= 0:
                raise ParseError("Dimension must be positive", locator="line %d" % lineno)
            continue
        if dim is None:
            raise ParseError("'dim:' must precede constraints", locator="line %d" % lineno)
        vec, bound = _vector_and_bound(body, lineno, dim)
        if key == "strict":
            region.append((vec, bound))
            continue
        if not any(vec):
            raise ParseError("Hyperplane %s has a zero normal" % key, locator="line %d" % lineno)
        hyperplanes.append(AffineHyperplane(vec, bound, key))
    if dim is None:
        raise ParseError("Missing 'dim:' line")
    if not hyperplanes:
        raise EmptyResultError("The arrangement has no hyperplanes")
    labels = [h.label for h in hyperplanes]
    if len(set(labels)) != len(labels):
        raise ParseError("Hyperplane labels must be distinct")
    return RealizationProblem(hyperplanes, OpenPolyhedron(region), dim)


def _vector_text(vec, bound):
    return "%s | %s" % (" ".join(str(v) for v in vec), bound)


def emit_arrangement(problem):
    lines = ["dim: %d" % problem.dimension]
    lines.extend("%s: %s" % (h.label, _vector_text(h.normal, h.offset)) for h in problem.hyperplanes)
    lines.extend("strict: %s" % _vector_text(c, r) for c, r in problem.region.strict_constraints)
    return "\n".join(lines) + "\n"
