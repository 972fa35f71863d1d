"""
Face posets, DOT rendering and JSON report documents.
"""
from __future__ import absolute_import, division, print_function

import hashlib
import json

import logging

from jinja2 import Environment, PackageLoader

from comkit.axioms import COM_AXIOMS, classify
from comkit.exceptions import PreconditionError
from comkit.signs import cover_relation
from comkit.topes import TopeGraph, topes

_LOG = logging.getLogger(__name__)

TOP = "1"

_env = None


def template_environment():
    global _env  # pylint: disable=global-statement
    if _env is None:
        _env = Environment(loader=PackageLoader("comkit", "templates"),
                           trim_blocks=True, lstrip_blocks=True, autoescape=False)
    return _env


class FacePoset(object):
    """The covectors of a COM plus a synthetic top element covering every tope."""

    def __init__(self, system, covers):
        self.system = system
        self.elements = [str(x) for x in system.covectors] + [TOP]
        self.covers = covers

    @property
    def top(self):
        return len(self.elements) - 1

    def __len__(self):
        return len(self.elements)

    def as_dict(self):
        return {
            "elements": list(self.elements),
            "covers": [[self.elements[a], self.elements[b]] for a, b in self.covers],
        }


def face_poset(system):
    report = classify(system)
    if not report.is_com:
        raise PreconditionError("The face poset is built for COMs", axiom_report=report.failure(COM_AXIOMS))
    index = {x: i for i, x in enumerate(system.covectors)}
    relation = cover_relation(system)
    covers = [(index[x], index[y]) for x in system.covectors for y in relation[x]]
    top = len(system.covectors)
    covers.extend((index[t], top) for t in topes(system))
    return FacePoset(system, sorted(covers))


def export_dot(obj, name=None):
    env = template_environment()
    if isinstance(obj, TopeGraph):
        template = env.get_template("tope_graph.dot")
        data = obj.as_dict()
        return template.render(name=name or "tope_graph", vertices=data["vertices"], edges=data["edges"]) + "\n"
    if isinstance(obj, FacePoset):
        template = env.get_template("face_poset.dot")
        return template.render(name=name or "face_poset", elements=obj.elements, covers=obj.covers) + "\n"
    raise PreconditionError("Cannot render %s as DOT" % type(obj).__name__)


def input_digest(*payloads):
    digest = hashlib.sha256()
    for payload in payloads:
        if isinstance(payload, str):
            payload = payload.encode("utf-8")
        digest.update(payload)
    return digest.hexdigest()


def report_document(command, digest, results, exit_status):
    return {
        "command": command,
        "input_digest": digest,
        "results": results,
        "exit_status": exit_status,
    }


def dump_json(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
