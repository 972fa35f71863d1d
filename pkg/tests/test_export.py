import json

import pytest

from comkit.catalog import face_symmetry_counterexample, hexagon_om
from comkit.exceptions import PreconditionError
from comkit.export import TOP, dump_json, export_dot, face_poset, input_digest, report_document
from comkit.signs import SignSystem
from comkit.topes import tope_graph


@pytest.fixture
def edge():
    return SignSystem.from_strings(["+0", "++", "+-"], labels=["a", "b"])


def golden(data_path, name):
    with open(data_path(name)) as f:
        return f.read()


def test_tope_graph_dot(data_path, edge):
    assert export_dot(tope_graph(edge)) == golden(data_path, "tope_graph.dot")


def test_face_poset_dot(data_path, edge):
    assert export_dot(face_poset(edge)) == golden(data_path, "face_poset.dot")


def test_dot_name():
    text = export_dot(tope_graph(hexagon_om()), name="hexagon")
    assert text.startswith('graph "hexagon" {')
    assert text.count(" -- ") == 6


def test_face_poset(edge):
    poset = face_poset(edge)
    assert len(poset) == 4
    assert poset.elements[poset.top] == TOP
    assert poset.as_dict()["covers"] == [["+0", "++"], ["+0", "+-"], ["++", "1"], ["+-", "1"]]


def test_face_poset_of_hexagon():
    poset = face_poset(hexagon_om())
    # origin below six rays, each ray below two topes, six topes below the top
    assert len(poset.covers) == 6 + 12 + 6


def test_face_poset_needs_a_com():
    with pytest.raises(PreconditionError) as e:
        face_poset(face_symmetry_counterexample())
    assert e.value.report()["axiom"]["axiom"] == "FS"


def test_export_dot_unsupported():
    with pytest.raises(PreconditionError):
        export_dot(hexagon_om())


def test_input_digest():
    assert input_digest() == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
    assert input_digest("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
    assert input_digest(b"ab", b"c") == input_digest("abc")


def test_report_document():
    doc = report_document("classify", input_digest(), {"kind": "OM"}, 0)
    text = dump_json(doc)
    assert text.endswith("}\n")
    assert json.loads(text) == doc
    assert text.index('"command"') < text.index('"exit_status"') < text.index('"input_digest"')
