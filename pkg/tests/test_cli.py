import hashlib
import json
import logging

import pytest
from click.testing import CliRunner

from comkit.cli import cli


@pytest.fixture
def run(data_path):
    runner = CliRunner()

    def invoke(*args):
        args = [data_path(a) if "." in a and not a.startswith("-") else a for a in args]
        return runner.invoke(cli, args, catch_exceptions=False)
    yield invoke
    # the stderr handler is bound to the runner's captured stream
    logger = logging.getLogger("comkit")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)


def report(result):
    return json.loads(result.output)


def test_classify(run, data_path):
    result = run("classify", "hexagon.svs")
    assert result.exit_code == 0
    doc = report(result)
    assert doc["command"] == "classify"
    assert doc["exit_status"] == 0
    assert doc["results"]["kind"] == "OM"
    with open(data_path("hexagon.svs"), "rb") as f:
        assert doc["input_digest"] == hashlib.sha256(f.read()).hexdigest()


def test_classify_is_deterministic(run):
    first = run("classify", "counterexample.svs")
    second = run("classify", "counterexample.svs")
    assert first.output == second.output
    assert report(first)["results"]["kind"] == "SES"


def test_axioms_failure(run):
    result = run("axioms", "counterexample.svs", "--which", "FS")
    assert result.exit_code == 1
    results = report(result)["results"]
    assert list(results) == ["FS"]
    assert results["FS"]["witness"]["X"] == "00"
    assert results["FS"]["witness"]["Y"] == "++"


def test_axioms_all_hold(run):
    result = run("axioms", "hexagon.svs", "--which", "C", "--which", "SYM", "--which", "N1*")
    assert result.exit_code == 0
    assert all(r["holds"] for r in report(result)["results"].values())


def test_axioms_unknown(run):
    result = run("axioms", "hexagon.svs", "--which", "XYZ")
    assert result.exit_code == 2
    assert report(result)["results"]["error"] == "UnknownAxiom"


def test_parse_error(run):
    result = run("classify", "ragged.svs")
    assert result.exit_code == 2
    doc = report(result)
    assert doc["exit_status"] == 2
    assert doc["results"]["error"] == "ParseError"
    assert doc["results"]["errors"][0]["locator"] == "line 2"


def test_guard_exceeded(run):
    result = run("--guard", "3", "realize", "figure.arr")
    assert result.exit_code == 3
    assert report(result)["results"]["error"] == "GuardExceeded"


def test_guard_is_reset_between_invocations(run):
    assert run("--guard", "3", "realize", "figure.arr").exit_code == 3
    assert run("realize", "figure.arr").exit_code == 0


def test_bad_guard_option(run):
    result = run("--guard", "0", "classify", "hexagon.svs")
    assert result.exit_code == 2


def test_minor(run):
    result = run("minor", "edge.svs", "--delete", "a")
    assert result.exit_code == 0
    assert result.output == "elements: b\n0\n+\n-\n"
    result = run("minor", "counterexample.svs", "--contract", "e1")
    assert result.output == "elements: e2\n0\n+\n"


def test_simplify(run):
    assert run("simplify", "edge.svs").output == "elements: b\n0\n+\n-\n"
    assert run("simplify", "--semi", "edge.svs").output == "elements: a b\n+0\n++\n+-\n"


def test_topes(run):
    results = report(run("topes", "hexagon.svs"))["results"]
    assert results["count"] == 6
    assert results["topes"][0] == "+++"


def test_tope_graph(run, data_path):
    result = run("tope-graph", "edge.svs", "--format", "dot")
    with open(data_path("tope_graph.dot")) as f:
        assert result.output == f.read()
    results = report(run("tope-graph", "hexagon.svs"))["results"]
    assert results["partial_cube"]
    assert len(results["edges"]) == 6


def test_cocircuits(run):
    results = report(run("cocircuits", "hexagon.svs"))["results"]
    assert results["minimal"] == ["000"]
    assert len(results["cocircuits"]) == 7


def test_generate(run):
    result = run("generate", "edge.svs")
    assert result.output == "elements: a b\n+0\n++\n+-\n"


def test_envelope(run):
    result = run("envelope", "counterexample.svs")
    assert result.exit_code == 0
    assert len(result.output.splitlines()) == 10


def test_decompose(run):
    result = run("decompose", "halfspace.svs")
    assert result.exit_code == 0
    results = report(result)["results"]
    assert results["decomposition"]["pivot"] == "e3"
    assert results["decomposition"]["overlap"] == ["++-"]
    assert results["amalgam"]["holds"]
    assert results["euler_inclusion_exclusion"]


def test_decompose_single_cocircuit(run):
    assert report(run("decompose", "hexagon.svs"))["results"] == {"decomposition": None}


def test_amalgam(run, data_path):
    result = run("amalgam", "halfspace_lower.svs", "halfspace_upper.svs")
    assert result.exit_code == 0
    assert result.output.splitlines()[1:] == ["+0-", "++0", "+++", "++-", "+--"]


def test_amalgam_failure(run):
    result = run("amalgam", "halfspace_lower.svs", "halfspace_lower.svs")
    assert result.exit_code == 1
    doc = report(result)
    assert doc["results"]["error"] == "PreconditionError"
    assert not doc["results"]["axiom"]["conditions"]["union"]


def test_euler(run):
    result = run("euler", "lopsided.svs")
    assert result.exit_code == 0
    assert report(result)["results"] == {"sum": 1}


def test_euler_lopsided(run):
    result = run("euler", "lopsided.svs", "--lopsided", "iii")
    assert result.exit_code == 0
    assert report(result)["results"] == {"sum": 1, "lopsided": True}
    result = run("euler", "hexagon.svs", "--lopsided", "ii")
    assert result.exit_code == 1
    assert report(result)["results"]["lopsided"] is False


def test_euler_zero_sets(run):
    result = run("euler", "counterexample.svs", "--zero-sets")
    assert result.exit_code == 1
    assert report(result)["results"] == {"sum": 2}


def test_euler_needs_a_com(run):
    result = run("euler", "counterexample.svs")
    assert result.exit_code == 1
    assert report(result)["results"]["axiom"]["axiom"] == "FS"


def test_rank(run):
    results = report(run("rank", "hexagon.svs"))["results"]
    assert results["rank"]["000"] == 2
    assert results["graded"]


def test_ranking_com(run):
    result = run("ranking-com", "fence.pos")
    assert result.exit_code == 0
    assert result.output.startswith("elements: 12 13 15 23 34 45\n")
    unsimplified = run("ranking-com", "--no-simplify", "fence.pos")
    assert unsimplified.output.startswith("elements: 12 13 14 15 23 24 25 34 35 45\n")


def test_ranking_com_of_chain(run):
    result = run("ranking-com", "chain.pos")
    assert result.exit_code == 1
    assert report(result)["results"]["error"] == "EmptyResultError"


def test_realize(run, data_path):
    result = run("realize", "hexagon.arr")
    assert result.exit_code == 0
    with open(data_path("hexagon.svs")) as f:
        expected = [l for l in f.read().splitlines() if not l.startswith("#")]
    assert result.output.splitlines() == expected


def test_realize_witnesses(run):
    result = run("realize", "--witnesses", "figure.arr")
    assert result.exit_code == 0
    results = report(result)["results"]
    assert len(results) == 29
    assert all(len(point) == 2 for point in results.values())


def test_face_poset(run, data_path):
    result = run("face-poset", "edge.svs")
    with open(data_path("face_poset.dot")) as f:
        assert result.output == f.read()
    results = report(run("face-poset", "--format", "json", "edge.svs"))["results"]
    assert results["elements"] == ["+0", "++", "+-", "1"]


def test_verbose(run):
    result = run("--verbose", "topes", "edge.svs")
    assert result.exit_code == 0
