import pytest

from comkit.amalgam import (AmalgamReport, _monotone_path, amalgamate, decompose, decompose_fully, leaf_is_om,
                            reamalgamate, verify_amalgam)
from comkit.axioms import classify
from comkit.catalog import com_fixtures, face_symmetry_counterexample, hexagon_halfspace, hexagon_om
from comkit.exceptions import GuardExceeded, PreconditionError
from comkit.signs import MINUS, SignSystem, SignVector, minimal_elements


def test_single_improper_cocircuit():
    assert decompose(hexagon_om()) is None


def test_decompose_halfspace():
    system = hexagon_halfspace()
    decomposition = decompose(system)
    assert decomposition.pivot_label == "e3"
    assert decomposition.side == MINUS
    data = decomposition.as_dict()
    assert data["cocircuits"] == ["+0-", "++0"]
    assert data["lower"] == ["+0-", "++-", "+--"]
    assert data["upper"] == ["++0", "+++", "++-"]
    assert data["overlap"] == ["++-"]


def test_amalgamate_round_trip():
    system = hexagon_halfspace()
    decomposition = decompose(system)
    report = verify_amalgam(decomposition.lower, decomposition.upper, system)
    assert report.holds
    assert amalgamate(decomposition.lower, decomposition.upper) == system


NON_OM = [name for name, system in com_fixtures().items() if not classify(system).is_om]


def test_non_om_fixtures():
    assert "ranking_fence" in NON_OM
    assert "arrangement" in NON_OM
    assert "hexagon_om" not in NON_OM


@pytest.mark.parametrize("name", NON_OM)
def test_amalgam_of_decomposition(name):
    system = com_fixtures()[name]
    decomposition = decompose(system)
    if decomposition is None:
        assert len(minimal_elements(system)) == 1
        assert leaf_is_om(system)
        return
    assert verify_amalgam(decomposition.lower, decomposition.upper, system).holds
    assert decomposition.x[decomposition.pivot] == decomposition.side
    assert decomposition.overlap.members == decomposition.lower.members & decomposition.upper.members
    assert amalgamate(decomposition.lower, decomposition.upper) == system


def test_lower_twice_is_no_amalgam():
    decomposition = decompose(hexagon_halfspace())
    lower = decomposition.lower
    report = verify_amalgam(lower, lower, lower)
    assert not report.conditions["union"]
    assert "union" in report.as_dict()["witnesses"]
    with pytest.raises(PreconditionError) as e:
        amalgamate(lower, lower)
    assert isinstance(e.value.axiom_report, AmalgamReport)
    assert "union" in e.value.report()["axiom"]["conditions"]


def test_amalgam_parts_on_different_grounds():
    decomposition = decompose(hexagon_halfspace())
    other = SignSystem.from_strings(["+"])
    with pytest.raises(PreconditionError):
        verify_amalgam(decomposition.lower, other, decomposition.upper)


def test_amalgam_path_guard():
    system = hexagon_halfspace()
    decomposition = decompose(system)
    with pytest.raises(GuardExceeded):
        verify_amalgam(decomposition.lower, decomposition.upper, system, guard=2)


def test_decompose_needs_semisimple_com():
    with pytest.raises(PreconditionError):
        decompose(face_symmetry_counterexample())


@pytest.mark.parametrize("name", NON_OM)
def test_full_decomposition(name):
    system = com_fixtures()[name]
    tree = decompose_fully(system)
    assert tree.is_leaf == (decompose(system) is None)
    for leaf in tree.leaves():
        assert leaf_is_om(leaf)
    assert reamalgamate(tree) == system


def test_leaf_of_a_single_tope():
    assert leaf_is_om(SignSystem.from_strings(["+-"]))
    assert not leaf_is_om(SignSystem.from_strings(["+-", "++"]))


def test_path_values_on_the_zero_set_are_free():
    members = SignSystem.from_strings(["-0", "+0", "0+"]).members
    # the only barycenter is 0+, which is not zero on e2
    assert _monotone_path(members, SignVector("-0"), SignVector("+0"))
    assert not _monotone_path(members - {SignVector("0+")}, SignVector("-0"), SignVector("+0"))


def test_path_needs_every_vertex():
    members = SignSystem.from_strings(["--", "0-", "+-", "+0", "++"]).members
    assert _monotone_path(members, SignVector("--"), SignVector("++"))
    assert not _monotone_path(members - {SignVector("+-")}, SignVector("--"), SignVector("++"))
