import pytest

from comkit.axioms import (AxiomId, AxiomReport, Redundancy, check_axiom, check_nonredundancy, check_om_alternative,
                           classify, verify_witness)
from comkit.catalog import (com_fixtures, coordinate_lopsided, face_symmetry_counterexample,
                            hexagon_om, plus_zero_zero, single_tope, weak_elimination_example)
from comkit.exceptions import ConsistencyError, UnknownAxiom
from comkit.generation import cocircuits
from comkit.signs import SignSystem, SignVector, full_system


@pytest.fixture(scope="module")
def fixtures():
    return com_fixtures()


def test_face_symmetry_witness():
    system = face_symmetry_counterexample()
    report = check_axiom(system, "FS")
    assert not report.holds
    assert report.as_dict()["witness"]["X"] == "00"
    assert report.as_dict()["witness"]["Y"] == "++"
    assert report.as_dict()["witness"]["missing"] == "--"
    assert verify_witness(system, report)


def test_face_symmetry_counterexample_is_ses():
    system = face_symmetry_counterexample()
    assert check_axiom(system, AxiomId.C)
    assert check_axiom(system, AxiomId.SE)
    report = classify(system)
    assert report.kind == "SES"
    assert not report.is_com


def test_strong_elimination_witness():
    system = weak_elimination_example()
    report = check_axiom(system, AxiomId.SE)
    assert not report.holds
    witness = report.as_dict()["witness"]
    assert witness["X"] == "++"
    assert witness["Y"] == "+-"
    assert witness["e"] == "e2"
    assert witness["missing"] == "+0"
    assert verify_witness(system, report)


def test_weak_but_not_one_point_elimination():
    system = weak_elimination_example()
    assert check_axiom(system, AxiomId.WE).holds
    report = check_axiom(system, AxiomId.SE1)
    assert not report.holds
    assert report.as_dict()["witness"]["f"] == "e1"
    assert verify_witness(system, report)


def test_ideal_composition_witness():
    report = check_axiom(plus_zero_zero(), AxiomId.IC)
    assert not report.holds
    assert str(report.witness.x) == "+00"
    assert str(report.witness.missing) == "++0"


def test_zero_and_symmetry():
    assert check_axiom(hexagon_om(), "Z").holds
    assert check_axiom(hexagon_om(), "SYM").holds
    report = check_axiom(single_tope(), "SYM")
    assert not report.holds
    assert str(report.witness.missing) == "-+"


@pytest.mark.parametrize("name, kind", [
    ("full2", "OM"),
    ("hexagon_om", "OM"),
    ("coordinate_lopsided", "lopsided"),
    ("arrangement", "COM"),
    ("benzene", "OM"),
    ("naphthalene", "COM"),
])
def test_classify_fixtures(fixtures, name, kind):
    report = classify(fixtures[name])
    assert report.kind == kind
    assert report.is_com


def test_every_fixture_is_a_com(fixtures):
    for name, system in fixtures.items():
        assert classify(system).is_com, name


def test_elimination_variants_agree_under_composition(fixtures):
    for name, system in fixtures.items():
        if not check_axiom(system, AxiomId.C):
            continue
        verdicts = {a: check_axiom(system, a).holds for a in (AxiomId.SE, AxiomId.SE_EQ, AxiomId.SE1, AxiomId.SE1_EQ)}
        assert len(set(verdicts.values())) == 1, name


def test_face_symmetry_variants_agree(fixtures):
    for name, system in fixtures.items():
        assert check_axiom(system, AxiomId.FS_LE).holds, name
        assert check_axiom(system, AxiomId.FS_PREC).holds, name


def test_lopsided_fixture_is_not_om():
    report = classify(coordinate_lopsided())
    assert report.is_lopsided
    assert not report.is_om


def test_nonredundancy_flags():
    report = check_nonredundancy(single_tope(), "N1")
    assert not report.holds
    assert report.as_dict()["witness"]["e"] == "e1"
    assert report.as_dict()["witness"]["required"] == "-"
    # constant columns are outside the scope of the restricted flavors
    assert check_nonredundancy(single_tope(), Redundancy.RN1_STAR).holds
    classified = classify(single_tope())
    assert classified.is_semisimple
    assert not classified.is_simple


def test_full_system_is_simple():
    report = classify(full_system(2))
    assert report.is_simple
    assert report.is_semisimple


def test_parallel_columns_break_n2():
    system = SignSystem.from_strings(["00", "++", "--"])
    report = check_nonredundancy(system, "N2*")
    assert not report.holds
    assert verify_witness(system, report)


def test_conformal_composition():
    system = SignSystem.from_strings(["00", "+0", "0+"])
    report = check_axiom(system, AxiomId.CC)
    assert not report.holds
    assert str(report.witness.missing) == "++"
    assert verify_witness(system, report)


def test_irreducibles_and_cocircuit_covering():
    system = hexagon_om()
    assert not check_axiom(system, AxiomId.IRR).holds
    circuits = cocircuits(system).system()
    assert check_axiom(circuits, AxiomId.IRR).holds
    assert check_axiom(circuits, AxiomId.COC).holds


def test_om_alternative():
    assert check_om_alternative(hexagon_om()).holds
    report = check_om_alternative(face_symmetry_counterexample())
    assert not report.holds
    assert report.witness is not None


def test_verify_witness_on_holding_report():
    report = check_axiom(hexagon_om(), AxiomId.C)
    assert not verify_witness(hexagon_om(), report)


def test_parse_axiom_names():
    assert AxiomId.parse("fs<=") == AxiomId.FS_LE
    assert AxiomId.parse("SE1=") == AxiomId.SE1_EQ
    assert Redundancy.parse("rn2_star") == Redundancy.RN2_STAR
    with pytest.raises(UnknownAxiom):
        AxiomId.parse("XYZ")
    with pytest.raises(UnknownAxiom):
        Redundancy.parse("N7")


def test_failed_report_needs_witness():
    with pytest.raises(ConsistencyError):
        AxiomReport(AxiomId.C, False)


def test_report_truthiness():
    assert bool(check_axiom(SignSystem.from_strings(["+"]), "C"))
    assert SignVector("+") in SignSystem.from_strings(["+"])


@pytest.mark.parametrize("vectors, holds", [
    (["+", "-"], False),
    (["++", "--"], False),
    (["+-", "-+"], False),
    (["0", "+", "-"], True),
    (["00", "++", "--"], True),
    (["+0", "++", "+-"], True),
])
def test_elimination_variants_agree_on_small_systems(vectors, holds):
    system = SignSystem.from_strings(vectors)
    assert check_axiom(system, AxiomId.C).holds
    for axiom in (AxiomId.SE, AxiomId.SE_EQ, AxiomId.SE1, AxiomId.SE1_EQ):
        assert check_axiom(system, axiom).holds == holds, axiom


def test_se1_on_opposite_topes():
    system = SignSystem.from_strings(["++", "--"])
    report = check_axiom(system, AxiomId.SE1)
    assert not report.holds
    assert report.witness.f is None
    assert report.witness.as_dict(system.ground)["required"] == "0*"
    assert verify_witness(system, report)
    assert not classify(system).is_com
