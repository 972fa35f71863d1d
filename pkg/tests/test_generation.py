import pytest

from comkit.axioms import classify
from comkit.catalog import benzene, com_fixtures, hexagon_om, plus_zero_zero, weak_elimination_example
from comkit.exceptions import PreconditionError
from comkit.generation import (cocircuits, conformal_closure, generate_from_cocircuits, irreducibles,
                               lopsided_envelope, supremum_decomposition, verify_generation_theorems, w_set)
from comkit.signs import SignSystem, SignVector, conformal_compose, full_system, popcount


@pytest.fixture(scope="module")
def fixtures():
    return com_fixtures()


def test_w_set():
    system = weak_elimination_example()
    x, y = SignVector("++"), SignVector("+-")
    assert [str(z) for z in w_set(system, x, y)] == ["00", "++", "+-"]
    assert [str(z) for z in w_set(system, x, y, ["e2"])] == ["00", "++"]


def test_w_set_members_only():
    with pytest.raises(PreconditionError):
        w_set(weak_elimination_example(), SignVector("+0"), SignVector("++"))


def test_lopsided_envelope():
    assert len(lopsided_envelope(plus_zero_zero())) == 9
    assert lopsided_envelope(weak_elimination_example()) == full_system(2)


def test_lopsided_envelope_needs_weak_elimination():
    with pytest.raises(PreconditionError) as e:
        lopsided_envelope(SignSystem.from_strings(["+", "-"]))
    assert e.value.axiom_report.witness.e == 0


def test_irreducibles_of_hexagon():
    found = irreducibles(hexagon_om())
    assert len(found) == 7
    assert all(x.zero_set for x in found)


def test_irreducibles_of_benzene():
    system = benzene()
    found = set(irreducibles(system))
    centre = SignVector([0] * system.n)
    edges = {x for x in system.covectors if popcount(x.zero_set) == 1}
    assert len(edges) == 6
    assert found == edges | {centre}


def test_cocircuits_of_hexagon():
    decomposition = cocircuits(hexagon_om())
    assert [str(x) for x in decomposition.minimal] == ["000"]
    assert len(decomposition.proper) == 6
    assert decomposition.as_dict()["cocircuits"] == [str(x) for x in decomposition.cocircuits]
    assert conformal_closure(decomposition.system()) == hexagon_om()


def test_conformal_closure():
    closure = conformal_closure(SignSystem.from_strings(["+0", "0+", "0-"]))
    assert closure.to_strings() == ["0+", "0-", "+0", "++", "+-"]


def test_generated_from_cocircuits(fixtures):
    for name, system in fixtures.items():
        assert generate_from_cocircuits(system) == system, name
        assert conformal_closure(SignSystem(system.ground, irreducibles(system))) == system, name


def test_supremum_decomposition():
    system = hexagon_om()
    for x in system.covectors:
        chosen = supremum_decomposition(system, x)
        assert chosen is not None
        assert len(chosen) <= system.n
        assert conformal_compose(chosen) == x


def test_supremum_decomposition_without_generators():
    system = hexagon_om()
    tope = system.covectors[-1]
    assert supremum_decomposition(system, tope, generators=[]) is None


def test_generation_theorems_on_coms(fixtures):
    for name, system in fixtures.items():
        report = verify_generation_theorems(system)
        assert report.passes, name
        assert report.consistent, name
        assert all(report.checks.values()), name


def test_generation_theorems_on_weak_elimination_example():
    report = verify_generation_theorems(weak_elimination_example())
    assert not report.is_strong_elimination
    assert not report.is_com
    assert not report.details["J.SE1"].holds
    assert report.consistent
    assert "checks" in report.as_dict()


@pytest.mark.parametrize("vectors", [["+", "-"], ["++", "--"]])
def test_generation_theorems_without_a_zero(vectors):
    system = SignSystem.from_strings(vectors)
    report = verify_generation_theorems(system)
    assert not report.is_com
    assert not report.is_strong_elimination
    assert report.consistent
    assert report.is_com == classify(system).is_com
