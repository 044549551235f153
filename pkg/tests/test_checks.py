import pytest

from conftest import G
from semiring_ideals import checks, ideals
from semiring_ideals.checks import DIAGNOSTICS, PROPOSITIONS, run_checks
from semiring_ideals.core import FiniteSemiring
from semiring_ideals.errors import AxiomViolation, UnknownPropositionId


def test_boolean_full_suite_is_clean():
    rep = run_checks(G("B"))
    assert rep.ok
    assert [p.id for p in rep.propositions] == list(PROPOSITIONS)
    assert all(p.instances > 0 for p in rep.propositions)
    assert set(rep.diagnostics) == set(DIAGNOSTICS)


def test_krull_radical_on_l3_checks_three_ideals():
    rep = run_checks(G("L3"), "krull-radical")
    (p,) = rep.propositions
    assert p.instances == 3 and p.failures == []


def test_unknown_id():
    with pytest.raises(UnknownPropositionId):
        run_checks(G("B"), ["krull-radical", "no-such-thing"])


def test_corrupted_semiring_is_rejected_first():
    bad = FiniteSemiring(2, ((0, 1), (1, 1)), ((0, 1), (1, 1)))
    with pytest.raises(AxiomViolation):
        run_checks(bad)


def test_report_is_order_independent():
    a = run_checks(G("BxB"), seed=1).to_dict()
    b = run_checks(G("BxB"), seed=2).to_dict()
    c = run_checks(G("BxB")).to_dict()
    for d in (a, b, c):
        d.pop("elapsed_ms")
    assert a == b == c


def test_report_schema():
    d = run_checks(G("B"), ["units-max", "zariski"]).to_dict()
    assert set(d) >= {"semiring", "propositions", "elapsed_ms"}
    assert d["semiring"] == "B"
    for p in d["propositions"]:
        assert set(p) == {"id", "anchor", "instances", "failures"}
        assert isinstance(p["anchor"], str) and p["anchor"]


def test_broken_radical_is_caught(monkeypatch):
    # a radical that forgets powers must be flagged by the checker
    monkeypatch.setattr(checks, "radical", lambda I: I)
    rep = run_checks(G("Z4"), ["krull-radical", "radical-laws"])
    assert not rep.ok
    assert any("(0)" in w for w in rep.result("krull-radical").failures)


def test_broken_product_is_caught(monkeypatch):
    monkeypatch.setattr(checks, "mul_ideals", ideals.add_ideals)
    rep = run_checks(G("Z4"), ["ideal-arith"])
    assert rep.result("ideal-arith").failures


def test_diagnostics_find_known_witnesses():
    rep = run_checks(G("L3"))
    assert any("{0, s} -> {0, 1}" in w for w in rep.diagnostics["prime-extension-not-prime"])
    assert rep.diagnostics["extension-contraction-strict"]
