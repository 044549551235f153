"""Hypothesis-driven checks on semirings built from the gallery."""

from hypothesis import HealthCheck, given, settings, strategies as st

from conftest import GALLERY
import oracles
from semiring_ideals.checks import run_checks
from semiring_ideals.core import direct_product
from semiring_ideals.ideals import (
    add_ideals,
    colon,
    enumerate_ideals,
    intersect_ideals,
    mul_ideals,
    radical,
)
from semiring_ideals.localization import localize, localize_ideal
from semiring_ideals.spectrum import mc_sets, spec, v_of

PAIRS = [(A, B) for A in GALLERY for B in GALLERY if A.size * B.size <= 8]
SETTINGS = settings(deadline=None, suppress_health_check=[HealthCheck.too_slow])


@settings(SETTINGS, max_examples=6)
@given(st.sampled_from(PAIRS))
def test_products_pass_the_full_suite(pair):
    P = direct_product(*pair)
    rep = run_checks(P)
    assert rep.ok, [(p.id, p.failures[:1]) for p in rep.propositions if p.failures]


@settings(SETTINGS, max_examples=40)
@given(st.sampled_from(PAIRS), st.data())
def test_ideals_of_products_match_subset_scan(pair, data):
    P = direct_product(*pair)
    ids = list(enumerate_ideals(P))
    assert [I.mask for I in ids] == [oracles.mask(A) for A in oracles.all_ideals(P)]
    I = data.draw(st.sampled_from(ids))
    J = data.draw(st.sampled_from(ids))
    assert set(radical(I)) == oracles.radical_by_primes(P, frozenset(I))
    assert set(colon(I, J)) == {s for s in P.elements if all(P.mul[s][j] in I for j in J)}
    assert mul_ideals(add_ideals(I, J), intersect_ideals(I, J)).issubset(mul_ideals(I, J))


@settings(SETTINGS, max_examples=60)
@given(st.sampled_from(GALLERY), st.data())
def test_localization_preserves_meets_and_primes(S, data):
    W = data.draw(st.sampled_from(mc_sets(S, max_size=4)))
    L = localize(S, W)
    ids = list(enumerate_ideals(S))
    I = data.draw(st.sampled_from(ids))
    J = data.draw(st.sampled_from(ids))
    assert localize_ideal(L, intersect_ideals(I, J)) == \
        intersect_ideals(localize_ideal(L, I), localize_ideal(L, J))
    survivors = [P for P in spec(S).primes if not P.mask & W.mask]
    assert len(survivors) == len(spec(L.quotient).primes)
    assert L.quotient.size == oracles.fraction_class_count(S, set(W))


@settings(SETTINGS, max_examples=80)
@given(st.sampled_from(GALLERY), st.data())
def test_zariski_closed_sets(S, data):
    ids = list(enumerate_ideals(S))
    fam = data.draw(st.lists(st.sampled_from(ids), min_size=1, max_size=4))
    V = [set(v_of(I)) for I in fam]
    total = fam[0]
    meet = fam[0]
    for I in fam[1:]:
        total = add_ideals(total, I)
        meet = intersect_ideals(meet, I)
    assert set.intersection(*V) == set(v_of(total))
    assert set.union(*V) == set(v_of(meet))
