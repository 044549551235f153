import pytest

from conftest import GALLERY, G, el, ideal
import oracles
from semiring_ideals.errors import InvalidMCSet, NotPrime
from semiring_ideals.ideals import enumerate_ideals, unit_ideal, zero_ideal
from semiring_ideals.localization import (
    localize,
    localize_at_prime,
    localize_ideal,
    multiplicatively_cancelable_set,
    prime_correspondence,
)
from semiring_ideals.morphisms import contract
from semiring_ideals.spectrum import is_local, mc_set, mc_sets, spec

B, L3, BxB = G("B"), G("L3"), G("BxB")


def test_l3_at_s_is_boolean():
    L = localize(L3, mc_set(L3, [el(L3, "s"), el(L3, "1")]))
    Q = L.quotient
    assert Q.size == 2
    assert Q.add == B.add and Q.mul == B.mul
    assert L.class_of(el(L3, "s"), L3.one) == L.class_of(L3.one, L3.one)
    assert oracles.fraction_class_count(L3, {el(L3, "s"), L3.one}) == 2


def test_localize_ideal_examples():
    L = localize(L3, mc_set(L3, [el(L3, "s"), el(L3, "1")]))
    assert localize_ideal(L, zero_ideal(L3)) == zero_ideal(L.quotient)
    assert localize_ideal(L, ideal(L3, "0", "s")) == unit_ideal(L.quotient)
    assert localize_ideal(L, unit_ideal(L3)) == unit_ideal(L.quotient)


def test_bxb_prime_correspondence():
    U = mc_set(BxB, [BxB.one, el(BxB, "(1,0)")])
    L = localize(BxB, U)
    pairs = prime_correspondence(L)
    assert [P for P, _ in pairs] == [ideal(BxB, "(0,0)", "(0,1)")]
    assert len(spec(L.quotient).primes) == 1


def test_trivial_mc_set_gives_isomorphic_copy():
    for S in GALLERY:
        L = localize(S, mc_set(S, [S.one]))
        assert L.quotient.size == S.size and L.gamma.is_injective


def test_mc_set_with_zero_is_rejected():
    with pytest.raises(InvalidMCSet):
        localize(B, mc_set(B, [0, 1]))


def test_localize_at_non_prime():
    with pytest.raises(NotPrime):
        localize_at_prime(BxB, zero_ideal(BxB))


@pytest.mark.parametrize("S", GALLERY, ids=lambda S: S.name)
def test_class_counts_match_transitive_closure(S):
    for W in mc_sets(S, max_size=4):
        L = localize(S, W)
        assert L.quotient.size == oracles.fraction_class_count(S, set(W))


@pytest.mark.parametrize("S", GALLERY, ids=lambda S: S.name)
def test_local_at_every_prime(S):
    for P in spec(S).primes:
        L = localize_at_prime(S, P)
        m = localize_ideal(L, P)
        assert is_local(L.quotient) == m
        assert contract(L.gamma, m) == P


@pytest.mark.parametrize("S", GALLERY, ids=lambda S: S.name)
def test_every_ideal_of_fractions_is_extended(S):
    for W in mc_sets(S, max_size=4):
        L = localize(S, W)
        for J in enumerate_ideals(L.quotient):
            assert localize_ideal(L, contract(L.gamma, J)) == J


def test_cancelable_set():
    Z4 = G("Z4")
    W = multiplicatively_cancelable_set(Z4)
    assert {Z4.name_of(u) for u in W} == {"1", "3"}
    # units are already invertible, so nothing changes
    assert localize(Z4, W).quotient.size == 4
