import pytest

from conftest import GALLERY, G, el, ideal
import oracles
from semiring_ideals.core import mask_of, units
from semiring_ideals.errors import EmptyFamily, InvalidMCSet
from semiring_ideals.ideals import enumerate_ideals, unit_ideal, zero_ideal
from semiring_ideals.spectrum import (
    complement_mc_set,
    is_comaximal,
    is_irreducible,
    is_local,
    is_maximal,
    is_primary,
    is_prime,
    max_ideals,
    maximal_disjoint_ideals,
    mc_set,
    mc_sets,
    primary_witness,
    prime_witness,
    spec,
    v_of,
)

B, L3, BxB = G("B"), G("L3"), G("BxB")
ZB = ideal(BxB, "(0,0)", "(0,1)")
BZ = ideal(BxB, "(0,0)", "(1,0)")


def names(S, pair):
    return tuple(S.name_of(x) for x in pair)


def test_prime_examples():
    assert is_prime(zero_ideal(B))
    assert not is_prime(zero_ideal(BxB))
    assert sorted(names(BxB, prime_witness(zero_ideal(BxB)))) == ["(0,1)", "(1,0)"]
    for S in GALLERY:
        assert not is_prime(unit_ideal(S))


def test_maximal_examples():
    assert is_maximal(ideal(L3, "0", "s"))
    assert not is_maximal(zero_ideal(L3))
    assert is_maximal(zero_ideal(B))


def test_primary_examples():
    assert not is_primary(zero_ideal(BxB))
    x, y = primary_witness(zero_ideal(BxB))
    assert BxB.mul[x][y] == 0 and x != 0 and y != 0
    assert is_primary(zero_ideal(L3))
    for S in GALLERY:
        for P in spec(S).primes:
            assert is_primary(P)


def test_irreducible_examples():
    assert not is_irreducible(zero_ideal(BxB))
    assert is_irreducible(ZB)
    for n in (3, 4, 5, 6):
        Ln = G(f"L{n}")
        assert all(is_irreducible(I) for I in enumerate_ideals(Ln))


@pytest.mark.parametrize("S", GALLERY, ids=lambda S: S.name)
def test_spectrum_matches_oracle(S):
    assert [P.mask for P in spec(S).primes] == [oracles.mask(P) for P in oracles.primes(S)]
    assert [m.mask for m in max_ideals(S)] == [oracles.mask(m) for m in oracles.maximals(S)]


def test_spec_and_vof_examples():
    assert [str(P) for P in spec(L3).primes] == ["(0)", "{0, s}"]
    for S in GALLERY:
        assert v_of(unit_ideal(S)) == []
        assert v_of(zero_ideal(S)) == list(spec(S).primes)


def test_maximal_disjoint_examples():
    for S in GALLERY:
        assert maximal_disjoint_ideals(S, mc_set(S, [S.one])) == list(max_ideals(S))
    W = mc_set(L3, [el(L3, "s"), el(L3, "1")])
    assert maximal_disjoint_ideals(L3, W) == [zero_ideal(L3)]
    assert set(maximal_disjoint_ideals(BxB, mc_set(BxB, [BxB.one]))) == {ZB, BZ}


def test_mc_set_errors():
    with pytest.raises(InvalidMCSet):
        mc_set(BxB, [el(BxB, "(1,0)")])  # misses 1
    with pytest.raises(InvalidMCSet):
        mc_set(BxB, [el(BxB, "(1,1)"), el(BxB, "(1,0)"), el(BxB, "(0,1)")])  # not closed
    with pytest.raises(EmptyFamily):
        maximal_disjoint_ideals(B, mc_set(B, [0, 1]))


@pytest.mark.parametrize("S", GALLERY, ids=lambda S: S.name)
def test_mc_sets_match_oracle(S):
    assert sorted(W.mask for W in mc_sets(S, max_size=4)) == \
        sorted(oracles.mask(A) for A in oracles.mc_subsets(S, 4))


def test_prime_complement_is_mc():
    for S in GALLERY:
        for P in spec(S).primes:
            W = complement_mc_set(P)
            assert W.mask == S.full_mask & ~P.mask


def test_comaximal_examples():
    assert is_comaximal(ZB, BZ)
    assert not is_comaximal(zero_ideal(L3), ideal(L3, "0", "s"))
    for J in enumerate_ideals(L3):
        assert is_comaximal(unit_ideal(L3), J)


def test_local_examples():
    assert is_local(L3) == ideal(L3, "0", "s")
    assert is_local(BxB) is None
    assert is_local(B) == zero_ideal(B)


@pytest.mark.parametrize("S", GALLERY, ids=lambda S: S.name)
def test_units_are_outside_every_maximal(S):
    union = frozenset().union(*oracles.maximals(S))
    assert oracles.units(S) == frozenset(S.elements) - union
    assert units(S) == mask_of(oracles.units(S))
