import pytest

from conftest import GALLERY, G, el, ideal
from semiring_ideals.decomposition import (
    Decomposition,
    irreducible_decomposition,
    irreducible_separating,
    minimal_decompositions,
    minimal_primes,
    minimize,
    primary_decomposition,
)
from semiring_ideals.errors import ImproperIdeal, PreconditionViolated
from semiring_ideals.ideals import enumerate_ideals, intersect_all, is_subtractive_semiring, unit_ideal, zero_ideal
from semiring_ideals.spectrum import is_irreducible, is_maximal, is_primary, minimal_elements, spec, v_of

L3, BxB = G("L3"), G("BxB")
ZB = ideal(BxB, "(0,0)", "(0,1)")
BZ = ideal(BxB, "(0,0)", "(1,0)")


def test_separating_examples():
    assert irreducible_separating(zero_ideal(L3), L3.one) == ideal(L3, "0", "s")
    assert irreducible_separating(zero_ideal(BxB), BxB.one) == ZB  # least mask wins the tie
    for S in GALLERY:
        assert is_maximal(irreducible_separating(zero_ideal(S), S.one))
    with pytest.raises(PreconditionViolated):
        irreducible_separating(ZB, el(BxB, "(0,1)"))


def test_irreducible_examples():
    assert irreducible_decomposition(zero_ideal(L3)).components == (zero_ideal(L3),)
    assert irreducible_decomposition(zero_ideal(BxB)).components == (ZB, BZ)
    assert irreducible_decomposition(ZB).components == (ZB,)
    with pytest.raises(ImproperIdeal):
        irreducible_decomposition(unit_ideal(L3))


def test_primary_examples():
    D = primary_decomposition(zero_ideal(BxB))
    assert D.components == (ZB, BZ)
    assert primary_decomposition(zero_ideal(L3)).components == (zero_ideal(L3),)


def test_minimize_examples():
    D = minimize(primary_decomposition(zero_ideal(BxB)))
    assert D.components == (ZB, BZ) and D.minimal
    dup = Decomposition(ZB, (ZB, ZB), "primary")
    assert minimize(dup).components == (ZB,)
    # a redundant third component above the meet of the other two
    L4 = G("L4")
    ids = list(enumerate_ideals(L4))
    red = Decomposition(ids[0], (ids[0], ids[1], ids[2]), "primary")
    assert minimize(red).components == (ids[0],)


def test_minimal_primes_examples():
    assert minimal_primes(zero_ideal(BxB)) == [ZB, BZ]
    assert minimal_primes(zero_ideal(L3)) == [zero_ideal(L3)]
    for S in GALLERY:
        for P in spec(S).primes:
            assert minimal_primes(P) == [P]


@pytest.mark.parametrize("S", GALLERY, ids=lambda S: S.name)
def test_every_proper_ideal_decomposes(S):
    subtractive = is_subtractive_semiring(S)
    for I in enumerate_ideals(S):
        if not I.is_proper:
            continue
        irr = irreducible_decomposition(I)
        assert intersect_all(irr.components, S) == I
        assert all(is_irreducible(C) for C in irr.components)
        D = primary_decomposition(I)
        assert all(is_primary(Q) for Q in D.components)
        if subtractive:
            assert not D.repaired
        M = minimize(D)
        rads = [r.mask for r in M.radicals()]
        assert len(set(rads)) == len(rads)
        assert minimal_primes(I) == minimal_elements(v_of(I))


@pytest.mark.parametrize("S", GALLERY, ids=lambda S: S.name)
def test_minimal_decompositions_share_radicals(S):
    # observed on every gallery member, including the non-subtractive ones
    for I in enumerate_ideals(S):
        if I.is_proper:
            fams = minimal_decompositions(I)
            assert fams
            radical_sets = {frozenset(r.mask for r in Decomposition(I, f, "primary").radicals())
                            for f in fams}
            assert len(radical_sets) == 1
