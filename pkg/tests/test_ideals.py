import pytest
from hypothesis import given, settings, strategies as st

from conftest import GALLERY, G, el, ideal
import oracles
from semiring_ideals.core import mask_of
from semiring_ideals.errors import ParentMismatch, SizeCapExceeded, ZeroIdeal
from semiring_ideals.ideals import (
    add_ideals,
    cancellation_witness,
    cancels_by_colon,
    cancels_by_inclusion,
    colon,
    enumerate_ideals,
    generate_ideal,
    ideal_semiring,
    intersect_ideals,
    is_cancellation,
    is_subtractive,
    is_subtractive_semiring,
    mul_ideals,
    principal,
    radical,
    subtractive_witness,
    unit_ideal,
    zero_ideal,
)

BxB = G("BxB")
L3 = G("L3")
N2 = G("N2")
ZB = ideal(BxB, "(0,0)", "(0,1)")   # {0} x B
BZ = ideal(BxB, "(0,0)", "(1,0)")   # B x {0}


def test_generate_examples():
    assert generate_ideal(L3, [el(L3, "1")]) == unit_ideal(L3)
    assert generate_ideal(L3, [el(L3, "s")]) == ideal(L3, "0", "s")
    assert generate_ideal(BxB, [el(BxB, "(1,0)")]) == BZ
    assert generate_ideal(L3, []) == zero_ideal(L3)


def test_sum_product_meet_examples():
    assert add_ideals(ZB, BZ) == unit_ideal(BxB)
    assert mul_ideals(ZB, BZ) == zero_ideal(BxB)
    assert intersect_ideals(ZB, BZ) == zero_ideal(BxB)
    assert intersect_ideals(ideal(L3, "0", "s"), zero_ideal(L3)) == zero_ideal(L3)


def test_colon_examples():
    assert colon(ZB, BZ) == ZB
    for I in enumerate_ideals(BxB):
        assert colon(I, unit_ideal(BxB)) == I
        assert colon(I, zero_ideal(BxB)) == unit_ideal(BxB)


def test_radical_examples():
    assert radical(unit_ideal(L3)) == unit_ideal(L3)
    assert radical(zero_ideal(BxB)) == zero_ideal(BxB)
    assert radical(zero_ideal(N2)) == zero_ideal(N2)
    two = ideal(N2, "0", "2")
    assert radical(two) == two
    assert oracles.radical_by_primes(N2, frozenset(two)) == frozenset(two)
    Z4 = G("Z4")
    assert radical(zero_ideal(Z4)) == ideal(Z4, "0", "2")


def test_subtractive_examples():
    assert is_subtractive(ideal(L3, "0", "s"))
    two = ideal(N2, "0", "2")
    assert not is_subtractive(two)
    a, b = subtractive_witness(two)
    assert N2.add[a][b] in two and a in two and b not in two
    assert (N2.name_of(a), N2.name_of(b)) == ("2", "1")
    for S in GALLERY:
        assert is_subtractive(unit_ideal(S))


def test_subtractive_semirings():
    flagged = {S.name for S in GALLERY if not is_subtractive_semiring(S)}
    assert flagged == {"N2", "N3", "N2xB", "D2", "T2"}


def test_cancellation_examples():
    assert is_cancellation(unit_ideal(BxB))
    assert not is_cancellation(ZB)
    J, K = cancellation_witness(ZB)
    assert J != K and mul_ideals(ZB, J) == mul_ideals(ZB, K)
    with pytest.raises(ZeroIdeal):
        is_cancellation(zero_ideal(BxB))
    # 1 and 3 are cancelable in Z4, 1 in every semiring
    Z4 = G("Z4")
    assert is_cancellation(principal(Z4, el(Z4, "3")))


@pytest.mark.parametrize("S", GALLERY, ids=lambda S: S.name)
def test_enumeration_matches_subset_scan(S):
    assert [I.mask for I in enumerate_ideals(S)] == [oracles.mask(A) for A in oracles.all_ideals(S)]


def test_enumeration_examples():
    assert len(enumerate_ideals(G("B"))) == 2
    assert [str(I) for I in enumerate_ideals(L3)] == ["(0)", "{0, s}", "{0, 1, s}"]
    assert set(enumerate_ideals(BxB)) == {zero_ideal(BxB), ZB, BZ, unit_ideal(BxB)}
    not_closed = mask_of(BxB.index_of(x) for x in ("(0,0)", "(0,1)", "(1,0)"))
    assert not_closed not in {I.mask for I in enumerate_ideals(BxB)}


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        enumerate_ideals(G("BxL3"), size_cap=5)


def test_parent_mismatch():
    with pytest.raises(ParentMismatch):
        add_ideals(zero_ideal(L3), zero_ideal(BxB))


def test_ideal_semiring_examples():
    IdB = ideal_semiring(G("B"))
    assert IdB.add == G("B").add and IdB.mul == G("B").mul
    IdL3 = ideal_semiring(L3)
    assert IdL3.size == 3 and all(IdL3.add[a][a] == a for a in IdL3.elements)


@pytest.mark.parametrize("S", GALLERY, ids=lambda S: S.name)
def test_generation_and_radical_match_oracles(S):
    for x in S.elements:
        for y in S.elements:
            assert set(generate_ideal(S, [x, y])) == oracles.generated(S, {x, y})
    for I in enumerate_ideals(S):
        A = frozenset(I)
        assert set(radical(I)) == oracles.radical_by_primes(S, A) == oracles.radical_by_powers(S, A)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(GALLERY), st.data())
def test_cancellation_characterizations_agree(S, data):
    ids = list(enumerate_ideals(S))
    I = data.draw(st.sampled_from(ids))
    J = data.draw(st.sampled_from(ids))
    IJ = mul_ideals(I, J)
    assert mul_ideals(colon(IJ, I), I) == IJ
    if not I.is_zero:
        assert is_cancellation(I) == cancels_by_colon(I) == cancels_by_inclusion(I)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(GALLERY), st.data())
def test_sum_and_product_are_ideals(S, data):
    ids = list(enumerate_ideals(S))
    I, J = data.draw(st.sampled_from(ids)), data.draw(st.sampled_from(ids))
    for K in (add_ideals(I, J), mul_ideals(I, J), intersect_ideals(I, J), colon(I, J)):
        assert oracles.is_ideal(S, frozenset(K))
    prods = {S.mul[a][b] for a in I for b in J}
    assert set(mul_ideals(I, J)) == oracles.generated(S, prods)
