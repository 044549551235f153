import pytest

from conftest import GALLERY, G, el, ideal
import oracles
from semiring_ideals.errors import HomViolation, ParentMismatch
from semiring_ideals.ideals import enumerate_ideals, unit_ideal, zero_ideal
from semiring_ideals.morphisms import (
    contract,
    enumerate_homs,
    extend,
    hom_violations,
    identity_hom,
    kernel,
    validate_hom,
)
from semiring_ideals.spectrum import is_prime

B, L3, BxB = G("B"), G("L3"), G("BxB")


def by_name(S, T, mapping):
    f = [0] * S.size
    for x, y in mapping.items():
        f[S.index_of(x)] = T.index_of(y)
    return f


GAMMA = by_name(L3, B, {"0": "0", "s": "1", "1": "1"})
THRESHOLD = by_name(L3, B, {"0": "0", "s": "0", "1": "1"})
PROJ1 = by_name(BxB, B, {"(0,0)": "0", "(0,1)": "0", "(1,0)": "1", "(1,1)": "1"})
PROJ2 = by_name(BxB, B, {"(0,0)": "0", "(0,1)": "1", "(1,0)": "0", "(1,1)": "1"})


def test_identity_is_valid():
    for S in GALLERY:
        assert not hom_violations(S, S, list(S.elements))
        assert kernel(identity_hom(S)) == zero_ideal(S)


def test_gamma_kernel_is_zero_but_not_injective():
    g = validate_hom(L3, B, GAMMA)
    assert kernel(g) == zero_ideal(L3)
    assert not g.is_injective


def test_threshold_map_is_a_hom():
    # s -> 0, 1 -> 1 respects max and min, so it is a homomorphism
    assert tuple(THRESHOLD) in oracles.homs(L3, B)
    f = validate_hom(L3, B, THRESHOLD)
    assert kernel(f) == ideal(L3, "0", "s")


def test_invalid_map_names_the_broken_law():
    # (1,0)(0,1) = (0,0) but both factors would go to 1
    f = by_name(BxB, B, {"(0,0)": "0", "(0,1)": "1", "(1,0)": "1", "(1,1)": "1"})
    assert tuple(f) not in oracles.homs(BxB, B)
    with pytest.raises(HomViolation) as e:
        validate_hom(BxB, B, f)
    assert e.value.laws() == ["multiplicative"]
    with pytest.raises(HomViolation) as e:
        validate_hom(B, B, [1, 1])
    assert "zero" in e.value.laws()


def test_kernel_contract_extend_examples():
    p = validate_hom(BxB, B, PROJ1)
    assert kernel(p) == ideal(BxB, "(0,0)", "(0,1)")
    assert contract(p, zero_ideal(B)) == ideal(BxB, "(0,0)", "(0,1)")
    assert extend(p, ideal(BxB, "(0,0)", "(1,0)")) == unit_ideal(B)
    g = validate_hom(L3, B, GAMMA)
    assert contract(g, unit_ideal(B)) == unit_ideal(L3)
    assert extend(g, zero_ideal(L3)) == zero_ideal(B)
    P = ideal(L3, "0", "s")
    assert extend(g, P) == unit_ideal(B) and is_prime(P)
    assert contract(g, extend(g, P)) == unit_ideal(L3)


def test_parent_checked():
    g = validate_hom(L3, B, GAMMA)
    with pytest.raises(ParentMismatch):
        extend(g, zero_ideal(B))


@pytest.mark.parametrize("S,T", [(S, T) for S in GALLERY for T in (B, L3, S)
                                 if T.size ** S.size <= 50000],
                         ids=lambda x: x.name)
def test_enumerate_homs_matches_unpinned_scan(S, T):
    found = [f.map for f in enumerate_homs(S, T)]
    assert len(found) == len(set(found))
    assert set(found) == set(oracles.homs(S, T))


FIXTURES = [(L3, B, GAMMA), (BxB, B, PROJ1), (BxB, B, PROJ2), (B, L3, [0, 1])] + \
    [(S, S, list(S.elements)) for S in GALLERY]


@pytest.mark.parametrize("S,T,f", FIXTURES, ids=lambda x: getattr(x, "name", None))
def test_contraction_extension_laws(S, T, f):
    h = validate_hom(S, T, f)
    for J in enumerate_ideals(T):
        Jc = contract(h, J)
        assert oracles.is_ideal(S, frozenset(Jc))
        assert extend(h, Jc).issubset(J)
        assert contract(h, extend(h, Jc)) == Jc
        if is_prime(J):
            assert is_prime(Jc)
    for I in enumerate_ideals(S):
        Ie = extend(h, I)
        assert set(Ie) == oracles.generated(T, {f[x] for x in I})
        assert I.issubset(contract(h, Ie))
        assert extend(h, contract(h, Ie)) == Ie
