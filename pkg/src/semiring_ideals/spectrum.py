"""Prime, maximal, primary and irreducible ideals; Spec, Max and V(I)."""

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .core import FiniteSemiring, bits, mask_of, units
from .errors import EmptyFamily, InvalidMCSet, InvariantBroken
from .ideals import (
    Ideal,
    add_ideals,
    enumerate_ideals,
    mul_ideals,
    radical,
    same_parent,
)


def is_prime(P: Ideal) -> bool:
    return P.is_proper and prime_witness(P) is None


def prime_witness(P: Ideal) -> Optional[tuple[int, int]]:
    """Elements a, b outside P with ab in P."""
    S = P.ring
    outside = [a for a in S.elements if a not in P]
    for a in outside:
        for b in outside:
            if S.mul[a][b] in P:
                return a, b
    return None


def is_prime_by_ideals(P: Ideal) -> bool:
    """Prime test phrased over ideals: IJ inside P forces I or J inside P."""
    if not P.is_proper:
        return False
    lattice = enumerate_ideals(P.ring)
    for I in lattice:
        if I.issubset(P):
            continue
        for J in lattice:
            if not J.issubset(P) and mul_ideals(I, J).issubset(P):
                return False
    return True


def is_maximal(m: Ideal) -> bool:
    if not m.is_proper:
        return False
    return not any(m.mask != I.mask and m.issubset(I) and I.is_proper
                   for I in enumerate_ideals(m.ring))


def is_primary(Q: Ideal) -> bool:
    return Q.is_proper and primary_witness(Q) is None


def primary_witness(Q: Ideal) -> Optional[tuple[int, int]]:
    """x, y with xy in Q, x outside Q and no power of y in Q."""
    S = Q.ring
    rad = radical(Q)
    for x in S.elements:
        if x in Q:
            continue
        for y in S.elements:
            if S.mul[x][y] in Q and y not in rad:
                return x, y
    return None


def irreducible_witness(I: Ideal) -> Optional[tuple[Ideal, Ideal]]:
    """Least pair (J, K) of ideals strictly above I with J ∩ K = I."""
    above = [J for J in enumerate_ideals(I.ring) if I.issubset(J) and J.mask != I.mask]
    for k, J in enumerate(above):
        for K in above[k + 1:]:
            if J.mask & K.mask == I.mask:
                return J, K
    return None


def is_irreducible(I: Ideal) -> bool:
    return irreducible_witness(I) is None


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    ring: FiniteSemiring
    primes: tuple[Ideal, ...]
    maximals: tuple[Ideal, ...]


_SPECTRA: dict[FiniteSemiring, Spectrum] = {}


def spec(S: FiniteSemiring) -> Spectrum:
    cached = _SPECTRA.get(S)
    if cached is not None:
        return cached
    lattice = enumerate_ideals(S)
    primes = tuple(P for P in lattice if is_prime(P))
    maximals = tuple(m for m in lattice if is_maximal(m))
    if not maximals or not set(maximals) <= set(primes):
        raise InvariantBroken(f"maximal ideals of {S.label} are not all prime")
    sp = Spectrum(S, primes, maximals)
    _SPECTRA[S] = sp
    return sp


def max_ideals(S: FiniteSemiring) -> tuple[Ideal, ...]:
    return spec(S).maximals


def v_of(I: Ideal) -> list[Ideal]:
    """Zariski closed set V(I): the primes containing I."""
    return [P for P in spec(I.ring).primes if I.issubset(P)]


def minimal_elements(ideals: Iterable[Ideal]) -> list[Ideal]:
    ideals = list(ideals)
    out = [I for I in ideals
           if not any(J.mask != I.mask and J.issubset(I) for J in ideals)]
    return sorted(set(out), key=lambda I: I.mask)


def maximal_elements(ideals: Iterable[Ideal]) -> list[Ideal]:
    ideals = list(ideals)
    out = [I for I in ideals
           if not any(J.mask != I.mask and I.issubset(J) for J in ideals)]
    return sorted(set(out), key=lambda I: I.mask)


# ---------------------------------------------------------------------------
# multiplicatively closed sets

@dataclass(frozen=True)
class MCSet:
    ring: FiniteSemiring
    mask: int

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __contains__(self, x):
        return bool(self.mask >> x & 1)

    def __iter__(self):
        return bits(self.mask)

    def __str__(self):
        return self.ring.format_mask(self.mask)


def is_mc_mask(S: FiniteSemiring, mask: int) -> bool:
    if not mask >> S.one & 1:
        return False
    return all(mask >> S.mul[a][b] & 1 for a in bits(mask) for b in bits(mask))


def mc_set(S: FiniteSemiring, elements: Union[int, Iterable[int]]) -> MCSet:
    mask = elements if isinstance(elements, int) else mask_of(elements)
    if not is_mc_mask(S, mask):
        raise InvalidMCSet(f"{S.format_mask(mask)} is not multiplicatively closed with 1")
    return MCSet(S, mask)


def complement_mc_set(P: Ideal) -> MCSet:
    return mc_set(P.ring, P.ring.full_mask & ~P.mask)


def mc_sets(S: FiniteSemiring, max_size: int = 4, allow_zero: bool = False) -> list[MCSet]:
    """Every MC-set with at most ``max_size`` members, in mask order."""
    from itertools import combinations

    rest = [s for s in S.elements if s != S.one and (allow_zero or s != S.zero)]
    out = []
    for k in range(0, max_size):
        for extra in combinations(rest, k):
            mask = mask_of(extra) | 1 << S.one
            if is_mc_mask(S, mask):
                out.append(MCSet(S, mask))
    return sorted(out, key=lambda W: W.mask)


def maximal_disjoint_ideals(S: FiniteSemiring, W: MCSet) -> list[Ideal]:
    """Maximal members of the family of ideals missing W; each one is prime."""
    if W.mask & 1:
        raise EmptyFamily("0 lies in the MC-set, so every ideal meets it")
    family = [I for I in enumerate_ideals(S) if I.mask & W.mask == 0]
    result = maximal_elements(family)
    for P in result:
        if not is_prime(P):
            raise InvariantBroken(f"{P} is maximal among ideals missing {W} but not prime")
    return result


def is_comaximal(I: Ideal, J: Ideal) -> bool:
    S = same_parent(I, J)
    return add_ideals(I, J).mask == S.full_mask


def is_local(S: FiniteSemiring) -> Optional[Ideal]:
    """The unique maximal ideal, or None when S has several."""
    maximals = max_ideals(S)
    if len(maximals) != 1:
        return None
    m = maximals[0]
    if m.mask != S.full_mask & ~units(S):
        raise InvariantBroken(f"unique maximal ideal of {S.label} is not S - U(S)")
    return m


def nonunits_form_ideal(S: FiniteSemiring) -> bool:
    from .ideals import is_ideal_mask

    return is_ideal_mask(S, S.full_mask & ~units(S))
