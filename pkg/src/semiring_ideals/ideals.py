"""Ideals of a finite semiring and the arithmetic on them.

An ideal is stored as a bitmask over the parent's element indices. Masks are
canonical, so two ideals are equal exactly when their masks (and parents)
agree, and sorting by mask gives a deterministic order on Id(S).
"""

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Optional

from .core import FiniteSemiring, bits, mask_of, validate_semiring
from .core import size_cap as current_size_cap
from .errors import ParentMismatch, SizeCapExceeded, ZeroIdeal


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: FiniteSemiring
    mask: int

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.mask == other.mask and (self.ring is other.ring or self.ring == other.ring)

    def __hash__(self):
        return hash(self.mask)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self):
        return bin(self.mask).count("1")

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def is_proper(self) -> bool:
        return self.mask != self.ring.full_mask

    @property
    def is_zero(self) -> bool:
        return self.mask == 1

    def issubset(self, other: "Ideal") -> bool:
        return self.mask & ~other.mask == 0

    def __str__(self):
        return "(0)" if self.is_zero else self.ring.format_mask(self.mask)

    def __repr__(self):
        return f"Ideal({self.ring.label}, {self})"


def same_parent(*ideals: Ideal) -> FiniteSemiring:
    S = ideals[0].ring
    for I in ideals[1:]:
        if I.ring is not S and I.ring != S:
            raise ParentMismatch(f"{I!r} does not live in {S.label}")
    return S


def additive_closure(S: FiniteSemiring, mask: int) -> int:
    while True:
        new = mask
        for a in bits(mask):
            row = S.add[a]
            for b in bits(mask):
                new |= 1 << row[b]
        if new == mask:
            return mask
        mask = new


def is_ideal_mask(S: FiniteSemiring, mask: int) -> bool:
    if not mask & 1:
        return False
    for a in bits(mask):
        for b in bits(mask):
            if not mask >> S.add[a][b] & 1:
                return False
        for s in S.elements:
            if not mask >> S.mul[s][a] & 1:
                return False
    return True


def generate_ideal(S: FiniteSemiring, elements: Iterable[int] = ()) -> Ideal:
    """Smallest ideal containing ``elements``.

    Absorbing first and closing under + afterwards is enough: a sum of
    multiples is again closed under multiplication by distributivity.
    """
    mask = mask_of(elements) | 1
    absorbed = mask
    for a in bits(mask):
        for s in S.elements:
            absorbed |= 1 << S.mul[s][a]
    return Ideal(S, additive_closure(S, absorbed))


def principal(S: FiniteSemiring, s: int) -> Ideal:
    return generate_ideal(S, (s,))


def zero_ideal(S: FiniteSemiring) -> Ideal:
    return Ideal(S, 1)


def unit_ideal(S: FiniteSemiring) -> Ideal:
    return Ideal(S, S.full_mask)


def ideal_from_mask(S: FiniteSemiring, mask: int) -> Ideal:
    if not is_ideal_mask(S, mask):
        raise ValueError(f"{S.format_mask(mask)} is not an ideal of {S.label}")
    return Ideal(S, mask)


def _sum_mask(S, m1, m2):
    out = 0
    for a in bits(m1):
        row = S.add[a]
        for b in bits(m2):
            out |= 1 << row[b]
    return out


def add_ideals(I: Ideal, J: Ideal) -> Ideal:
    S = same_parent(I, J)
    return Ideal(S, _sum_mask(S, I.mask, J.mask))


def mul_ideals(I: Ideal, J: Ideal) -> Ideal:
    S = same_parent(I, J)
    products = 0
    for a in bits(I.mask):
        row = S.mul[a]
        for b in bits(J.mask):
            products |= 1 << row[b]
    # products already absorb multiplication: s(ab) = (sa)b
    return Ideal(S, additive_closure(S, products))


def intersect_ideals(I: Ideal, J: Ideal) -> Ideal:
    S = same_parent(I, J)
    return Ideal(S, I.mask & J.mask)


def sum_all(ideals: Iterable[Ideal], S: FiniteSemiring) -> Ideal:
    return reduce(add_ideals, ideals, zero_ideal(S))


def product_all(ideals: Iterable[Ideal], S: FiniteSemiring) -> Ideal:
    return reduce(mul_ideals, ideals, unit_ideal(S))


def intersect_all(ideals: Iterable[Ideal], S: FiniteSemiring) -> Ideal:
    return reduce(intersect_ideals, ideals, unit_ideal(S))


def colon(I: Ideal, J: Ideal) -> Ideal:
    """[I : J] = {s : sJ is contained in I}."""
    S = same_parent(I, J)
    js = J.members
    mask = 0
    for s in S.elements:
        row = S.mul[s]
        if all(I.mask >> row[j] & 1 for j in js):
            mask |= 1 << s
    return Ideal(S, mask)


def colon_element(I: Ideal, x: int) -> Ideal:
    """[I : x], realized as the colon by the principal ideal (x)."""
    return colon(I, principal(I.ring, x))


def radical(I: Ideal) -> Ideal:
    """Elements with some power in I.

    Once a power of s lands in I every later power does too, and the powers
    of s become periodic within |S| steps, so exponents up to |S| suffice.
    """
    S = I.ring
    mask = 0
    for s in S.elements:
        p = s
        for _ in range(S.size):
            if I.mask >> p & 1:
                mask |= 1 << s
                break
            p = S.mul[p][s]
    return Ideal(S, mask)


def is_subtractive(I: Ideal) -> bool:
    return subtractive_witness(I) is None


def subtractive_witness(I: Ideal) -> Optional[tuple[int, int]]:
    """A pair (a, b) with a and a+b in I but b outside I, if one exists."""
    S = I.ring
    for a in I:
        for b in S.elements:
            if I.mask >> S.add[a][b] & 1 and not I.mask >> b & 1:
                return a, b
    return None


def is_subtractive_semiring(S: FiniteSemiring) -> bool:
    return all(is_subtractive(I) for I in enumerate_ideals(S))


# ---------------------------------------------------------------------------
# the lattice Id(S)

@dataclass(frozen=True)
class IdealLattice:
    ring: FiniteSemiring
    ideals: tuple[Ideal, ...]

    def __iter__(self):
        return iter(self.ideals)

    def __len__(self):
        return len(self.ideals)

    def __getitem__(self, k):
        return self.ideals[k]

    def index(self, I: Ideal) -> int:
        return self.ideals.index(I)

    def containing(self, I: Ideal) -> list[Ideal]:
        return [J for J in self.ideals if I.issubset(J)]

    def proper(self) -> list[Ideal]:
        return [J for J in self.ideals if J.is_proper]


_LATTICES: dict[FiniteSemiring, IdealLattice] = {}


def enumerate_ideals(S: FiniteSemiring, size_cap: Optional[int] = None) -> IdealLattice:
    """All ideals of S, as the closure of (0) under joins with principal ideals."""
    cap = current_size_cap() if size_cap is None else size_cap
    if S.size > cap:
        raise SizeCapExceeded(f"{S.label} has {S.size} elements, cap is {cap}")
    cached = _LATTICES.get(S)
    if cached is not None:
        return cached
    principals = {principal(S, s).mask for s in S.elements}
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for m in frontier:
            for p in principals:
                j = _sum_mask(S, m, p)
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    lattice = IdealLattice(S, tuple(Ideal(S, m) for m in sorted(seen)))
    _LATTICES[S] = lattice
    return lattice


def ideal_semiring(S: FiniteSemiring, size_cap: Optional[int] = None) -> FiniteSemiring:
    """Id(S) with ideal sum and product, as a FiniteSemiring in its own right."""
    ideals = enumerate_ideals(S, size_cap).ideals
    pos = {I.mask: k for k, I in enumerate(ideals)}
    add = [[pos[add_ideals(I, J).mask] for J in ideals] for I in ideals]
    mul = [[pos[mul_ideals(I, J).mask] for J in ideals] for I in ideals]
    names = [str(I) for I in ideals]
    return validate_semiring(add, mul, pos[1], pos[S.full_mask], f"Id({S.label})", names)


# ---------------------------------------------------------------------------
# cancellation ideals

def cancellation_witness(I: Ideal) -> Optional[tuple[Ideal, Ideal]]:
    """Distinct ideals J, K with IJ = IK, or None when I is cancellation."""
    if I.is_zero:
        raise ZeroIdeal("cancellation is only defined for nonzero ideals")
    seen: dict[int, Ideal] = {}
    for J in enumerate_ideals(I.ring):
        m = mul_ideals(I, J).mask
        if m in seen:
            return seen[m], J
        seen[m] = J
    return None


def is_cancellation(I: Ideal) -> bool:
    return cancellation_witness(I) is None


def cancels_by_colon(I: Ideal) -> bool:
    """[IJ : I] = J for every ideal J."""
    if I.is_zero:
        raise ZeroIdeal("cancellation is only defined for nonzero ideals")
    return all(colon(mul_ideals(I, J), I) == J for J in enumerate_ideals(I.ring))


def cancels_by_inclusion(I: Ideal) -> bool:
    """IJ inside IK forces J inside K for all ideals J, K."""
    if I.is_zero:
        raise ZeroIdeal("cancellation is only defined for nonzero ideals")
    lattice = enumerate_ideals(I.ring)
    prods = [(J, mul_ideals(I, J)) for J in lattice]
    return all(J.issubset(K) for J, IJ in prods for K, IK in prods if IJ.issubset(IK))
