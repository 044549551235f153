"""Irreducible and primary decompositions over the finite lattice Id(S)."""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .errors import (
    ImproperIdeal,
    InvariantBroken,
    NoPrimaryDecomposition,
    PreconditionViolated,
)
from .ideals import Ideal, enumerate_ideals, intersect_all, radical
from .spectrum import (
    irreducible_witness,
    is_irreducible,
    is_primary,
    maximal_elements,
    minimal_elements,
    v_of,
)

REPAIR_MAX_COMPONENTS = 4


@dataclass(frozen=True)
class Decomposition:
    target: Ideal
    components: tuple[Ideal, ...]
    kind: str  # "irreducible" or "primary"
    minimal: bool = False
    repaired: bool = field(default=False, compare=False)

    def radicals(self) -> list[Ideal]:
        return [radical(Q) for Q in self.components]

    def intersection(self) -> Ideal:
        return intersect_all(self.components, self.target.ring)


def is_minimal_decomposition(components) -> bool:
    """Pairwise distinct radicals and no component above the meet of the others."""
    if not components:
        return False
    S = components[0].ring
    rads = [radical(Q).mask for Q in components]
    if len(set(rads)) != len(rads):
        return False
    for i, Q in enumerate(components):
        others = intersect_all((C for j, C in enumerate(components) if j != i), S)
        if others.issubset(Q):
            return False
    return True


def irreducible_separating(I: Ideal, s: int) -> Ideal:
    """Least maximal ideal among those containing I and avoiding s."""
    if s in I:
        raise PreconditionViolated(f"{I.ring.name_of(s)} already lies in {I}")
    family = [J for J in enumerate_ideals(I.ring) if I.issubset(J) and s not in J]
    J = maximal_elements(family)[0]
    if not is_irreducible(J):
        raise InvariantBroken(f"{J} avoids {s} maximally but is reducible")
    return J


def _split(I: Ideal) -> list[Ideal]:
    pair = irreducible_witness(I)
    if pair is None:
        return [I]
    J, K = pair
    return _split(J) + _split(K)


def irreducible_decomposition(I: Ideal) -> Decomposition:
    if not I.is_proper:
        raise ImproperIdeal("the unit ideal has no irreducible decomposition")
    S = I.ring
    parts = sorted(set(_split(I)), key=lambda J: J.mask)
    if intersect_all(parts, S) != I:
        raise InvariantBroken(f"irreducible components of {I} do not meet in it")
    every = [J for J in enumerate_ideals(S) if J.is_proper and I.issubset(J) and is_irreducible(J)]
    if intersect_all(every, S) != I:
        raise InvariantBroken(f"{I} is not the meet of the irreducibles above it")
    return Decomposition(I, tuple(parts), "irreducible")


def primary_families(I: Ideal, max_components: int = REPAIR_MAX_COMPONENTS):
    """Sets of primary ideals containing I, of bounded size, meeting exactly in I."""
    S = I.ring
    primaries = [Q for Q in enumerate_ideals(S) if I.issubset(Q) and is_primary(Q)]
    for k in range(1, max_components + 1):
        for family in combinations(primaries, k):
            if intersect_all(family, S) == I:
                yield family


def _repair(C: Ideal) -> Optional[tuple[Ideal, ...]]:
    return next(primary_families(C), None)


def primary_decomposition(I: Ideal) -> Decomposition:
    """Irreducible components, each checked (and if needed replaced) to be primary.

    Subtractive irreducible ideals are primary, so in a semiring whose ideals
    are all subtractive no replacement ever happens. Otherwise a non-primary
    component is swapped for a bounded family of primary ideals meeting in it;
    failing that, a bounded search over primary ideals above I is tried before
    giving up with ``NoPrimaryDecomposition``.
    """
    irr = irreducible_decomposition(I)
    S = I.ring
    out: list[Ideal] = []
    repaired = False
    stuck = None
    for C in irr.components:
        if is_primary(C):
            out.append(C)
            continue
        repaired = True
        family = _repair(C)
        if family is None:
            stuck = C
            break
        out.extend(family)
    if stuck is not None:
        family = next(primary_families(I), None)
        if family is None:
            raise NoPrimaryDecomposition(stuck)
        out = list(family)
    comps = tuple(sorted(set(out), key=lambda J: J.mask))
    if intersect_all(comps, S) != I:
        raise InvariantBroken(f"primary components of {I} do not meet in it")
    return Decomposition(I, comps, "primary", repaired=repaired)


def minimize(D: Decomposition) -> Decomposition:
    """Merge components with equal radicals, then drop redundant ones."""
    if D.kind != "primary":
        raise ValueError("only primary decompositions are minimized")
    S = D.target.ring
    by_radical: dict[int, Ideal] = {}
    for Q in D.components:
        r = radical(Q).mask
        by_radical[r] = Q if r not in by_radical else intersect_all((by_radical[r], Q), S)
    comps = sorted(by_radical.values(), key=lambda J: J.mask)
    changed = True
    while changed and len(comps) > 1:
        changed = False
        for i, Q in enumerate(comps):
            rest = comps[:i] + comps[i + 1:]
            if intersect_all(rest, S).issubset(Q):
                comps = rest
                changed = True
                break
    for Q in comps:
        if not is_primary(Q):
            raise InvariantBroken(f"merged component {Q} lost primariness")
    if intersect_all(comps, S) != D.target or not is_minimal_decomposition(comps):
        raise InvariantBroken(f"minimizing the decomposition of {D.target} failed")
    return Decomposition(D.target, tuple(comps), "primary", minimal=True, repaired=D.repaired)


def minimal_primes(I: Ideal) -> list[Ideal]:
    """Minimal primes belonging to I, cross-checked against minimal members of V(I)."""
    D = minimize(primary_decomposition(I))
    belonging = minimal_elements(D.radicals())
    if belonging != minimal_elements(v_of(I)):
        raise InvariantBroken(f"minimal primes of {I} disagree with minimal members of V(I)")
    return belonging


def minimal_decompositions(I: Ideal, max_components: int = REPAIR_MAX_COMPONENTS):
    """Every minimal primary decomposition of I with at most ``max_components`` parts."""
    return [family for family in primary_families(I, max_components)
            if is_minimal_decomposition(list(family))]
