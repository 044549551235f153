"""Semiring homomorphisms, kernels, contraction and extension of ideals."""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .core import FiniteSemiring, bits, mask_of
from .errors import HomViolation, ParentMismatch, Violation
from .ideals import Ideal, generate_ideal

HOM_LAWS = ("additive", "multiplicative", "zero", "one")


@dataclass(frozen=True)
class SemiringHom:
    source: FiniteSemiring
    target: FiniteSemiring
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def image_mask(self, mask: int) -> int:
        return mask_of(self.map[x] for x in bits(mask))

    def describe(self) -> str:
        S, T = self.source, self.target
        return ",".join(f"{S.name_of(x)}:{T.name_of(y)}" for x, y in enumerate(self.map))

    def __repr__(self):
        return f"SemiringHom({self.source.label} -> {self.target.label}: {self.describe()})"


def hom_violations(source: FiniteSemiring, target: FiniteSemiring,
                   f: Sequence[int]) -> list[Violation]:
    found = {}
    if f[source.zero] != target.zero:
        found["zero"] = Violation("zero", (source.zero,))
    if f[source.one] != target.one:
        found["one"] = Violation("one", (source.one,))
    for r in source.elements:
        for s in source.elements:
            if "additive" not in found and f[source.add[r][s]] != target.add[f[r]][f[s]]:
                found["additive"] = Violation("additive", (r, s))
            if "multiplicative" not in found and f[source.mul[r][s]] != target.mul[f[r]][f[s]]:
                found["multiplicative"] = Violation("multiplicative", (r, s))
    return [found[law] for law in HOM_LAWS if law in found]


def validate_hom(source: FiniteSemiring, target: FiniteSemiring, f: Sequence[int]) -> SemiringHom:
    f = tuple(f)
    if len(f) != source.size or any(not 0 <= y < target.size for y in f):
        raise HomViolation([Violation("total", tuple(f))])
    violations = hom_violations(source, target, f)
    if violations:
        raise HomViolation(violations)
    return SemiringHom(source, target, f)


def identity_hom(S: FiniteSemiring) -> SemiringHom:
    return SemiringHom(S, S, tuple(S.elements))


def enumerate_homs(source: FiniteSemiring, target: FiniteSemiring,
                   limit: int = 20000) -> Iterator[SemiringHom]:
    """Every homomorphism source -> target, by brute force over maps.

    0 and 1 are pinned, so ``target.size ** (source.size - 2)`` candidates are
    tried; ``limit`` bounds that count.
    """
    free = [x for x in source.elements if x not in (source.zero, source.one)]
    if target.size ** len(free) > limit:
        raise ValueError(f"{target.size}^{len(free)} candidate maps exceeds limit {limit}")
    for values in product(target.elements, repeat=len(free)):
        f = [0] * source.size
        f[source.zero] = target.zero
        f[source.one] = target.one
        for x, y in zip(free, values):
            f[x] = y
        if not hom_violations(source, target, f):
            yield SemiringHom(source, target, tuple(f))


def _check_parent(I: Ideal, R: FiniteSemiring):
    if I.ring is not R and I.ring != R:
        raise ParentMismatch(f"{I!r} is not an ideal of {R.label}")


def contract(f: SemiringHom, J: Ideal) -> Ideal:
    """Preimage f^-1(J)."""
    _check_parent(J, f.target)
    return Ideal(f.source, mask_of(x for x in f.source.elements if f.map[x] in J))


def kernel(f: SemiringHom) -> Ideal:
    return Ideal(f.source, mask_of(x for x in f.source.elements if f.map[x] == f.target.zero))


def extend(f: SemiringHom, I: Ideal) -> Ideal:
    """Ideal of the target generated by f(I)."""
    _check_parent(I, f.source)
    return generate_ideal(f.target, (f.map[x] for x in I))
