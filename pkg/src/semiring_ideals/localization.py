"""Semirings of fractions S_U built as explicit finite quotients of S x U."""

from dataclasses import dataclass
from typing import Callable, Iterable, Union

from scipy.cluster.hierarchy import DisjointSet

from .core import FiniteSemiring, cancelable_elements, mask_of, units, validate_semiring
from .errors import CorrespondenceFailure, InvalidMCSet, InvariantBroken, NotPrime, ParentMismatch
from .ideals import Ideal
from .morphisms import SemiringHom, contract, extend
from .spectrum import MCSet, complement_mc_set, is_local, is_prime, mc_set, spec

Pair = tuple[int, int]


def fraction_classes(n: int, U: MCSet, scale: Callable[[int, int], int]):
    """Partition {0..n-1} x U by (x,u) ~ (y,v) iff t(vx) = t(uy) for some t in U.

    ``scale(u, x)`` is the action u·x. Classes come from union-find over the
    directly related pairs, then every pair inside a class is re-checked
    against the relation, so transitivity is verified rather than assumed.
    Returns (sorted pairs, class index per pair, least representative per class).
    """
    us = U.members
    pairs = [(x, u) for x in range(n) for u in us]

    def related(p, q):
        (x, u), (y, v) = p, q
        a, b = scale(v, x), scale(u, y)
        return any(scale(t, a) == scale(t, b) for t in us)

    ds = DisjointSet(pairs)
    for i, p in enumerate(pairs):
        for q in pairs[i + 1:]:
            if related(p, q):
                ds.merge(p, q)
    subsets = sorted((sorted(c) for c in ds.subsets()), key=lambda c: c[0])
    for c in subsets:
        for p in c:
            for q in c:
                if not related(p, q):
                    raise InvariantBroken(f"fraction relation is not transitive: {p} vs {q}")
    index = {p: k for k, c in enumerate(subsets) for p in c}
    reps = tuple(c[0] for c in subsets)
    return pairs, index, reps


def _as_mcset(S: FiniteSemiring, U: Union[MCSet, Iterable[int], int]) -> MCSet:
    if isinstance(U, MCSet):
        if U.ring is not S and U.ring != S:
            raise InvalidMCSet("MC-set belongs to a different semiring")
        W = mc_set(S, U.mask)
    else:
        W = mc_set(S, U)
    if W.mask & 1 << S.zero:
        raise InvalidMCSet("an MC-set containing 0 collapses every fraction to 0")
    return W


@dataclass(frozen=True)
class LocalizationResult:
    base: FiniteSemiring
    mcset: MCSet
    quotient: FiniteSemiring
    classes: dict
    representatives: tuple[Pair, ...]
    gamma: SemiringHom

    def class_of(self, s: int, u: int) -> int:
        return self.classes[s, u]

    def class_map(self) -> dict[str, str]:
        S, Q = self.base, self.quotient
        return {f"{S.name_of(s)}/{S.name_of(u)}": Q.name_of(c)
                for (s, u), c in sorted(self.classes.items())}


def localize(S: FiniteSemiring, U) -> LocalizationResult:
    W = _as_mcset(S, U)
    mul, add = S.mul, S.add
    pairs, index, reps = fraction_classes(S.size, W, lambda u, x: mul[u][x])

    def frac_add(p, q):
        (x, u), (y, v) = p, q
        return add[mul[x][v]][mul[y][u]], mul[u][v]

    def frac_mul(p, q):
        (x, u), (y, v) = p, q
        return mul[x][y], mul[u][v]

    m = len(reps)
    add_t = [[index[frac_add(reps[i], reps[j])] for j in range(m)] for i in range(m)]
    mul_t = [[index[frac_mul(reps[i], reps[j])] for j in range(m)] for i in range(m)]
    for p in pairs:
        for q in pairs:
            i, j = index[p], index[q]
            if index[frac_add(p, q)] != add_t[i][j] or index[frac_mul(p, q)] != mul_t[i][j]:
                raise InvariantBroken(f"fraction arithmetic depends on representatives {p}, {q}")

    zero, one = index[S.zero, S.one], index[S.one, S.one]
    names = [f"{S.name_of(x)}/{S.name_of(u)}" for x, u in reps]
    label = f"{S.label}_{S.format_mask(W.mask)}"
    Q = _build_quotient(add_t, mul_t, zero, one, label, names)
    gamma = SemiringHom(S, Q, tuple(index[a, S.one] for a in S.elements))
    return LocalizationResult(S, W, Q, index, tuple(reps), gamma)


def _build_quotient(add_t, mul_t, zero, one, label, names):
    if zero != 0 or one != 1:
        raise InvariantBroken("fraction classes of 0/1 and 1/1 must come first")
    return validate_semiring(add_t, mul_t, zero, one, label, names)


def localize_ideal(L: LocalizationResult, I: Ideal) -> Ideal:
    """I_U = {x/u : x in I, u in U}; agrees with the extension of I along gamma."""
    if I.ring is not L.base and I.ring != L.base:
        raise ParentMismatch(f"{I!r} is not an ideal of {L.base.label}")
    mask = mask_of(L.classes[x, u] for x in I for u in L.mcset)
    result = Ideal(L.quotient, mask)
    if result != extend(L.gamma, I):
        raise InvariantBroken(f"I_U differs from the extension of {I}")
    return result


def prime_correspondence(L: LocalizationResult) -> list[tuple[Ideal, Ideal]]:
    """Pairs (P, P_U) for the primes of S missing U, checked to be a bijection."""
    S, Q, W = L.base, L.quotient, L.mcset
    disjoint = [P for P in spec(S).primes if P.mask & W.mask == 0]
    targets = spec(Q).primes
    pairs = [(P, localize_ideal(L, P)) for P in disjoint]
    images = [Pe for _, Pe in pairs]
    for P, Pe in pairs:
        if not is_prime(Pe):
            raise CorrespondenceFailure(f"{P} localizes to non-prime {Pe}")
        if contract(L.gamma, Pe) != P:
            raise CorrespondenceFailure(f"{P} is not recovered by contracting {Pe}")
    if len(set(images)) != len(images):
        raise CorrespondenceFailure("two primes of S have the same localization")
    if set(images) != set(targets):
        missing = sorted(set(targets) - set(images), key=lambda I: I.mask)
        raise CorrespondenceFailure(f"primes of S_U not hit: {[str(q) for q in missing]}")
    for q in targets:
        qc = contract(L.gamma, q)
        if qc.mask & W.mask or localize_ideal(L, qc) != q:
            raise CorrespondenceFailure(f"{q} is not the localization of its contraction")
    return pairs


def localize_at_prime(S: FiniteSemiring, P: Ideal) -> LocalizationResult:
    """S_P = S localized at S - P; a local semiring with maximal ideal P S_P."""
    if not is_prime(P):
        raise NotPrime(f"{P} is not a prime ideal of {S.label}")
    L = localize(S, complement_mc_set(P))
    m = localize_ideal(L, P)
    Q = L.quotient
    if is_local(Q) != m:
        raise InvariantBroken(f"P S_P is not the unique maximal ideal of {Q.label}")
    if Q.full_mask & ~m.mask != units(Q):
        raise InvariantBroken("units of S_P are not the complement of P S_P")
    return L


def multiplicatively_cancelable_set(S: FiniteSemiring) -> MCSet:
    return mc_set(S, cancelable_elements(S))

