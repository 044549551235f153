"""Finite semimodules over a finite semiring, and their localizations."""

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .core import FiniteSemiring, bits, mask_of
from .errors import (
    AxiomViolation,
    EquivalenceFailure,
    InvariantBroken,
    MalformedTable,
    ParentMismatch,
    Violation,
)
from .ideals import Ideal
from .localization import LocalizationResult, fraction_classes, localize
from .spectrum import complement_mc_set, max_ideals, spec

MODULE_AXIOMS = (
    "add_associative",
    "add_commutative",
    "add_identity",
    "scalar_distributes_over_sum",
    "sum_of_scalars_distributes",
    "scalar_associative",
    "scalar_kills_zero",
    "zero_scalar",
    "unit_scalar",
)


@dataclass(frozen=True)
class FiniteSemimodule:
    ring: FiniteSemiring
    size: int
    add: tuple[tuple[int, ...], ...]
    zero: int
    action: tuple[tuple[int, ...], ...]
    name: Optional[str] = None
    element_names: Optional[tuple[str, ...]] = None

    @property
    def full_mask(self):
        return (1 << self.size) - 1

    def name_of(self, m):
        return str(m) if self.element_names is None else self.element_names[m]

    def format_mask(self, mask):
        return "{" + ", ".join(self.name_of(m) for m in bits(mask)) + "}"

    @property
    def label(self):
        return self.name or f"<module of size {self.size} over {self.ring.label}>"

    def to_dict(self, ring_ref):
        d = {"ring": ring_ref, "size": self.size, "add": [list(r) for r in self.add],
             "zero": self.zero, "action": [list(r) for r in self.action]}
        if self.element_names is not None:
            d["elements"] = list(self.element_names)
        return d


def module_violations(S: FiniteSemiring, add, zero, action) -> list[Violation]:
    k = len(add)
    found = {}

    def note(law, w):
        found.setdefault(law, Violation(law, w))

    for a, b, c in product(range(k), repeat=3):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            note("add_associative", (a, b, c))
    for a, b in product(range(k), repeat=2):
        if add[a][b] != add[b][a]:
            note("add_commutative", (a, b))
    for a in range(k):
        if add[zero][a] != a:
            note("add_identity", (a,))
    for s in S.elements:
        for m, n in product(range(k), repeat=2):
            if action[s][add[m][n]] != add[action[s][m]][action[s][n]]:
                note("scalar_distributes_over_sum", (s, m, n))
        if action[s][zero] != zero:
            note("scalar_kills_zero", (s,))
    for s, t in product(S.elements, repeat=2):
        for m in range(k):
            if action[S.add[s][t]][m] != add[action[s][m]][action[t][m]]:
                note("sum_of_scalars_distributes", (s, t, m))
            if action[S.mul[s][t]][m] != action[s][action[t][m]]:
                note("scalar_associative", (s, t, m))
    for m in range(k):
        if action[S.zero][m] != zero:
            note("zero_scalar", (m,))
        if action[S.one][m] != m:
            note("unit_scalar", (m,))
    return [found[law] for law in MODULE_AXIOMS if law in found]


def validate_semimodule(S: FiniteSemiring, add, zero, action, name=None,
                        element_names=None) -> FiniteSemimodule:
    k = len(add)
    if k < 1 or any(len(r) != k for r in add):
        raise MalformedTable(f"module add table is not {k}x{k}")
    if len(action) != S.size or any(len(r) != k for r in action):
        raise MalformedTable(f"action table must be {S.size}x{k}")
    if any(not 0 <= v < k for r in list(add) + list(action) for v in r) or not 0 <= zero < k:
        raise MalformedTable("module table entry out of range")
    violations = module_violations(S, add, zero, action)
    if violations:
        raise AxiomViolation(violations)
    names = None if element_names is None else tuple(map(str, element_names))
    return FiniteSemimodule(S, k, tuple(map(tuple, add)), zero, tuple(map(tuple, action)),
                            name, names)


def regular_module(S: FiniteSemiring) -> FiniteSemimodule:
    """S as a module over itself."""
    return FiniteSemimodule(S, S.size, S.add, S.zero, S.mul, f"{S.label} (regular)",
                            S.element_names)


def zero_module(S: FiniteSemiring) -> FiniteSemimodule:
    return FiniteSemimodule(S, 1, ((0,),), 0, tuple((0,) for _ in S.elements),
                            f"0 over {S.label}", ("0",))


def direct_sum(M1: FiniteSemimodule, M2: FiniteSemimodule) -> FiniteSemimodule:
    S = M1.ring
    if M2.ring != S:
        raise ParentMismatch("direct sum of modules over different semirings")
    pairs = [(a, b) for a in range(M1.size) for b in range(M2.size)]
    idx = {p: i for i, p in enumerate(pairs)}
    add = [[idx[M1.add[a][c], M2.add[b][d]] for c, d in pairs] for a, b in pairs]
    action = [[idx[M1.action[s][a], M2.action[s][b]] for a, b in pairs] for s in S.elements]
    names = [f"({M1.name_of(a)},{M2.name_of(b)})" for a, b in pairs]
    return validate_semimodule(S, add, idx[M1.zero, M2.zero], action,
                               f"{M1.label} + {M2.label}", names)


# ---------------------------------------------------------------------------
# subsemimodules

@dataclass(frozen=True, eq=False)
class Subsemimodule:
    module: FiniteSemimodule
    mask: int

    def __eq__(self, other):
        if not isinstance(other, Subsemimodule):
            return NotImplemented
        return self.mask == other.mask and (self.module is other.module
                                            or self.module == other.module)

    def __hash__(self):
        return hash(self.mask)

    def __iter__(self):
        return bits(self.mask)

    def issubset(self, other):
        return self.mask & ~other.mask == 0

    def __str__(self):
        return self.module.format_mask(self.mask)


def _same_module(*subs):
    M = subs[0].module
    for K in subs[1:]:
        if K.module is not M and K.module != M:
            raise ParentMismatch("subsemimodules of different modules")
    return M


def _module_additive_closure(M, mask):
    while True:
        new = mask
        for a in bits(mask):
            for b in bits(mask):
                new |= 1 << M.add[a][b]
        if new == mask:
            return mask
        mask = new


def generate_submodule(M: FiniteSemimodule, elements: Iterable[int] = ()) -> Subsemimodule:
    mask = mask_of(elements) | 1 << M.zero
    absorbed = mask
    for m in bits(mask):
        for s in M.ring.elements:
            absorbed |= 1 << M.action[s][m]
    return Subsemimodule(M, _module_additive_closure(M, absorbed))


def is_submodule_mask(M: FiniteSemimodule, mask: int) -> bool:
    if not mask:
        return False
    return all(mask >> M.add[a][b] & 1 for a in bits(mask) for b in bits(mask)) and \
        all(mask >> M.action[s][a] & 1 for a in bits(mask) for s in M.ring.elements)


def enumerate_submodules(M: FiniteSemimodule) -> list[Subsemimodule]:
    cyclic = {generate_submodule(M, (m,)).mask for m in range(M.size)}
    seen = {1 << M.zero}
    frontier = list(seen)
    while frontier:
        nxt = []
        for k in frontier:
            for c in cyclic:
                j = _sum_mask(M, k, c)
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    return [Subsemimodule(M, m) for m in sorted(seen)]


def _sum_mask(M, m1, m2):
    out = 0
    for a in bits(m1):
        for b in bits(m2):
            out |= 1 << M.add[a][b]
    return out


def module_sum(K: Subsemimodule, L: Subsemimodule) -> Subsemimodule:
    M = _same_module(K, L)
    return Subsemimodule(M, _sum_mask(M, K.mask, L.mask))


def module_intersect(K: Subsemimodule, L: Subsemimodule) -> Subsemimodule:
    M = _same_module(K, L)
    return Subsemimodule(M, K.mask & L.mask)


def ideal_action(I: Ideal, L: Subsemimodule) -> Subsemimodule:
    """IL: finite sums of a·l with a in I and l in L."""
    M = L.module
    if I.ring is not M.ring and I.ring != M.ring:
        raise ParentMismatch("ideal and module live over different semirings")
    products = mask_of(M.action[a][l] for a in I for l in L)
    return Subsemimodule(M, _module_additive_closure(M, products))


def annihilator(M: FiniteSemimodule, x: int) -> Ideal:
    """Ann(x) = {s : s·x = 0}."""
    return Ideal(M.ring, mask_of(s for s in M.ring.elements if M.action[s][x] == M.zero))


# ---------------------------------------------------------------------------
# localization of modules

@dataclass(frozen=True)
class ModuleLocalization:
    module: FiniteSemimodule
    ring_loc: LocalizationResult
    quotient: FiniteSemimodule
    classes: dict
    representatives: tuple
    gamma: tuple[int, ...]

    def class_of(self, m, u):
        return self.classes[m, u]

    def base_action(self, s: int, c: int) -> int:
        """M_U as an S-module: s·(m/u) = (sm)/u."""
        m, u = self.representatives[c]
        return self.classes[self.module.action[s][m], u]


def localize_module(M: FiniteSemimodule, U) -> ModuleLocalization:
    L = localize(M.ring, U)
    S, W = M.ring, L.mcset
    act = M.action
    pairs, index, reps = fraction_classes(M.size, W, lambda u, m: act[u][m])

    def frac_add(p, q):
        (m, u), (n, v) = p, q
        return M.add[act[v][m]][act[u][n]], S.mul[u][v]

    k = len(reps)
    add_t = [[index[frac_add(reps[i], reps[j])] for j in range(k)] for i in range(k)]
    for p in pairs:
        for q in pairs:
            if index[frac_add(p, q)] != add_t[index[p]][index[q]]:
                raise InvariantBroken(f"module fraction sum depends on representatives {p}, {q}")
    # a/u · m/v = am/uv, one row per class of S_U
    ring_reps = L.representatives
    action_t = []
    for a, u in ring_reps:
        row = []
        for c in range(k):
            m, v = reps[c]
            row.append(index[act[a][m], S.mul[u][v]])
        action_t.append(row)
    for (a, u), rc in L.classes.items():
        for p in pairs:
            m, v = p
            if index[act[a][m], S.mul[u][v]] != action_t[rc][index[p]]:
                raise InvariantBroken("module fraction action depends on representatives")
    names = [f"{M.name_of(m)}/{S.name_of(u)}" for m, u in reps]
    Q = validate_semimodule(L.quotient, add_t, index[M.zero, S.one], action_t,
                            f"{M.label}_{S.format_mask(W.mask)}", names)
    gamma = tuple(index[m, S.one] for m in range(M.size))
    for m in range(M.size):
        if gamma[m] == Q.zero and not any(act[t][m] == M.zero for t in W):
            raise InvariantBroken(f"m/1 = 0 without a killing t in U for m={m}")
    return ModuleLocalization(M, L, Q, index, reps, gamma)


def localize_submodule(ML: ModuleLocalization, K: Subsemimodule) -> Subsemimodule:
    """K_U = {k/u : k in K, u in U} inside M_U."""
    if K.module is not ML.module and K.module != ML.module:
        raise ParentMismatch("subsemimodule of a different module")
    return Subsemimodule(ML.quotient, mask_of(ML.classes[k, u] for k in K for u in ML.ring_loc.mcset))


def whole(M: FiniteSemimodule) -> Subsemimodule:
    return Subsemimodule(M, M.full_mask)


@dataclass(frozen=True)
class LocalGlobalZero:
    is_zero: bool
    zero_at_primes: bool
    zero_at_maximals: bool
    witness: Optional[tuple[int, Ideal, Ideal]] = None  # (x, Ann(x), maximal ideal above it)

    @property
    def value(self):
        return self.is_zero


def is_zero_locally(M: FiniteSemimodule) -> LocalGlobalZero:
    """Compare M = 0 with vanishing of every M_p and of every M_m."""
    S = M.ring
    is_zero = M.size == 1
    at_primes = all(localize_module(M, complement_mc_set(P)).quotient.size == 1
                    for P in spec(S).primes)
    at_max = all(localize_module(M, complement_mc_set(m)).quotient.size == 1
                 for m in max_ideals(S))
    if not (is_zero == at_primes == at_max):
        raise EquivalenceFailure(
            f"{M.label}: M=0 is {is_zero}, all M_p=0 is {at_primes}, all M_m=0 is {at_max}")
    witness = None
    if not is_zero:
        x = next(m for m in range(M.size) if m != M.zero)
        ann = annihilator(M, x)
        m = next(m for m in max_ideals(S) if ann.issubset(m))
        witness = (x, ann, m)
    return LocalGlobalZero(is_zero, at_primes, at_max, witness)
