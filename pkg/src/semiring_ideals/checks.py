"""Exhaustive verification of the ideal theory on one finite semiring.

Each proposition is a generator-style function that records one instance per
case it checks. Failures carry a printable witness. Existential claims
("some hom fails to extend a prime to a prime") are not per-semiring facts,
so they are gathered separately as diagnostics.
"""

import random
import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Optional, Union

from . import core
from .core import FiniteSemiring, axiom_violations, bits, cancelable_elements, units
from .decomposition import (
    irreducible_decomposition,
    irreducible_separating,
    is_minimal_decomposition,
    minimal_decompositions,
    minimal_primes,
    minimize,
    primary_decomposition,
)
from .errors import AxiomViolation, NoPrimaryDecomposition, SemiringError, UnknownPropositionId
from .ideals import (
    Ideal,
    add_ideals,
    cancels_by_colon,
    cancels_by_inclusion,
    colon,
    colon_element,
    enumerate_ideals,
    generate_ideal,
    ideal_semiring,
    intersect_all,
    intersect_ideals,
    is_cancellation,
    is_ideal_mask,
    is_subtractive,
    mul_ideals,
    principal,
    product_all,
    radical,
    sum_all,
    unit_ideal,
    zero_ideal,
)
from .localization import localize, localize_at_prime, localize_ideal, prime_correspondence
from .morphisms import contract, enumerate_homs, extend, identity_hom, kernel
from .semimodules import (
    annihilator,
    direct_sum,
    enumerate_submodules,
    ideal_action,
    is_zero_locally,
    localize_module,
    localize_submodule,
    module_intersect,
    module_sum,
    module_violations,
    regular_module,
    validate_semimodule,
    zero_module,
)
from .spectrum import (
    is_comaximal,
    is_irreducible,
    is_local,
    is_maximal,
    is_mc_mask,
    is_prime,
    is_prime_by_ideals,
    is_primary,
    maximal_disjoint_ideals,
    mc_sets,
    minimal_elements,
    nonunits_form_ideal,
    spec,
    v_of,
)

HOM_SEARCH_LIMIT = 5000
MAX_FAILURES_KEPT = 25


@dataclass
class PropositionResult:
    id: str
    anchor: str
    instances: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, witness: Union[str, Callable[[], str]] = ""):
        self.instances += 1
        if not ok:
            if len(self.failures) < MAX_FAILURES_KEPT:
                self.failures.append(witness() if callable(witness) else witness)

    def to_dict(self):
        return {"id": self.id, "anchor": self.anchor, "instances": self.instances,
                "failures": list(self.failures)}


@dataclass
class CheckReport:
    semiring: str
    propositions: list
    elapsed_ms: int = 0
    diagnostics: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(not p.failures for p in self.propositions)

    @property
    def instances(self) -> int:
        return sum(p.instances for p in self.propositions)

    def result(self, pid: str) -> PropositionResult:
        return next(p for p in self.propositions if p.id == pid)

    def to_dict(self):
        return {"semiring": self.semiring,
                "propositions": [p.to_dict() for p in self.propositions],
                "elapsed_ms": self.elapsed_ms,
                "diagnostics": self.diagnostics}


PROPOSITIONS: dict[str, tuple[str, Callable]] = {}
DIAGNOSTICS: dict[str, Callable] = {}


def proposition(pid: str, anchor: str):
    def register(fn):
        PROPOSITIONS[pid] = (anchor, fn)
        return fn
    return register


def diagnostic(did: str):
    def register(fn):
        DIAGNOSTICS[did] = fn
        return fn
    return register


class Context:
    """Per-semiring caches shared by all propositions."""

    def __init__(self, S: FiniteSemiring, seed: Optional[int] = None):
        self.S = S
        self.rng = random.Random(seed) if seed is not None else None

    @cached_property
    def ideals(self) -> list[Ideal]:
        return list(enumerate_ideals(self.S))

    @cached_property
    def spectrum(self):
        return spec(self.S)

    @cached_property
    def mcsets(self):
        return mc_sets(self.S, max_size=4)

    @cached_property
    def prime_complements(self):
        return [mask for mask in (self.S.full_mask & ~P.mask for P in self.spectrum.primes)]

    @cached_property
    def localizations(self):
        masks = sorted({W.mask for W in self.mcsets} | set(self.prime_complements))
        return [localize(self.S, m) for m in masks]

    @cached_property
    def homs(self):
        S = self.S
        B = core.boolean()
        out = [identity_hom(S)]
        out += list(enumerate_homs(S, B))
        out += list(enumerate_homs(B, S))
        if S.size ** max(S.size - 2, 0) <= HOM_SEARCH_LIMIT:
            out += [f for f in enumerate_homs(S, S) if f.map != tuple(S.elements)]
        out += [L.gamma for L in self.localizations]
        if self.rng is not None:
            self.rng.shuffle(out)
        return out

    @cached_property
    def modules(self):
        S = self.S
        reg = regular_module(S)
        mods = [reg, zero_module(S)]
        if S.size <= 3:
            mods.append(direct_sum(reg, reg))
        for m in self.spectrum.maximals:
            if not m.is_zero:
                mods.append(submodule_as_module(reg, m.mask, f"{m} as module"))
        return mods


def submodule_as_module(M, mask, name):
    els = list(bits(mask))
    pos = {e: i for i, e in enumerate(els)}
    add = [[pos[M.add[a][b]] for b in els] for a in els]
    action = [[pos[M.action[s][a]] for a in els] for s in M.ring.elements]
    return validate_semimodule(M.ring, add, pos[M.zero], action, name,
                               [M.name_of(e) for e in els])


def _fmt(*ideals):
    return ", ".join(str(I) for I in ideals)


def _pairs(xs):
    return product(xs, repeat=2)


def _triples(xs):
    return product(xs, repeat=3)


# ---------------------------------------------------------------------------
# semirings

@proposition("semiring-axioms", "commutative monoids under + and ·, distributive, absorbing zero")
def _semiring_axioms(ctx, r):
    S = ctx.S
    bad = {v.law: v for v in axiom_violations(S.add, S.mul, S.zero, S.one)}
    for law in core.AXIOMS:
        r.check(law not in bad, lambda law=law: str(bad[law]))
    r.check(S.zero != S.one, "zero equals one")


@proposition("pow-additive", "s^(m+n) = s^m s^n")
def _pow(ctx, r):
    S = ctx.S
    for s in S.elements:
        for m, n in product(range(1, 5), repeat=2):
            r.check(S.pow(s, m + n) == S.mul[S.pow(s, m)][S.pow(s, n)], f"s={s}, m={m}, n={n}")


@proposition("units-group", "the units form a multiplicative group")
def _units(ctx, r):
    S = ctx.S
    U = units(S)
    r.check(bool(U >> S.one & 1), "1 is not a unit")
    for a in bits(U):
        r.check(any(S.mul[a][b] == S.one for b in bits(U)), f"inverse of {a} not a unit")
        for b in bits(U):
            r.check(bool(U >> S.mul[a][b] & 1), f"{a}*{b} not a unit")


@proposition("product-valid", "direct products of semirings are semirings")
def _products(ctx, r):
    S = ctx.S
    for T in core.gallery():
        for A, B in ((S, T), (T, S)):
            try:
                P = core.direct_product(A, B)
                r.check(P.size == A.size * B.size, f"{A.label} x {B.label} has wrong size")
            except SemiringError as e:
                r.check(False, f"{A.label} x {B.label}: {e}")


# ---------------------------------------------------------------------------
# ideals

@proposition("ideal-enumeration", "principal-join closure finds exactly the ideals")
def _enumeration(ctx, r):
    S = ctx.S
    brute = [m for m in range(1 << S.size) if is_ideal_mask(S, m)]
    r.check(brute == [I.mask for I in ctx.ideals], "lattice differs from subset scan")
    for I in ctx.ideals:
        r.check(is_ideal_mask(S, I.mask), f"{I} is not an ideal")


@proposition("generated-ideal", "(A) is the intersection of all ideals containing A")
def _generated(ctx, r):
    S = ctx.S
    for k in range(3):
        for A in combinations(S.elements, k):
            mask = core.mask_of(A)
            above = [I for I in ctx.ideals if mask & ~I.mask == 0]
            r.check(generate_ideal(S, A) == intersect_all(above, S), f"A={A}")


@proposition("ideal-arith", "sum and product laws of ideals")
def _ideal_arith(ctx, r):
    S = ctx.S
    Z, T = zero_ideal(S), unit_ideal(S)
    ids = ctx.ideals
    for I in ids:
        r.check(add_ideals(I, I) == I, f"I+I != I for {I}")
        r.check(add_ideals(I, Z) == I, f"I+(0) != I for {I}")
        r.check(mul_ideals(I, T) == I, f"IS != I for {I}")
        r.check(mul_ideals(I, Z) == Z, f"I(0) != (0) for {I}")
        r.check(add_ideals(I, T) == T, f"I+S != S for {I}")
    for I, J in _pairs(ids):
        s, p, m = add_ideals(I, J), mul_ideals(I, J), intersect_ideals(I, J)
        r.check(is_ideal_mask(S, s.mask) and is_ideal_mask(S, p.mask), lambda: _fmt(I, J))
        r.check(s == add_ideals(J, I), lambda: "I+J != J+I: " + _fmt(I, J))
        r.check(p == mul_ideals(J, I), lambda: "IJ != JI: " + _fmt(I, J))
        r.check(p.issubset(m), lambda: "IJ not in I∩J: " + _fmt(I, J))
        if s == Z:
            r.check(I == Z and J == Z, lambda: "I+J=(0) with nonzero summand: " + _fmt(I, J))
        if s == T:
            r.check(p == m, lambda: "comaximal but IJ != I∩J: " + _fmt(I, J))
        r.check(mul_ideals(s, m).issubset(p), lambda: "(I+J)(I∩J) not in IJ: " + _fmt(I, J))
    for I, J, K in _triples(ids):
        r.check(add_ideals(I, add_ideals(J, K)) == add_ideals(add_ideals(I, J), K),
                lambda: "+ not associative: " + _fmt(I, J, K))
        r.check(mul_ideals(I, mul_ideals(J, K)) == mul_ideals(mul_ideals(I, J), K),
                lambda: "· not associative: " + _fmt(I, J, K))
        r.check(mul_ideals(I, add_ideals(J, K)) == add_ideals(mul_ideals(I, J), mul_ideals(I, K)),
                lambda: "not distributive: " + _fmt(I, J, K))


@proposition("ideal-lattice", "Id(S) is a bounded lattice and an additively idempotent semiring")
def _ideal_lattice(ctx, r):
    S = ctx.S
    ids = ctx.ideals
    Z, T = zero_ideal(S), unit_ideal(S)
    for I in ids:
        r.check(Z.issubset(I) and I.issubset(T), f"bounds fail at {I}")
    for I, J in _pairs(ids):
        s, m = add_ideals(I, J), intersect_ideals(I, J)
        uppers = [K for K in ids if I.issubset(K) and J.issubset(K)]
        lowers = [K for K in ids if K.issubset(I) and K.issubset(J)]
        r.check(s in uppers and all(s.issubset(K) for K in uppers), lambda: "sup: " + _fmt(I, J))
        r.check(m in lowers and all(K.issubset(m) for K in lowers), lambda: "inf: " + _fmt(I, J))
    try:
        IdS = ideal_semiring(S)
        r.check(all(IdS.add[a][a] == a for a in IdS.elements), "ideal sum not idempotent")
    except SemiringError as e:
        r.check(False, f"Id(S) is not a semiring: {e}")


@proposition("infinite-distributivity", "J·ΣI_k = ΣJ·I_k over every family of ideals")
def _inf_dist(ctx, r):
    S = ctx.S
    ids = ctx.ideals
    for J in ids:
        for k in range(1, len(ids) + 1):
            for fam in combinations(ids, k):
                r.check(mul_ideals(J, sum_all(fam, S)) == sum_all((mul_ideals(J, I) for I in fam), S),
                        lambda: f"J={J}, family={_fmt(*fam)}")


@proposition("colon-laws", "colon ideal identities")
def _colon(ctx, r):
    S = ctx.S
    ids = ctx.ideals
    for I, J in _pairs(ids):
        c = colon(I, J)
        r.check(I.issubset(c), lambda: "I not in [I:J]: " + _fmt(I, J))
        r.check(mul_ideals(c, J).issubset(I), lambda: "[I:J]J not in I: " + _fmt(I, J))
        r.check(c == colon(I, add_ideals(I, J)), lambda: "[I:J] != [I:I+J]: " + _fmt(I, J))
    for I, J, K in _triples(ids):
        a = colon(colon(I, J), K)
        r.check(a == colon(I, mul_ideals(J, K)) == colon(colon(I, K), J),
                lambda: "iterated colon: " + _fmt(I, J, K))
        r.check(colon(intersect_ideals(I, J), K) == intersect_ideals(colon(I, K), colon(J, K)),
                lambda: "colon of meet: " + _fmt(I, J, K))
        r.check(colon(I, add_ideals(J, K)) == intersect_ideals(colon(I, J), colon(I, K)),
                lambda: "colon by sum: " + _fmt(I, J, K))
    for J in ids:
        r.check(colon(intersect_all(ids, S), J) == intersect_all((colon(I, J) for I in ids), S),
                lambda: f"colon of whole-lattice meet by {J}")
        r.check(colon(J, sum_all(ids, S)) == intersect_all((colon(J, K) for K in ids), S),
                lambda: f"colon of {J} by whole-lattice sum")
    for I in ids:
        for x in S.elements:
            direct = core.mask_of(s for s in S.elements if S.mul[s][x] in I)
            r.check(colon_element(I, x).mask == direct, lambda: f"[I:x] for I={I}, x={x}")


@proposition("radical-laws", "radical identities")
def _radical(ctx, r):
    S = ctx.S
    ids = ctx.ideals
    for I in ids:
        rad = radical(I)
        r.check(is_ideal_mask(S, rad.mask), f"√{I} is not an ideal")
        r.check(I.issubset(rad), f"{I} not in its radical")
        r.check(radical(rad) == rad, f"√√I != √I for {I}")
        r.check((rad == unit_ideal(S)) == (I == unit_ideal(S)), f"√I=S iff I=S fails at {I}")
    for I, J in _pairs(ids):
        a = radical(mul_ideals(I, J))
        r.check(a == radical(intersect_ideals(I, J)) == intersect_ideals(radical(I), radical(J)),
                lambda: "radical of product/meet: " + _fmt(I, J))
        r.check(radical(add_ideals(I, J)) == radical(add_ideals(radical(I), radical(J))),
                lambda: "radical of sum: " + _fmt(I, J))


@proposition("cancellation", "cancellation ideals: three equivalent characterizations")
def _cancellation(ctx, r):
    S = ctx.S
    ids = ctx.ideals
    for I, J in _pairs(ids):
        IJ = mul_ideals(I, J)
        r.check(mul_ideals(colon(IJ, I), I) == IJ, lambda: "[IJ:I]I != IJ: " + _fmt(I, J))
    for I in ids:
        if I.is_zero:
            continue
        a, b, c = is_cancellation(I), cancels_by_colon(I), cancels_by_inclusion(I)
        r.check(a == b == c, f"characterizations disagree on {I}: {a}, {b}, {c}")
    for s in bits(cancelable_elements(S)):
        r.check(is_cancellation(principal(S, s)), f"(s) not cancellation for cancelable s={s}")


# ---------------------------------------------------------------------------
# spectrum

@proposition("prime-characterization", "element-wise and ideal-wise prime tests agree")
def _prime_char(ctx, r):
    for P in ctx.ideals:
        r.check(is_prime(P) == is_prime_by_ideals(P), f"prime tests disagree on {P}")


@proposition("prime-complement-mc", "P is prime iff S - P is multiplicatively closed")
def _prime_mc(ctx, r):
    S = ctx.S
    for P in ctx.ideals:
        r.check(is_prime(P) == is_mc_mask(S, S.full_mask & ~P.mask), f"at {P}")


@proposition("prime-containing-ideals", "P ⊇ some I_k iff P ⊇ ∩I_k iff P ⊇ ΠI_k")
def _prime_containing(ctx, r):
    S = ctx.S
    for P in ctx.spectrum.primes:
        for k in (1, 2, 3):
            for fam in combinations_with_replacement(ctx.ideals, k):
                a = any(I.issubset(P) for I in fam)
                b = intersect_all(fam, S).issubset(P)
                c = product_all(fam, S).issubset(P)
                r.check(a == b == c, lambda: f"P={P}, family={_fmt(*fam)}")


@proposition("maxisprime", "ideals maximal among those missing an MC-set are prime")
def _maxisprime(ctx, r):
    S = ctx.S
    for W in mc_sets(S, max_size=S.size):
        for P in maximal_disjoint_ideals(S, W):
            r.check(is_prime(P), f"{P} maximal missing {W} but not prime")
    one = mc_sets(S, max_size=1)[0]
    r.check(maximal_disjoint_ideals(S, one) == list(ctx.spectrum.maximals),
            "maximal ideals missing {1} are not Max(S)")


@proposition("proper-in-maximal", "every proper ideal lies in a maximal ideal; Max(S) is finite and nonempty")
def _proper_in_max(ctx, r):
    maxs = ctx.spectrum.maximals
    r.check(0 < len(maxs) < float("inf"), "Max(S) empty")
    r.check(set(maxs) <= set(ctx.spectrum.primes), "a maximal ideal is not prime")
    for I in ctx.ideals:
        if I.is_proper:
            r.check(any(I.issubset(m) for m in maxs), f"{I} in no maximal ideal")


@proposition("zariski", "closed sets V(I) obey the Zariski identities")
def _zariski(ctx, r):
    S = ctx.S
    primes = list(ctx.spectrum.primes)

    def V(I):
        return frozenset(v_of(I))

    r.check(V(zero_ideal(S)) == frozenset(primes), "V(0) != Spec(S)")
    r.check(V(unit_ideal(S)) == frozenset(), "V(S) nonempty")
    for I in ctx.ideals:
        r.check(bool(V(I)) == I.is_proper, f"V({I}) empty iff proper fails")
    for I, J in _pairs(ctx.ideals):
        r.check(V(I) | V(J) == V(intersect_ideals(I, J)), lambda: "union: " + _fmt(I, J))
        r.check(V(I) & V(J) == V(add_ideals(I, J)), lambda: "meet: " + _fmt(I, J))
    for fam in combinations(ctx.ideals, 3):
        inter = frozenset(primes).intersection(*(V(I) for I in fam))
        r.check(inter == V(sum_all(fam, S)), lambda: "meet of three: " + _fmt(*fam))


@proposition("krull-radical", "√I is the intersection of the primes containing I")
def _krull(ctx, r):
    S = ctx.S
    for I in ctx.ideals:
        r.check(radical(I) == intersect_all(v_of(I), S), f"at {I}")


@proposition("units-max", "U(S) is S minus the union of the maximal ideals")
def _units_max(ctx, r):
    S = ctx.S
    union = 0
    for m in ctx.spectrum.maximals:
        union |= m.mask
    U = units(S)
    for s in S.elements:
        r.check(bool(U >> s & 1) == (not union >> s & 1), f"s={S.name_of(s)}")


@proposition("local-criterion", "unique maximal ideal iff nonunits form an ideal; semifield iff (0) maximal")
def _local(ctx, r):
    S = ctx.S
    try:
        m = is_local(S)
    except SemiringError as e:
        r.check(False, str(e))
        return
    r.check((m is not None) == nonunits_form_ideal(S), "local criterion")
    semifield = units(S) == S.full_mask & ~1
    r.check(semifield == is_maximal(zero_ideal(S)), "semifield criterion")


@proposition("comaximal", "comaximal ideals: meet equals product, also for families and radicals")
def _comaximal(ctx, r):
    S = ctx.S
    ids = ctx.ideals
    for I, J in _pairs(ids):
        cm = is_comaximal(I, J)
        if cm:
            r.check(intersect_ideals(I, J) == mul_ideals(I, J), lambda: "pair: " + _fmt(I, J))
        r.check(cm == is_comaximal(radical(I), radical(J)), lambda: "radicals: " + _fmt(I, J))
    for k in (2, 3, 4):
        for fam in combinations(ids, k):
            if all(is_comaximal(a, b) for a, b in combinations(fam, 2)):
                r.check(intersect_all(fam, S) == product_all(fam, S), lambda: "family: " + _fmt(*fam))
    maxs = ctx.spectrum.maximals
    for k in range(1, len(maxs) + 1):
        for fam in combinations(maxs, k):
            pairwise = all(is_comaximal(a, b) for a, b in combinations(fam, 2))
            r.check(pairwise and intersect_all(fam, S) == product_all(fam, S),
                    lambda: "maximal ideals: " + _fmt(*fam))


@proposition("primary-radical-prime", "√Q of a primary Q is the least prime above Q")
def _primary_radical(ctx, r):
    for P in ctx.spectrum.primes:
        r.check(is_primary(P), f"prime {P} is not primary")
    for Q in ctx.ideals:
        if not is_primary(Q):
            continue
        rad = radical(Q)
        above = v_of(Q)
        r.check(is_prime(rad) and rad in above and all(rad.issubset(P) for P in above),
                f"radical of primary {Q}")


@proposition("primary-maximal-radical", "maximal radical implies primary; powers of maximal ideals are primary")
def _primary_max(ctx, r):
    for Q in ctx.ideals:
        if is_maximal(radical(Q)):
            r.check(is_primary(Q), f"{Q} has maximal radical but is not primary")
    for m in ctx.spectrum.maximals:
        p = m
        for k in (1, 2, 3):
            r.check(is_primary(p), f"{m}^{k} = {p} is not primary")
            p = mul_ideals(p, m)


@proposition("primary-colon", "colons [Q:x] of a P-primary Q")
def _primary_colon(ctx, r):
    S = ctx.S
    for Q in ctx.ideals:
        if not is_primary(Q):
            continue
        P = radical(Q)
        for x in S.elements:
            c = colon_element(Q, x)
            if x in Q:
                r.check(c == unit_ideal(S), f"[Q:x] != S for Q={Q}, x={x}")
            else:
                r.check(is_primary(c) and radical(c) == P, f"[Q:x] not P-primary: Q={Q}, x={x}")
            if x not in P:
                r.check(c == Q, f"[Q:x] != Q for x outside P: Q={Q}, x={x}")


@proposition("primary-intersection", "finite meets of P-primary ideals are P-primary")
def _primary_meet(ctx, r):
    S = ctx.S
    for P in ctx.spectrum.primes:
        family = [Q for Q in ctx.ideals if is_primary(Q) and radical(Q) == P]
        for k in (1, 2, 3):
            for fam in combinations(family, k):
                M = intersect_all(fam, S)
                r.check(is_primary(M) and radical(M) == P, lambda: f"P={P}: {_fmt(*fam)}")


# ---------------------------------------------------------------------------
# morphisms

def _target_ideals(f):
    return list(enumerate_ideals(f.target))


def _source_ideals(f):
    return list(enumerate_ideals(f.source))


@proposition("kernel", "kernels are contractions of (0); injective maps have zero kernel")
def _kernel(ctx, r):
    for f in ctx.homs:
        k = kernel(f)
        r.check(k == contract(f, zero_ideal(f.target)), lambda: f"{f!r}")
        r.check(is_ideal_mask(f.source, k.mask), lambda: f"kernel of {f!r} is not an ideal")
        if f.is_injective:
            r.check(k.is_zero, lambda: f"injective {f!r} with nonzero kernel")


@proposition("contraction-laws", "contraction against sum, meet, product, radical and primes")
def _contraction(ctx, r):
    for f in ctx.homs:
        tids = _target_ideals(f)
        for J in tids:
            Jc = contract(f, J)
            r.check(is_ideal_mask(f.source, Jc.mask), lambda: f"{J}^c not an ideal, {f!r}")
            r.check(contract(f, radical(J)) == radical(Jc), lambda: f"radical: {J}, {f!r}")
            if is_prime(J):
                r.check(is_prime(Jc), lambda: f"prime {J} contracts to non-prime, {f!r}")
        for J1, J2 in _pairs(tids):
            c1, c2 = contract(f, J1), contract(f, J2)
            r.check(add_ideals(c1, c2).issubset(contract(f, add_ideals(J1, J2))),
                    lambda: f"sum: {_fmt(J1, J2)}, {f!r}")
            r.check(contract(f, intersect_ideals(J1, J2)) == intersect_ideals(c1, c2),
                    lambda: f"meet: {_fmt(J1, J2)}, {f!r}")
            r.check(mul_ideals(c1, c2).issubset(contract(f, mul_ideals(J1, J2))),
                    lambda: f"product: {_fmt(J1, J2)}, {f!r}")


@proposition("extension-laws", "extension against sum, meet, product and radical")
def _extension(ctx, r):
    for f in ctx.homs:
        sids = _source_ideals(f)
        for I in sids:
            r.check(extend(f, radical(I)).issubset(radical(extend(f, I))),
                    lambda: f"radical: {I}, {f!r}")
        for I1, I2 in _pairs(sids):
            e1, e2 = extend(f, I1), extend(f, I2)
            r.check(extend(f, add_ideals(I1, I2)) == add_ideals(e1, e2), lambda: f"sum: {_fmt(I1, I2)}, {f!r}")
            r.check(extend(f, intersect_ideals(I1, I2)).issubset(intersect_ideals(e1, e2)),
                    lambda: f"meet: {_fmt(I1, I2)}, {f!r}")
            r.check(extend(f, mul_ideals(I1, I2)) == mul_ideals(e1, e2),
                    lambda: f"product: {_fmt(I1, I2)}, {f!r}")


@proposition("ec-ce-laws", "I ⊆ I^ec, J ⊇ J^ce, I^e = I^ece, J^c = J^cec")
def _ecce(ctx, r):
    for f in ctx.homs:
        for I in _source_ideals(f):
            Ie = extend(f, I)
            Iec = contract(f, Ie)
            r.check(I.issubset(Iec), lambda: f"I ⊆ I^ec: {I}, {f!r}")
            r.check(extend(f, Iec) == Ie, lambda: f"I^e = I^ece: {I}, {f!r}")
        for J in _target_ideals(f):
            Jc = contract(f, J)
            Jce = extend(f, Jc)
            r.check(Jce.issubset(J), lambda: f"J^ce ⊆ J: {J}, {f!r}")
            r.check(contract(f, Jce) == Jc, lambda: f"J^c = J^cec: {J}, {f!r}")


# ---------------------------------------------------------------------------
# localization

def _relation_masks(S, U):
    us = list(bits(U))
    pairs = [(x, u) for x in S.elements for u in us]
    pos = {p: i for i, p in enumerate(pairs)}
    rel = []
    for x, u in pairs:
        m = 0
        for (y, v), j in pos.items():
            a, b = S.mul[v][x], S.mul[u][y]
            if any(S.mul[t][a] == S.mul[t][b] for t in us):
                m |= 1 << j
        rel.append(m)
    return pairs, rel


@proposition("fraction-equivalence", "the fraction relation on S x U is an equivalence")
def _fraction_eq(ctx, r):
    S = ctx.S
    for L in ctx.localizations:
        pairs, rel = _relation_masks(S, L.mcset.mask)
        for i in range(len(pairs)):
            r.check(bool(rel[i] >> i & 1), lambda: f"not reflexive at {pairs[i]}, U={L.mcset}")
            for j in bits(rel[i]):
                r.check(bool(rel[j] >> i & 1), lambda: f"not symmetric {pairs[i]}, {pairs[j]}")
                r.check(rel[j] & ~rel[i] == 0, lambda: f"not transitive through {pairs[j]}")
        for i, p in enumerate(pairs):
            for j, q in enumerate(pairs):
                same = L.class_of(*p) == L.class_of(*q)
                r.check(same == bool(rel[i] >> j & 1), lambda: f"classes vs relation at {p}, {q}")


@proposition("fraction-well-defined", "fraction sum and product do not depend on representatives")
def _fraction_wd(ctx, r):
    S = ctx.S
    for L in ctx.localizations:
        Q = L.quotient
        us = list(L.mcset)
        for (x, u), (y, v) in _pairs([(x, u) for x in S.elements for u in us]):
            c1, c2 = L.class_of(x, u), L.class_of(y, v)
            s = L.class_of(S.add[S.mul[x][v]][S.mul[y][u]], S.mul[u][v])
            p = L.class_of(S.mul[x][y], S.mul[u][v])
            r.check(Q.add[c1][c2] == s and Q.mul[c1][c2] == p,
                    lambda: f"{x}/{u}, {y}/{v} in {Q.label}")
        r.check(all(L.gamma.map[a] == L.class_of(a, S.one) for a in S.elements), "gamma")


@proposition("localized-ideals", "I_U = I·S_U, monotone, and commuting with sums and meets")
def _localized_ideals(ctx, r):
    for L in ctx.localizations:
        loc = {I: localize_ideal(L, I) for I in ctx.ideals}
        for I, J in _pairs(ctx.ideals):
            if I.issubset(J):
                r.check(loc[I].issubset(loc[J]), lambda: f"monotone {_fmt(I, J)} at {L.mcset}")
            r.check(localize_ideal(L, add_ideals(I, J)) == add_ideals(loc[I], loc[J]),
                    lambda: f"sum {_fmt(I, J)} at {L.mcset}")
            r.check(localize_ideal(L, intersect_ideals(I, J)) == intersect_ideals(loc[I], loc[J]),
                    lambda: f"meet {_fmt(I, J)} at {L.mcset}")
        for I in ctx.ideals:
            r.check(loc[I] == extend(L.gamma, I), lambda: f"I_U != I S_U for {I}")


@proposition("extended-ideals", "every ideal of S_U is extended from S")
def _extended(ctx, r):
    for L in ctx.localizations:
        for J in enumerate_ideals(L.quotient):
            r.check(extend(L.gamma, contract(L.gamma, J)) == J, lambda: f"{J} in {L.quotient.label}")


@proposition("prime-correspondence", "primes of S_U match primes of S missing U")
def _prime_corr(ctx, r):
    for L in ctx.localizations:
        try:
            pairs = prime_correspondence(L)
            r.check(len(pairs) == len(spec(L.quotient).primes), f"size mismatch at {L.mcset}")
        except SemiringError as e:
            r.check(False, f"U={L.mcset}: {e}")


@proposition("local-at-prime", "S_P is local with maximal ideal P S_P; its primes match primes inside P")
def _local_at_prime(ctx, r):
    S = ctx.S
    for P in ctx.spectrum.primes:
        try:
            L = localize_at_prime(S, P)
        except SemiringError as e:
            r.check(False, f"P={P}: {e}")
            continue
        r.check(is_local(L.quotient) == localize_ideal(L, P), f"P={P}")
        inside = [P2 for P2 in ctx.spectrum.primes if P2.issubset(P)]
        images = {localize_ideal(L, P2) for P2 in inside}
        r.check(len(images) == len(inside) and images == set(spec(L.quotient).primes),
                f"primes of S_P for P={P}")


@proposition("gamma-kernel", "x/1 = 0 forces tx = 0 for some t in U")
def _gamma_kernel(ctx, r):
    S = ctx.S
    for L in ctx.localizations:
        for x in S.elements:
            if L.gamma.map[x] == L.quotient.zero:
                r.check(any(S.mul[t][x] == S.zero for t in L.mcset), f"x={x}, U={L.mcset}")
            else:
                r.check(True)


# ---------------------------------------------------------------------------
# semimodules

@proposition("semimodule-axioms", "module fixtures satisfy the axioms; annihilators are ideals")
def _module_axioms(ctx, r):
    for M in ctx.modules:
        r.check(not module_violations(M.ring, M.add, M.zero, M.action), f"{M.label}")
        for x in range(M.size):
            r.check(is_ideal_mask(M.ring, annihilator(M, x).mask), f"Ann({x}) in {M.label}")


@proposition("module-localization", "K_U is monotone and commutes with sum, meet and ideal action")
def _module_loc(ctx, r):
    S = ctx.S
    Ws = mc_sets(S, max_size=3)
    for M in ctx.modules:
        subs = enumerate_submodules(M)
        for W in Ws:
            ML = localize_module(M, W)
            loc = {K: localize_submodule(ML, K) for K in subs}
            for K, Lm in _pairs(subs):
                if K.issubset(Lm):
                    r.check(loc[K].issubset(loc[Lm]), lambda: f"monotone {K}, {Lm} in {M.label}")
                r.check(localize_submodule(ML, module_sum(K, Lm)) == module_sum(loc[K], loc[Lm]),
                        lambda: f"sum {K}, {Lm} at {W}")
                r.check(localize_submodule(ML, module_intersect(K, Lm))
                        == module_intersect(loc[K], loc[Lm]), lambda: f"meet {K}, {Lm} at {W}")
            for I in ctx.ideals:
                IU = localize_ideal(ML.ring_loc, I)
                for Lm in subs:
                    r.check(localize_submodule(ML, ideal_action(I, Lm)) == ideal_action(IU, loc[Lm]),
                            lambda: f"(IL)_U for I={I}, L={Lm} at {W}")


@proposition("local-global-zero", "M = 0 iff every M_p = 0 iff every M_m = 0")
def _local_global(ctx, r):
    for M in ctx.modules:
        try:
            res = is_zero_locally(M)
            r.check(res.is_zero == res.zero_at_primes == res.zero_at_maximals, M.label)
        except SemiringError as e:
            r.check(False, f"{M.label}: {e}")


# ---------------------------------------------------------------------------
# decomposition

@proposition("irreducible-decomposition", "proper ideals are finite meets of irreducibles, and the meet of all irreducibles above them")
def _irr_dec(ctx, r):
    S = ctx.S
    for I in ctx.ideals:
        if not I.is_proper:
            continue
        try:
            D = irreducible_decomposition(I)
        except SemiringError as e:
            r.check(False, f"{I}: {e}")
            continue
        r.check(D.intersection() == I and all(is_irreducible(C) for C in D.components), f"{I}")
        every = [J for J in ctx.ideals if J.is_proper and I.issubset(J) and is_irreducible(J)]
        r.check(intersect_all(every, S) == I, f"meet of irreducibles above {I}")


@proposition("irreducible-separating", "an ideal missing s sits in an irreducible ideal missing s")
def _irr_sep(ctx, r):
    S = ctx.S
    for I in ctx.ideals:
        for s in S.elements:
            if s in I:
                continue
            J = irreducible_separating(I, s)
            r.check(I.issubset(J) and s not in J and is_irreducible(J), f"I={I}, s={s}")


@proposition("subtractive-irreducible-primary", "proper subtractive irreducible ideals are primary")
def _sub_irr(ctx, r):
    for I in ctx.ideals:
        if I.is_proper and is_irreducible(I) and is_subtractive(I):
            r.check(is_primary(I), f"{I}")


@proposition("primary-decomposition", "primary decompositions exist in subtractive semirings")
def _primary_dec(ctx, r):
    all_subtractive = all(is_subtractive(I) for I in ctx.ideals)
    for I in ctx.ideals:
        if not I.is_proper:
            continue
        try:
            D = primary_decomposition(I)
        except NoPrimaryDecomposition as e:
            # only a non-subtractive irreducible component can block the construction
            r.check(not all_subtractive and not is_subtractive(e.witness), f"{I}: {e}")
            continue
        ok = D.intersection() == I and all(is_primary(Q) for Q in D.components)
        if all_subtractive:
            ok = ok and not D.repaired
        r.check(ok, f"{I}")


@proposition("minimize", "minimizing keeps the meet and makes radicals distinct")
def _minimize(ctx, r):
    for I in ctx.ideals:
        if not I.is_proper:
            continue
        try:
            D = minimize(primary_decomposition(I))
        except NoPrimaryDecomposition:
            continue
        r.check(D.intersection() == I and is_minimal_decomposition(list(D.components)), f"{I}")


@proposition("minimal-primes", "minimal primes belonging to I are the minimal primes above I")
def _minimal_primes(ctx, r):
    for I in ctx.ideals:
        if not I.is_proper:
            continue
        try:
            mp = minimal_primes(I)
        except NoPrimaryDecomposition:
            continue
        r.check(mp == minimal_elements(v_of(I)), f"{I}")
        for P in v_of(I):
            r.check(any(Q.issubset(P) for Q in mp), f"prime {P} above {I}")


# ---------------------------------------------------------------------------
# diagnostics (existence searches; never failures)

@diagnostic("prime-extension-not-prime")
def _diag_prime_ext(ctx):
    found = []
    for f in ctx.homs:
        for P in spec(f.source).primes:
            if not is_prime(extend(f, P)):
                found.append(f"{P} -> {extend(f, P)} along {f!r}")
    return found


@diagnostic("extension-contraction-strict")
def _diag_ec(ctx):
    found = []
    for L in ctx.localizations:
        for I in ctx.ideals:
            Iec = contract(L.gamma, localize_ideal(L, I))
            if Iec != I:
                found.append(f"{I}^ec = {Iec} at U={L.mcset}")
    return found


@diagnostic("irreducible-not-primary")
def _diag_irr(ctx):
    return [str(I) for I in ctx.ideals
            if I.is_proper and is_irreducible(I) and not is_subtractive(I) and not is_primary(I)]


@diagnostic("belonging-primes-vary")
def _diag_belonging(ctx):
    found = []
    for I in ctx.ideals:
        if not I.is_proper:
            continue
        prime_sets = {frozenset(radical(Q).mask for Q in fam) for fam in minimal_decompositions(I)}
        if len(prime_sets) > 1:
            found.append(f"{I}: {len(prime_sets)} different prime sets")
    return found


@diagnostic("no-primary-decomposition")
def _diag_nopd(ctx):
    found = []
    for I in ctx.ideals:
        if I.is_proper:
            try:
                primary_decomposition(I)
            except NoPrimaryDecomposition as e:
                found.append(f"{I} (blocked at {e.witness})")
    return found


# ---------------------------------------------------------------------------

def run_checks(S: FiniteSemiring, selection="all", seed: Optional[int] = None,
               diagnostics: bool = True) -> CheckReport:
    """Run the selected propositions exhaustively on S."""
    if selection == "all" or selection is None:
        ids = list(PROPOSITIONS)
    else:
        ids = [selection] if isinstance(selection, str) else list(selection)
        unknown = [i for i in ids if i not in PROPOSITIONS]
        if unknown:
            raise UnknownPropositionId(", ".join(unknown))
    violations = axiom_violations(S.add, S.mul, S.zero, S.one)
    if violations:
        raise AxiomViolation(violations)
    start = time.perf_counter()
    enumerate_ideals(S)
    ctx = Context(S, seed)
    results = []
    for pid in ids:
        anchor, fn = PROPOSITIONS[pid]
        res = PropositionResult(pid, anchor)
        try:
            fn(ctx, res)
        except SemiringError as e:
            res.check(False, f"raised {type(e).__name__}: {e}")
        res.failures.sort()
        results.append(res)
    diag = {}
    if diagnostics and (selection == "all" or selection is None):
        diag = {did: sorted(fn(ctx)) for did, fn in DIAGNOSTICS.items()}
    elapsed = int((time.perf_counter() - start) * 1000)
    return CheckReport(S.label, results, elapsed, diag)
