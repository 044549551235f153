"""Finite commutative semirings given by Cayley tables.

Elements are the indices ``0..n-1``. After validation the additive identity
is always index 0 and the multiplicative identity index 1, so subsets can be
stored as integer bitmasks with a fixed meaning for the low bits.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .errors import AxiomViolation, MalformedTable, Violation, ZeroEqualsOne

DEFAULT_SIZE_CAP = 8
_size_cap = DEFAULT_SIZE_CAP


def size_cap() -> int:
    """Largest semiring the exponential algorithms will accept."""
    return _size_cap


def set_size_cap(n: int) -> None:
    global _size_cap
    if n < 2:
        raise ValueError("size cap must be at least 2")
    _size_cap = n

AXIOMS = (
    "add_associative",
    "add_commutative",
    "add_identity",
    "mul_associative",
    "mul_commutative",
    "mul_identity",
    "distributive",
    "absorbing_zero",
)


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteSemiring:
    size: int
    add: Table
    mul: Table
    zero: int = 0
    one: int = 1
    name: Optional[str] = None
    element_names: Optional[tuple[str, ...]] = None

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def pow(self, s: int, n: int) -> int:
        if n < 1:
            raise ValueError("exponent must be positive")
        r = s
        for _ in range(n - 1):
            r = self.mul[r][s]
        return r

    def name_of(self, i: int) -> str:
        if self.element_names is None:
            return str(i)
        return self.element_names[i]

    def index_of(self, token: str) -> int:
        """Resolve an element by display name, falling back to its index."""
        token = token.strip()
        if self.element_names is not None and token in self.element_names:
            return self.element_names.index(token)
        try:
            i = int(token)
        except ValueError:
            raise KeyError(f"unknown element {token!r} in {self.label}") from None
        if not 0 <= i < self.size:
            raise KeyError(f"element index {i} out of range for {self.label}")
        return i

    def format_mask(self, mask: int) -> str:
        return "{" + ", ".join(self.name_of(i) for i in bits(mask)) + "}"

    @property
    def label(self) -> str:
        return self.name or f"<semiring of size {self.size}>"

    def to_dict(self) -> dict:
        d = {"size": self.size, "add": [list(r) for r in self.add],
             "mul": [list(r) for r in self.mul], "zero": self.zero, "one": self.one}
        if self.name is not None:
            d["name"] = self.name
        if self.element_names is not None:
            d["elements"] = list(self.element_names)
        return d

    def __repr__(self):
        return f"FiniteSemiring({self.label}, size={self.size})"


def _check_table(t, n, what):
    if len(t) != n or any(len(row) != n for row in t):
        raise MalformedTable(f"{what} table is not {n}x{n}")
    for i, row in enumerate(t):
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise MalformedTable(f"{what}[{i}][{j}] = {v!r} is not an element index")


def axiom_violations(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]],
                     zero: int, one: int) -> list[Violation]:
    """First (lexicographically least) witness for every violated axiom."""
    n = len(add)
    found = {}

    def note(law, witness):
        if law not in found:
            found[law] = Violation(law, witness)

    for a, b, c in product(range(n), repeat=3):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            note("add_associative", (a, b, c))
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            note("mul_associative", (a, b, c))
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            note("distributive", (a, b, c))
    for a, b in product(range(n), repeat=2):
        if add[a][b] != add[b][a]:
            note("add_commutative", (a, b))
        if mul[a][b] != mul[b][a]:
            note("mul_commutative", (a, b))
    for a in range(n):
        if add[zero][a] != a or add[a][zero] != a:
            note("add_identity", (a,))
        if mul[one][a] != a or mul[a][one] != a:
            note("mul_identity", (a,))
        if mul[zero][a] != zero or mul[a][zero] != zero:
            note("absorbing_zero", (a,))
    return [found[law] for law in AXIOMS if law in found]


def _canonical_order(n: int, zero: int, one: int) -> list[int]:
    return [zero, one] + [i for i in range(n) if i not in (zero, one)]


def relabel(add, mul, zero, one, element_names=None):
    """Permute elements so that zero becomes 0 and one becomes 1.

    Returns ``(add, mul, names, new_index)`` where ``new_index[old] = new``.
    """
    n = len(add)
    order = _canonical_order(n, zero, one)
    new_index = [0] * n
    for new, old in enumerate(order):
        new_index[old] = new
    new_add = tuple(tuple(new_index[add[a][b]] for b in order) for a in order)
    new_mul = tuple(tuple(new_index[mul[a][b]] for b in order) for a in order)
    names = None
    if element_names is not None:
        names = tuple(str(element_names[old]) for old in order)
    return new_add, new_mul, names, new_index


def validate_semiring(add, mul, zero=0, one=1, name=None, element_names=None) -> FiniteSemiring:
    """Check every commutative-semiring axiom exhaustively and canonicalize.

    Raises ``MalformedTable`` for shape problems, ``ZeroEqualsOne`` when the
    two constants coincide, and ``AxiomViolation`` listing every failed law.
    """
    n = len(add)
    if n < 2:
        raise MalformedTable("a semiring needs at least two elements")
    _check_table(add, n, "add")
    _check_table(mul, n, "mul")
    for what, v in (("zero", zero), ("one", one)):
        if not isinstance(v, int) or not 0 <= v < n:
            raise MalformedTable(f"{what} = {v!r} is not an element index")
    if element_names is not None:
        if len(element_names) != n or len(set(map(str, element_names))) != n:
            raise MalformedTable("element names must be n distinct strings")
    if zero == one:
        raise ZeroEqualsOne(f"zero and one are both element {zero}")
    violations = axiom_violations(add, mul, zero, one)
    if violations:
        raise AxiomViolation(violations)
    add_t, mul_t, names, _ = relabel(add, mul, zero, one, element_names)
    return FiniteSemiring(n, add_t, mul_t, 0, 1, name, names)


def units(S: FiniteSemiring) -> int:
    """Mask of the invertible elements."""
    return mask_of(s for s in S.elements if any(S.mul[s][t] == S.one for t in S.elements))


def inverse(S: FiniteSemiring, s: int) -> Optional[int]:
    for t in S.elements:
        if S.mul[s][t] == S.one:
            return t
    return None


def cancelable_elements(S: FiniteSemiring) -> int:
    """Mask of multiplicatively cancelable elements (sb = sc implies b = c)."""
    return mask_of(s for s in S.elements if len(set(S.mul[s])) == S.size)


def direct_product(S1: FiniteSemiring, S2: FiniteSemiring, name=None) -> FiniteSemiring:
    n1, n2 = S1.size, S2.size
    pairs = [(a, b) for a in range(n1) for b in range(n2)]
    idx = {p: i for i, p in enumerate(pairs)}
    add = [[idx[S1.add[a][c], S2.add[b][d]] for (c, d) in pairs] for (a, b) in pairs]
    mul = [[idx[S1.mul[a][c], S2.mul[b][d]] for (c, d) in pairs] for (a, b) in pairs]
    names = [f"({S1.name_of(a)},{S2.name_of(b)})" for a, b in pairs]
    if name is None and S1.name and S2.name:
        name = f"{S1.name}x{S2.name}"
    return validate_semiring(add, mul, idx[S1.zero, S2.zero], idx[S1.one, S2.one], name, names)


# ---------------------------------------------------------------------------
# gallery

def boolean() -> FiniteSemiring:
    return validate_semiring([[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1, "B", ["0", "1"])


def chain(n: int) -> FiniteSemiring:
    """The totally ordered lattice 0 < s1 < ... < 1 with (max, min)."""
    if n == 3:
        names = ["0", "s", "1"]
    else:
        names = ["0"] + [f"s{i}" for i in range(1, n - 1)] + ["1"]
    add = [[max(a, b) for b in range(n)] for a in range(n)]
    mul = [[min(a, b) for b in range(n)] for a in range(n)]
    return validate_semiring(add, mul, 0, n - 1, f"L{n}", names)


def saturating(k: int) -> FiniteSemiring:
    """Naturals truncated at k: a+b and ab are capped at k."""
    r = range(k + 1)
    add = [[min(a + b, k) for b in r] for a in r]
    mul = [[min(a * b, k) for b in r] for a in r]
    return validate_semiring(add, mul, 0, 1, f"N{k}", [str(a) for a in r])


def integers_mod(n: int) -> FiniteSemiring:
    r = range(n)
    add = [[(a + b) % n for b in r] for a in r]
    mul = [[(a * b) % n for b in r] for a in r]
    return validate_semiring(add, mul, 0, 1, f"Z{n}", [str(a) for a in r])


def boolean_dual_numbers() -> FiniteSemiring:
    """B[x]/(x^2): pairs (a0, a1) standing for a0 + a1 x over the Booleans."""
    els = [(0, 0), (1, 0), (0, 1), (1, 1)]
    idx = {e: i for i, e in enumerate(els)}
    add = [[idx[a[0] | b[0], a[1] | b[1]] for b in els] for a in els]
    mul = [[idx[a[0] & b[0], (a[0] & b[1]) | (a[1] & b[0])] for b in els] for a in els]
    return validate_semiring(add, mul, 0, 1, "D2", ["0", "1", "x", "1+x"])


def truncated_tropical(k: int) -> FiniteSemiring:
    """Max-plus semiring on {-inf, 0, ..., k} with sums capped at k."""
    vals = [None] + list(range(k + 1))

    def t_mul(a, b):
        if a is None or b is None:
            return None
        return min(a + b, k)

    def t_add(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return max(a, b)

    idx = {v: i for i, v in enumerate(vals)}
    add = [[idx[t_add(a, b)] for b in vals] for a in vals]
    mul = [[idx[t_mul(a, b)] for b in vals] for a in vals]
    names = ["-inf"] + [str(v) for v in range(k + 1)]
    return validate_semiring(add, mul, 0, 1, f"T{k}", names)


def gallery() -> list[FiniteSemiring]:
    """Built-in corpus of small semirings, all of size 2..6."""
    return list(_gallery())


@lru_cache(maxsize=None)
def _gallery() -> tuple[FiniteSemiring, ...]:
    B = boolean()
    L3 = chain(3)
    N2 = saturating(2)
    Z2 = integers_mod(2)
    return (
        B,
        L3,
        chain(4),
        chain(5),
        chain(6),
        N2,
        saturating(3),
        direct_product(B, B),
        direct_product(B, L3),
        direct_product(N2, B),
        direct_product(Z2, B),
        Z2,
        integers_mod(3),
        integers_mod(4),
        integers_mod(6),
        boolean_dual_numbers(),
        truncated_tropical(2),
    )


def gallery_by_name() -> dict[str, FiniteSemiring]:
    return {S.name: S for S in gallery()}
