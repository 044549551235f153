"""Command-line front end: semiring-ideals <command> SOURCE [options].

SOURCE is a JSON semiring file or ``gallery:NAME`` (``gallery:all`` for the
``check`` command). Exit codes: 0 success, 1 a check failed, 2 bad input.
"""

import argparse
import json
import sys
from pathlib import Path

from . import core
from .checks import PROPOSITIONS, run_checks
from .core import FiniteSemiring, gallery, gallery_by_name, relabel, validate_semiring
from .decomposition import irreducible_decomposition, minimal_primes, minimize, primary_decomposition
from .errors import ParseError, SemiringError, SizeCapExceeded
from .ideals import (
    colon,
    enumerate_ideals,
    generate_ideal,
    is_cancellation,
    is_subtractive,
    radical,
)
from .localization import localize, localize_at_prime, localize_ideal
from .morphisms import contract, extend, kernel, validate_hom
from .semimodules import annihilator, enumerate_submodules, is_zero_locally, validate_semimodule
from .spectrum import is_irreducible, is_maximal, is_primary, is_prime, mc_set, spec, v_of

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


# ---------------------------------------------------------------------------
# input

def _load_json(path):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: line {e.lineno}, column {e.colno}: {e.msg}") from None


def _field(data, key, kind, where, required=True):
    if key not in data:
        if required:
            raise ParseError(f"{where}: missing field {key!r}")
        return None
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"{where}: field {key!r} has the wrong type")
    return value


def _table(data, key, rows, cols, where):
    t = _field(data, key, list, where)
    if len(t) != rows or any(not isinstance(r, list) or len(r) != cols for r in t):
        raise ParseError(f"{where}: field {key!r} must be a {rows}x{cols} table")
    for i, row in enumerate(t):
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"{where}: {key}[{i}][{j}] is not an integer")
    return t


def semiring_from_dict(data, where="<semiring>"):
    """Validate a semiring given in the JSON schema; also return the relabeling."""
    if not isinstance(data, dict):
        raise ParseError(f"{where}: expected a JSON object")
    n = _field(data, "size", int, where)
    if n > core.size_cap():
        raise SizeCapExceeded(f"{where}: size {n} exceeds cap {core.size_cap()}")
    add = _table(data, "add", n, n, where)
    mul = _table(data, "mul", n, n, where)
    zero = _field(data, "zero", int, where)
    one = _field(data, "one", int, where)
    name = _field(data, "name", str, where, required=False)
    names = _field(data, "elements", list, where, required=False)
    if names is not None and len(names) != n:
        raise ParseError(f"{where}: field 'elements' must list {n} names")
    S = validate_semiring(add, mul, zero, one, name, names)
    return S, relabel(add, mul, zero, one, names)[3]


def parse_semiring_file(path) -> FiniteSemiring:
    return semiring_from_dict(_load_json(path), str(path))[0]


def resolve_semiring(ref, base=None):
    """A semiring from ``gallery:NAME``, a file path, or an inline dict.

    Returns ``(S, new_index)`` where ``new_index`` maps file indices to
    internal ones (identity for gallery members).
    """
    if isinstance(ref, dict):
        return semiring_from_dict(ref)
    if not isinstance(ref, str):
        raise ParseError("semiring reference must be a string or an object")
    if ref.startswith("gallery:"):
        name = ref.split(":", 1)[1]
        table = gallery_by_name()
        if name not in table:
            raise ParseError(f"unknown gallery semiring {name!r}; known: {', '.join(table)}")
        S = table[name]
        return S, list(S.elements)
    path = Path(ref)
    if base is not None and not path.is_absolute():
        path = Path(base).parent / path
    return semiring_from_dict(_load_json(path), str(path))


def parse_module_file(path):
    """Semimodule from JSON; action rows follow the ring file's own indices."""
    data = _load_json(path)
    where = str(path)
    if not isinstance(data, dict) or "ring" not in data:
        raise ParseError(f"{where}: missing field 'ring'")
    S, new_index = resolve_semiring(data["ring"], base=path)
    k = _field(data, "size", int, where)
    add = _table(data, "add", k, k, where)
    zero = _field(data, "zero", int, where)
    action = _table(data, "action", S.size, k, where)
    rows = [None] * S.size
    for old, row in enumerate(action):
        rows[new_index[old]] = row
    names = _field(data, "elements", list, where, required=False)
    name = _field(data, "name", str, where, required=False)
    return validate_semimodule(S, add, zero, rows, name, names)


def split_top_level(text):
    """Split on commas that are not inside parentheses: '(0,1),(1,0)' -> 2 items."""
    items, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur))
    return [t.strip() for t in items if t.strip()]


def parse_elements(S, text):
    try:
        return [S.index_of(t) for t in split_top_level(text or "")]
    except KeyError as e:
        raise ParseError(e.args[0]) from None


def parse_ideal(S, text):
    """Ideal generated by a comma-separated list of element names."""
    return generate_ideal(S, parse_elements(S, text))


def parse_map(source, target, text):
    f = [None] * source.size
    for item in split_top_level(text):
        if ":" not in item:
            raise ParseError(f"map entry {item!r} is not of the form x:y")
        x, y = _split_pair(item)
        try:
            f[source.index_of(x)] = target.index_of(y)
        except KeyError as e:
            raise ParseError(e.args[0]) from None
    if None in f:
        missing = [source.name_of(i) for i, v in enumerate(f) if v is None]
        raise ParseError(f"map does not assign {', '.join(missing)}")
    return f


def _split_pair(item):
    depth = 0
    for i, ch in enumerate(item):
        depth += ch == "("
        depth -= ch == ")"
        if ch == ":" and depth == 0:
            return item[:i], item[i + 1:]
    raise ParseError(f"cannot split map entry {item!r}")


# ---------------------------------------------------------------------------
# output helpers

def _ideal_json(I):
    return [I.ring.name_of(x) for x in I]


def _emit(args, text, payload):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _table_text(S, t, op):
    w = max(len(S.name_of(x)) for x in S.elements)
    head = op.rjust(w) + " | " + " ".join(S.name_of(x).rjust(w) for x in S.elements)
    lines = [head, "-" * len(head)]
    for a in S.elements:
        lines.append(S.name_of(a).rjust(w) + " | "
                     + " ".join(S.name_of(t[a][b]).rjust(w) for b in S.elements))
    return "\n".join(lines)


def _source(args):
    return resolve_semiring(args.source)[0]


# ---------------------------------------------------------------------------
# commands

def cmd_validate(args):
    S = _source(args)
    text = (f"{S.label}: valid commutative semiring with {S.size} elements\n"
            f"{_table_text(S, S.add, '+')}\n\n{_table_text(S, S.mul, '*')}")
    _emit(args, text, S.to_dict())
    return EXIT_OK


def cmd_gallery(args):
    members = gallery()
    _emit(args, "\n".join(f"{S.name:6} size {S.size}" for S in members),
          [S.to_dict() for S in members])
    return EXIT_OK


def cmd_ideals(args):
    ids = list(enumerate_ideals(_source(args)))
    _emit(args, "\n".join(str(I) for I in ids), [_ideal_json(I) for I in ids])
    return EXIT_OK


def cmd_spec(args):
    primes = spec(_source(args)).primes
    _emit(args, ", ".join(str(P) for P in primes), [_ideal_json(P) for P in primes])
    return EXIT_OK


def cmd_max(args):
    maxs = spec(_source(args)).maximals
    _emit(args, ", ".join(str(m) for m in maxs), [_ideal_json(m) for m in maxs])
    return EXIT_OK


def cmd_classify(args):
    S = _source(args)
    I = parse_ideal(S, args.ideal)
    proper = I.is_proper
    facts = {
        "ideal": _ideal_json(I),
        "proper": proper,
        "prime": is_prime(I),
        "maximal": is_maximal(I),
        "primary": is_primary(I),
        "irreducible": proper and is_irreducible(I),
        "subtractive": is_subtractive(I),
        "cancellation": None if I.is_zero else is_cancellation(I),
        "radical": _ideal_json(radical(I)),
    }
    text = "\n".join(f"{k}: {v}" for k, v in facts.items() if k not in ("ideal", "radical"))
    _emit(args, f"ideal {I}\n{text}\nradical {radical(I)}", facts)
    return EXIT_OK


def cmd_vof(args):
    S = _source(args)
    V = v_of(parse_ideal(S, args.ideal))
    _emit(args, ", ".join(str(P) for P in V) or "(empty)", [_ideal_json(P) for P in V])
    return EXIT_OK


def cmd_radical(args):
    S = _source(args)
    r = radical(parse_ideal(S, args.ideal))
    _emit(args, str(r), _ideal_json(r))
    return EXIT_OK


def cmd_colon(args):
    S = _source(args)
    c = colon(parse_ideal(S, args.ideal), parse_ideal(S, args.by))
    _emit(args, str(c), _ideal_json(c))
    return EXIT_OK


def _hom(args):
    source = resolve_semiring(args.source)[0]
    target = resolve_semiring(args.target)[0]
    return validate_hom(source, target, parse_map(source, target, args.map))


def cmd_hom_check(args):
    f = _hom(args)
    k = kernel(f)
    info = {"valid": True, "injective": f.is_injective, "kernel": _ideal_json(k)}
    _emit(args, f"valid homomorphism {f.source.label} -> {f.target.label}\n"
                f"kernel {k}, injective: {f.is_injective}", info)
    return EXIT_OK


def cmd_contract(args):
    f = _hom(args)
    J = contract(f, parse_ideal(f.target, args.ideal))
    _emit(args, str(J), _ideal_json(J))
    return EXIT_OK


def cmd_extend(args):
    f = _hom(args)
    I = extend(f, parse_ideal(f.source, args.ideal))
    _emit(args, str(I), _ideal_json(I))
    return EXIT_OK


def _localization_payload(L):
    Q = L.quotient
    return {"mcset": [L.base.name_of(u) for u in L.mcset], "quotient": Q.to_dict(),
            "classes": L.class_map(),
            "gamma": {L.base.name_of(a): Q.name_of(L.gamma.map[a]) for a in L.base.elements}}


def _localization_text(L):
    Q = L.quotient
    gamma = ", ".join(f"{L.base.name_of(a)} -> {Q.name_of(L.gamma.map[a])}" for a in L.base.elements)
    return (f"{Q.label}: {Q.size} classes\n{_table_text(Q, Q.add, '+')}\n\n"
            f"{_table_text(Q, Q.mul, '*')}\ngamma: {gamma}")


def cmd_localize(args):
    S = _source(args)
    L = localize(S, mc_set(S, parse_elements(S, args.mcset)))
    _emit(args, _localization_text(L), _localization_payload(L))
    return EXIT_OK


def cmd_localize_at(args):
    S = _source(args)
    P = parse_ideal(S, args.prime)
    L = localize_at_prime(S, P)
    m = localize_ideal(L, P)
    payload = _localization_payload(L)
    payload["maximal_ideal"] = _ideal_json(m)
    _emit(args, _localization_text(L) + f"\nunique maximal ideal: {m}", payload)
    return EXIT_OK


def cmd_decompose(args):
    S = _source(args)
    I = parse_ideal(S, args.ideal)
    if args.kind == "irreducible":
        D = irreducible_decomposition(I)
    else:
        D = primary_decomposition(I)
        if args.minimal:
            D = minimize(D)
    payload = {"ideal": _ideal_json(I), "kind": D.kind, "minimal": D.minimal,
               "components": [_ideal_json(C) for C in D.components]}
    lines = [f"{D.kind} decomposition of {I}:"] + [f"  {C}" for C in D.components]
    if D.kind == "primary":
        payload["radicals"] = [_ideal_json(P) for P in D.radicals()]
        lines.append("radicals: " + ", ".join(str(P) for P in D.radicals()))
        if args.minimal:
            mp = minimal_primes(I)
            payload["minimal_primes"] = [_ideal_json(P) for P in mp]
            lines.append("minimal primes: " + ", ".join(str(P) for P in mp))
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_module_check(args):
    M = parse_module_file(args.module)
    subs = enumerate_submodules(M)
    lg = is_zero_locally(M)
    anns = {M.name_of(x): _ideal_json(annihilator(M, x)) for x in range(M.size)}
    payload = {"module": M.label, "size": M.size, "submodules": len(subs),
               "annihilators": anns, "is_zero": lg.is_zero,
               "zero_at_primes": lg.zero_at_primes, "zero_at_maximals": lg.zero_at_maximals}
    lines = [f"{M.label}: valid semimodule over {M.ring.label} with {M.size} elements",
             f"{len(subs)} submodules"]
    lines += [f"Ann({M.name_of(x)}) = {annihilator(M, x)}" for x in range(M.size)]
    lines.append(f"zero: {lg.is_zero}, zero at every prime: {lg.zero_at_primes}, "
                 f"zero at every maximal: {lg.zero_at_maximals}")
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_check(args):
    if args.source == "gallery:all":
        targets = gallery()
    else:
        targets = [_source(args)]
    selection = args.only if args.only else "all"
    reports = [run_checks(S, selection, seed=args.seed) for S in targets]
    ok = all(r.ok for r in reports)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports] if len(reports) > 1
                         else reports[0].to_dict(), indent=2))
    else:
        for rep in reports:
            print(f"{rep.semiring}: {rep.instances} instances, "
                  f"{sum(len(p.failures) for p in rep.propositions)} failures, {rep.elapsed_ms} ms")
            for p in rep.propositions:
                status = "ok" if not p.failures else "FAIL"
                print(f"  {status:4} {p.id:34} {p.instances:7}")
                for w in p.failures:
                    print(f"       {w}")
            for did, found in rep.diagnostics.items():
                if found:
                    print(f"  note {did}: {len(found)} found, e.g. {found[0]}")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="semiring-ideals", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--size-cap", type=int, default=core.DEFAULT_SIZE_CAP)
    p.add_argument("--seed", type=int, default=None, help="shuffle hom order when checking")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, source=True, help=None):
        q = sub.add_parser(name, help=help)
        if source:
            q.add_argument("source", help="semiring file or gallery:NAME")
        q.set_defaults(fn=fn)
        return q

    add("validate", cmd_validate, help="validate a semiring and print its tables")
    add("gallery", cmd_gallery, source=False, help="list built-in semirings")
    add("ideals", cmd_ideals, help="list all ideals")
    add("spec", cmd_spec, help="list prime ideals")
    add("max", cmd_max, help="list maximal ideals")
    for name, fn in (("classify", cmd_classify), ("vof", cmd_vof), ("radical", cmd_radical)):
        add(name, fn).add_argument("--ideal", required=True, help="generators, e.g. s or 0")
    q = add("colon", cmd_colon)
    q.add_argument("--ideal", required=True)
    q.add_argument("--by", required=True)
    for name, fn in (("hom-check", cmd_hom_check), ("contract", cmd_contract), ("extend", cmd_extend)):
        q = add(name, fn, source=False)
        q.add_argument("--source", required=True)
        q.add_argument("--target", required=True)
        q.add_argument("--map", required=True, help="e.g. 0:0,s:1,1:1")
        if name != "hom-check":
            q.add_argument("--ideal", required=True)
    add("localize", cmd_localize).add_argument("--mcset", required=True)
    add("localize-at", cmd_localize_at).add_argument("--prime", required=True)
    q = add("decompose", cmd_decompose)
    q.add_argument("--ideal", required=True)
    q.add_argument("--kind", choices=("irreducible", "primary"), default="primary")
    q.add_argument("--minimal", action="store_true")
    q = add("module-check", cmd_module_check, source=False)
    q.add_argument("module", help="semimodule JSON file")
    q = add("check", cmd_check, help="verify every proposition exhaustively")
    q.add_argument("--only", nargs="+", choices=sorted(PROPOSITIONS), metavar="ID")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        core.set_size_cap(args.size_cap)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.fn(args)
    except SemiringError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        core.set_size_cap(core.DEFAULT_SIZE_CAP)


if __name__ == "__main__":
    sys.exit(main())
