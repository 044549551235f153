"""Search beyond the gallery for the rarer phenomena the checker can report.

Runs every proposition and diagnostic on all pairwise products of gallery
members and on every semiring of fractions of a gallery member, as long as
the result fits under the size cap. Prints each semiring with its failure
count and any non-empty diagnostic.
"""

import argparse
import time

from semiring_ideals.checks import run_checks
from semiring_ideals.core import direct_product, gallery, size_cap
from semiring_ideals.localization import localize
from semiring_ideals.spectrum import mc_sets


def candidates(max_size):
    seen = set()
    g = gallery()
    for i, A in enumerate(g):
        for B in g[i:]:
            if A.size * B.size <= max_size:
                P = direct_product(A, B)
                if (P.add, P.mul) not in seen:
                    seen.add((P.add, P.mul))
                    yield P
    for S in g:
        for W in mc_sets(S, max_size=S.size):
            Q = localize(S, W).quotient
            if Q.size >= 2 and (Q.add, Q.mul) not in seen:
                seen.add((Q.add, Q.mul))
                yield Q


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=size_cap())
    ap.add_argument("--only", nargs="*", default=["irreducible-not-primary", "no-primary-decomposition",
                                                  "belonging-primes-vary"])
    args = ap.parse_args()
    t0 = time.perf_counter()
    failures = 0
    count = 0
    for S in candidates(args.max_size):
        rep = run_checks(S)
        count += 1
        bad = sum(len(p.failures) for p in rep.propositions)
        failures += bad
        notes = {k: v for k, v in rep.diagnostics.items() if v and k in args.only}
        if bad or notes:
            print(f"{S.label} (size {S.size}): {bad} failures")
            for k, v in notes.items():
                print(f"  {k}: {v[:3]}")
    print(f"{count} semirings, {failures} failures, {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
