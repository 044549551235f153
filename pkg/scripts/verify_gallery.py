"""Run the full proposition suite on every gallery semiring and tabulate it."""

import argparse
import sys

from semiring_ideals.checks import PROPOSITIONS, run_checks
from semiring_ideals.core import gallery
from semiring_ideals.ideals import enumerate_ideals, is_subtractive_semiring
from semiring_ideals.spectrum import spec


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=None)
    args = ap.parse_args()
    print(f"{'semiring':8} {'size':>4} {'ideals':>6} {'primes':>6} {'max':>4} {'subtr':>5} "
          f"{'instances':>9} {'fail':>4} {'ms':>6}")
    per_prop = dict.fromkeys(PROPOSITIONS, 0)
    bad = 0
    for S in gallery():
        rep = run_checks(S, seed=args.seed)
        sp = spec(S)
        fails = sum(len(p.failures) for p in rep.propositions)
        bad += fails
        for p in rep.propositions:
            per_prop[p.id] += p.instances
        print(f"{S.name:8} {S.size:>4} {len(enumerate_ideals(S)):>6} {len(sp.primes):>6} "
              f"{len(sp.maximals):>4} {'yes' if is_subtractive_semiring(S) else 'no':>5} "
              f"{rep.instances:>9} {fails:>4} {rep.elapsed_ms:>6}")
    print()
    for pid, n in per_prop.items():
        print(f"{pid:34} {n:>8}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
