"""Run the Mod(X) vs Mod(T0(X)) sweep for n = 1..4 and summarize failures.

Usage: python scripts/sweep_report.py [--workers W] [--out report.json]
"""

import argparse
import json
import time
from collections import Counter

from finmod.io import space_to_json
from finmod.verify import sweep_theorem1


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    rows = []
    for n in range(1, 5):
        t = time.perf_counter()
        rep = sweep_theorem1(n, workers=args.workers, witness_cap=1000)
        elapsed = time.perf_counter() - t
        weights = Counter(tuple(sorted(r.weights)) for _, r in rep.fail_witnesses)
        print(f"n={n}: {rep.total_spaces} spaces, {rep.t0_count} T0, iso holds {rep.iso_holds}, "
              f"fails {rep.iso_fails}, invariant violations {rep.invariant_violations} ({elapsed:.2f}s)")
        for w, c in sorted(weights.items()):
            print(f"    failing class-size profile {list(w)}: {c} spaces")
        rows.append({
            "n": n, "total": rep.total_spaces, "t0": rep.t0_count, "holds": rep.iso_holds,
            "fails": rep.iso_fails, "violations": rep.invariant_violations,
            "failures": [{"space": space_to_json(sp), "mod": r.mod_X.order, "aut_t0": r.aut_T0.order}
                         for sp, r in rep.fail_witnesses],
        })
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
