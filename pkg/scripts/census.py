"""Print class counts for every predicate and equivalence over GF(2), n = 1..4."""

import argparse
import json
import time

from char2forms import oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--json", action="store_true", help="emit one JSON census per line")
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        for eq in oracle.EQUIVALENCES:
            for pred in oracle.PREDICATES:
                t0 = time.perf_counter()
                c = oracle.enumerate_classes(n, pred, eq)
                dt = time.perf_counter() - t0
                if args.json:
                    print(json.dumps(c.as_dict()))
                else:
                    print(f"n={n} {eq:<12} {pred:<14} classes={c.count:<3} sizes={list(c.orbit_sizes)}  [{dt:.2f}s]")


if __name__ == "__main__":
    main()
