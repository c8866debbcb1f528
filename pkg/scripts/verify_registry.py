"""Check every registry entry at one or more orders and print a timing table.

    python scripts/verify_registry.py --orders 200 500 1000
"""

import argparse
import time

from qdissect.congruences import verify_eq_110, verify_family_19, verify_ramanujan_17
from qdissect.identities import registry, verify_identity


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--orders", type=int, nargs="+", default=[500])
    ap.add_argument("--congruence-order", type=int, default=1000)
    args = ap.parse_args()

    print(f"{'id':<12} {'kind':<11} " + " ".join(f"{'N=' + str(n):>14}" for n in args.orders))
    for entry in registry():
        orders = args.orders if entry.modulus is None else [args.congruence_order]
        cells = []
        for n in orders:
            r = verify_identity(entry, n)
            cells.append(f"{r.status} {r.millis:7.1f}ms")
        print(f"{entry.id:<12} {entry.kind:<11} " + " ".join(f"{c:>14}" for c in cells))

    print()
    t0 = time.perf_counter()
    runs = [
        verify_ramanujan_17(1000),
        verify_family_19(0, 30),
        verify_family_19(1, 30),
        verify_family_19(2, 3),
        verify_eq_110(30),
    ]
    for r in runs:
        print(f"{r.name:<15} {r.relation:<34} n<={r.n_max:<5} order {r.order:<6} {r.status}")
    print(f"families: {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
