"""Scan b(n) mod 3 for residue classes that vanish, over several step sizes.

Prints candidate progressions step*n + r with every coefficient zero for
n <= n_max. These are observations from a finite scan, not theorems.
"""

import argparse

from qdissect.congruences import scan_progressions
from qdissect.identities import B


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--expr", default=B)
    ap.add_argument("--modulus", type=int, default=3)
    ap.add_argument("--steps", type=int, nargs="+", default=[3, 9, 27, 81])
    ap.add_argument("--nmax", type=int, default=200)
    args = ap.parse_args()

    for step in args.steps:
        found = scan_progressions(args.expr, args.modulus, step, args.nmax)
        shown = ", ".join(str(r) for r in found) if found else "-"
        print(f"step {step:>4}: {len(found):>3} candidate residues  [{shown}]")


if __name__ == "__main__":
    main()
