"""Graded Jacobi over every generator triple in a window of t-exponents."""

import argparse
import sys

from ck6.algebra import default_convention
from ck6.identities import jacobi_sweep, skew_symmetry_failures


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=-1)
    ap.add_argument("--hi", type=int, default=1)
    ap.add_argument("--processes", type=int, default=1)
    args = ap.parse_args()
    conv = default_convention()
    rep = jacobi_sweep((args.lo, args.hi), conv, processes=args.processes)
    print(rep.line())
    for f in rep.failures[:10]:
        print("  ", f)
    skew = skew_symmetry_failures((args.lo, args.hi), conv)
    print(f"skew-symmetry failures: {len(skew)}")
    return 0 if rep.passed and not skew else 1


if __name__ == "__main__":
    sys.exit(main())
