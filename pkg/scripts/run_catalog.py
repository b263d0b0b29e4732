"""Run the identity catalog and module oracles, then summarize the variant pairs."""

import argparse
import sys

from ck6.identities import annotated_lines, run_selected, variant_summary


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("pattern", nargs="?", default="all")
    args = ap.parse_args()
    results = run_selected(args.pattern)
    for line in annotated_lines(results):
        print(line)
    print()
    for line in variant_summary(results):
        print(line)
    passed = sum(r.passed for r in results)
    print(f"\n{passed}/{len(results)} checks hold")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
