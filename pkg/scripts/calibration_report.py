"""Show how the derivation and phi signs were pinned down."""

from ck6.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["calibrate"]))
