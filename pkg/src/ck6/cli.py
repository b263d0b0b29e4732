"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import algebra
from .algebra import (GeneratorSpec, NotInSpan, all_roots, decompose, default_convention, describe,
                      f_value, grading_check, homogeneous_root, parse_root, positive_decompositions,
                      root_parity)
from .classify import is_finite_type
from .identities import all_check_ids, annotated_lines, run_selected
from .modules import HWParams
from .parser import ParseError, evaluate, parse


class UsageError(Exception):
    pass


def _alternate(specs: list[GeneratorSpec]) -> str | None:
    """The same element with every ``q_{w_i+w_j}`` written as ``-q_{w_j+w_i}``."""
    if not any(s.kind == "Q" and s.positive for s in specs):
        return None
    parts = []
    for s in specs:
        if s.kind == "Q" and s.positive:
            flipped = GeneratorSpec("Q", s.j, s.i, s.coeff, True)
            parts.append(("-", flipped.pretty()))
        else:
            parts.append(("+", s.pretty()))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, name in parts[1:]:
        text += f" {sign} {name}"
    return text


def cmd_bracket(args, out) -> int:
    conv = default_convention()
    try:
        x = evaluate(parse(args.expr), conv=conv)
    except ParseError as e:
        raise UsageError(str(e)) from None
    except ValueError as e:
        raise UsageError(f"semantic error: {e}") from None
    print(str(x), file=out)
    if x.is_zero():
        print("= 0", file=out)
        return 0
    print(f"= {describe(x, conv)}", file=out)
    try:
        alt = _alternate(decompose(x, conv))
    except NotInSpan:
        alt = None
    if alt:
        print(f"= {alt}", file=out)
    root = homogeneous_root(x)
    if root is not None and grading_check(x, root, conv):
        print(f"root: {root}", file=out)
    print(f"parity: {x.parity.name.lower()}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    try:
        results = run_selected(args.selection)
    except KeyError:
        raise UsageError(f"no check matches {args.selection!r}; known ids: "
                         + ", ".join(all_check_ids())) from None
    for line in annotated_lines(results):
        print(line, file=out)
    return 0 if all(r.passed for r in results) else 1


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def cmd_classify(args, out) -> int:
    try:
        labels = tuple(int(x) for x in args.labels.split(","))
    except ValueError:
        raise UsageError(f"labels must be three comma-separated integers: {args.labels!r}") from None
    if len(labels) != 3:
        raise UsageError("labels must be three comma-separated integers")
    p = HWParams(labels, _rational(args.beta), _rational(args.alpha))
    print(is_finite_type(p).line(), file=out)
    return 0


def cmd_roots(args, out) -> int:
    roots = sorted(all_roots(), key=lambda r: (-f_value(r), str(r)))
    for r in roots:
        sign = "positive" if f_value(r) > 0 else "negative"
        print(f"{str(r):<8} {root_parity(r).name.lower():<4} f={f_value(r):+d} {sign}", file=out)
    return 0


def cmd_decompose(args, out) -> int:
    try:
        r = parse_root(args.root)
        root_parity(r)
    except ValueError as e:
        raise UsageError(str(e)) from None
    target = r if f_value(r) > 0 else -r
    if target != r:
        print(f"{r} is negative; decomposing -({r}) = {target}", file=out)
    decs = positive_decompositions(target)
    if not decs:
        print(f"{target}: no decompositions", file=out)
    for d in decs:
        print(f"{target} = " + " + ".join(f"({x})" for x in d), file=out)
    return 0


def cmd_calibrate(args, out) -> int:
    from .calibration import calibrate
    from .modules import column_cartan_variants, nil_twist_sign

    rep = calibrate()
    for line in rep.lines():
        print(line, file=out)
    print(f"d(v) = {nil_twist_sign(rep.convention):+d} * alpha * v", file=out)
    for k, v in column_cartan_variants(rep.convention).items():
        print(f"column Cartan action {k}: {'consistent' if v else 'inconsistent'}", file=out)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ck6", description="Computations in the CK6 Lie conformal superalgebra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    b = sub.add_parser("bracket", help="evaluate an expression")
    b.add_argument("expr")
    b.set_defaults(fn=cmd_bracket)
    v = sub.add_parser("verify", help="run identity checks matching a glob ('all' for every check)")
    v.add_argument("selection")
    v.set_defaults(fn=cmd_verify)
    c = sub.add_parser("classify", help="finite-type verdict for labels a1,a2,a3")
    c.add_argument("labels")
    c.add_argument("--beta", required=True)
    c.add_argument("--alpha", default="0")
    c.set_defaults(fn=cmd_classify)
    r = sub.add_parser("roots", help="list the roots with parity and grading")
    r.set_defaults(fn=cmd_roots)
    d = sub.add_parser("decompose", help="decompositions of a root into positive roots")
    d.add_argument("root")
    d.set_defaults(fn=cmd_decompose)
    k = sub.add_parser("calibrate", help="show how the sign conventions were chosen")
    k.set_defaults(fn=cmd_calibrate)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args, out)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
