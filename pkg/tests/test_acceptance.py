"""Acceptance criteria, one test each.

Every test prints a single ``CRITERION n PASS|FAIL: detail`` line and then
asserts the criterion as stated.  Run directly (``python3 tests/test_acceptance.py``)
to get just the twelve lines.
"""

import itertools
import sys
from fractions import Fraction

from ck6.algebra import (RootVector, all_roots, default_convention, f_value, generator_families,
                         grading_check, make_generator, positive_decompositions, root_of)
from ck6.classify import is_finite_type, jordan_one_sided_classify, jordan_unital_families
from ck6.identities import builtin_catalog, jacobi_sweep, module_oracles, run_check, skew_symmetry_failures
from ck6.laurent import ONE, t_pow
from ck6.modules import HWParams
from ck6.supermatrix import superbracket
from ck6.weyl import ExtWeylElement, WeylElement, ext_mul_right_poly, weyl_mul

w = RootVector.w
TOLERANCE = 0  # exact rational arithmetic throughout
JACOBI_BUDGET_S = 300


def _catalog(ids, conv):
    cat = {c.id: c for c in builtin_catalog()}
    return {i: run_check(cat[i], conv) for i in ids}


def _oracle(id_, conv):
    return next(o for o in module_oracles() if o.id == id_).run(conv)


def _failed(results):
    return [r.line() for r in results.values() if not r.passed]


def criterion_1(conv):
    rep = jacobi_sweep((-1, 1), conv)
    skew = skew_symmetry_failures((-1, 1), conv)
    ok = rep.passed and not skew and rep.seconds < JACOBI_BUDGET_S
    return ok, f"{rep.line()}; skew-symmetry failures={len(skew)}"


def criterion_2(conv):
    res = _catalog(["S3-vir-forms", "S3-vir-generator", "S3-vir-triple-asWritten", "S7-vir-alt"], conv)
    bad = _failed(res)
    detail = "all forms agree" if not bad else " | ".join(bad)
    if not res["S3-vir-triple-asWritten"].passed and res["S7-vir-alt"].passed:
        detail += (" | the two printed triples differ by the sign of q_{w2+w1} = -q_{w1+w2},"
                   " so they cannot both equal Vir(a); S3-vir-triple-corrected holds")
    return not bad, detail


def criterion_3(conv):
    res = _catalog(["L3.4-main", "L3.4-main-corrected"], conv)
    main, corr = res["L3.4-main"], res["L3.4-main-corrected"]
    detail = main.line()
    if not main.passed:
        detail += f" | corrected form: {corr.line()}"
    return main.passed and main.instances == 125, detail


def criterion_4(conv):
    families = ("L3.3-", "L3.4-", "S7-", "E-SUBST")
    ids = [c.id for c in builtin_catalog() if c.id.startswith(families)]
    res = _catalog(ids, conv)
    quoted = [i for i in ids if not i.endswith("-corrected") and not i.startswith(("L3.4-main", "L3.3-bracket"))]
    bad = [res[i].line() for i in quoted if not res[i].passed]
    pair = [res["L3.3-bracket-asWritten"].passed, res["L3.3-bracket-corrected"].passed]
    which = "asWritten" if pair == [True, False] else "corrected" if pair == [False, True] else None
    ok = not bad and which is not None
    detail = f"{len(quoted) - len(bad)}/{len(quoted)} quoted lines hold; L3.3-bracket: "
    detail += f"{which} holds" if which else f"pair verdicts {pair}"
    if bad:
        detail += " | failing: " + " | ".join(bad)
    return ok, detail


def criterion_5(conv):
    specs = generator_families([-1, 0, 1])
    mats = [make_generator(s, conv) for s in specs]
    bad = []
    pairs = 0
    for (s, x), (t, y) in itertools.combinations_with_replacement(list(zip(specs, mats)), 2):
        pairs += 1
        if not grading_check(superbracket(x, y), root_of(s) + root_of(t), conv):
            bad.append(f"{s.pretty()} {t.pretty()}")
    lattice = [RootVector(c) for c in itertools.product(range(-2, 3), repeat=4)]
    additive = all(f_value(u + v) == f_value(u) + f_value(v) for u in lattice[::37] for v in lattice[::41])
    central = f_value(w(1) + w(2) + w(3) + w(4)) == 0
    nonzero = all(f_value(r) != 0 for r in all_roots())
    ok = not bad and additive and central and nonzero
    return ok, (f"{pairs} pairs, {len(bad)} grading failures; f additive={additive}, "
                f"f(w1+w2+w3+w4)=0 {central}, f nonzero on all {len(all_roots())} roots {nonzero}")


def criterion_6(conv):
    fmt = lambda r: sorted(tuple(sorted(str(x) for x in d)) for d in positive_decompositions(r))
    expected = {
        w(3) - w(2): [], w(1) + w(4): [], w(2) - w(4): [],
        w(1) + w(2): [("w1+w4", "w2-w4")],
        w(3) - w(4): [("w2-w4", "w3-w2")],
        w(1) + w(3): sorted([("w1+w2", "w3-w2"), ("w1+w4", "w2-w4", "w3-w2"), ("w1+w4", "w3-w4")]),
    }
    diffs = []
    for r, want in expected.items():
        got = fmt(r)
        if got != want:
            extra = [d for d in got if d not in want]
            missing = [d for d in want if d not in got]
            diffs.append(f"{r}: extra {extra} missing {missing}")
    return not diffs, "list reproduced" if not diffs else "; ".join(diffs)


def criterion_7(conv):
    law, params = _oracle("MOD-column-law", conv), _oracle("MOD-column-params", conv)
    ok = law.passed and params.passed
    return ok, f"module law on {law.instances} samples {'holds' if law.passed else 'FAILS'}; {params.residual}"


def criterion_8(conv):
    r = _oracle("MOD-quotient", conv)
    return r.passed, f"{r.instances} grid points at depth 8" + ("" if r.passed else f": {r.residual}")


def criterion_9(conv):
    r = _oracle("MOD-tensor", conv)
    return r.passed, f"{r.instances} grid points at depth 8" + ("" if r.passed else f": {r.residual}")


def _transcription(a1, a2, beta):
    return a1 >= 2 or (a1 == 1 and a2 == 0 and beta == -1)


def criterion_10(conv):
    canonical = [((2, 0, 0), 7, -1, True), ((1, 0, 5), -1, 3, True), ((1, 1, 0), -1, 0, False),
                 ((1, 0, 0), 0, 0, False), ((0, 3, 1), 5, 0, False)]
    bad = [c for c in canonical if is_finite_type(HWParams(c[0], c[1], c[2])).finite != c[3]]
    grid = list(itertools.product(range(4), range(4), range(4), (-2, -1, 0, 1)))
    agree = sum(is_finite_type(HWParams((a1, a2, a3), b, 0)).finite == _transcription(a1, a2, b)
                for a1, a2, a3, b in grid)
    ok = not bad and agree == len(grid)
    return ok, f"canonical {len(canonical) - len(bad)}/{len(canonical)}; grid {agree}/{len(grid)} agree"


def criterion_11(conv):
    fams = jordan_unital_families()
    shape = [(f.weight, f.beta) for f in fams] == [(2 * w(1), None), (w(1) - w(4), -1)]
    finite = all(is_finite_type(f.sample(alpha=Fraction(1, 3), beta=2)).finite for f in fams)
    one_sided = [jordan_one_sided_classify(n, 1) for n in range(1, 5)]
    expected = ["irreducible"] + ["indecomposable"] * 3
    law = _oracle("MOD-one-sided-law", conv)
    ok = shape and finite and one_sided == expected and law.passed
    return ok, (f"families {', '.join(map(str, fams))}; finite type {finite}; "
                f"dims 1-4 {one_sided}; W-module law on {law.instances} samples {law.passed}")


def criterion_12(conv):
    checked, bad = 0, []
    for gamma in (Fraction(1, 2), Fraction(-1), Fraction(5, 3)):
        for m, n in itertools.product(range(-2, 3), repeat=2):
            x = ExtWeylElement.power(gamma, depth=8, sign=conv.derivation_sign)
            checked += 1
            if ext_mul_right_poly(ext_mul_right_poly(x, t_pow(m)), t_pow(n)) != ext_mul_right_poly(x, t_pow(m + n)):
                bad.append((gamma, m, n))
    s = conv.derivation_sign
    integer_ok = all(
        ext_mul_right_poly(ExtWeylElement.power(g, depth=8, sign=s), t_pow(m)).agrees(
            ExtWeylElement.from_weyl(weyl_mul(WeylElement.d(s, g) if g else WeylElement.coef(ONE, s),
                                              WeylElement.coef(t_pow(m), s)), 8))
        for g in range(4) for m in range(-2, 3))
    ok = not bad and integer_ok
    return ok, f"{checked - len(bad)}/{checked} associativity cases; integer powers match plain Weyl {integer_ok}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


def _line(n, ok, detail):
    return f"CRITERION {n} {'PASS' if ok else 'FAIL'}: {detail}"


def _run(n, conv, capsys):
    ok, detail = CRITERIA[n - 1](conv)
    with capsys.disabled():
        print("\n" + _line(n, ok, detail))
    assert ok, detail


def test_criterion_01_super_jacobi(conv, capsys):
    _run(1, conv, capsys)


def test_criterion_02_vir_identity(conv, capsys):
    _run(2, conv, capsys)


def test_criterion_03_h_minus_vir_identity(conv, capsys):
    _run(3, conv, capsys)


def test_criterion_04_bracket_fact_catalog(conv, capsys):
    _run(4, conv, capsys)


def test_criterion_05_grading(conv, capsys):
    _run(5, conv, capsys)


def test_criterion_06_positive_decompositions(conv, capsys):
    _run(6, conv, capsys)


def test_criterion_07_column_module(conv, capsys):
    _run(7, conv, capsys)


def test_criterion_08_quotient_realization(conv, capsys):
    _run(8, conv, capsys)


def test_criterion_09_tensor_quotient(conv, capsys):
    _run(9, conv, capsys)


def test_criterion_10_finite_type_table(conv, capsys):
    _run(10, conv, capsys)


def test_criterion_11_jordan_classification(conv, capsys):
    _run(11, conv, capsys)


def test_criterion_12_extended_weyl(conv, capsys):
    _run(12, conv, capsys)


if __name__ == "__main__":
    conv = default_convention()
    results = [CRITERIA[i](conv) for i in range(len(CRITERIA))]
    for i, (ok, detail) in enumerate(results, 1):
        print(_line(i, ok, detail))
    sys.exit(0 if all(ok for ok, _ in results) else 1)
