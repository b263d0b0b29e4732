"""Mechanical verification of bracket identities over monomial windows.

Identities are written in the text syntax of :mod:`ck6.parser` with the
coefficient parameters ``a, b, c``.  Every identity checked here is linear in
each parameter, so running over all monomials ``t^m`` of a window verifies it
for every Laurent polynomial supported in that window.
"""

from __future__ import annotations

import fnmatch
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebra import (Convention, decompose, default_convention, describe, generator_families,
                      generator_parity, make_generator, vir_display_matrix, vir_matrix)
from .laurent import LaurentPoly, t_pow
from .parser import ParseError, evaluate, parameters, parse, parse_poly
from .supermatrix import Parity, SuperMatrix, superbracket

PARAMS = "abc"


@dataclass
class IdentityCheck:
    """``lhs = rhs`` (or ``lhs`` in the span of ``span``) for monomial parameters.

    ``lhs``/``rhs`` are expression strings; the special rhs values
    ``"@vir-explicit(P)"`` and ``"@vir-display(P)"`` stand for the two displayed
    Vir matrices with coefficient ``P``.
    """

    id: str
    lhs: str
    rhs: str = "0"
    window: dict = field(default_factory=dict)
    span: Optional[tuple] = None  # (kind, i, j) of an allowed generator family
    note: str = ""

    def __post_init__(self):
        self._lhs = _compile(self.lhs)
        self._rhs = None if self.rhs == "0" else _compile(self.rhs)
        used = _used(self._lhs) | (_used(self._rhs) if self._rhs else set())
        missing = used - set(self.window)
        if missing:
            raise ParseError(f"{self.id}: undeclared parameters {sorted(missing)}")
        for name, (lo, hi) in self.window.items():
            if lo > hi:
                raise ValueError(f"{self.id}: empty window for {name}")

    def assignments(self):
        names = sorted(self.window)
        ranges = [range(self.window[n][0], self.window[n][1] + 1) for n in names]
        for ms in itertools.product(*ranges):
            yield dict(zip(names, ms))

    def evaluate(self, ms: dict, conv=None) -> SuperMatrix:
        """``lhs - rhs`` at ``a = t^ms['a']`` etc. (just ``lhs`` for span checks)."""
        env = {k: t_pow(m) for k, m in ms.items()}
        left = self._lhs(env, conv)
        if self._rhs is None:
            return left
        right = self._rhs(env, conv)
        if left.is_zero():
            return -right
        return left - right


_SPECIAL = {"@vir-explicit": vir_matrix, "@vir-display": vir_display_matrix}


def _compile(text: str) -> Callable:
    s = text.strip()
    for key, fn in _SPECIAL.items():
        if s.startswith(key + "(") and s.endswith(")"):
            poly = parse_poly(s[len(key) + 1:-1], PARAMS)

            def special(env, conv, poly=poly, fn=fn):
                return fn(poly.eval(env), conv)

            special.params = _poly_params(poly)
            return special
    node = parse(s, PARAMS)

    def run(env, conv, node=node):
        return evaluate(node, env, conv)

    run.params = parameters(node)
    return run


def _poly_params(poly) -> set:
    from .parser import _params_of

    return _params_of(poly)


def _used(fn) -> set:
    return set(getattr(fn, "params", set()))


@dataclass
class CheckResult:
    id: str
    passed: bool
    instances: int
    counterexample: Optional[dict] = None
    residual: str = ""

    def line(self) -> str:
        if self.passed:
            return f"{self.id} PASS {self.instances} instances"
        ms = " ".join(f"{k}=t^{v}" for k, v in sorted(self.counterexample.items()))
        where = f"at {ms}: " if ms else ""
        return f"{self.id} FAIL {where}{self.residual}"


def _in_span(x: SuperMatrix, span: tuple, conv) -> bool:
    if x.is_zero():
        return True
    from .algebra import NotInSpan

    try:
        specs = decompose(x, conv)
    except NotInSpan:
        return False
    kind, i, j = span
    return all((s.kind, s.i, s.j) == (kind, i, j) for s in specs)


def run_check(check: IdentityCheck, conv: Convention | None = None) -> CheckResult:
    """Evaluate every assignment in lexicographic order; stop at the first failure."""
    conv = conv or default_convention()
    n = 0
    for ms in check.assignments():
        n += 1
        x = check.evaluate(ms, conv)
        ok = _in_span(x, check.span, conv) if check.span else x.is_zero()
        if not ok:
            if check.span:
                residual = f"{describe(x, conv)} is outside the required span"
            else:
                residual = f"lhs - rhs = {describe(x, conv)}"
            return CheckResult(check.id, False, n, ms, residual)
    return CheckResult(check.id, True, n)


W2 = (-2, 2)
W3 = (-3, 3)


def builtin_catalog() -> list[IdentityCheck]:
    """Quoted identities; ids start with the location they come from."""
    C = IdentityCheck
    a, ab, abc = {"a": W3}, {"a": W2, "b": W2}, {"a": W2, "b": W2, "c": W2}
    b = {"b": W3}
    x = "[q(+1,+4), e(2,4; a)]"
    return [
        # construction of Vir
        C("S3-vir-forms", "@vir-display(a)", "@vir-explicit(a)", a,
          note="the two displayed forms of Vir(a) agree"),
        C("S3-vir-generator", "vir(a)", "@vir-explicit(a)", a),
        C("S3-vir-triple-asWritten", "[[e(4,1; a), q(+3,+1)], q(+2,+1)]", "@vir-explicit(a)", a,
          note="as printed; the ordered q_{w2+w1} = -q_{w1+w2} makes this -Vir(a)"),
        C("S3-vir-triple-corrected", "[[e(4,1; a), q(+3,+1)], q(+1,+2)]", "@vir-explicit(a)", a),
        C("S3-vir-hom", "[vir(a), vir(b)]", "vir(a'*b - a*b')", ab,
          note="ad -> Vir(a) is a homomorphism; [ad, bd] = (a'b - ab')d"),
        C("S3-vir-unit", "vir(1)", "central(1)"),
        # the computation of the gamma scalar
        C("L3.3-e34-qm13", "[e(3,4; b), q(-1,-3)]", "-q(-1,-4; b)", b),
        C("L3.3-qm14-e42", "[q(-1,-4; b), e(4,2; 1)]", "q(-1,-2; b)", b),
        C("L3.3-q14-qm12", "[q(+1,+4), q(-1,-2)]", "-e(4,2; 1)"),
        C("L3.3-e34-h34-asWritten", "[e(3,4; b), [q(+1,+4), q(-1,-3)]]", "h(3,4; b)", b,
          note="as printed"),
        C("L3.3-e34-h34-corrected", "[e(3,4; b), [q(+1,+4), q(-1,-3)]]", "-h(3,4; b)", b,
          note="[q_{w1+w4}, q_{-w1-w3}] = -e_{w4-w3}"),
        C("L3.3-q14-e34", "[q(+1,+4), e(3,4; 1)]", "q(+3,+1)"),
        C("L3.3-X-q31-span", f"[{x}, q(+3,+1)]", "0", a, span=("E", 1, 4)),
        C("L3.3-e14-chain-zero", "[[e(1,4; c), q(-1,-2)], q(-1,-4)]", "0", {"c": W3}),
        C("L3.3-XY", f"[{x}, q(-1,-2)]", "h(2,1; a)", a),
        C("L3.3-XZ", f"[{x}, q(-1,-3)]", "e(2,3; a)", a),
        C("L3.3-bracket-asWritten", f"[[{x}, q(-1,-2)], q(-1,-3)]", "q(-1,-3; a)", a),
        C("L3.3-bracket-corrected", f"[[{x}, q(-1,-2)], q(-1,-3)]", "q(-2,-3; a)", a),
        C("L3.3-ptilde", "[q(+2,+1), [[q(+3,+1), q(-1,-2)], q(-1,-3)]]", "-h(2,1; 1)"),
        C("L3.3-q21-qm12", "[q(+2,+1), q(-1,-2)]", "h(2,1; 1)"),
        C("L3.3-q31-qm13", "[q(+3,+1), q(-1,-3)]", "h(3,1; 1)"),
        # the h(ab'c) - Vir(abc) identity and the steps of its derivation
        C("L3.4-main", "[[e(4,1; a), [q(+1,+4), e(3,4; c)]], [q(+1,+4), e(2,4; b)]]",
          "h(1,4; a*b'*c) - vir(a*b*c)", abc, note="as printed, ' the ordinary t-derivative"),
        C("L3.4-main-corrected", "[[e(4,1; a), [q(+1,+4), e(3,4; c)]], [q(+1,+4), e(2,4; b)]]",
          "-h(1,4; a*b'*c) - vir(a*b*c)", abc,
          note="the h-term carries [d, b] = -b' under the calibrated derivation"),
        C("L3.4-e41-q14", "[e(4,1; a), q(+1,+4)]", "0", a),
        C("L3.4-e41-e34", "[e(4,1; a), e(3,4; c)]", "-e(3,1; a*c)", {"a": W2, "c": W2}),
        C("E-SUBST", "e(2,4; b)", "-[q(+1,+2), q(-1,-4; b)]", b),
        C("L3.4-e34-q14", "[e(3,4; 1), q(+1,+4)]", "-q(+3,+1)"),
        C("L3.4-q14-qm14", "[q(+1,+4), q(-1,-4; b)]", "h(1,4; b)", b),
        C("L3.4-vir-chain", "[[e(3,1; a), q(+1,+4)], q(+1,+2)]", "vir(a)", a),
        C("L3.4-vir-h-asWritten", "-[vir(a), h(1,4; b)]", "-h(1,4; a*b')", ab, note="as printed"),
        C("L3.4-vir-h-corrected", "-[vir(a), h(1,4; b)]", "h(1,4; a*b')", ab),
        C("L3.4-e31-h14", "[e(3,1; a), h(1,4; b)]", "e(3,1; a*b)", ab),
        C("L3.4-swap", "[[e(3,1; a), q(+1,+2)], q(+1,+4)]", "-[[e(3,1; a), q(+1,+4)], q(+1,+2)]", a),
        # the case <lambda, h_{w1-w3}> = 0
        C("S7-vir-chain-asWritten", "[[e(4,1; a), q(+3,+1)], q(+2,+1)]",
          "-[[e(3,1; a), q(+1,+4)], q(+2,+1)]", a, note="first equality as printed"),
        C("S7-vir-alt", "-[[e(3,1; a), q(+1,+4)], q(+2,+1)]", "vir(a)", a),
        C("S7-e31-halves", "e(3,1; a)", "-1/2*[[e(1,3; a), e(3,1; 1)], e(3,1; 1)]", a),
        C("S7-vir-nested", "[q(+2,+1), [q(+1,+4), e(3,1; a)]]", "vir(a)", a),
    ]


def select(checks: list, pattern: str) -> list:
    """Checks whose id matches the glob; ``all`` selects everything."""
    if pattern in ("all", "*"):
        return list(checks)
    return [c for c in checks if fnmatch.fnmatchcase(c.id, pattern)]


def format_report(results: list[CheckResult]) -> str:
    return "\n".join(r.line() for r in results)


def variant_summary(results: list[CheckResult]) -> list[str]:
    """For every as-written/corrected pair, say which one holds.

    The as-written member is ``<stem>-asWritten``, or plain ``<stem>`` when
    the catalog keeps a fixed id for it.
    """
    by_id = {r.id: r for r in results}
    out = []
    for rid, r in by_id.items():
        if not rid.endswith("-corrected"):
            continue
        stem = rid[: -len("-corrected")]
        first = by_id.get(stem + "-asWritten") or by_id.get(stem)
        if first is None:
            continue
        if first.passed != r.passed:
            which = "asWritten" if first.passed else "corrected"
        else:
            which = "both" if r.passed else "neither"
        out.append((first.id, rid, f"{stem}: {which} holds"))
    return [x[2] for x in out]


def variant_pairs(results: list[CheckResult]) -> dict:
    """``{check id: verdict}`` for both members of every pair."""
    by_id = {r.id: r for r in results}
    notes = {}
    for rid in by_id:
        if rid.endswith("-corrected"):
            stem = rid[: -len("-corrected")]
            first = stem + "-asWritten" if stem + "-asWritten" in by_id else stem
            if first in by_id:
                verdict = [v for v in variant_summary([by_id[first], by_id[rid]])][0]
                notes[first] = notes[rid] = verdict.split(": ", 1)[1]
    return notes


# -- super-Jacobi sweep ---------------------------------------------------------


@dataclass
class JacobiReport:
    window: tuple
    generators: int
    triples: int
    failures: list
    seconds: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"JACOBI {status} window=[{self.window[0]},{self.window[1]}] "
                f"generators={self.generators} triples={self.triples} "
                f"failures={len(self.failures)} time={self.seconds:.1f}s")


def _sgn(p, q) -> int:
    return -1 if (p == Parity.ODD and q == Parity.ODD) else 1


def jacobi_defect(x: SuperMatrix, y: SuperMatrix, z: SuperMatrix, yz=None, xy=None, xz=None):
    """``[x,[y,z]] - [[x,y],z] - (-1)^{|x||y|} [y,[x,z]]``."""
    yz = superbracket(y, z) if yz is None else yz
    xy = superbracket(x, y) if xy is None else xy
    xz = superbracket(x, z) if xz is None else xz
    out = superbracket(x, yz) - superbracket(xy, z)
    t = superbracket(y, xz)
    return out - t if _sgn(x.parity, y.parity) == 1 else out + t


_WORK: dict = {}


def _init_worker(window, conv):
    specs = generator_families(range(window[0], window[1] + 1))
    mats = [make_generator(s, conv) for s in specs]
    _WORK.update(specs=specs, mats=mats, cache={})


def _pair(i, j):
    cache = _WORK["cache"]
    key = (i, j)
    if key not in cache:
        cache[key] = superbracket(_WORK["mats"][i], _WORK["mats"][j])
    return cache[key]


def _sweep_chunk(first_indices):
    mats, specs = _WORK["mats"], _WORK["specs"]
    n = len(mats)
    fails, count = [], 0
    for i in first_indices:
        for j in range(i, n):
            for k in range(j, n):
                count += 1
                d = jacobi_defect(mats[i], mats[j], mats[k],
                                  yz=_pair(j, k), xy=_pair(i, j), xz=_pair(i, k))
                if d:
                    fails.append((str(specs[i]), str(specs[j]), str(specs[k])))
    return count, fails


def jacobi_sweep(window=(0, 0), conv: Convention | None = None, processes: int = 1) -> JacobiReport:
    """Graded Jacobi over all unordered triples (with repetition) of generators.

    Unordered triples suffice because the supercommutator is super
    skew-symmetric, which the suite also checks pairwise.
    """
    conv = conv or default_convention()
    start = time.perf_counter()
    _init_worker(window, conv)
    n = len(_WORK["mats"])
    # interleave so chunks have similar cost
    chunks = [list(range(r, n, max(processes, 1) * 4)) for r in range(max(processes, 1) * 4)]
    total, fails = 0, []
    if processes > 1:
        with ProcessPoolExecutor(processes, initializer=_init_worker,
                                 initargs=(window, conv)) as ex:
            for c, f in ex.map(_sweep_chunk, chunks):
                total += c
                fails += f
    else:
        for ch in chunks:
            c, f = _sweep_chunk(ch)
            total += c
            fails += f
    return JacobiReport(tuple(window), n, total, sorted(fails), time.perf_counter() - start)


def skew_symmetry_failures(window=(0, 0), conv=None) -> list:
    """Pairs violating ``[x, y] = -(-1)^{|x||y|} [y, x]``."""
    conv = conv or default_convention()
    specs = generator_families(range(window[0], window[1] + 1))
    mats = [make_generator(s, conv) for s in specs]
    bad = []
    for i, j in itertools.combinations_with_replacement(range(len(mats)), 2):
        x, y = mats[i], mats[j]
        lhs = superbracket(x, y)
        rhs = superbracket(y, x).scale(-_sgn(x.parity, y.parity))
        if lhs != rhs:
            bad.append((str(specs[i]), str(specs[j])))
    return bad


# -- module oracles ---------------------------------------------------------------


@dataclass
class OracleCheck:
    """A named pass/fail computation that is not a bracket identity."""

    id: str
    run: Callable[[Convention], CheckResult]


def _oracle(id_, fn):
    def run(conv):
        ok, n, detail = fn(conv)
        return CheckResult(id_, ok, n, None if ok else {}, detail)

    return OracleCheck(id_, run)


def _column_law(conv):
    from .algebra import E, Q
    from .modules import ColumnVector, column_action
    from .supermatrix import mat_mul

    gens = [make_generator(s, conv) for m in (-1, 1)
            for s in (E(1, 2, t_pow(m)), E(3, 1, t_pow(m)), Q(-1, -2, t_pow(m)), Q(-3, -3, t_pow(m)),
                      Q(1, 4, t_pow(m)), Q(2, 3), *[s for s in generator_families([m]) if s.kind in ("H", "VIR")][:3])]
    n = 0
    for x, y in itertools.product(gens, repeat=2):
        for k, e in ((0, 1), (5, -2)):
            v = ColumnVector.basis(k, t_pow(e))
            n += 1
            if column_action(mat_mul(x, y), v) != column_action(x, column_action(y, v)):
                return False, n, "module law violated"
    return True, n, ""


def _column_params(conv):
    from .algebra import RootVector
    from .modules import column_identify_params

    got = column_identify_params(conv)
    ok = got == (RootVector.w(1), -1, 0)
    return ok, 1, f"identified (weight, beta, alpha) = ({got[0]}, {got[1]}, {got[2]})"


def _quotient(conv):
    from fractions import Fraction

    from .algebra import VIR
    from .modules import HWParams, quotient_action, v_action

    n = 0
    for beta in (-1, 0, Fraction(1, 2), 2):
        for alpha in (0, 1):
            p = HWParams((0, 0, 0), beta, alpha)
            for m, k in itertools.product(range(-3, 4), repeat=2):
                n += 1
                if quotient_action(beta, alpha, t_pow(m), t_pow(k), 8, conv) != v_action(p, VIR(t_pow(m)), t_pow(k)):
                    return False, n, f"mismatch at beta={beta} alpha={alpha} a=t^{m} b=t^{k}"
    return True, n, ""


def _tensor(conv):
    from .algebra import VIR
    from .modules import HWParams, TwoVarPoly, tensor_quotient_action, v_action

    n = 0
    for b1, b2 in itertools.product((-1, 0, 1), repeat=2):
        for a1, a2 in itertools.product((0, 1), repeat=2):
            p = HWParams((0, 0, 0), b1 + b2, a1 + a2)
            for m, k1, k2 in itertools.product(range(-3, 4), repeat=3):
                n += 1
                b = TwoVarPoly.product(t_pow(k1), t_pow(k2))
                if tensor_quotient_action((b1, a1), (b2, a2), t_pow(m), b, 8, conv) != \
                        v_action(p, VIR(t_pow(m)), t_pow(k1 + k2)):
                    return False, n, f"mismatch at betas=({b1},{b2}) alphas=({a1},{a2})"
    return True, n, ""


def _one_sided(conv):
    from .modules import DModule, JordanBlockModule, one_sided_law_holds
    from .weyl import WeylElement

    s = conv.derivation_sign
    ws = [WeylElement.coef(t_pow(2), s), WeylElement.d(s), WeylElement.d(s, 2, t_pow(-1)),
          WeylElement.coef(t_pow(-1), s) + WeylElement.d(s)]
    mats = [{(0, 0): w} for w in ws] + [{(0, 1): ws[1], (2, 3): ws[2]}, {(1, 0): ws[0], (3, 2): ws[3]}]
    n = 0
    for module in (JordanBlockModule(1, 3), JordanBlockModule(3, -1), DModule.diagonal([1, 2])):
        vec = tuple(1 if i == 0 else 0 for i in range(module.n))
        u = tuple({m: vec} for m in (-1, 0, 2, 1))
        for x, y in itertools.product(mats, repeat=2):
            n += 1
            if not one_sided_law_holds(module, x, y, u):
                return False, n, "W-module law violated"
    return True, n, ""


def module_oracles() -> list[OracleCheck]:
    return [
        _oracle("MOD-column-law", _column_law),
        _oracle("MOD-column-params", _column_params),
        _oracle("MOD-quotient", _quotient),
        _oracle("MOD-tensor", _tensor),
        _oracle("MOD-one-sided-law", _one_sided),
    ]


def all_check_ids() -> list[str]:
    return [c.id for c in builtin_catalog()] + [o.id for o in module_oracles()]


def run_selected(pattern: str, conv: Convention | None = None) -> list[CheckResult]:
    """Run catalog checks and module oracles whose id matches ``pattern``.

    Raises KeyError when nothing matches.
    """
    conv = conv or default_convention()
    items = builtin_catalog() + module_oracles()
    chosen = select(items, pattern)
    if not chosen:
        raise KeyError(pattern)
    out = []
    for c in chosen:
        out.append(run_check(c, conv) if isinstance(c, IdentityCheck) else c.run(conv))
    return out


def annotated_lines(results: list[CheckResult]) -> list[str]:
    """Report lines; paired variants get a note saying which one holds."""
    notes = variant_pairs(results)
    return [r.line() + (f"; variant: {notes[r.id]}" if r.id in notes else "") for r in results]
