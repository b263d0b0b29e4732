"""Self-certifying choice of the two sign conventions.

The derivation sign is fixed by requiring the column action
``a . b = ab``, ``d . b = -b'`` of W on R to be a module action.  The phi
sign is then chosen among the two labelings of the ideals of K4 by checking
quoted bracket identities; the identities linear in phi do not discriminate,
so the Virasoro triple bracket is included as the tie-breaker.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .laurent import ONE, LaurentPoly, t_pow
from .weyl import WeylElement, weyl_mul

SAMPLE_MONOMIALS = (-2, -1, 0, 1, 3)


def weyl_on_column(w: WeylElement, b: LaurentPoly) -> LaurentPoly:
    """``(sum a_i d^i) . b = sum a_i (-d/dt)^i b``."""
    out = LaurentPoly()
    for i, a in w.items():
        x = b
        for _ in range(i):
            x = -x.derive()
        out = out + a * x
    return out


def column_law_holds(sign: int) -> bool:
    """Is ``(xy).b == x.(y.b)`` on a sample of W and R?"""
    sample = [WeylElement.coef(t_pow(m), sign) for m in (-1, 2)]
    sample += [WeylElement.d(sign), WeylElement.d(sign, 2, t_pow(1))]
    for x, y in itertools.product(sample, repeat=2):
        for m in SAMPLE_MONOMIALS:
            b = t_pow(m)
            if weyl_on_column(weyl_mul(x, y), b) != weyl_on_column(x, weyl_on_column(y, b)):
                return False
    return True


@dataclass
class CalibrationReport:
    convention: object
    derivation_results: dict = field(default_factory=dict)
    phi_results: dict = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = []
        for s, ok in sorted(self.derivation_results.items()):
            out.append(f"derivation d(t) = {s:+d}: column law {'holds' if ok else 'fails'}")
        for p, checks in sorted(self.phi_results.items()):
            txt = ", ".join(f"{k} {'ok' if v else 'FAIL'}" for k, v in checks.items())
            out.append(f"phi sign {p:+d}: {txt}")
        c = self.convention
        out.append(f"chosen: derivation_sign={c.derivation_sign:+d} phi_sign={c.phi_sign:+d}")
        return out


def phi_checks(conv) -> dict:
    from .algebra import E, H, Q, VIR, make_generator
    from .supermatrix import superbracket

    g = lambda s: make_generator(s, conv)
    out = {}
    out["[e_{w3-w4}, q_{w1+w4}] = -q_{w3+w1}"] = (
        superbracket(g(E(3, 4)), g(Q(1, 4))) == -g(Q(3, 1)))
    ok = True
    for m in SAMPLE_MONOMIALS:
        b = t_pow(m)
        ok &= superbracket(g(Q(1, 4)), g(Q(-1, -4, b))) == g(H(1, 4, b))
    out["[q_{w1+w4}, q_{-w1-w4}(b)] = h_{w1-w4}(b)"] = ok
    ok = True
    for m in SAMPLE_MONOMIALS:
        a = t_pow(m)
        x = superbracket(superbracket(g(E(3, 1, a)), g(Q(1, 4))), g(Q(1, 2)))
        ok &= x == g(VIR(a))
    out["[[e_{w3-w1}(a), q_{w1+w4}], q_{w1+w2}] = Vir(a)"] = ok
    # parity closure: every q+ with q- lands in the even part
    from .supermatrix import Parity
    closed = True
    for i, j in itertools.combinations(range(1, 5), 2):
        for k, l in itertools.combinations_with_replacement(range(1, 5), 2):
            closed &= superbracket(g(Q(i, j)), g(Q(-k, -l))).parity == Parity.EVEN
    out["parity closure of q-brackets"] = closed
    return out


def calibrate() -> CalibrationReport:
    from .algebra import Convention

    deriv = {s: column_law_holds(s) for s in (1, -1)}
    good = [s for s, ok in deriv.items() if ok]
    if len(good) != 1:
        raise RuntimeError(f"derivation sign calibration is ambiguous: {deriv}")
    s = good[0]
    phis = {p: phi_checks(Convention(s, p)) for p in (1, -1)}
    winners = [p for p, checks in phis.items() if all(checks.values())]
    if len(winners) != 1:
        raise RuntimeError(f"phi sign calibration is ambiguous: {phis}")
    return CalibrationReport(Convention(s, winners[0]), deriv, phis)
