"""Concrete module actions.

* ``V(lambda, beta, alpha)``: Laurent polynomials with ``h (x) a`` acting by
  ``<lambda, h> ab`` and ``Vir(a)`` by ``-ab' + beta a'b + alpha ab``;
* the column module ``R^8`` of ``M_8(W)`` (``a.b = ab``, ``d.b = -b'``);
* the realization of ``V(beta, alpha)`` as ``W_beta(R, v, d) / W_{beta-1}``
  over the square-zero extension ``R + Rv`` and its two-variable version for
  tensor products;
* one-sided modules ``N[t, t^-1]^4`` built from a ``C[d]``-module ``N``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import (CARTAN_BASIS, CartanElement, Convention, GeneratorSpec, H, RootVector, VIR,
                      cartan_pairing, decompose, default_convention, make_generator,
                      weight_from_labels)
from .calibration import weyl_on_column
from .laurent import ONE, ZERO, LaurentPoly, Scalar, as_scalar, t_pow
from .supermatrix import SuperMatrix, superbracket
from .weyl import (DEFAULT_DEPTH, ExtWeylElement, WeylElement, ext_commutator_weyl, ext_project)


class CalibrationError(RuntimeError):
    """No sign choice reproduces the expected formula."""


@dataclass(frozen=True)
class HWParams:
    """Labels ``(<l,h_{w1-w3}>, <l,h_{w3-w2}>, <l,h_{w2-w4}>)`` with beta and alpha.

    Labels must be integers; negative ones are accepted so that callers can
    ask whether a weight is dominant.
    """

    labels: tuple
    beta: Scalar = 0
    alpha: Scalar = 0

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(labels) != 3 or not all(isinstance(x, int) and not isinstance(x, bool) for x in labels):
            raise ValueError("labels must be three integers")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "beta", as_scalar(self.beta))
        object.__setattr__(self, "alpha", as_scalar(self.alpha))

    @property
    def dominant(self) -> bool:
        return all(x >= 0 for x in self.labels)

    @property
    def weight(self) -> RootVector:
        return weight_from_labels(self.labels)


def v_action(p: HWParams, actor, b: LaurentPoly) -> LaurentPoly:
    """Action of ``h (x) a`` (a CartanElement or an H spec) or ``Vir(a)`` on ``b``."""
    b = LaurentPoly.coerce(b)
    if isinstance(actor, GeneratorSpec):
        if actor.kind == "VIR":
            a = actor.coeff
            return -(a * b.derive()) + a.derive() * b * p.beta + a * b * p.alpha
        if actor.kind == "H":
            actor = CartanElement.h(actor.i, actor.j, actor.coeff)
        else:
            raise ValueError(f"{actor.kind} does not act on the highest weight space")
    if isinstance(actor, CartanElement):
        return actor.coefficient * b * cartan_pairing(p.weight, actor)
    raise TypeError(f"unsupported actor {actor!r}")


# ---------------------------------------------------------------------------
# Column module
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColumnVector:
    entries: tuple

    def __post_init__(self):
        e = tuple(LaurentPoly.coerce(x) for x in self.entries)
        if len(e) != 8:
            raise ValueError("columns have eight entries")
        object.__setattr__(self, "entries", e)

    @classmethod
    def basis(cls, k: int, b=ONE) -> "ColumnVector":
        """``b`` in slot ``k`` (0-based)."""
        e = [ZERO] * 8
        e[k] = LaurentPoly.coerce(b)
        return cls(tuple(e))

    def __getitem__(self, k):
        return self.entries[k]


def column_action(x: SuperMatrix, v: ColumnVector) -> ColumnVector:
    out = [ZERO] * 8
    for (r, c), w in x.nonzero():
        if v.entries[c]:
            out[r] = out[r] + weyl_on_column(w, v.entries[c])
    return ColumnVector(tuple(out))


def column_cartan_variants(conv: Convention | None = None, window=range(-2, 3)) -> dict:
    """Which displayed Cartan action on ``(b, 0, ..., 0)`` is right?

    ``with-a`` is ``(w_i - w_j | w_1) ab``, ``literal`` is ``(w_i - w_j | w_1) b``.
    A variant is accepted when it agrees with the matrix action and is
    compatible with ``[Vir(c), h (x) a]``.
    """
    conv = conv or default_convention()
    w1 = RootVector.w(1)
    formulas = {
        "with-a": lambda h, b: h.coefficient * b * cartan_pairing(w1, h),
        "literal": lambda h, b: b * cartan_pairing(w1, h),
    }
    verdict = {}
    for name, f in formulas.items():
        ok = True
        for i, j in itertools.permutations(range(1, 5), 2):
            for m, n in itertools.product(window, repeat=2):
                a, b = t_pow(m), t_pow(n)
                h = CartanElement.h(i, j, a)
                got = column_action(make_generator(H(i, j, a), conv), ColumnVector.basis(0, b))[0]
                ok &= got == f(h, b)
        # bracket compatibility on the first slot
        for m, n, k in itertools.product(window, repeat=3):
            a, b, c = t_pow(m), t_pow(n), t_pow(k)
            h = CartanElement.h(1, 2, a)
            vir = lambda y: column_action(make_generator(VIR(c), conv), ColumnVector.basis(0, y))[0]
            comm = vir(f(h, b)) - f(h, vir(b))
            br = superbracket(make_generator(VIR(c), conv), make_generator(H(1, 2, a), conv))
            specs = decompose(br, conv) if br else []
            expect = ZERO
            for s in specs:
                expect = expect + f(CartanElement.h(s.i, s.j, s.coeff), b)
            ok &= comm == expect
        verdict[name] = ok
    return verdict


def column_identify_params(conv: Convention | None = None, window=range(-3, 4)):
    """(highest weight, beta, alpha) of the column module."""
    conv = conv or default_convention()
    e1 = ColumnVector.basis(0)
    coords = []
    for h in CARTAN_BASIS:
        x = column_action(make_generator(H(*_h_indices(h), h.coefficient), conv), e1)
        if any(x.entries[1:]) or not x[0].is_constant():
            raise CalibrationError("first basis column is not a weight vector")
        coords.append(x[0].constant_value())
    weight = RootVector((*coords, 0))
    # Vir(t) on 1 is beta + alpha t under the V(beta, alpha) formula
    y = column_action(make_generator(VIR(t_pow(1)), conv), e1)[0]
    beta, alpha = y.coefficient(0), y.coefficient(1)
    if set(y.support()) - {0, 1}:
        raise CalibrationError("Vir(t) . 1 is not of the form beta + alpha t")
    p = HWParams(labels=_labels(weight), beta=beta, alpha=alpha)
    for m, n in itertools.product(window, repeat=2):
        got = column_action(make_generator(VIR(t_pow(m)), conv), ColumnVector.basis(0, t_pow(n)))
        if any(got.entries[1:]) or got[0] != v_action(p, VIR(t_pow(m)), t_pow(n)):
            raise CalibrationError(f"no consistent (beta, alpha) at a=t^{m}, b=t^{n}")
    return weight, beta, alpha


def _h_indices(h: CartanElement):
    i = h.diag.index(1) + 1
    j = h.diag.index(-1) + 1
    return i, j


def _labels(weight: RootVector):
    from .algebra import labels_of

    return labels_of(weight)


# ---------------------------------------------------------------------------
# Square-zero extension and the filtration quotient
# ---------------------------------------------------------------------------


class NilExt:
    """``p + q v`` with ``v^2 = 0`` and ``d(v) = kappa v`` over any coefficient ring."""

    __slots__ = ("p", "q", "kappa")

    def __init__(self, p, q, kappa: Scalar = 0):
        self.p, self.q, self.kappa = p, q, as_scalar(kappa)

    def _wrap(self, other):
        if isinstance(other, NilExt):
            return other
        return NilExt(other, self.q * 0, self.kappa)

    def __add__(self, other):
        o = self._wrap(other)
        return NilExt(self.p + o.p, self.q + o.q, self.kappa)

    __radd__ = __add__

    def __neg__(self):
        return NilExt(-self.p, -self.q, self.kappa)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NilExt(self.p * other, self.q * other, self.kappa)
        o = self._wrap(other)
        return NilExt(self.p * o.p, self.p * o.q + self.q * o.p, self.kappa)

    __rmul__ = __mul__

    def derivation(self, sign: int):
        return NilExt(self.p.derivation(sign),
                      self.q.derivation(sign) + self.q * self.kappa, self.kappa)

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __eq__(self, other):
        o = self._wrap(other)
        return self.p == o.p and self.q == o.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __str__(self):
        return f"({self.p}) + ({self.q})v"


def _quotient_layer(actor_coef, b_coef, beta, kappa, depth, sign):
    """Coefficient of ``v d^beta`` in ``[a d, b v d^beta]`` modulo ``W_{beta-1}``."""
    zero = b_coef * 0
    y = ExtWeylElement.power(beta, NilExt(zero, b_coef, kappa), depth, sign)
    w = WeylElement.d(sign, 1, NilExt(actor_coef, zero, kappa))
    c = ext_project(ext_commutator_weyl(w, y), Fraction(beta) - 1)
    top = c.coefficient_at(Fraction(beta) + 1)
    if top:
        raise CalibrationError("commutator left W_beta")
    layer = c.coefficient_at(Fraction(beta))
    if not layer:
        return zero
    if layer.p:
        raise CalibrationError("commutator left the v-part")
    return layer.q


def nil_twist_sign(conv: Convention | None = None) -> int:
    """Sign ``s`` with ``d(v) = s alpha v`` that reproduces the V(beta, alpha) formula."""
    return _nil_twist_sign(conv or default_convention())


@lru_cache(maxsize=None)
def _nil_twist_sign(conv: Convention) -> int:
    good = []
    for s in (1, -1):
        ok = True
        for beta, m, n in itertools.product((0, Fraction(1, 2), 2), (-1, 2), (0, 3)):
            p = HWParams((0, 0, 0), beta, 1)
            got = _quotient_layer(t_pow(m), t_pow(n), beta, s, 4, conv.derivation_sign)
            ok &= got == v_action(p, VIR(t_pow(m)), t_pow(n))
        if ok:
            good.append(s)
    if len(good) != 1:
        raise CalibrationError(f"d(v) sign calibration failed: {good}")
    return good[0]


def quotient_action(beta, alpha, actor, b, depth: int = DEFAULT_DEPTH,
                    conv: Convention | None = None, twist: int | None = None) -> LaurentPoly:
    """``Vir(actor)`` on ``b`` computed in ``W_beta(R, v, d) / W_{beta-1}(R, v, d)``.

    The Virasoro element ``a d`` acts by the commutator; left multiplication
    alone would land in ``W_{beta+1}``.
    """
    if depth < 2:
        raise ValueError("need at least two retained layers")
    conv = conv or default_convention()
    twist = nil_twist_sign(conv) if twist is None else twist
    return _quotient_layer(LaurentPoly.coerce(actor), LaurentPoly.coerce(b), beta,
                           twist * as_scalar(alpha), depth, conv.derivation_sign)


# ---------------------------------------------------------------------------
# Two-variable polynomials and tensor products
# ---------------------------------------------------------------------------


class TwoVarPoly:
    """Laurent polynomial in ``t1, t2``; the derivation is ``sign (d/dt1 + d/dt2)``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping | None = None):
        c = {}
        for (m1, m2), v in (coeffs or {}).items():
            if v:
                c[(int(m1), int(m2))] = as_scalar(v)
        self._c = c

    @classmethod
    def from_t1(cls, p: LaurentPoly) -> "TwoVarPoly":
        return cls({(m, 0): v for m, v in p.items()})

    @classmethod
    def from_t2(cls, p: LaurentPoly) -> "TwoVarPoly":
        return cls({(0, m): v for m, v in p.items()})

    @classmethod
    def product(cls, p1: LaurentPoly, p2: LaurentPoly) -> "TwoVarPoly":
        """``p1(t1) p2(t2)``."""
        return cls.from_t1(p1) * cls.from_t2(p2)

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TwoVarPoly({(0, 0): other})
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return TwoVarPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return TwoVarPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TwoVarPoly({k: v * other for k, v in self._c.items()})
        c: dict = {}
        for (a1, a2), u in self._c.items():
            for (b1, b2), v in other._c.items():
                k = (a1 + b1, a2 + b2)
                c[k] = c.get(k, 0) + u * v
        return TwoVarPoly(c)

    __rmul__ = __mul__

    def partial(self, var: int) -> "TwoVarPoly":
        out: dict = {}
        for (m1, m2), v in self._c.items():
            m = (m1, m2)[var - 1]
            if m:
                k = (m1 - 1, m2) if var == 1 else (m1, m2 - 1)
                out[k] = out.get(k, 0) + m * v
        return TwoVarPoly(out)

    def derivation(self, sign: int) -> "TwoVarPoly":
        d = self.partial(1) + self.partial(2)
        return d if sign == 1 else -d

    def diagonal(self) -> LaurentPoly:
        """Image under ``t2 -> t1``, i.e. the class modulo ``(t1 - t2)``."""
        out: dict = {}
        for (m1, m2), v in self._c.items():
            out[m1 + m2] = out.get(m1 + m2, 0) + v
        return LaurentPoly(out)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TwoVarPoly({(0, 0): other})
        return isinstance(other, TwoVarPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{v}*t1^{m1}*t2^{m2}" for (m1, m2), v in sorted(self._c.items()))


T1_MINUS_T2 = TwoVarPoly({(1, 0): 1, (0, 1): -1})


def tensor_quotient_action(p1, p2, actor, b: TwoVarPoly, depth: int = DEFAULT_DEPTH,
                           conv: Convention | None = None, method: str = "realization") -> LaurentPoly:
    """``Vir(actor)`` on ``b`` in ``V(b1,a1) (x) V(b2,a2) / (t1 - t2)``.

    ``realization`` computes in ``W_{b1+b2}(R2, v1 v2, d)`` with
    ``d = -d/dt1 - d/dt2``; ``leibniz`` lets ``Vir(a)`` act factorwise
    (``a(t1)`` on the first factor, ``a(t2)`` on the second).  Both reduce by
    ``t2 -> t1`` at the end.
    """
    conv = conv or default_convention()
    (beta1, alpha1), (beta2, alpha2) = p1, p2
    actor = LaurentPoly.coerce(actor)
    if method == "realization":
        twist = nil_twist_sign(conv)
        kappa = twist * (as_scalar(alpha1) + as_scalar(alpha2))
        res = _quotient_layer(TwoVarPoly.from_t1(actor), b, Fraction(beta1) + Fraction(beta2),
                              kappa, depth, conv.derivation_sign)
        return res.diagonal()
    if method == "leibniz":
        a1, a2 = TwoVarPoly.from_t1(actor), TwoVarPoly.from_t2(actor)
        da1, da2 = a1.partial(1), a2.partial(2)
        res = (-(a1 * b.partial(1)) + da1 * b * as_scalar(beta1) + a1 * b * as_scalar(alpha1)
               - (a2 * b.partial(2)) + da2 * b * as_scalar(beta2) + a2 * b * as_scalar(alpha2))
        return res.diagonal()
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# One-sided modules N[t, t^-1]^4
# ---------------------------------------------------------------------------


class DModule:
    """Finite-dimensional ``C[d]``-module: ``d`` acts by the matrix ``M``."""

    def __init__(self, matrix: Sequence[Sequence]):
        m = tuple(tuple(as_scalar(x) for x in row) for row in matrix)
        n = len(m)
        if n < 1 or any(len(row) != n for row in m):
            raise ValueError("need a nonempty square matrix")
        self.matrix = m
        self.n = n

    def apply(self, vec: tuple) -> tuple:
        return tuple(as_scalar(sum(self.matrix[i][j] * vec[j] for j in range(self.n)))
                     for i in range(self.n))

    @classmethod
    def diagonal(cls, values) -> "DModule":
        values = list(values)
        return cls([[values[i] if i == j else 0 for j in range(len(values))]
                    for i in range(len(values))])


class JordanBlockModule(DModule):
    """``d`` acts by ``alpha I + (nilpotent shift)`` on an ``n``-dimensional space."""

    def __init__(self, n: int, alpha: Scalar = 0):
        if n < 1:
            raise ValueError("dimension must be at least 1")
        self.alpha = as_scalar(alpha)
        super().__init__([[alpha if i == j else (1 if j == i + 1 else 0) for j in range(n)]
                          for i in range(n)])


# A module element is a 4-tuple of {m: vector in N}.


def _vadd(u, v):
    return tuple(as_scalar(a + b) for a, b in zip(u, v))


def _clean_component(comp: dict) -> dict:
    return {m: v for m, v in comp.items() if any(v)}


def _add_components(x: dict, y: dict) -> dict:
    out = dict(x)
    for m, v in y.items():
        out[m] = _vadd(out[m], v) if m in out else v
    return _clean_component(out)


def _d_on_component(comp: dict, module: DModule, sign: int) -> dict:
    """``d (n (x) t^m) = (d n) (x) t^m + n (x) d(t^m)`` with the W-derivation ``d(t) = sign``."""
    out: dict = {}
    for m, vec in comp.items():
        out = _add_components(out, {m: module.apply(vec)})
        if m:
            out = _add_components(out, {m - 1: tuple(as_scalar(sign * m * x) for x in vec)})
    return out


def _poly_on_component(a: LaurentPoly, comp: dict) -> dict:
    out: dict = {}
    for k, c in a.items():
        for m, vec in comp.items():
            out = _add_components(out, {m + k: tuple(as_scalar(c * x) for x in vec)})
    return out


def weyl_on_n(w: WeylElement, comp: dict, module: DModule) -> dict:
    out: dict = {}
    for i, a in w.items():
        x = comp
        for _ in range(i):
            x = _d_on_component(x, module, w.sign)
        out = _add_components(out, _poly_on_component(a, x))
    return out


def one_sided_action(x: Mapping, element: Sequence[dict], module: DModule) -> tuple:
    """A 4x4 matrix ``{(r, c): WeylElement}`` acting on an element of ``N[t, t^-1]^4``."""
    out = [dict() for _ in range(4)]
    for (r, c), w in x.items():
        if element[c]:
            out[r] = _add_components(out[r], weyl_on_n(w, element[c], module))
    return tuple(out)


def one_sided_law_holds(module: DModule, x: Mapping, y: Mapping, element, conv=None) -> bool:
    """``(xy) . u == x . (y . u)`` for 4x4 Weyl matrices ``x, y``."""
    from .weyl import weyl_mul

    xy: dict = {}
    for (i, k), a in x.items():
        for (k2, j), b in y.items():
            if k == k2:
                p = weyl_mul(a, b)
                xy[(i, j)] = xy[(i, j)] + p if (i, j) in xy else p
    lhs = one_sided_action(xy, element, module)
    rhs = one_sided_action(x, one_sided_action(y, element, module), module)
    return lhs == rhs
