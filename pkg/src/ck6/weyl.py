"""The Weyl algebra ``W = sum_i R d^i`` and its extension by formal powers ``d^beta``.

Elements keep their coefficients on the left.  Coefficients may be any exact
commutative ring element providing ``+``, ``*``, ``bool`` and
``derivation(sign)``; in practice :class:`~ck6.laurent.LaurentPoly`, the
two-variable polynomials and the square-zero extensions of
:mod:`ck6.modules`.

The derivation ``d(a)`` of the coefficient ring is fixed per element by
``sign``: with ``sign=+1`` it is ``d/dt`` (so ``d t = t d + 1``), with
``sign=-1`` it is ``-d/dt``.  Elements with different signs never mix.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Mapping

from .laurent import ONE, LaurentPoly, Scalar, as_scalar

DEFAULT_DEPTH = 8


@lru_cache(maxsize=None)
def gbinom(gamma: Fraction, i: int) -> Scalar:
    """Generalized binomial coefficient gamma(gamma-1)...(gamma-i+1)/i!."""
    if i < 0:
        return 0
    num = Fraction(1)
    for k in range(i):
        num *= gamma - k
    return as_scalar(num / factorial(i))


def _iter_derivatives(a, sign: int, n: int):
    """Yield a, d(a), d^2(a), ... up to d^n(a), stopping early at zero."""
    for _ in range(n + 1):
        yield a
        if not a:
            return
        a = a.derivation(sign)


def _acc(out: dict, key, value):
    if not value:
        return
    if key in out:
        s = out[key] + value
        if s:
            out[key] = s
        else:
            del out[key]
    else:
        out[key] = value


class SignMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# WeylElement
# ---------------------------------------------------------------------------


class WeylElement:
    """Finite sum ``sum_i a_i d^i`` over a commutative ring with derivation."""

    __slots__ = ("_t", "sign", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None, sign: int = 1):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        t = {}
        if terms:
            for i, a in terms.items():
                if i < 0:
                    raise ValueError("Weyl elements carry nonnegative powers of d")
                if isinstance(a, (int, Fraction)):
                    a = LaurentPoly.const(a)
                if a:
                    t[int(i)] = a
        self._t = t
        self.sign = sign
        self._hash = None

    @classmethod
    def _raw(cls, t: dict, sign: int) -> "WeylElement":
        w = cls.__new__(cls)
        w._t = t
        w.sign = sign
        w._hash = None
        return w

    @classmethod
    def coef(cls, a, sign: int = 1) -> "WeylElement":
        """The order-zero element ``a``."""
        if isinstance(a, (int, Fraction)):
            a = LaurentPoly.const(a)
        return cls._raw({0: a} if a else {}, sign)

    @classmethod
    def d(cls, sign: int = 1, power: int = 1, coeff=ONE) -> "WeylElement":
        """``coeff * d^power``."""
        return cls._raw({power: coeff} if coeff else {}, sign)

    @classmethod
    def zero(cls, sign: int = 1) -> "WeylElement":
        return cls._raw({}, sign)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def coefficient(self, i: int):
        return self._t.get(i)

    def order(self) -> int:
        """Top power of d; -1 for zero."""
        return max(self._t) if self._t else -1

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            if self._t != other._t:
                return False
            return not self._t or self.sign == other.sign
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def _check(self, other: "WeylElement"):
        if self.sign != other.sign and self._t and other._t:
            raise SignMismatch("Weyl elements built with different derivation signs")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        self._check(other)
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for i, a in other._t.items():
            _acc(t, i, a)
        return WeylElement._raw(t, self.sign)

    def __neg__(self):
        return WeylElement._raw({i: -a for i, a in self._t.items()}, self.sign)

    def __sub__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "WeylElement":
        """Multiply by a scalar or by a coefficient placed on the left."""
        if not c:
            return WeylElement._raw({}, self.sign)
        t = {}
        for i, a in self._t.items():
            _acc(t, i, c * a)
        return WeylElement._raw(t, self.sign)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, WeylElement):
            return weyl_mul(self, other)
        if hasattr(other, "derivation"):
            return weyl_mul(self, WeylElement.coef(other, self.sign))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if hasattr(other, "derivation"):
            return self.scale(other)
        return NotImplemented

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for i in sorted(self._t, reverse=True):
            a = self._t[i]
            sa = str(a)
            if i == 0:
                parts.append(sa)
                continue
            dd = "d" if i == 1 else f"d^{i}"
            if sa == "1":
                parts.append(dd)
            elif sa == "-1":
                parts.append(f"-{dd}")
            else:
                parts.append(f"({sa})*{dd}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"WeylElement({str(self)!r}, sign={self.sign})"


def weyl_mul(x: WeylElement, y: WeylElement) -> WeylElement:
    """Product in W, normal-ordered with coefficients on the left.

    Uses ``d^i b = sum_k C(i,k) d^k(b) d^(i-k)``.
    """
    x._check(y)
    sign = x.sign if x._t else y.sign
    out: dict = {}
    if not x._t or not y._t:
        return WeylElement._raw(out, sign)
    for j, b in y._t.items():
        max_i = max(x._t)
        ders = list(_iter_derivatives(b, sign, max_i))
        for i, a in x._t.items():
            for k in range(min(i, len(ders) - 1) + 1):
                db = ders[k]
                if not db:
                    break
                c = comb(i, k)
                prod = a * db
                if c != 1:
                    prod = prod * c
                _acc(out, i - k + j, prod)
    return WeylElement._raw(out, sign)


def weyl_commutator(x: WeylElement, y: WeylElement) -> WeylElement:
    return weyl_mul(x, y) - weyl_mul(y, x)


# ---------------------------------------------------------------------------
# ExtWeylElement
# ---------------------------------------------------------------------------


class IncompatibleFiltration(ValueError):
    """Raised when two exponents do not differ by an integer."""


def _int_diff(a: Fraction, b: Fraction) -> int:
    diff = Fraction(a) - Fraction(b)
    if diff.denominator != 1:
        raise IncompatibleFiltration(f"exponents {a} and {b} do not differ by an integer")
    return int(diff)


class ExtWeylElement:
    """Truncated formal sum ``a_0 d^beta + a_1 d^(beta-1) + ...``.

    ``tail[i]`` is the coefficient of ``d^(beta-i)``; only shifts
    ``0 <= i < depth`` are retained, i.e. elements are known modulo
    ``d^(beta-depth)``.
    """

    __slots__ = ("base", "tail", "depth", "sign")

    def __init__(self, base, tail: Mapping[int, object] | None = None,
                 depth: int = DEFAULT_DEPTH, sign: int = 1):
        if depth < 1:
            raise ValueError("truncation depth must be positive")
        self.base = Fraction(base)
        self.depth = int(depth)
        self.sign = sign
        t = {}
        for i, a in (tail or {}).items():
            if isinstance(a, (int, Fraction)):
                a = LaurentPoly.const(a)
            if 0 <= i < depth and a:
                t[int(i)] = a
            elif i < 0 and a:
                raise ValueError("tail shifts must be nonnegative")
        self.tail = t

    @classmethod
    def power(cls, beta, coeff=ONE, depth: int = DEFAULT_DEPTH, sign: int = 1):
        """``coeff * d^beta``."""
        return cls(beta, {0: coeff}, depth, sign)

    @classmethod
    def from_weyl(cls, w: WeylElement, depth: int | None = None) -> "ExtWeylElement":
        top = w.order()
        if top < 0:
            return cls(0, {}, depth or DEFAULT_DEPTH, w.sign)
        depth = depth if depth is not None else top + 1
        return cls(top, {top - i: a for i, a in w.items()}, depth, w.sign)

    @property
    def floor(self) -> Fraction:
        """Exponent below which nothing is known."""
        return self.base - self.depth

    def coefficient_at(self, exponent):
        """Coefficient of ``d^exponent`` (None when zero)."""
        k = _int_diff(self.base, exponent)
        if not 0 <= k < self.depth:
            raise ValueError(f"exponent {exponent} outside the retained window")
        return self.tail.get(k)

    def layers(self) -> dict:
        """Map exponent -> coefficient for the nonzero retained layers."""
        return {self.base - i: a for i, a in sorted(self.tail.items())}

    def is_zero(self) -> bool:
        return not self.tail

    def __bool__(self):
        return bool(self.tail)

    def __eq__(self, other):
        if not isinstance(other, ExtWeylElement):
            return NotImplemented
        return (self.base == other.base and self.depth == other.depth
                and self.tail == other.tail)

    def __hash__(self):
        return hash((self.base, self.depth, frozenset(self.tail.items())))

    def agrees(self, other: "ExtWeylElement") -> bool:
        """Equality on the layers retained by both operands."""
        _int_diff(self.base, other.base)
        top = max(self.base, other.base)
        low = max(self.floor, other.floor)
        for k in range(int(top - low)):
            e = top - k
            a = self.tail.get(int(self.base - e)) if e <= self.base else None
            b = other.tail.get(int(other.base - e)) if e <= other.base else None
            if (a or None) != (b or None):
                return False
        return True

    def to_weyl(self) -> WeylElement:
        """Convert to a plain Weyl element when that is exact."""
        b = self.base
        if b.denominator != 1 or b < 0:
            raise ValueError("only nonnegative integer exponents are plain Weyl elements")
        b = int(b)
        if self.depth < b + 1:
            raise ValueError("tail too shallow to reach d^0")
        terms = {}
        for i, a in self.tail.items():
            p = b - i
            if p < 0:
                raise ValueError("negative power of d present")
            terms[p] = a
        return WeylElement(terms, self.sign)

    def _check(self, sign):
        if sign != self.sign:
            raise SignMismatch("operands built with different derivation signs")

    def __add__(self, other):
        if not isinstance(other, ExtWeylElement):
            return NotImplemented
        self._check(other.sign)
        _int_diff(self.base, other.base)
        top = max(self.base, other.base)
        low = max(self.floor, other.floor)
        depth = int(top - low)
        out: dict = {}
        for x in (self, other):
            off = int(top - x.base)
            for i, a in x.tail.items():
                if i + off < depth:
                    _acc(out, i + off, a)
        return ExtWeylElement(top, out, depth, self.sign)

    def __neg__(self):
        return ExtWeylElement(self.base, {i: -a for i, a in self.tail.items()},
                              self.depth, self.sign)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ExtWeylElement":
        return ExtWeylElement(self.base, {i: c * a for i, a in self.tail.items()},
                              self.depth, self.sign)

    def __str__(self):
        if not self.tail:
            return f"0 (mod d^{self.floor})"
        parts = []
        for i, a in sorted(self.tail.items()):
            parts.append(f"({a})*d^({self.base - i})")
        return " + ".join(parts) + f" (mod d^{self.floor})"

    __repr__ = __str__


def ext_mul_right_poly(x: ExtWeylElement, a) -> ExtWeylElement:
    """``x * a`` via ``d^g a = sum_i C(g,i) d^i(a) d^(g-i)``, truncated at x's depth."""
    out: dict = {}
    T = x.depth
    ders = list(_iter_derivatives(a, x.sign, T - 1))
    for i, c in x.tail.items():
        gamma = x.base - i
        for k in range(0, T - i):
            if k >= len(ders) or not ders[k]:
                break
            coef = gbinom(gamma, k)
            if not coef:
                continue
            _acc(out, i + k, (c * ders[k]) * coef)
    return ExtWeylElement(x.base, out, T, x.sign)


def act_left_weyl(w: WeylElement, y: ExtWeylElement) -> ExtWeylElement:
    """``w * y`` for a finite Weyl element ``w``; depth preserved.

    The result is based at ``beta + order(w)``.
    """
    y._check(w.sign) if w else None
    top = w.order()
    if top < 0:
        return ExtWeylElement(y.base, {}, y.depth, y.sign)
    base = y.base + top
    out: dict = {}
    T = y.depth
    for j, b in y.tail.items():
        ders = list(_iter_derivatives(b, y.sign, top))
        for i, a in w.items():
            # a d^i * b d^(beta-j) = sum_k C(i,k) a d^k(b) d^(beta - j + i - k)
            for k in range(min(i, len(ders) - 1) + 1):
                db = ders[k]
                if not db:
                    break
                shift = (top - i) + j + k
                if shift < T:
                    _acc(out, shift, (a * db) * comb(i, k))
    return ExtWeylElement(base, out, T, y.sign)


def ext_commutator_weyl(w: WeylElement, y: ExtWeylElement) -> ExtWeylElement:
    """``[w, y] = w y - y w`` for a first-order Weyl element acting on ``W_beta``."""
    left = act_left_weyl(w, y)
    right = ext_mul_right_weyl(y, w)
    return left - right


def ext_mul_right_weyl(y: ExtWeylElement, w: WeylElement) -> ExtWeylElement:
    """``y * w`` for a finite Weyl element ``w``."""
    top = w.order()
    if top < 0:
        return ExtWeylElement(y.base, {}, y.depth, y.sign)
    acc = None
    for i, a in w.items():
        piece = ext_mul_right_poly(y, a)
        # multiply by d^i on the right: pure exponent shift
        piece = ExtWeylElement(piece.base + i, piece.tail, piece.depth, piece.sign)
        acc = piece if acc is None else acc + piece
    return acc


def ext_project(x: ExtWeylElement, floor) -> ExtWeylElement:
    """Reduce modulo ``W_floor``: drop every layer with exponent <= floor."""
    k = _int_diff(x.base, floor)
    if k < 0:
        raise IncompatibleFiltration("projection floor lies above the base exponent")
    keep = {i: a for i, a in x.tail.items() if i < k}
    return ExtWeylElement(x.base, keep, x.depth, x.sign)
