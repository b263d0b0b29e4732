"""Exact Laurent polynomials in one variable ``t`` over the rationals.

Coefficients are kept as Python ``int`` or :class:`fractions.Fraction`; both
are exact and compare/hash consistently, and staying with ``int`` whenever
possible keeps the hot loops of the matrix code cheap.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def as_scalar(value) -> Scalar:
    """Coerce ``value`` to an exact rational, normalising integral Fractions to int."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return as_scalar(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return as_scalar(Fraction(value.strip()))
    raise TypeError(f"not an exact rational: {value!r}")


def format_scalar(c: Scalar) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    """Finite sum ``sum c_m t^m`` with ``m`` ranging over the integers.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c = {}
        if coeffs:
            for m, v in coeffs.items():
                if v:
                    c[int(m)] = as_scalar(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        # c must already be normalised
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, m: int, c: Scalar = 1) -> "LaurentPoly":
        return cls._raw({m: as_scalar(c)}) if c else ZERO

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls.monomial(0, c)

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, str):
            return parse_laurent(value)
        return cls.const(as_scalar(value))

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def coefficient(self, m: int) -> Scalar:
        return self._c.get(m, 0)

    def support(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._c.get(0, 0)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.const(other)
            else:
                return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for m, v in other._c.items():
            s = c.get(m, 0) + v
            if s:
                c[m] = s
            else:
                c.pop(m, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -v for m, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            a, b = self._c, other._c
            if not a or not b:
                return ZERO
            if len(a) == 1 and len(b) == 1:
                (m, u), = a.items()
                (n, v), = b.items()
                return LaurentPoly._raw({m + n: u * v})
            c: dict = {}
            for m, u in a.items():
                for n, v in b.items():
                    k = m + n
                    s = c.get(k, 0) + u * v
                    if s:
                        c[k] = s
                    else:
                        c.pop(k, None)
            return LaurentPoly._raw(c)
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return LaurentPoly._raw({m: as_scalar(v * other) for m, v in self._c.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible in R")
            (m, u), = self._c.items()
            return LaurentPoly._raw({m * n: as_scalar(Fraction(1) / Fraction(u) ** (-n))})
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def derive(self) -> "LaurentPoly":
        """Ordinary derivative d/dt."""
        return LaurentPoly._raw({m - 1: m * v for m, v in self._c.items() if m})

    def derivation(self, sign: int = 1) -> "LaurentPoly":
        """The derivation with ``t -> sign``; used by the Weyl algebra layer."""
        p = self.derive()
        return p if sign == 1 else -p

    def substitute_power(self, k: int) -> "LaurentPoly":
        """``p(t^k)``."""
        return LaurentPoly._raw({m * k: v for m, v in self._c.items()})

    # -- text -------------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for m in sorted(self._c, reverse=True):
            v = Fraction(self._c[m])
            sign = "-" if v < 0 else "+"
            v = abs(v)
            if m == 0:
                body = format_scalar(v)
            else:
                mono = "t" if m == 1 else f"t^{m}"
                body = mono if v == 1 else f"{format_scalar(v)}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
T = LaurentPoly._raw({1: 1})


def t_pow(m: int, c: Scalar = 1) -> LaurentPoly:
    return LaurentPoly.monomial(m, c)


def lsum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ZERO
    for p in polys:
        out = out + p
    return out


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?
        (?P<t>t(?:\s*\^\s*(?P<exp>[+-]?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse ``3t^2 - 1/2t^-1`` style text (also accepts ``3*t^2``)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    out: dict[int, Scalar] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or not (m.group("coef") or m.group("t")):
            raise ValueError(f"cannot parse polynomial {text!r} at column {pos + 1}")
        if not first and not m.group("sign"):
            raise ValueError(f"missing '+' or '-' in {text!r} at column {pos + 1}")
        first = False
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        e = 0
        if m.group("t"):
            e = int(m.group("exp")) if m.group("exp") is not None else 1
        out[e] = out.get(e, 0) + c
        pos = m.end()
    return LaurentPoly(out)
