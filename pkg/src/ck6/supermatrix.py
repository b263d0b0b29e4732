"""8x8 matrices over the Weyl algebra with a Z/2 grading.

Rows and columns 0-3 form the even half, 4-7 the odd half.  Even matrices live
in the two diagonal 4x4 blocks, odd ones in the off-diagonal blocks.

Storage is sparse (only nonzero entries).  The generators of CK6 have at most
a handful of entries, and the Jacobi sweep multiplies hundreds of thousands of
them, so dense storage would dominate the run time.  The dense 8x8 view is
available through :attr:`SuperMatrix.entries`.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from typing import Mapping, Sequence

from .weyl import WeylElement, weyl_mul

N = 8
HALF = 4


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)


class ParityError(ValueError):
    """Entries do not fit the block pattern of the requested parity."""


def _block_parity(r: int, c: int) -> Parity:
    return Parity.EVEN if (r < HALF) == (c < HALF) else Parity.ODD


def infer_parity(entries) -> Parity:
    """Parity of a dense 8x8 array or a sparse ``{(r, c): w}`` mapping.

    The zero matrix is even by convention.
    """
    found = set()
    for (r, c), w in _iter_entries(entries):
        if w:
            found.add(_block_parity(r, c))
    if len(found) > 1:
        raise ParityError("entries occupy both diagonal and off-diagonal blocks")
    return found.pop() if found else Parity.EVEN


def _iter_entries(entries):
    if isinstance(entries, Mapping):
        yield from entries.items()
    else:
        for r, row in enumerate(entries):
            for c, w in enumerate(row):
                yield (r, c), w


class SuperMatrix:
    """A parity-homogeneous 8x8 matrix over W."""

    __slots__ = ("_e", "parity", "sign", "_rows")

    def __init__(self, entries=None, parity: Parity | int | None = None, sign: int = 1):
        e = {}
        for (r, c), w in _iter_entries(entries or {}):
            if not (0 <= r < N and 0 <= c < N):
                raise IndexError(f"entry ({r}, {c}) outside an 8x8 matrix")
            if w:
                if not isinstance(w, WeylElement):
                    raise TypeError("entries must be WeylElement instances")
                if w.sign != sign:
                    raise ValueError("entry derivation sign differs from the matrix sign")
                e[(r, c)] = w
        if parity is None:
            parity = infer_parity(e)
        parity = Parity(parity)
        for (r, c) in e:
            if _block_parity(r, c) != parity:
                raise ParityError(f"entry ({r + 1}, {c + 1}) violates the {parity.name.lower()} block pattern")
        self._e = e
        self.parity = parity
        self.sign = sign
        self._rows = None

    @classmethod
    def _raw(cls, e: dict, parity: Parity, sign: int) -> "SuperMatrix":
        m = cls.__new__(cls)
        m._e = e
        m.parity = parity
        m.sign = sign
        m._rows = None
        return m

    @classmethod
    def zero(cls, parity=Parity.EVEN, sign: int = 1) -> "SuperMatrix":
        return cls._raw({}, Parity(parity), sign)

    @classmethod
    def identity(cls, sign: int = 1) -> "SuperMatrix":
        one = WeylElement.coef(1, sign)
        return cls._raw({(i, i): one for i in range(N)}, Parity.EVEN, sign)

    # -- inspection -------------------------------------------------------

    @property
    def entries(self) -> tuple:
        """Dense 8x8 tuple-of-tuples view."""
        z = WeylElement.zero(self.sign)
        return tuple(tuple(self._e.get((r, c), z) for c in range(N)) for r in range(N))

    def nonzero(self) -> list:
        """Nonzero entries as ``[((r, c), w), ...]`` in row-major order."""
        return sorted(self._e.items())

    def __getitem__(self, rc):
        return self._e.get(tuple(rc), WeylElement.zero(self.sign))

    def is_zero(self) -> bool:
        return not self._e

    def __bool__(self):
        return bool(self._e)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        if self._e != other._e:
            return False
        return not self._e or self.parity == other.parity

    def __hash__(self):
        return hash(frozenset(self._e.items()))

    def _row_index(self):
        if self._rows is None:
            rows: dict = {}
            for (r, c), w in self._e.items():
                rows.setdefault(r, []).append((c, w))
            self._rows = rows
        return self._rows

    # -- linear structure ---------------------------------------------------

    def _combine(self, other: "SuperMatrix", neg: bool) -> "SuperMatrix":
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        if not other._e:
            return self
        if not self._e:
            return -other if neg else other
        if self.parity != other.parity:
            raise ParityError("cannot add matrices of different parity")
        e = dict(self._e)
        for k, w in other._e.items():
            if k in e:
                s = e[k] - w if neg else e[k] + w
                if s:
                    e[k] = s
                else:
                    del e[k]
            else:
                e[k] = -w if neg else w
        return SuperMatrix._raw(e, self.parity, self.sign)

    def __add__(self, other):
        return self._combine(other, False)

    def __sub__(self, other):
        return self._combine(other, True)

    def __neg__(self):
        return SuperMatrix._raw({k: -w for k, w in self._e.items()}, self.parity, self.sign)

    def scale(self, c) -> "SuperMatrix":
        if not c:
            return SuperMatrix._raw({}, self.parity, self.sign)
        return SuperMatrix._raw({k: w.scale(c) for k, w in self._e.items()}, self.parity, self.sign)

    def __mul__(self, other):
        if isinstance(other, SuperMatrix):
            return mat_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __str__(self):
        if not self._e:
            return "0"
        return "\n".join(f"[{r + 1},{c + 1}] {w}" for (r, c), w in self.nonzero())

    def __repr__(self):
        return f"SuperMatrix({self.parity.name}, {len(self._e)} nonzero entries)"


def mat_mul(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """Associative matrix product over W; the result parity is the sum."""
    if x.sign != y.sign and x._e and y._e:
        raise ValueError("matrices built with different derivation signs")
    parity = x.parity + y.parity
    out: dict = {}
    yrows = y._row_index()
    for (i, k), a in x._e.items():
        row = yrows.get(k)
        if not row:
            continue
        for j, b in row:
            p = weyl_mul(a, b)
            if not p:
                continue
            key = (i, j)
            if key in out:
                s = out[key] + p
                if s:
                    out[key] = s
                else:
                    del out[key]
            else:
                out[key] = p
    for (r, c) in out:
        if _block_parity(r, c) != parity:
            raise ParityError("product violates the block pattern of its parity")
    return SuperMatrix._raw(out, parity, x.sign if x._e else y.sign)


def superbracket(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """``xy - (-1)^{|x||y|} yx``."""
    xy = mat_mul(x, y)
    yx = mat_mul(y, x)
    if x.parity == Parity.ODD and y.parity == Parity.ODD:
        return xy + yx
    return xy - yx


def from_blocks(a=None, k=None, h=None, b=None, sign: int = 1) -> SuperMatrix:
    """Assemble ``(a k; h b)`` from 4x4 blocks given as ``{(r, c): WeylElement}``."""
    e = {}
    for block, (ro, co) in ((a, (0, 0)), (k, (0, HALF)), (h, (HALF, 0)), (b, (HALF, HALF))):
        if not block:
            continue
        for (r, c), w in block.items():
            if w:
                key = (r + ro, c + co)
                e[key] = e[key] + w if key in e else w
    return SuperMatrix(e, sign=sign)


def dense(rows: Sequence[Sequence[WeylElement]], sign: int = 1,
          parity=None) -> SuperMatrix:
    """Build from a dense 8x8 array."""
    return SuperMatrix(rows, parity=parity, sign=sign)
