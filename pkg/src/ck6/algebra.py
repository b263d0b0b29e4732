"""CK6 realised inside 8x8 matrices over the Weyl algebra.

Indices ``i, j`` run over 1..4 as in the usual notation ``w_1, ..., w_4``;
matrix positions are 0-based internally.

Two sign conventions are left open by the construction and are fixed by
:func:`ck6.calibration.calibrate`:

* ``derivation_sign`` -- the derivation of ``R`` used inside ``W``
  (``d a = a d + d(a)`` with ``d(t) = derivation_sign``);
* ``phi_sign`` -- which of the two ``sl2`` ideals of ``K4 = sl2 + sl2`` is called
  the first one, i.e. whether ``phi`` is ``+*`` or ``-*`` (Hodge star).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .laurent import ONE, ZERO, LaurentPoly, Scalar, as_scalar, format_scalar
from .supermatrix import HALF, Parity, SuperMatrix, from_blocks, superbracket
from .weyl import WeylElement, weyl_commutator

F_VALUES = (5, -3, 2, -4)


@dataclass(frozen=True)
class Convention:
    derivation_sign: int = -1
    phi_sign: int = 1

    def __post_init__(self):
        if self.derivation_sign not in (1, -1) or self.phi_sign not in (1, -1):
            raise ValueError("signs must be +1 or -1")


_DEFAULT: list = []


def default_convention() -> Convention:
    """The calibrated convention (computed once, on first use)."""
    if not _DEFAULT:
        from .calibration import calibrate

        _DEFAULT.append(calibrate().convention)
    return _DEFAULT[0]


def _conv(conv: Convention | None) -> Convention:
    return conv if conv is not None else default_convention()


# ---------------------------------------------------------------------------
# The map phi on skew-symmetric 4x4 matrices
# ---------------------------------------------------------------------------

Mat4 = Mapping[tuple, Scalar]


def _levi_civita(p) -> int:
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def _clean(m: dict) -> dict:
    return {k: as_scalar(v) for k, v in m.items() if v}


def hodge_star(k: Mat4) -> dict:
    """``(*k)_{ij} = 1/2 sum_{kl} eps_{ijkl} k_{kl}`` on 0-based 4x4 matrices."""
    out: dict = {}
    for p in itertools.permutations(range(4)):
        i, j, a, b = p
        v = k.get((a, b), 0)
        if v:
            out[(i, j)] = out.get((i, j), 0) + Fraction(_levi_civita(p) * v, 2)
    return _clean(out)


def is_skew(k: Mat4) -> bool:
    keys = set(k) | {(c, r) for r, c in k}
    return all(k.get((r, c), 0) == -k.get((c, r), 0) for r, c in keys)


def sl2_components(k: Mat4, phi_sign: int = 1) -> tuple[dict, dict]:
    """Split ``k = k' + k''`` into the two simple ideals of K4.

    ``phi_sign`` picks which ideal is labelled first: +1 puts the self-dual
    part (``*k = k``) first.
    """
    if not is_skew(k):
        raise ValueError("phi is defined on skew-symmetric matrices only")
    star = hodge_star(k)
    keys = set(k) | set(star)
    plus = _clean({x: Fraction(k.get(x, 0) + star.get(x, 0), 2) for x in keys})
    minus = _clean({x: Fraction(k.get(x, 0) - star.get(x, 0), 2) for x in keys})
    return (plus, minus) if phi_sign == 1 else (minus, plus)


def phi(k: Mat4, phi_sign: int | None = None) -> dict:
    """``phi(k) = k' - k''``."""
    if phi_sign is None:
        phi_sign = default_convention().phi_sign
    first, second = sl2_components(k, phi_sign)
    keys = set(first) | set(second)
    return _clean({x: first.get(x, 0) - second.get(x, 0) for x in keys})


def elementary_skew(i: int, j: int) -> dict:
    """``e_ij - e_ji`` (1-based indices)."""
    return {(i - 1, j - 1): 1, (j - 1, i - 1): -1}


# ---------------------------------------------------------------------------
# Roots
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class RootVector:
    """Element of ``sum Z w_i / Z(w_1+w_2+w_3+w_4)``, stored with min coordinate 0."""

    coords: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        if len(c) != 4:
            raise ValueError("root vectors have four coordinates")
        m = min(c)
        object.__setattr__(self, "coords", tuple(x - m for x in c))

    @classmethod
    def of(cls, *coords) -> "RootVector":
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        return cls(tuple(coords))

    @classmethod
    def w(cls, i: int, n: int = 1) -> "RootVector":
        c = [0, 0, 0, 0]
        c[i - 1] = n
        return cls(tuple(c))

    @classmethod
    def zero(cls) -> "RootVector":
        return cls((0, 0, 0, 0))

    def is_zero(self) -> bool:
        return self.coords == (0, 0, 0, 0)

    def __add__(self, other):
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return RootVector(tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n: int):
        return RootVector(tuple(n * a for a in self.coords))

    def representative(self) -> tuple:
        """Shortest integer representative (smallest l1 norm; ties -> fewest negatives)."""
        best = None
        for k in range(min(self.coords) - 1, max(self.coords) + 2):
            c = tuple(x - k for x in self.coords)
            key = (sum(abs(x) for x in c), sum(1 for x in c if x < 0))
            if best is None or key < best[0]:
                best = (key, c)
        return best[1]

    def __str__(self):
        c = self.representative()
        if not any(c):
            return "0"
        out = ""
        # positive terms first: w3-w2 rather than -w2+w3
        for i, x in sorted(enumerate(c, start=1), key=lambda p: p[1] < 0):
            if not x:
                continue
            mag = "" if abs(x) == 1 else str(abs(x))
            out += ("-" if x < 0 else ("+" if out else "")) + f"{mag}w{i}"
        return out


_ROOT_TERM = re.compile(r"\s*([+-])?\s*(\d*)\s*w\s*([1-4])\s*")


def parse_root(text: str) -> RootVector:
    """Parse ``w1+w3``, ``-2w4``, ``w3 - w2``."""
    s = text.strip()
    pos, c = 0, [0, 0, 0, 0]
    if not s:
        raise ValueError("empty root")
    while pos < len(s):
        m = _ROOT_TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse root {text!r} at column {pos + 1}")
        if pos and not m.group(1):
            raise ValueError(f"missing sign in root {text!r} at column {pos + 1}")
        n = int(m.group(2)) if m.group(2) else 1
        c[int(m.group(3)) - 1] += -n if m.group(1) == "-" else n
        pos = m.end()
    return RootVector(tuple(c))


def f_value(r: RootVector) -> int:
    """The grading functional with ``f(w_1..w_4) = (5, -3, 2, -4)``."""
    return sum(c * f for c, f in zip(r.coords, F_VALUES))


def even_roots() -> list[RootVector]:
    return [RootVector.w(i) - RootVector.w(j)
            for i in range(1, 5) for j in range(1, 5) if i != j]


def odd_roots() -> list[RootVector]:
    seen = []
    for i in range(1, 5):
        for j in range(1, 5):
            for r in ((RootVector.w(i) + RootVector.w(j)) if i != j else None,
                      -(RootVector.w(i) + RootVector.w(j))):
                if r is not None and r not in seen:
                    seen.append(r)
    return sorted(seen)


def all_roots() -> list[RootVector]:
    return sorted(set(even_roots()) | set(odd_roots()))


def root_parity(r: RootVector) -> Parity:
    if r in set(even_roots()):
        return Parity.EVEN
    if r in set(odd_roots()):
        return Parity.ODD
    raise ValueError(f"{r} is not a root")


def positive_roots() -> list[RootVector]:
    return [r for r in all_roots() if f_value(r) > 0]


def positive_decompositions(r: RootVector) -> list[tuple]:
    """All multisets of >= 2 positive roots summing to ``r``.

    Each multiset is a sorted tuple; the list is sorted.  The search is
    finite because every positive root has ``f >= 1``.
    """
    target = f_value(r)
    if target <= 0:
        raise ValueError(f"{r} is not positive (f = {target})")
    pos = sorted(positive_roots(), key=lambda x: (f_value(x), x.coords))
    found = []

    def dfs(start, budget, acc, chosen):
        if budget == 0:
            if len(chosen) >= 2 and acc == r:
                found.append(tuple(sorted(chosen)))
            return
        for idx in range(start, len(pos)):
            x = pos[idx]
            fx = f_value(x)
            if fx > budget:
                break
            dfs(idx, budget - fx, acc + x, chosen + [x])

    dfs(0, target, RootVector.zero(), [])
    return sorted(set(found))


# ---------------------------------------------------------------------------
# Cartan subalgebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CartanElement:
    """``diag(a_1..a_4, -a_1..-a_4)`` times a coefficient in R."""

    diag: tuple
    coefficient: LaurentPoly = ONE

    def __post_init__(self):
        d = tuple(as_scalar(x) for x in self.diag)
        if len(d) != 4 or sum(d) != 0:
            raise ValueError("Cartan elements need four entries summing to zero")
        object.__setattr__(self, "diag", d)

    @classmethod
    def h(cls, i: int, j: int, coefficient: LaurentPoly = ONE) -> "CartanElement":
        """``h_{w_i - w_j}``."""
        if i == j:
            raise ValueError("h needs distinct indices")
        d = [0, 0, 0, 0]
        d[i - 1], d[j - 1] = 1, -1
        return cls(tuple(d), coefficient)


def cartan_pairing(r, h: CartanElement) -> Scalar:
    """``<r, h> = sum c_i a_i``; ``r`` may be a RootVector, 4 coordinates or 3 labels."""
    if isinstance(r, RootVector):
        c = r.coords
    elif len(r) == 3:
        c = weight_from_labels(r).coords
    else:
        c = tuple(r)
    return as_scalar(sum(x * a for x, a in zip(c, h.diag)))


def labels_of(weight: RootVector) -> tuple:
    """``(<l, h_{w1-w3}>, <l, h_{w3-w2}>, <l, h_{w2-w4}>)``."""
    return tuple(int(cartan_pairing(weight, CartanElement.h(i, j)))
                 for i, j in ((1, 3), (3, 2), (2, 4)))


def weight_from_labels(labels) -> RootVector:
    a1, a2, a3 = (int(x) for x in labels)
    return RootVector((a1 + a2 + a3, a3, a2 + a3, 0))


def weight_form(u, v) -> Scalar:
    """The form ``(w_i | w_j) = delta_ij`` on raw coordinate 4-tuples."""
    u = u.coords if isinstance(u, RootVector) else u
    v = v.coords if isinstance(v, RootVector) else v
    return as_scalar(sum(a * b for a, b in zip(u, v)))


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

KINDS = ("E", "Q", "H", "VIR", "CENTRAL")


@dataclass(frozen=True)
class GeneratorSpec:
    """One generator literal.

    ``Q`` carries signed indices: ``Q(+i,+j)`` is ``q_{w_i+w_j}`` and
    ``Q(-i,-j; a)`` is ``q_{-w_i-w_j}(a)``.
    """

    kind: str
    i: int = 0
    j: int = 0
    coeff: LaurentPoly = ONE
    positive: bool = False
    scalar: Scalar = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", LaurentPoly.coerce(self.coeff))
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind in ("E", "H", "Q"):
            for x in (self.i, self.j):
                if x not in (1, 2, 3, 4):
                    raise ValueError(f"index {x} outside 1..4")
        if self.kind in ("E", "H") and self.i == self.j:
            raise ValueError(f"{self.kind.lower()} needs distinct indices, got ({self.i},{self.j})")
        if self.kind == "Q" and self.positive and self.i == self.j:
            raise ValueError(f"2w_{self.i} is not a root")
        if self.kind == "CENTRAL":
            object.__setattr__(self, "scalar", as_scalar(self.scalar))

    def __str__(self):
        """CLI syntax, accepted back by :func:`ck6.parser.parse`."""
        a = str(self.coeff)
        if self.kind == "E":
            return f"e({self.i},{self.j}; {a})"
        if self.kind == "H":
            return f"h({self.i},{self.j}; {a})"
        if self.kind == "VIR":
            return f"vir({a})"
        if self.kind == "CENTRAL":
            return f"central({format_scalar(self.scalar)})"
        s = "+" if self.positive else "-"
        tail = "" if self.coeff == ONE else f"; {a}"
        return f"q({s}{self.i},{s}{self.j}{tail})"

    def pretty(self) -> str:
        """Conventional name, e.g. ``e_{w1-w3}(t^2)``."""
        a = str(self.coeff)
        arg = "" if self.coeff == ONE else f"({a})"
        if self.kind == "E":
            return f"e_{{w{self.i}-w{self.j}}}{arg}"
        if self.kind == "H":
            return f"h_{{w{self.i}-w{self.j}}}{arg}"
        if self.kind == "VIR":
            return f"Vir({a})"
        if self.kind == "CENTRAL":
            return f"{format_scalar(self.scalar)}*d*I8"
        if self.positive:
            return f"q_{{w{self.i}+w{self.j}}}{arg}"
        if self.i == self.j:
            return f"q_{{-2w{self.i}}}{arg}"
        return f"q_{{-w{self.i}-w{self.j}}}{arg}"


def E(i: int, j: int, a=ONE) -> GeneratorSpec:
    return GeneratorSpec("E", i, j, LaurentPoly.coerce(a))


def H(i: int, j: int, a=ONE) -> GeneratorSpec:
    return GeneratorSpec("H", i, j, LaurentPoly.coerce(a))


def Q(i: int, j: int, a=ONE) -> GeneratorSpec:
    """``Q(+1, +4)`` or ``Q(-1, -4, a)``; both indices carry the same sign."""
    if (i > 0) != (j > 0):
        raise ValueError("odd roots are w_i+w_j or -w_i-w_j")
    return GeneratorSpec("Q", abs(i), abs(j), LaurentPoly.coerce(a), positive=i > 0)


def VIR(a=ONE) -> GeneratorSpec:
    return GeneratorSpec("VIR", coeff=LaurentPoly.coerce(a))


def CENTRAL(c) -> GeneratorSpec:
    return GeneratorSpec("CENTRAL", scalar=c)


def root_of(spec: GeneratorSpec) -> RootVector:
    if spec.kind == "E":
        return RootVector.w(spec.i) - RootVector.w(spec.j)
    if spec.kind == "Q":
        r = RootVector.w(spec.i) + RootVector.w(spec.j)
        return r if spec.positive else -r
    return RootVector.zero()


def generator_parity(spec: GeneratorSpec) -> Parity:
    return Parity.ODD if spec.kind == "Q" else Parity.EVEN


def _w(a, sign) -> WeylElement:
    return WeylElement.coef(a, sign)


def complement_pair(i: int, j: int) -> tuple[int, int]:
    k, l = sorted(set((1, 2, 3, 4)) - {i, j})
    return k, l


def make_generator(spec: GeneratorSpec, conv: Convention | None = None) -> SuperMatrix:
    """The literal 8x8 matrix of a generator."""
    conv = _conv(conv)
    return _make(spec, conv)


@lru_cache(maxsize=4096)
def _make(spec: GeneratorSpec, conv: Convention) -> SuperMatrix:
    s = conv.derivation_sign
    a = spec.coeff
    if spec.kind == "E":
        i, j = spec.i - 1, spec.j - 1
        return from_blocks(a={(i, j): _w(a, s)}, b={(j, i): _w(-a, s)}, sign=s)
    if spec.kind == "H":
        i, j = spec.i - 1, spec.j - 1
        return from_blocks(a={(i, i): _w(a, s), (j, j): _w(-a, s)},
                           b={(j, j): _w(a, s), (i, i): _w(-a, s)}, sign=s)
    if spec.kind == "Q" and not spec.positive:
        i, j = spec.i - 1, spec.j - 1
        h = {(i, j): _w(a, s)}
        h[(j, i)] = h[(j, i)] + _w(a, s) if (j, i) in h else _w(a, s)
        return from_blocks(h=h, sign=s)
    if spec.kind == "Q":
        if a.is_constant():
            return _q_plus(spec.i, spec.j, conv).scale(a.constant_value())
        # q_{w_i+w_j}(a) := -[q_{w_i+w_k}, e_{w_j-w_k}(a)] with the smallest admissible k
        k = min(set((1, 2, 3, 4)) - {spec.i, spec.j})
        return -superbracket(_q_plus(spec.i, k, conv), _make(E(spec.j, k, a), conv))
    if spec.kind == "VIR":
        return vir_matrix(a, conv)
    if spec.kind == "CENTRAL":
        dd = WeylElement.d(s).scale(spec.scalar)
        return SuperMatrix({(r, r): dd for r in range(8)} if spec.scalar else {},
                           Parity.EVEN, s)
    raise AssertionError(spec.kind)


def _q_plus(i: int, j: int, conv: Convention) -> SuperMatrix:
    """``(0, e_ij - e_ji; phi(e_ij - e_ji) d, 0)``."""
    s = conv.derivation_sign
    k = elementary_skew(i, j)
    dd = WeylElement.d(s)
    upper = {rc: _w(v, s) for rc, v in k.items()}
    lower = {rc: dd.scale(v) for rc, v in phi(k, conv.phi_sign).items()}
    return from_blocks(k=upper, h=lower, sign=s)


def prime(a: LaurentPoly, conv: Convention | None = None) -> LaurentPoly:
    """``a' = [a, d]`` computed in W; equals ``-d(a)``."""
    conv = _conv(conv)
    c = weyl_commutator(_w(a, conv.derivation_sign), WeylElement.d(conv.derivation_sign))
    return c.coefficient(0) or ZERO


def vir_matrix(a: LaurentPoly, conv: Convention | None = None) -> SuperMatrix:
    """``I8(ad) - (e11(a') (+) (-e11(a') + I4(a')))`` with ``a' = [a, d]``."""
    conv = _conv(conv)
    s = conv.derivation_sign
    ad = WeylElement.d(s, coeff=a) if a else WeylElement.zero(s)
    ap = prime(a, conv)
    e = {(r, r): ad for r in range(8)}
    e[(0, 0)] = ad - _w(ap, s)
    for r in range(5, 8):
        e[(r, r)] = ad - _w(ap, s)
    return SuperMatrix(e, Parity.EVEN, s)


def vir_display_matrix(a: LaurentPoly, conv: Convention | None = None) -> SuperMatrix:
    """``diag(da, ad, ad, ad | ad, da, da, da)`` with products taken in W."""
    conv = _conv(conv)
    s = conv.derivation_sign
    dd, aw = WeylElement.d(s), _w(a, s)
    da, ad = dd * aw, aw * dd
    diag = [da, ad, ad, ad, ad, da, da, da]
    return SuperMatrix({(r, r): w for r, w in enumerate(diag)}, Parity.EVEN, s)


def cartan_matrix(h: CartanElement, conv: Convention | None = None) -> SuperMatrix:
    conv = _conv(conv)
    s = conv.derivation_sign
    e = {}
    for r, x in enumerate(h.diag):
        if x:
            e[(r, r)] = _w(h.coefficient * x, s)
            e[(r + HALF, r + HALF)] = _w(h.coefficient * (-x), s)
    return SuperMatrix(e, Parity.EVEN, s)


# ---------------------------------------------------------------------------
# Grading and root-space decomposition
# ---------------------------------------------------------------------------

CARTAN_BASIS = tuple(CartanElement.h(i, 4) for i in (1, 2, 3))


def grading_check(x: SuperMatrix, r: RootVector, conv: Convention | None = None) -> bool:
    """True iff ``[h, x] = <r, h> x`` for a basis of H."""
    for h in CARTAN_BASIS:
        hm = cartan_matrix(h, conv)
        if superbracket(hm, x) != x.scale(cartan_pairing(r, h)):
            return False
    return True


def entry_root(r: int, c: int) -> RootVector:
    """Weight of the matrix unit at 0-based position ``(r, c)``."""
    w = RootVector.w
    if r < HALF and c < HALF:
        return w(r + 1) - w(c + 1)
    if r < HALF:
        return w(r + 1) + w(c - HALF + 1)
    if c < HALF:
        return -(w(r - HALF + 1) + w(c + 1))
    return w(c - HALF + 1) - w(r - HALF + 1)


class NotInSpan(ValueError):
    """The matrix is not a combination of the standard root-space spanning sets."""


def root_components(x: SuperMatrix) -> dict:
    """Split ``x`` into weight components, keyed by root."""
    groups: dict = {}
    for (r, c), w in x.nonzero():
        groups.setdefault(entry_root(r, c), {})[(r, c)] = w
    return {k: SuperMatrix(v, x.parity, x.sign) for k, v in sorted(groups.items())}


def _order0(w: WeylElement, where: str) -> LaurentPoly:
    if not w:
        return ZERO
    if w.order() != 0:
        raise NotInSpan(f"unexpected power of d at {where}")
    return w.coefficient(0)


def decompose(x: SuperMatrix, conv: Convention | None = None) -> list[GeneratorSpec]:
    """Write ``x`` as a sum of generators from the standard spanning sets.

    Zero weight: ``H (x) R + Vir(R)``; ``w_i - w_j``: ``e_{w_i-w_j}(R)``;
    ``-2w_i``: ``q_{-2w_i}(R)``; ``w_i + w_j``: ``q_{w_i+w_j}(R) + q_{-w_k-w_l}(R)``.
    The result is verified by reconstruction; raises :class:`NotInSpan`.
    """
    conv = _conv(conv)
    out: list[GeneratorSpec] = []
    for root, part in root_components(x).items():
        out.extend(_decompose_component(root, part, conv))
    total = SuperMatrix.zero(x.parity, x.sign)
    for spec in out:
        total = total + make_generator(spec, conv)
    if total != x:
        raise NotInSpan("reconstruction mismatch")
    return out


def _decompose_component(root, part: SuperMatrix, conv) -> list[GeneratorSpec]:
    c = root.representative()
    specs: list[GeneratorSpec] = []
    if root.is_zero():
        top = part[(1, 1)]
        v = top.coefficient(1) if top else None
        rest = part
        if v:
            specs.append(VIR(v))
            rest = part - make_generator(VIR(v), conv)
        p = [_order0(rest[(i, i)], f"[{i + 1},{i + 1}]") for i in range(4)]
        q = [_order0(rest[(i + HALF, i + HALF)], f"[{i + 5},{i + 5}]") for i in range(4)]
        if any(qi != -pi for pi, qi in zip(p, q)) or sum(p, ZERO):
            raise NotInSpan("diagonal part is not in H (x) R")
        nz = [i for i in range(4) if p[i]]
        if len(nz) == 2 and p[nz[0]] == -p[nz[1]]:
            specs.append(H(nz[0] + 1, nz[1] + 1, p[nz[0]]))
        else:
            specs.extend(H(i + 1, 4, p[i]) for i in range(3) if p[i])
        return specs
    if part.parity == Parity.EVEN:
        pos = [i + 1 for i, v in enumerate(c) if v == 1]
        neg = [i + 1 for i, v in enumerate(c) if v == -1]
        if len(pos) != 1 or len(neg) != 1:
            raise NotInSpan(f"{root} is not a root")
        i, j = pos[0], neg[0]
        return [E(i, j, _order0(part[(i - 1, j - 1)], "upper block"))]
    if sorted(c) == [-2, 0, 0, 0]:
        i = c.index(-2) + 1
        a = _order0(part[(i - 1 + HALF, i - 1)], "lower-left block")
        return [Q(-i, -i, a * Fraction(1, 2))]
    pos = [i + 1 for i, v in enumerate(root.coords) if v == 1]
    if sorted(root.coords) != [0, 0, 1, 1]:
        raise NotInSpan(f"{root} is not a root")
    i, j = pos
    k, l = complement_pair(i, j)
    a = _order0(part[(i - 1, j - 1 + HALF)], "upper-right block")
    rest = part
    if a:
        specs.append(Q(i, j, a))
        rest = part - make_generator(Q(i, j, a), conv)
    b = _order0(rest[(k - 1 + HALF, l - 1)], "lower-left block")
    if b:
        specs.append(Q(-k, -l, b))
    return specs


def describe(x: SuperMatrix, conv: Convention | None = None) -> str:
    """Human-readable generator expansion, or ``(not in span)``."""
    if x.is_zero():
        return "0"
    try:
        specs = decompose(x, conv)
    except NotInSpan:
        return "(not in the standard span)"
    parts = []
    for spec in specs:
        name = spec.pretty()
        neg = False
        if spec.kind != "CENTRAL" and spec.coeff != ONE:
            cff = spec.coeff
            if len(cff.support()) == 1 and Fraction(cff.coefficient(cff.support()[0])) < 0:
                neg = True
                name = GeneratorSpec(spec.kind, spec.i, spec.j, -cff, spec.positive).pretty()
        parts.append(("-" if neg else "+", name))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sgn, name in parts[1:]:
        text += f" {sgn} {name}"
    return text


def homogeneous_root(x: SuperMatrix):
    """The unique weight of ``x`` or None when it has several."""
    comps = list(root_components(x))
    if len(comps) == 1:
        return comps[0]
    return None


def generator_families(window: Iterable[int], conv=None) -> list[GeneratorSpec]:
    """E, Q, H and VIR generators with monomial coefficients t^m, m in ``window``."""
    out: list[GeneratorSpec] = []
    ms = list(window)
    for m in ms:
        a = LaurentPoly.monomial(m)
        out += [E(i, j, a) for i in range(1, 5) for j in range(1, 5) if i != j]
        out += [H(i, j, a) for i in range(1, 5) for j in range(i + 1, 5)]
        out += [Q(-i, -j, a) for i in range(1, 5) for j in range(i, 5)]
        out += [Q(i, j, a) for i in range(1, 5) for j in range(i + 1, 5)]
        out.append(VIR(a))
    return out
