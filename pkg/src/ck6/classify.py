"""Decision procedures: finite type of irreducible modules, Jordan bimodules."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import sympy

from .algebra import RootVector, labels_of
from .laurent import Scalar, as_scalar, format_scalar
from .modules import DModule, HWParams, JordanBlockModule

CLAUSES = ("A1-GE-2", "A1-EQ-1-BETA-MINUS-1", "NOT-DOMINANT", "A1-EQ-1-FAIL", "A1-EQ-0-EXCLUDED")
FINITE_CLAUSES = {"A1-GE-2", "A1-EQ-1-BETA-MINUS-1"}


@dataclass(frozen=True)
class FiniteTypeVerdict:
    finite: bool
    clause: str
    explanation: str

    def __post_init__(self):
        if self.clause not in CLAUSES:
            raise ValueError(f"unknown clause {self.clause}")
        if self.finite != (self.clause in FINITE_CLAUSES):
            raise ValueError("clause inconsistent with verdict")

    def line(self) -> str:
        return f"{'FINITE' if self.finite else 'INFINITE'} {self.clause} ({self.explanation})"


def is_finite_type(p: HWParams) -> FiniteTypeVerdict:
    """Is the irreducible module with these parameters of finite type?

    alpha never enters.
    """
    a1, a2, _ = p.labels
    if not p.dominant:
        return FiniteTypeVerdict(False, "NOT-DOMINANT", "labels must be nonnegative integers")
    if a1 >= 2:
        return FiniteTypeVerdict(True, "A1-GE-2", "<l,h_{w1-w3}> >= 2, any beta and alpha")
    if a1 == 1:
        if a2 == 0 and p.beta == -1:
            return FiniteTypeVerdict(True, "A1-EQ-1-BETA-MINUS-1",
                                     "<l,h_{w1-w3}> = 1, <l,h_{w3-w2}> = 0, beta = -1")
        why = "<l,h_{w3-w2}> must vanish" if a2 else "beta must be -1"
        return FiniteTypeVerdict(False, "A1-EQ-1-FAIL", f"<l,h_{{w1-w3}}> = 1 but {why}")
    return FiniteTypeVerdict(False, "A1-EQ-0-EXCLUDED",
                             "<l,h_{w1-w3}> = 0 forces the trivial one-dimensional module")


@dataclass(frozen=True)
class JordanFamily:
    """Highest weight with beta/alpha constraints; None means the parameter is free."""

    weight: RootVector
    beta: Optional[Scalar]
    alpha: Optional[Scalar]

    @property
    def labels(self) -> tuple:
        return labels_of(self.weight)

    def sample(self, alpha: Scalar = 0, beta: Scalar = 0) -> HWParams:
        b = self.beta if self.beta is not None else beta
        a = self.alpha if self.alpha is not None else alpha
        return HWParams(self.labels, b, a)

    def __str__(self):
        fmt = lambda x: "free" if x is None else format_scalar(x)
        return f"V({self.weight}, beta={fmt(self.beta)}, alpha={fmt(self.alpha)})"


def jordan_unital_families() -> list[JordanFamily]:
    """Unital finite-type Jordan bimodules: two parametric families."""
    w = RootVector.w
    return [JordanFamily(2 * w(1), None, None), JordanFamily(w(1) - w(4), -1, None)]


def _cells(matrix) -> list[tuple]:
    """Jordan cells of ``matrix`` as (eigenvalue, size)."""
    _, J = sympy.Matrix(matrix).jordan_form()
    n = J.shape[0]
    cells, size = [], 1
    for i in range(n):
        if i + 1 < n and J[i, i + 1] == 1:
            size += 1
        else:
            cells.append((J[i, i], size))
            size = 1
    return cells


def classify_dmodule(module: DModule) -> str:
    """``irreducible`` / ``indecomposable`` / ``decomposable`` for ``N[t, t^-1]^4``.

    The structure follows that of ``N`` as a ``C[d]``-module: irreducible
    iff ``N`` is one-dimensional, indecomposable iff ``d`` is a single
    Jordan block.
    """
    if module.n == 1:
        return "irreducible"
    return "indecomposable" if len(_cells(module.matrix)) == 1 else "decomposable"


def jordan_one_sided_classify(n: int, alpha: Scalar = 0,
                              matrix: Sequence[Sequence] | None = None) -> str:
    """Classify the one-sided module built from ``N``.

    By default ``N`` is the ``n``-dimensional Jordan block with eigenvalue
    ``alpha``; pass ``matrix`` for any other action of ``d``.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    module = JordanBlockModule(n, as_scalar(alpha)) if matrix is None else DModule(matrix)
    if module.n != n:
        raise ValueError("matrix size does not match n")
    return classify_dmodule(module)
