import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ck6.algebra import RootVector
from ck6.classify import (CLAUSES, FiniteTypeVerdict, is_finite_type, jordan_one_sided_classify,
                          jordan_unital_families)
from ck6.modules import HWParams


@pytest.mark.parametrize("labels,beta,alpha,finite,clause", [
    ((2, 0, 0), 7, -1, True, "A1-GE-2"),
    ((1, 0, 5), -1, 3, True, "A1-EQ-1-BETA-MINUS-1"),
    ((1, 1, 0), -1, 0, False, "A1-EQ-1-FAIL"),
    ((1, 0, 0), 0, 0, False, "A1-EQ-1-FAIL"),
    ((0, 3, 1), 5, 0, False, "A1-EQ-0-EXCLUDED"),
    ((2, -1, 0), 0, 0, False, "NOT-DOMINANT"),
])
def test_canonical_cases(labels, beta, alpha, finite, clause):
    v = is_finite_type(HWParams(labels, beta, alpha))
    assert (v.finite, v.clause) == (finite, clause)


def transcription(a1, a2, a3, beta):
    # the two finiteness clauses, written out independently
    return a1 >= 2 or (a1 == 1 and a2 == 0 and beta == -1)


def test_grid():
    cases = list(itertools.product(range(4), range(4), range(4), (-2, -1, 0, 1)))
    assert len(cases) == 256
    for a1, a2, a3, beta in cases:
        assert is_finite_type(HWParams((a1, a2, a3), beta, 0)).finite == transcription(a1, a2, a3, beta)


@given(st.tuples(*[st.integers(-3, 5)] * 3), st.fractions(-3, 3, max_denominator=3),
       st.fractions(-3, 3, max_denominator=3), st.fractions(-3, 3, max_denominator=3))
def test_total_and_alpha_free(labels, beta, alpha, alpha2):
    v = is_finite_type(HWParams(labels, beta, alpha))
    assert v.clause in CLAUSES
    assert v == is_finite_type(HWParams(labels, beta, alpha2))


def test_verdict_consistency():
    with pytest.raises(ValueError):
        FiniteTypeVerdict(True, "A1-EQ-1-FAIL", "")


def test_jordan_families():
    fams = jordan_unital_families()
    assert len(fams) == 2
    assert [(f.weight, f.beta, f.alpha) for f in fams] == [
        (2 * RootVector.w(1), None, None), (RootVector.w(1) - RootVector.w(4), -1, None)]
    weights = {f.weight for f in fams}
    assert RootVector.w(1) + RootVector.w(3) not in weights and -2 * RootVector.w(4) not in weights
    clauses = [is_finite_type(f.sample(alpha=Fraction(3, 2), beta=4)).clause for f in fams]
    assert clauses == ["A1-GE-2", "A1-EQ-1-BETA-MINUS-1"]


def test_one_sided_classification():
    assert [jordan_one_sided_classify(n, 2) for n in range(1, 5)] == \
        ["irreducible", "indecomposable", "indecomposable", "indecomposable"]
    assert jordan_one_sided_classify(2, 0, [[1, 0], [0, 1]]) == "decomposable"
    assert jordan_one_sided_classify(3, 0, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]) == "decomposable"
    assert jordan_one_sided_classify(4, 0, [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]]) == "indecomposable"
    with pytest.raises(ValueError):
        jordan_one_sided_classify(0)
