import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ck6.algebra import generator_families, make_generator
from ck6.supermatrix import Parity, ParityError, SuperMatrix, from_blocks, infer_parity, mat_mul, superbracket
from ck6.weyl import WeylElement

ONE = WeylElement.coef(1, -1)
D = WeylElement.d(-1)


def test_parity_inference():
    assert infer_parity({(0, 1): ONE}) == Parity.EVEN
    assert infer_parity({(0, 5): ONE}) == Parity.ODD
    assert infer_parity({}) == Parity.EVEN
    with pytest.raises(ParityError):
        infer_parity({(0, 0): ONE, (0, 5): ONE})
    with pytest.raises(ParityError):
        SuperMatrix({(0, 0): ONE}, Parity.ODD, -1)


def test_dense_view_and_indexing():
    m = from_blocks(a={(0, 1): D}, b={(2, 3): ONE}, sign=-1)
    rows = m.entries
    assert rows[0][1] == D and rows[6][7] == ONE and not rows[0][0]
    assert SuperMatrix(rows, sign=-1) == m


def test_mixed_parity_sum_rejected():
    with pytest.raises(ParityError):
        SuperMatrix({(0, 0): ONE}, sign=-1) + SuperMatrix({(0, 4): ONE}, sign=-1)


def test_identity_is_neutral(conv):
    x = make_generator(generator_families([1])[0], conv)
    assert mat_mul(SuperMatrix.identity(-1), x) == x == mat_mul(x, SuperMatrix.identity(-1))


GENS = generator_families([-1, 0, 1])
idx = st.integers(0, len(GENS) - 1)


@settings(max_examples=60, deadline=None)
@given(idx, idx, idx)
def test_associativity(conv, i, j, k):
    x, y, z = (make_generator(GENS[n], conv) for n in (i, j, k))
    assert mat_mul(mat_mul(x, y), z) == mat_mul(x, mat_mul(y, z))


@settings(max_examples=80, deadline=None)
@given(idx, idx)
def test_super_skew_symmetry(conv, i, j):
    x, y = make_generator(GENS[i], conv), make_generator(GENS[j], conv)
    s = -1 if x.parity == y.parity == Parity.ODD else 1
    assert superbracket(x, y) == superbracket(y, x).scale(-s)
    assert superbracket(x, y).parity == x.parity + y.parity
