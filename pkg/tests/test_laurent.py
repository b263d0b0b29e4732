from fractions import Fraction

import pytest
from hypothesis import given

from ck6.laurent import ONE, T, ZERO, LaurentPoly, parse_laurent, t_pow

from conftest import laurent


def test_basic_arithmetic():
    p = parse_laurent("3t^2 - 1/2t^-1")
    assert p.coefficient(2) == 3 and p.coefficient(-1) == Fraction(-1, 2)
    assert p * t_pow(1) == parse_laurent("3t^3 - 1/2")
    assert (T + 1) * (T - 1) == t_pow(2) - 1
    assert t_pow(3) ** -1 == t_pow(-3)
    assert str(p) == "3t^2 - 1/2t^-1"
    assert str(ZERO) == "0"


def test_derivative():
    assert t_pow(5).derive() == t_pow(4, 5)
    assert t_pow(-2).derive() == t_pow(-3, -2)
    assert ONE.derive() == ZERO
    assert t_pow(2).derivation(-1) == t_pow(1, -2)


@pytest.mark.parametrize("bad", ["", "3t^", "t t", "2x", "1/0t"])
def test_parse_errors(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_laurent(bad)


def test_only_monomials_invert():
    with pytest.raises(ValueError):
        (T + 1) ** -1


@given(laurent(), laurent())
def test_leibniz(p, q):
    assert (p * q).derive() == p.derive() * q + p * q.derive()


@given(laurent(), laurent(), laurent())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO


@given(laurent())
def test_print_parse_round_trip(p):
    assert parse_laurent(str(p)) == p


@given(laurent(), laurent())
def test_hash_consistent(p, q):
    if p == q:
        assert hash(p) == hash(q)
    assert LaurentPoly(p.coeffs) == p
