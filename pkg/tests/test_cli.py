import io

import pytest
from hypothesis import given, settings, strategies as st

from ck6.algebra import GeneratorSpec, generator_families, make_generator
from ck6.cli import main
from ck6.parser import Bracket, Gen, ParseError, evaluate, parse

from conftest import laurent


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_parse_shapes():
    node = parse("[e(4,1; t), q(+3,+1)]")
    assert isinstance(node, Bracket) and node.left.kind == "E" and node.right.positive
    assert parse("vir(t^2 - 1)").spec({}).coeff.coeffs == {2: 1, 0: -1}
    assert isinstance(parse(" ( q(-1,-3) ) "), Gen)


@pytest.mark.parametrize("text", ["e(2,2; t)", "q(+1,-2)", "q(+2,+2)", "h(1,5; 1)", "e(1,2)",
                                  "[e(1,2;1), ]", "vir(t", "foo(1)", "e(1,2; x)", "q(1,2)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_error_has_column():
    with pytest.raises(ParseError) as info:
        parse("[e(1,2;1),  e(3,3;1)]")
    assert info.value.col == 13


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(generator_families([0])), laurent(max_terms=3))
def test_print_parse_round_trip(spec, a):
    s = GeneratorSpec(spec.kind, spec.i, spec.j, a, spec.positive)
    assert parse(str(s)).spec({}) == s


def test_sums_and_scalars(conv):
    x = evaluate(parse("2*e(1,2; t) - e(1,2; 2t)"), conv=conv)
    assert x.is_zero()


def test_bracket_command():
    code, out = run("bracket", "[e(3,4;1), q(+1,+4)]")
    assert code == 0
    assert "= -q_{w3+w1}" in out and "root: w1+w3" in out and "parity: odd" in out
    code, out = run("bracket", "[[e(4,1;t), q(+3,+1)], q(+1,+2)]")
    assert code == 0 and "= Vir(t)" in out
    code, out = run("bracket", "vir(1)")
    assert out.startswith("[1,1] d\n")


def test_bracket_errors():
    assert run("bracket", "e(1,1;t)")[0] == 2
    assert run("bracket", "[e(1,2;1)")[0] == 2
    assert run("bracket", "e(1,2;1) + q(+1,+2)")[0] == 2


def test_verify_command():
    code, out = run("verify", "L3.4-e*")
    assert code == 0 and out.count(" PASS ") == 4
    code, out = run("verify", "L3.4-main*")
    assert code == 1
    assert "L3.4-main FAIL" in out and "L3.4-main-corrected PASS" in out and "variant: corrected holds" in out
    assert run("verify", "bogus-id")[0] == 2


def test_classify_command():
    assert run("classify", "2,0,0", "--beta", "-1", "--alpha", "0") == (0, "FINITE A1-GE-2 (<l,h_{w1-w3}> >= 2, any beta and alpha)\n")
    assert run("classify", "1,0,0", "--beta", "-1")[1].startswith("FINITE A1-EQ-1-BETA-MINUS-1")
    assert run("classify", "0,3,1", "--beta", "5")[1].startswith("INFINITE A1-EQ-0-EXCLUDED")
    assert run("classify", "1,0", "--beta", "1")[0] == 2
    assert run("classify", "1,0,0", "--beta", "x")[0] == 2
    assert run("classify", "1,0,0")[0] == 2


def test_roots_and_decompose():
    code, out = run("roots")
    assert code == 0 and len(out.splitlines()) == 22
    code, out = run("decompose", "w1+w2")
    assert out == "w1+w2 = (w1+w4) + (w2-w4)\n"
    assert run("decompose", "w3-w2")[1] == "w3-w2: no decompositions\n"
    assert run("decompose", "2w1")[0] == 2
    assert run("decompose", "w1+")[0] == 2


def test_output_is_deterministic():
    assert run("bracket", "[q(+1,+2), q(-1,-3; t^-1)]") == run("bracket", "[q(+1,+2), q(-1,-3; t^-1)]")
