"""Text syntax for CK6 elements.

::

    expr := sum
    sum  := ['+'|'-'] term (('+'|'-') term)*
    term := (rational '*')? atom
    atom := gen | '[' expr ',' expr ']' | '(' expr ')'
    gen  := 'e(' i ',' j ';' poly ')' | 'h(' i ',' j ';' poly ')'
          | 'q(' +-i ',' +-j (';' poly)? ')' | 'vir(' poly ')' | 'central(' rational ')'

Polynomials are Laurent polynomials in ``t``; juxtaposition multiplies
(``3t^2``, ``1/2t^-1``).  When parameters are declared (the identity
catalog uses ``a, b, c``) they may appear inside polynomials together with
a postfix ``'`` for the ordinary derivative, e.g. ``a*b'*c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .laurent import ONE, LaurentPoly, as_scalar
from .supermatrix import SuperMatrix, superbracket


class ParseError(ValueError):
    def __init__(self, msg: str, col: int | None = None):
        self.col = col
        super().__init__(msg if col is None else f"{msg} (column {col})")


# -- polynomial expressions ----------------------------------------------------


@dataclass(frozen=True)
class PConst:
    value: LaurentPoly

    def eval(self, env):
        return self.value


@dataclass(frozen=True)
class PParam:
    name: str

    def eval(self, env):
        try:
            return env[self.name]
        except KeyError:
            raise ParseError(f"parameter {self.name!r} has no value") from None


@dataclass(frozen=True)
class PPrime:
    arg: object

    def eval(self, env):
        return self.arg.eval(env).derive()


@dataclass(frozen=True)
class PMul:
    args: tuple

    def eval(self, env):
        out = ONE
        for a in self.args:
            out = out * a.eval(env)
        return out


@dataclass(frozen=True)
class PSum:
    terms: tuple  # (sign, node)

    def eval(self, env):
        out = LaurentPoly()
        for s, a in self.terms:
            v = a.eval(env)
            out = out + v if s > 0 else out - v
        return out


def _params_of(node) -> set:
    if isinstance(node, PParam):
        return {node.name}
    if isinstance(node, PPrime):
        return _params_of(node.arg)
    if isinstance(node, PMul):
        return set().union(*(_params_of(a) for a in node.args))
    if isinstance(node, PSum):
        return set().union(*(_params_of(a) for _, a in node.terms))
    return set()


# -- element expressions ---------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    kind: str
    i: int = 0
    j: int = 0
    positive: bool = False
    poly: object = None
    scalar: object = 0

    def spec(self, env):
        from .algebra import GeneratorSpec

        coeff = self.poly.eval(env) if self.poly is not None else ONE
        return GeneratorSpec(self.kind, self.i, self.j, coeff, self.positive, self.scalar)

    def eval(self, env, conv):
        from .algebra import make_generator

        return make_generator(self.spec(env), conv)


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object

    def eval(self, env, conv):
        return superbracket(self.left.eval(env, conv), self.right.eval(env, conv))


@dataclass(frozen=True)
class Sum:
    terms: tuple  # (rational coefficient, node)

    def eval(self, env, conv):
        out = None
        for c, node in self.terms:
            v = node.eval(env, conv).scale(c)
            out = v if out is None else out + v
        return out


def parameters(node) -> set:
    """Names of the coefficient parameters used in an element expression."""
    if isinstance(node, Gen):
        return _params_of(node.poly) if node.poly is not None else set()
    if isinstance(node, Bracket):
        return parameters(node.left) | parameters(node.right)
    return set().union(*(parameters(n) for _, n in node.terms))


def evaluate(node, env: Mapping | None = None, conv=None) -> SuperMatrix:
    return node.eval(dict(env or {}), conv)


# -- recursive descent -------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, params=()):
        self.s = text
        self.pos = 0
        self.params = set(params)

    def error(self, msg):
        raise ParseError(msg, self.pos + 1)

    def ws(self):
        while self.pos < len(self.s) and self.s[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.ws()
        return self.s[self.pos] if self.pos < len(self.s) else ""

    def eat(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.ws()
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        while self.pos < len(self.s) and self.s[self.pos].isdigit():
            self.pos += 1
        txt = self.s[start:self.pos]
        if not txt.lstrip("+-"):
            self.pos = start
            self.error("expected an integer")
        return int(txt)

    def unsigned(self) -> int:
        self.ws()
        if not self.peek().isdigit():
            self.error("expected a digit")
        return self.integer()

    def rational(self) -> Fraction:
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.s[self.pos] == "-" else 1
            self.pos += 1
        n = self.unsigned()
        if self.peek() == "/":
            self.pos += 1
            den = self.unsigned()
            if den == 0:
                self.error("zero denominator")
            return Fraction(sign * n, den)
        return Fraction(sign * n)

    # element level
    def expr(self):
        terms = []
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.s[self.pos] == "-" else 1
            self.pos += 1
        terms.append(self.term(sign))
        while self.peek() in ("+", "-"):
            sign = -1 if self.s[self.pos] == "-" else 1
            self.pos += 1
            terms.append(self.term(sign))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self, sign):
        c = Fraction(sign)
        if self.peek().isdigit():
            c *= self.rational()
            self.eat("*")
        return as_scalar(c), self.atom()

    def atom(self):
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            left = self.expr()
            self.eat(",")
            right = self.expr()
            self.eat("]")
            return Bracket(left, right)
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.eat(")")
            return inner
        return self.gen()

    def name(self) -> str:
        self.ws()
        start = self.pos
        while self.pos < len(self.s) and self.s[self.pos].isalpha():
            self.pos += 1
        return self.s[start:self.pos]

    def index(self) -> int:
        start = self.pos
        i = self.unsigned()
        if not 1 <= i <= 4:
            self.pos = start
            self.error(f"index {i} outside 1..4")
        return i

    def gen(self):
        start = self.pos
        self.ws()
        col = self.pos
        name = self.name()
        if not name:
            self.error("expected a generator, '[' or '('")
        self.eat("(")
        if name in ("e", "h"):
            i = self.index()
            self.eat(",")
            j = self.index()
            if i == j:
                self.pos = col
                self.error(f"{name}({i},{j}) needs distinct indices")
            self.eat(";")
            p = self.poly()
            self.eat(")")
            return Gen(name.upper(), i, j, poly=p)
        if name == "q":
            si, i = self.signed_index()
            self.eat(",")
            sj, j = self.signed_index()
            if si != sj:
                self.pos = col
                self.error("q indices must carry the same sign")
            if si > 0 and i == j:
                self.pos = col
                self.error(f"2w{i} is not a root")
            p = None
            if self.peek() == ";":
                self.pos += 1
                p = self.poly()
            self.eat(")")
            return Gen("Q", i, j, positive=si > 0, poly=p)
        if name == "vir":
            p = self.poly()
            self.eat(")")
            return Gen("VIR", poly=p)
        if name == "central":
            c = self.rational()
            self.eat(")")
            return Gen("CENTRAL", scalar=as_scalar(c))
        self.pos = start
        self.error(f"unknown generator {name!r}")

    def signed_index(self):
        ch = self.peek()
        if ch not in "+-":
            self.error("q indices need an explicit sign")
        self.pos += 1
        return (1 if ch == "+" else -1), self.index()

    # polynomial level
    def poly(self):
        terms = []
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.s[self.pos] == "-" else 1
            self.pos += 1
        terms.append((sign, self.pterm()))
        while self.peek() in ("+", "-"):
            sign = -1 if self.s[self.pos] == "-" else 1
            self.pos += 1
            terms.append((sign, self.pterm()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return PSum(tuple(terms))

    def _starts_factor(self, ch: str) -> bool:
        return bool(ch) and (ch.isdigit() or ch == "t" or ch == "(" or ch in self.params)

    def pterm(self):
        factors = [self.factor()]
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                factors.append(self.factor())
            elif self._starts_factor(ch):
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else PMul(tuple(factors))

    def factor(self):
        ch = self.peek()
        if ch.isdigit():
            r = self.rational()
            node = PConst(LaurentPoly.const(r))
        elif ch == "t":
            self.pos += 1
            e = 1
            if self.peek() == "^":
                self.pos += 1
                e = self.integer()
            node = PConst(LaurentPoly.monomial(e))
        elif ch == "(":
            self.pos += 1
            node = self.poly()
            self.eat(")")
        elif ch and ch in self.params:
            self.pos += 1
            node = PParam(ch)
        else:
            self.error("expected a polynomial")
        while self.peek() in ("'", "′"):
            self.pos += 1
            node = PPrime(node)
        return node


def parse(text: str, params=()):
    """Parse an element expression; ``params`` lists allowed coefficient letters."""
    p = _Parser(text, params)
    node = p.expr()
    if p.peek():
        p.error(f"unexpected {p.peek()!r}")
    return node


def parse_poly(text: str, params=()):
    p = _Parser(text, params)
    node = p.poly()
    if p.peek():
        p.error(f"unexpected {p.peek()!r}")
    return node
