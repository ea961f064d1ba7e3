"""Expression grammar for coefficients and ring elements.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')'

Names ``x<k>`` are generators, every other identifier must be a declared
parameter.  Multiplication is the ring product, evaluated left to right;
division is only by a nonzero scalar.
"""
from __future__ import annotations

import re

from ..errors import IllegalExponent, ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
_GEN = re.compile(r"x(\d+)$")


def tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", int(num), start))
        elif name is not None:
            tokens.append(("name", name, start))
        elif op in "+-*/^()":
            tokens.append(("op", op, start))
        elif op.strip():
            raise ParseError(f"unexpected character {op!r}", start)
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", tok[2])
        return tok

    def at(self, *ops):
        tok = self.peek()
        return tok[0] == "op" and tok[1] in ops

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.at("+", "-"):
            op = self.take()[1]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.at("*", "/"):
            op = self.take()[1]
            node = ("mul" if op == "*" else "div", node, self.unary())
        return node

    def unary(self):
        if self.at("-"):
            self.take()
            return ("neg", self.unary())
        if self.at("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.at("^"):
            self.take()
            sign = 1
            if self.at("-"):
                self.take()
                sign = -1
            tok = self.take()
            if tok[0] != "num":
                raise ParseError("exponent must be an integer", tok[2])
            node = ("pow", node, sign * tok[1])
        return node

    def atom(self):
        tok = self.take()
        kind, value, pos = tok
        if kind == "num":
            return ("num", value)
        if kind == "name":
            m = _GEN.match(value)
            if m:
                return ("gen", int(m.group(1)), pos)
            return ("param", value, pos)
        if kind == "op" and value == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {'end of input' if kind == 'end' else repr(value)}", pos)


def parse_ast(text):
    return _Parser(text).parse()


def _eval(node, ctx):
    kind = node[0]
    if kind == "num":
        return ctx.num(node[1])
    if kind == "param":
        return ctx.param(node[1], node[2])
    if kind == "gen":
        return ctx.gen(node[1], node[2])
    if kind == "neg":
        return -_eval(node[1], ctx)
    if kind == "add":
        return _eval(node[1], ctx) + _eval(node[2], ctx)
    if kind == "sub":
        return _eval(node[1], ctx) - _eval(node[2], ctx)
    if kind == "mul":
        return _eval(node[1], ctx) * _eval(node[2], ctx)
    if kind == "div":
        return ctx.div(_eval(node[1], ctx), _eval(node[2], ctx))
    if kind == "pow":
        return ctx.pow(_eval(node[1], ctx), node[2])
    raise ParseError(f"unknown node {kind}")


class _CoeffContext:
    def __init__(self, field):
        self.field = field

    def num(self, v):
        return self.field.convert(v)

    def param(self, name, pos):
        if name not in self.field.params:
            raise ParseError(f"unknown parameter {name!r}", pos)
        return self.field.param(self.field.params.index(name))

    def gen(self, i, pos):
        raise ParseError("generators are not allowed in a coefficient", pos)

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero in expression")
        if isinstance(a, int) and isinstance(b, int):
            if a % b:
                raise ParseError("non-integral quotient in Z mode")
            return a // b
        return a / b

    def pow(self, a, k):
        if k < 0 and isinstance(a, int):
            if a in (1, -1):
                return a ** (-k)
            raise ParseError("negative power of a non-unit in Z mode")
        return a ** k


class _ElementContext(_CoeffContext):
    def __init__(self, ring):
        super().__init__(ring.field)
        self.ring = ring

    def _lift(self, c):
        from ..elements import Element

        return Element.const(self.ring, c)

    def num(self, v):
        return self._lift(super().num(v))

    def param(self, name, pos):
        return self._lift(super().param(name, pos))

    def gen(self, i, pos):
        from ..elements import Element

        if not 1 <= i <= self.ring.n:
            raise ParseError(f"unknown generator x{i} (n = {self.ring.n})", pos)
        return Element.gen(self.ring, i)

    def _scalar(self, e):
        zero = (0,) * self.ring.n
        if any(u != zero for u in e.terms):
            raise ParseError("division is only by scalars")
        return e.terms.get(zero, self.field.zero())

    def div(self, a, b):
        c = self._scalar(b)
        return a * self._lift(super().div(self.field.one(), c))

    def pow(self, a, k):
        if k < 0:
            zero = (0,) * self.ring.n
            if set(a.terms) == {zero}:
                return self._lift(super().pow(a.terms[zero], k))
            if len(a.terms) != 1:
                raise IllegalExponent("negative powers only of monomials")
            (u, _), = a.terms.items()
            for idx, e in enumerate(u):
                if e and idx >= self.ring.r:
                    raise IllegalExponent(f"x{idx + 1}^-1 is not available (r = {self.ring.r})")
        return a ** k


def parse_coefficient(text, field):
    if not isinstance(text, str):
        return field.convert(text)
    return _eval(parse_ast(text), _CoeffContext(field))


def parse_element(text, ring):
    return _eval(parse_ast(text), _ElementContext(ring))


def parse_linear(text, n, field):
    """A degree <= 1 expression d0 + sum d_k x_k as {exponent: coeff}."""
    from ..presentation import Presentation, validate
    from ..coeffs.maps import Automorphism, Derivation
    from ..errors import PresentationError

    one = field.one()
    flat = validate(Presentation(
        n=n, field=field, q=tuple(tuple(one for _ in range(n)) for _ in range(n)),
        sigma=(Automorphism.identity(len(field.params)),) * n, delta=(Derivation(),) * n,
    ))
    e = parse_element(text, flat)
    for u in e.terms:
        if sum(u) > 1:
            raise PresentationError(f"lower term {text!r} has degree > 1")
    return dict(e.terms)

