"""Coefficient domains: Q, F_p, Q(t1..tm) and the integers.

Elements are ordinary Python values (``Fraction``, ``int``, :class:`Fp`,
:class:`RatFunc`) with operator overloading; a domain object knows how to
build, parse, print and serialize them.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import ModeMismatch, ParseError
from .poly import Poly, RatFunc


class Fp:
    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ModeMismatch(f"F_{self.p} vs F_{other.p}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Fp(other, self.p)
        raise ModeMismatch(f"cannot combine F_{self.p} element with {type(other).__name__}")

    def __eq__(self, other):
        try:
            return self.v == self._coerce(other).v
        except ModeMismatch:
            return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __add__(self, other):
        return Fp(self.v + self._coerce(other).v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.v - self._coerce(other).v, self.p)

    def __rsub__(self, other):
        return Fp(self._coerce(other).v - self.v, self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __mul__(self, other):
        return Fp(self.v * self._coerce(other).v, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Fp(pow(self.v, k, self.p), self.p)

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Domain:
    """Coefficient ring description.  Subclasses fix the element type."""

    kind = ""
    params: tuple = ()
    is_field = True

    def __eq__(self, other):
        return type(self) is type(other) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(str(self.to_json()))

    def zero(self):
        return self.convert(0)

    def one(self):
        return self.convert(1)

    def is_zero(self, a):
        return not a

    def param(self, k):
        raise ModeMismatch(f"{self} has no parameters")

    def format(self, a):
        return str(a)

    def is_negative(self, a):
        """Whether a prints with a leading minus sign that may be factored out."""
        return False

    def __repr__(self):
        return f"{type(self).__name__}()"


class RationalField(Domain):
    kind = "Q"

    def convert(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse_literal(x)
        raise ModeMismatch(f"cannot convert {x!r} into Q")

    def parse_literal(self, s):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad rational literal {s!r}") from e

    def check(self, a):
        if not isinstance(a, Fraction):
            raise ModeMismatch(f"{a!r} is not a rational")
        return a

    def is_negative(self, a):
        return a < 0

    def to_json(self):
        return {"kind": "Q"}

    def __str__(self):
        return "Q"


class IntegerRing(Domain):
    kind = "Z"
    is_field = False

    def convert(self, x):
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        if isinstance(x, int) and not isinstance(x, bool):
            return x
        if isinstance(x, str):
            return self.parse_literal(x)
        raise ModeMismatch(f"cannot convert {x!r} into Z")

    def parse_literal(self, s):
        try:
            return int(s.strip())
        except ValueError as e:
            raise ParseError(f"bad integer literal {s!r}") from e

    def check(self, a):
        if not isinstance(a, int):
            raise ModeMismatch(f"{a!r} is not an integer")
        return a

    def is_negative(self, a):
        return a < 0

    def to_json(self):
        return {"kind": "Z"}

    def __str__(self):
        return "Z"


class PrimeField(Domain):
    kind = "Fp"

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def convert(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise ModeMismatch(f"F_{x.p} element in F_{self.p}")
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Fp(x, self.p)
        if isinstance(x, Fraction):
            return Fp(x.numerator, self.p) / Fp(x.denominator, self.p)
        if isinstance(x, str):
            return self.parse_literal(x)
        raise ModeMismatch(f"cannot convert {x!r} into F_{self.p}")

    def parse_literal(self, s):
        try:
            return self.convert(Fraction(s.strip()))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad F_{self.p} literal {s!r}") from e

    def check(self, a):
        if not isinstance(a, Fp) or a.p != self.p:
            raise ModeMismatch(f"{a!r} is not in F_{self.p}")
        return a

    def to_json(self):
        return {"kind": "Fp", "p": self.p}

    def __str__(self):
        return f"F_{self.p}"

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalFunctionField(Domain):
    kind = "Qt"

    def __init__(self, params):
        params = tuple(params)
        if not params:
            raise ValueError("Q(t) mode needs at least one parameter")
        for name in params:
            if not name.isidentifier() or (name[0] == "x" and name[1:].isdigit()):
                raise ValueError(f"bad parameter name {name!r}")
        if len(set(params)) != len(params):
            raise ValueError("duplicate parameter names")
        self.params = params

    @property
    def m(self):
        return len(self.params)

    def convert(self, x):
        if isinstance(x, RatFunc):
            if x.names != self.params:
                raise ModeMismatch("rational function over different parameters")
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return RatFunc(Poly.const(self.m, x), Poly.const(self.m, 1), self.params, False)
        if isinstance(x, str):
            return self.parse_literal(x)
        raise ModeMismatch(f"cannot convert {x!r} into {self}")

    def param(self, k):
        return RatFunc(Poly.var(self.m, k), Poly.const(self.m, 1), self.params, False)

    def param_index(self, name):
        return self.params.index(name)

    def parse_literal(self, s):
        from ..frontend.parser import parse_coefficient

        return parse_coefficient(s, self)

    def check(self, a):
        return self.convert(a)

    def monomial(self, c, e):
        """c * t^e for an integer exponent vector e (negative entries allowed)."""
        num = {tuple(max(a, 0) for a in e): c}
        den = {tuple(max(-a, 0) for a in e): 1}
        return RatFunc(Poly(self.m, num), Poly(self.m, den), self.params)

    def format(self, a):
        return a.format()

    def is_negative(self, a):
        if not a.num.terms:
            return False
        return a.den.is_const() and a.num.lead()[1] < 0

    def to_json(self):
        return {"kind": "Qt", "params": list(self.params)}

    def __str__(self):
        return f"Q({','.join(self.params)})"

    def __repr__(self):
        return f"RationalFunctionField({self.params!r})"


QQ = RationalField()
ZZ = IntegerRing()


def domain_from_json(spec) -> Domain:
    kind = spec.get("kind")
    if kind == "Q":
        return QQ
    if kind == "Z":
        return ZZ
    if kind == "Fp":
        return PrimeField(int(spec["p"]))
    if kind == "Qt":
        return RationalFunctionField(spec["params"])
    raise ValueError(f"unknown field kind {kind!r}")


def field_arith(a, b, op):
    """Exact binary operation on two coefficients of the same mode."""
    _same_mode(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if isinstance(a, int) and isinstance(b, int):
            raise ModeMismatch("division is not defined in Z mode")
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")


def _same_mode(a, b):
    def mode(x):
        if isinstance(x, Fp):
            return ("Fp", x.p)
        if isinstance(x, RatFunc):
            return ("Qt", x.names)
        if isinstance(x, Fraction):
            return ("Q",)
        if isinstance(x, int):
            return ("Z",)
        raise ModeMismatch(f"not a coefficient: {x!r}")

    if mode(a) != mode(b):
        raise ModeMismatch(f"mixed-mode operands {mode(a)} and {mode(b)}")
