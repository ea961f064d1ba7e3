"""Sparse multivariate polynomials over Q and the fraction field Q(t1..tm).

Only what the coefficient layer needs: ring operations, partial
derivatives, scaling substitutions t_k -> c_k t_k, and a few cheap
reductions.  Multivariate fractions are not gcd-reduced; equality is by
cross-multiplication.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import ModeMismatch


class Poly:
    """Polynomial in ``nvars`` variables; ``terms`` maps exponent tuples to nonzero Fractions."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {
            e: c if type(c) is Fraction else Fraction(c) for e, c in (terms or {}).items() if c
        }

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, k):
        return cls(nvars, {tuple(int(i == k) for i in range(nvars)): 1})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return all(not any(e) for e in self.terms)

    def const_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def is_monomial(self):
        return len(self.terms) == 1

    def lead(self):
        """Lex-largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.nvars, out)

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    def __pow__(self, k):
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, e, sign=1):
        return Poly(self.nvars, {tuple(a + sign * b for a, b in zip(x, e)): c for x, c in self.terms.items()})

    def min_exponent(self):
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def diff(self, k):
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                d = list(e)
                d[k] -= 1
                out[tuple(d)] = c * e[k]
        return Poly(self.nvars, out)

    def scale_vars(self, consts):
        """Substitute t_k -> consts[k] * t_k."""
        out = {}
        for e, c in self.terms.items():
            f = Fraction(c)
            for ck, ek in zip(consts, e):
                f *= Fraction(ck) ** ek
            out[e] = f
        return Poly(self.nvars, out)

    def divmod_exact(self, other):
        """Quotient if ``other`` divides ``self`` exactly, else None (lex division)."""
        rem = Poly(self.nvars, self.terms)
        q = {}
        le, lc = other.lead()
        steps = 0
        while not rem.is_zero():
            re, rc = rem.lead()
            d = tuple(a - b for a, b in zip(re, le))
            if any(x < 0 for x in d):
                return None
            coef = rc / lc
            q[d] = q.get(d, 0) + coef
            rem = rem - other.shift(d) * coef
            steps += 1
            if steps > 10_000:
                return None
        return Poly(self.nvars, q)

    def format(self, names):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                names[k] if a == 1 else f"{names[k]}^{a}" for k, a in enumerate(e) if a
            )
            neg = c < 0
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((neg, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out


def _univariate_index(p, q):
    """Index of the only variable occurring in p and q, or None."""
    used = {k for poly in (p, q) for e in poly.terms for k, a in enumerate(e) if a}
    return next(iter(used)) if len(used) == 1 else None


def _dense(p, k):
    """Coefficient list (low degree first) of a polynomial in t_k alone."""
    deg = max(e[k] for e in p.terms)
    out = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        out[e[k]] = c
    return out


def _sparse(coeffs, nvars, k):
    base = [0] * nvars
    terms = {}
    for d, c in enumerate(coeffs):
        if c:
            base[k] = d
            terms[tuple(base)] = c
    return Poly(nvars, terms)


def _dense_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for d in range(len(a) - 1 - db, -1, -1):
        c = a[d + db] / lb
        if c:
            q[d] = c
            for j, bj in enumerate(b):
                a[d + j] -= c * bj
    r = a[:db] or [Fraction(0)]
    while len(r) > 1 and not r[-1]:
        r.pop()
    return q, r


def _dense_gcd(a, b):
    while any(b):
        _, r = _dense_divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def _uni_gcd_divide(num, den, k):
    """(num/g, den/g) for g = gcd(num, den), both polynomials in t_k alone."""
    a, b = _dense(num, k), _dense(den, k)
    g = _dense_gcd(a, b)
    if len(g) == 1:
        return num, den
    nv = num.nvars
    return _sparse(_dense_divmod(a, g)[0], nv, k), _sparse(_dense_divmod(b, g)[0], nv, k)


class RatFunc:
    """Element of Q(t1..tm) stored as an unreduced num/den pair."""

    __slots__ = ("num", "den", "names")
    __hash__ = None

    def __init__(self, num, den, names, normalize=True):
        self.names = names
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @property
    def nvars(self):
        return len(self.names)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.names != self.names:
                raise ModeMismatch(f"Q({','.join(self.names)}) vs Q({','.join(other.names)})")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFunc(Poly.const(self.nvars, other), Poly.const(self.nvars, 1), self.names, False)
        raise ModeMismatch(f"cannot combine rational function with {type(other).__name__}")

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ModeMismatch:
            return NotImplemented
        if self.den == o.den:
            return self.num == o.num
        return self.num * o.den == o.num * self.den

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den, self.names)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den, self.names)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.names, False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return RatFunc(Poly(self.nvars), Poly.const(self.nvars, 1), self.names, False)
            return RatFunc(self.num * other, self.den, self.names, False)
        o = self._coerce(other)
        if o.is_const():
            c = o.num.const_value() / o.den.const_value()
            return RatFunc(self.num * c, self.den, self.names, False) if c else o * 0
        if self.is_const():
            return o * self
        return RatFunc(self.num * o.num, self.den * o.den, self.names)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num, self.names)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k, self.names)

    def diff(self, k):
        d = self.den
        return RatFunc(self.num.diff(k) * d - self.num * d.diff(k), d * d, self.names)

    def scale_vars(self, consts):
        return RatFunc(self.num.scale_vars(consts), self.den.scale_vars(consts), self.names)

    def laurent_monomial(self):
        """(scalar, exponent) if this is c * t^e with e in Z^m, else None."""
        if not (self.num.is_monomial() and self.den.is_monomial()):
            return None
        (en, cn), = self.num.terms.items()
        (ed, cd), = self.den.terms.items()
        return cn / cd, tuple(a - b for a, b in zip(en, ed))

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def __repr__(self):
        return f"RatFunc({self.format()})"

    def format(self):
        n = self.num.format(self.names)
        if self.den.is_const() and self.den.const_value() == 1:
            return n
        d = self.den.format(self.names)
        if not self.num.is_monomial():
            n = f"({n})"
        if not (self.den.is_monomial() and self.den.lead()[1] == 1):
            d = f"({d})"
        return f"{n}/{d}"

    __str__ = format


def _normalize(num, den):
    nv = num.nvars
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return num, Poly.const(nv, 1)
    # cancel common monomial content
    m = tuple(min(a, b) for a, b in zip(num.min_exponent(), den.min_exponent()))
    if any(m):
        num, den = num.shift(m, -1), den.shift(m, -1)
    if not den.is_const() and not (num.is_const()):
        q = num.divmod_exact(den)
        if q is not None:
            num, den = q, Poly.const(nv, 1)
        else:
            k = _univariate_index(num, den)
            if k is not None:
                num, den = _uni_gcd_divide(num, den, k)
    _, lc = den.lead()
    if lc != 1:
        inv = 1 / lc
        num, den = num * inv, den * inv
    return num, den
