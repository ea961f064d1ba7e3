"""Normal-form arithmetic in skew PBW extensions and skew quantum rings.

Elements are finite maps from exponent tuples to nonzero coefficients, with
coefficients written on the left of the standard monomial
``x^u = x_1^u_1 ... x_n^u_n``.

Two independent multiplication routes exist:

* :func:`mul` uses the closed form ``lambda sigma^u(mu) Q(u, v) x^(u+v)`` in
  the quasi-commutative case and a memoized recursive reduction
  (``x^u r`` then ``x^w x_k``) otherwise;
* :func:`normalize_word` rewrites a word letter by letter with the defining
  relations and serves as the oracle for the first.
"""
from __future__ import annotations

import math

from .coeffs.poly import RatFunc
from .errors import (
    IllegalExponent,
    NotQuasiCommutative,
    PresentationMismatch,
    RelationsInconsistent,
)
from .presentation import Presentation, iterated_form


def _accumulate(out, e, c):
    s = out.get(e)
    s = c if s is None else s + c
    if s:
        out[e] = s
    else:
        out.pop(e, None)


class Element:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Presentation, terms=None):
        self.ring = ring
        self.terms = {}
        conv = ring.field.convert
        for e, c in (terms or {}).items():
            e = tuple(e)
            _check_exponent(ring, e)
            c = conv(c)
            if c:
                self.terms[e] = c

    @classmethod
    def _raw(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    # construction helpers
    @classmethod
    def const(cls, ring, c):
        return cls(ring, {(0,) * ring.n: c})

    @classmethod
    def monomial(cls, ring, u, c=1):
        return cls(ring, {tuple(u): c})

    @classmethod
    def gen(cls, ring, i, power=1):
        """x_i^power for a 1-based generator index."""
        return cls(ring, {tuple(power if k == i - 1 else 0 for k in range(ring.n)): 1})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _same(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise PresentationMismatch("elements from different presentations")

    def _lift(self, other):
        if isinstance(other, Element):
            self._same(other)
            return other
        return Element.const(self.ring, other)

    def __eq__(self, other):
        if isinstance(other, Element):
            return (self.ring is other.ring or self.ring == other.ring) and self.terms == other.terms
        try:
            return self == Element.const(self.ring, other)
        except Exception:
            return NotImplemented

    __hash__ = None

    def __add__(self, other):
        return add(self, self._lift(other))

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return add(self, -self._lift(other))

    def __rsub__(self, other):
        return add(self._lift(other), -self)

    def __mul__(self, other):
        return mul(self, self._lift(other))

    def __rmul__(self, other):
        return mul(self._lift(other), self)

    def __pow__(self, k):
        if k < 0:
            return inverse_monomial(self) ** (-k)
        result = Element.const(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def coeff(self, u):
        return self.terms.get(tuple(u), self.ring.field.zero())

    def degree(self):
        return degree_data(self)["deg"]

    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        from .frontend.printer import format_element

        return format_element(self)


def _check_exponent(ring, e):
    if len(e) != ring.n:
        raise IllegalExponent(f"exponent {e} has length {len(e)}, ring has n = {ring.n}")
    for k, a in enumerate(e):
        if a < 0 and k >= ring.r:
            raise IllegalExponent(f"x{k + 1} is not invertible (r = {ring.r}); exponent {e}")


def add(f: Element, g: Element) -> Element:
    f._same(g)
    out = dict(f.terms)
    for e, c in g.terms.items():
        _accumulate(out, e, c)
    return Element._raw(f.ring, out)


# --- quasi-commutative closed form ---------------------------------------

def _sigma_power(p, u, mu):
    """sigma^u(mu) = sigma_1^u_1 ... sigma_n^u_n (mu)."""
    if not isinstance(mu, RatFunc) or mu.is_const():
        return mu
    scales = None
    for s, a in zip(p.sigma, u):
        if a and not s.is_identity:
            sp = [c ** a for c in s.scales]
            scales = sp if scales is None else [x * y for x, y in zip(scales, sp)]
    if scales is None:
        return mu
    return mu.scale_vars(scales)


def _qpow(p, i, j, e):
    key = ("q", i, j, e)
    cache = p._cache
    if key not in cache:
        cache[key] = p.q[i][j] ** e
    return cache[key]


def transport_factor(p, u, v):
    """Q(u, v) with x^u x^v = Q(u, v) x^(u+v): prod_{i<j} q_ij^(u_j v_i)."""
    out = None
    n = p.n
    for i in range(n):
        if not v[i]:
            continue
        for j in range(i + 1, n):
            e = u[j] * v[i]
            if e:
                f = _qpow(p, i, j, e)
                out = f if out is None else out * f
    return p.field.one() if out is None else out


def monomial_product(lam, u, mu, v, p: Presentation) -> Element:
    """(lam x^u)(mu x^v) in a quasi-commutative presentation."""
    if not p.quasi_commutative:
        raise NotQuasiCommutative("closed-form monomial product needs a quasi-commutative presentation")
    u, v = tuple(u), tuple(v)
    c = lam * _sigma_power(p, u, mu) * transport_factor(p, u, v)
    w = tuple(a + b for a, b in zip(u, v))
    return Element(p, {w: c} if c else {})


def _mul_qc(f, g):
    p = f.ring
    out = {}
    for u, lam in f.terms.items():
        for v, mu in g.terms.items():
            c = lam * _sigma_power(p, u, mu) * transport_factor(p, u, v)
            _accumulate(out, tuple(a + b for a, b in zip(u, v)), c)
    return out


# --- general rewriting engine ---------------------------------------------

def _scaled_into(out, c, terms):
    for e, d in terms.items():
        _accumulate(out, e, c * d)


def _mon_coeff(p, u, r):
    """x^u r as {w: c}: peel the last letter, x_k r = sigma_k(r) x_k + delta_k(r)."""
    n = p.n
    if not any(u) or not isinstance(r, RatFunc) or r.is_const():
        return {u: r}
    key = ("c", u, frozenset(r.num.terms.items()), frozenset(r.den.terms.items()))
    hit = p._cache.get(key)
    if hit is not None:
        return hit
    k = max(i for i in range(n) if u[i])
    up = tuple(a - (i == k) for i, a in enumerate(u))
    out = {}
    sr = p.sigma[k](r)
    for w, c in _mon_coeff(p, up, sr).items():
        _scaled_into(out, c, _mon_gen(p, w, k))
    dr = p.delta[k](r)
    if dr:
        for w, c in _mon_coeff(p, up, dr).items():
            _accumulate(out, w, c)
    _check_611(p, u, r, out)
    p._cache[key] = out
    return out


def _check_611(p, u, r, out):
    lead = out.get(u)
    expect = _sigma_power(p, u, r)
    assert lead is not None and lead == expect, f"x^{u} r: leading coefficient {lead} != sigma^u(r)"
    du = sum(u)
    assert all(sum(w) < du for w in out if w != u), f"x^{u} r: lower part not of lower degree"


def _mon_gen(p, w, k):
    """x^w x_k as {exp: coeff} (memoized)."""
    key = ("g", w, k)
    cache = p._cache
    hit = cache.get(key)
    if hit is not None:
        return hit
    n = p.n
    j = max((i for i in range(n) if w[i]), default=-1)
    if j <= k:
        res = {tuple(a + (i == k) for i, a in enumerate(w)): p.field.one()}
    else:
        wp = tuple(a - (i == j) for i, a in enumerate(w))
        res = {}
        # x^w' (q_kj x_k x_j + L(j, k))
        for y, c in _mon_coeff(p, wp, p.q[k][j]).items():
            for z, d in _mon_gen(p, y, k).items():
                _scaled_into(res, c * d, _mon_gen(p, z, j))
        for e, d in p.lower(j, k).items():
            part = _mon_coeff(p, wp, d)
            if any(e):
                l = e.index(1)
                for y, c in part.items():
                    _scaled_into(res, c, _mon_gen(p, y, l))
            else:
                for y, c in part.items():
                    _accumulate(res, y, c)
    cache[key] = res
    return res


def _mon_mon(p, u, v):
    """x^u x^v, with the leading-coefficient and degree checks of the PBW normal form."""
    key = ("m", u, v)
    cache = p._cache
    hit = cache.get(key)
    if hit is not None:
        return hit
    cur = {u: p.field.one()}
    for i in range(p.n):
        for _ in range(v[i]):
            nxt = {}
            for w, c in cur.items():
                _scaled_into(nxt, c, _mon_gen(p, w, i))
            cur = nxt
    top = tuple(a + b for a, b in zip(u, v))
    assert cur.get(top), f"x^{u} x^{v}: c_(u,v) vanished"
    d = sum(top)
    assert all(sum(w) < d for w in cur if w != top), f"x^{u} x^{v}: deg p_(u,v) >= |u+v|"
    cache[key] = cur
    return cur


def _mul_general(f, g):
    p = f.ring
    out = {}
    for u, lam in f.terms.items():
        for v, mu in g.terms.items():
            for w, c in _mon_coeff(p, u, mu).items():
                _scaled_into(out, lam * c, _mon_mon(p, w, v))
    return out


def mul(f: Element, g: Element) -> Element:
    f._same(g)
    if f.ring.quasi_commutative:
        return Element._raw(f.ring, _mul_qc(f, g))
    return Element._raw(f.ring, _mul_general(f, g))


def inverse_monomial(f: Element) -> Element:
    """Inverse of c x^u when every x_i with u_i != 0 is invertible."""
    p = f.ring
    if len(f.terms) != 1:
        raise IllegalExponent("only monomials with invertible coefficient are inverted here")
    (u, c), = f.terms.items()
    neg = tuple(-a for a in u)
    _check_exponent(p, neg)
    # sigma^-u(c^-1) x^-u is a right inverse up to the scalar Q(u, -u)
    trial = monomial_product(p.field.one(), neg, _inv(c), (0,) * p.n, p)
    k = mul(f, trial).terms[(0,) * p.n]
    if k == 1:
        return trial
    kinv = _inv(k)
    return Element._raw(p, {e: kinv * d for e, d in trial.terms.items()})


def _inv(c):
    if isinstance(c, int):
        if c not in (1, -1):
            raise IllegalExponent(f"{c} is not a unit of Z")
        return c
    return c ** -1


# --- oracle -----------------------------------------------------------------

def word_letters(u):
    """Letters of x^u = x_1^u_1 ... x_n^u_n."""
    out = []
    for i, a in enumerate(u):
        s = 1 if a > 0 else -1
        out.extend([("x", i, s)] * abs(a))
    return out


def _reducible(a, b):
    if b[0] == "c":
        return True
    if a[0] == "c":
        return False
    if a[1] > b[1]:
        return True
    return a[1] == b[1] and a[2] == -b[2]


def normalize_word(word, p: Presentation) -> Element:
    """Reduce a word of letters ``("c", coeff)`` / ``("x", i, +-1)`` (0-based i).

    Rightmost reducible pair first; one relation application per step.
    """
    for letter in word:
        if letter[0] == "x" and letter[2] < 0 and not p.laurent(letter[1]):
            raise IllegalExponent(f"x{letter[1] + 1}^-1 is not available (r = {p.r})")
    one = p.field.one()
    pending = [(one, tuple(word))]
    out = {}
    steps = 0
    while pending:
        c, w = pending.pop()
        while w and w[0][0] == "c":
            c = c * w[0][1]
            w = w[1:]
        if not c:
            continue
        pos = next((k for k in range(len(w) - 2, -1, -1) if _reducible(w[k], w[k + 1])), None)
        if pos is None:
            e = [0] * p.n
            for _, i, s in w:
                e[i] += s
            _accumulate(out, tuple(e), c)
            continue
        steps += 1
        a, b = w[pos], w[pos + 1]
        head, tail = w[:pos], w[pos + 2:]
        if a[0] == "c":
            pending.append((c, head + (("c", a[1] * b[1]),) + tail))
        elif b[0] == "c":
            _, i, s = a
            r = b[1]
            pending.append((c, head + (("c", p.sigma[i](r, s)), a) + tail))
            if s > 0:
                d = p.delta[i](r)
                if d:
                    pending.append((c, head + (("c", d),) + tail))
        elif a[1] == b[1]:
            pending.append((c, head + tail))
        else:
            j, s = a[1], a[2]
            i, t = b[1], b[2]
            coef = p.q[i][j] ** (s * t)
            pending.append((c, head + (("c", coef), b, a) + tail))
            if s > 0 and t > 0:
                for e, d in p.lower(j, i).items():
                    mid = (("c", d),)
                    if any(e):
                        mid += (("x", e.index(1), 1),)
                    pending.append((c, head + mid + tail))
    return Element._raw(p, out)


def product_words(f: Element, g: Element):
    """Words lam x^u mu x^v for every pair of terms of f and g."""
    return [
        [("c", lam)] + word_letters(u) + [("c", mu)] + word_letters(v)
        for u, lam in f.terms.items()
        for v, mu in g.terms.items()
    ]


def normalize_product(f: Element, g: Element) -> Element:
    f._same(g)
    total = Element._raw(f.ring, {})
    for w in product_words(f, g):
        total = add(total, normalize_word(w, f.ring))
    return total


# --- degree data, symbols, transports ---------------------------------------

def degree_data(f: Element) -> dict:
    """deg = max |u| over the support (|u| sums absolute values); -inf for 0."""
    if not f.terms:
        return {"deg": -math.inf, "exponents": set()}
    return {"deg": max(sum(abs(a) for a in u) for u in f.terms), "exponents": set(f.terms)}


def leading_form(f: Element) -> Element:
    """Sum of the terms of top total degree."""
    d = degree_data(f)["deg"]
    return Element._raw(f.ring, {u: c for u, c in f.terms.items() if sum(abs(a) for a in u) == d})


def transfer(f: Element, ring: Presentation, convert=None) -> Element:
    """Same terms read in another presentation, coefficients mapped by ``convert``."""
    convert = convert or ring.field.convert
    return Element(ring, {u: convert(c) for u, c in f.terms.items()})


def iterated_mul(f: Element, g: Element) -> Element:
    """Product computed stage by stage in R[z_1; theta_1]...[z_n; theta_n]."""
    f._same(g)
    p = f.ring
    form = p._cache.get("iterated")
    if form is None:
        form = p._cache["iterated"] = iterated_form(p)
    prod = form.mul(form.nest(f.terms), form.nest(g.terms))
    return Element(p, form.flatten(prod))


def check_relations(p: Presentation):
    """Associativity on overlap ambiguities x_k x_j x_i and x_j x_i t for a validated presentation."""
    n = p.n
    gens = [Element.gen(p, i + 1) for i in range(n)]
    params = [Element.const(p, p.field.param(k)) for k in range(len(p.field.params))]
    scalars = params or [Element.const(p, 1)]
    try:
        for k in range(n):
            for j in range(k + 1):
                for i in range(j + 1):
                    a, b, c = gens[k], gens[j], gens[i]
                    if (a * b) * c != a * (b * c):
                        raise RelationsInconsistent(
                            f"(x{k + 1} x{j + 1}) x{i + 1} != x{k + 1} (x{j + 1} x{i + 1})", "lower_terms"
                        )
                for t in scalars:
                    a, b = gens[k], gens[j]
                    if (a * b) * t != a * (b * t):
                        raise RelationsInconsistent(
                            f"(x{k + 1} x{j + 1}) r != x{k + 1} (x{j + 1} r) for r = {t}", "lower_terms"
                        )
    except AssertionError as e:
        raise RelationsInconsistent(str(e), "lower_terms") from e

