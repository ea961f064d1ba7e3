"""Truncated Hahn series over a quantum torus and the cone-power test of m^i.

A :class:`HahnSeries` stores the exact coefficients at every exponent
strictly below ``bound`` (under its order); nothing is known at or above
``bound``.  ``bound=None`` means the stored finite support is the whole
series.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .elements import Element, inverse_monomial, monomial_product, mul
from .errors import (
    DimensionMismatch,
    NotQuasiCommutative,
    PresentationMismatch,
    UnknownLeadingTerm,
    ZeroSeries,
)
from .exponents import (
    MonomialOrder,
    add as vadd,
    cone_power_membership,
    factor_into_positives,
    min_positive,
    scale,
    sub as vsub,
)
from .valuation import INF


def _vmin(order, a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a if order.compare(a, b) <= 0 else b


class HahnSeries:
    __slots__ = ("ring", "order", "terms", "bound")

    def __init__(self, ring, order: MonomialOrder, terms=None, bound=None):
        if not ring.quasi_commutative:
            raise NotQuasiCommutative("series live over a quasi-commutative torus")
        if ring.r != ring.n:
            raise DimensionMismatch("series need every variable invertible (r = n)")
        if order.n != ring.n:
            raise DimensionMismatch(f"order on Z^{order.n} for a torus of rank {ring.n}")
        self.ring = ring
        self.order = order
        self.bound = tuple(bound) if bound is not None else None
        conv = ring.field.convert
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            c = conv(c)
            if c and self.below(e):
                self.terms[e] = c

    @classmethod
    def from_element(cls, f: Element, order, bound=None):
        return cls(f.ring, order, f.terms, bound)

    @classmethod
    def one(cls, ring, order):
        return cls(ring, order, {(0,) * ring.n: 1})

    @classmethod
    def _raw(cls, ring, order, terms, bound):
        obj = cls.__new__(cls)
        obj.ring, obj.order, obj.terms, obj.bound = ring, order, terms, bound
        return obj

    def below(self, e):
        return self.bound is None or self.order.compare(e, self.bound) < 0

    @property
    def exact(self):
        return self.bound is None

    def known_terms_for_val(self):
        if not self.terms and self.bound is not None:
            raise UnknownLeadingTerm(f"no known term below {self.bound}")
        return self.terms

    def val(self):
        if not self.terms:
            if self.bound is None:
                return INF
            raise UnknownLeadingTerm(f"no known term below {self.bound}")
        return self.order.min(self.terms)

    def val_lower(self):
        """A lower bound for the valuation: the true one if known, else the bound."""
        if self.terms:
            return self.order.min(self.terms)
        return INF if self.bound is None else self.bound

    def is_zero(self):
        return not self.terms and self.bound is None

    def truncate(self, bound):
        b = _vmin(self.order, self.bound, tuple(bound))
        return HahnSeries(self.ring, self.order, self.terms, b)

    def to_element(self):
        return Element(self.ring, self.terms)

    def _check(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise PresentationMismatch("series over different rings")
        if self.order != other.order:
            raise PresentationMismatch("series under different orders")

    def __add__(self, other):
        if isinstance(other, Element):
            other = HahnSeries.from_element(other, self.order)
        self._check(other)
        b = _vmin(self.order, self.bound, other.bound)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return HahnSeries(self.ring, self.order, out, b)

    def __neg__(self):
        return HahnSeries._raw(self.ring, self.order, {e: -c for e, c in self.terms.items()}, self.bound)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            other = HahnSeries.from_element(other, self.order)
        return series_mul(self, other)

    def equal_below(self, other, bound=None):
        """Coefficientwise equality at every exponent < bound (both sides must be known there).

        ``bound=None`` asks for equality of two exact series.
        """
        if bound is None:
            return self.exact and other.exact and self.terms == other.terms
        for s in (self, other):
            if s.bound is not None and self.order.compare(s.bound, bound) < 0:
                return False
        keys = set(self.terms) | set(other.terms)
        zero = self.ring.field.zero()
        for e in keys:
            if self.order.compare(e, bound) < 0 and self.terms.get(e, zero) != other.terms.get(e, zero):
                return False
        return True

    def __repr__(self):
        return f"HahnSeries({self})"

    def __str__(self):
        from .frontend.printer import format_series

        return format_series(self)


def series_mul(f: HahnSeries, g: HahnSeries) -> HahnSeries:
    f._check(g)
    order = f.order
    if f.is_zero() or g.is_zero():
        return HahnSeries._raw(f.ring, order, {}, None)
    vf, vg = f.val_lower(), g.val_lower()
    bound = None
    if g.bound is not None:
        bound = vadd(vf, g.bound)
    if f.bound is not None:
        bound = _vmin(order, bound, vadd(vg, f.bound))
    p = f.ring
    out = {}
    for u, lam in f.terms.items():
        for v, mu in g.terms.items():
            w = vadd(u, v)
            if bound is not None and order.compare(w, bound) >= 0:
                continue
            c = monomial_product(lam, u, mu, v, p).terms.get(w)
            if c is None:
                continue
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return HahnSeries._raw(p, order, out, bound)


@dataclass
class Inversion:
    series: HahnSeries
    terms_used: int
    reached_target: bool
    notes: list = field(default_factory=list)


def _first_key_index(order, g):
    for idx, k in enumerate(order.key(g)):
        if k:
            return idx, k
    return None, 0


def series_invert(f: HahnSeries, target_bound, fallback_terms: int = 12, verify: bool = True) -> Inversion:
    """Inverse g with f*g = 1 at every exponent below ``target_bound``.

    f = c x^m (1 + h) with v(h) > 0 and f^-1 = sum_k (-h)^k (c x^m)^-1, so g
    is needed exactly below target - m.  When the first key of v(h) is
    positive the tail beyond K terms lies above that region; otherwise
    ``fallback_terms`` terms are summed and the returned bound is the first
    exponent the truncation cannot vouch for.
    """
    order = f.order
    target = tuple(target_bound)
    if f.is_zero():
        raise ZeroSeries("zero series has no inverse")
    if not f.terms:
        raise UnknownLeadingTerm(f"leading term of f lies at or above its bound {f.bound}")
    p = f.ring
    m = f.val()
    lead = Element(p, {m: f.terms[m]})
    lead_inv = inverse_monomial(lead)
    lead_inv_s = HahnSeries.from_element(lead_inv, order)
    rest = f - HahnSeries.from_element(lead, order)
    h = series_mul(lead_inv_s, rest)
    inv_target = vsub(target, m)
    notes = []
    if h.is_zero():
        return Inversion(lead_inv_s, 1, True, notes)
    vh = h.val_lower()
    idx, k1 = _first_key_index(order, vh)
    if idx == 0:
        tk = order.key(target)[0]
        K = max(0, math.floor(tk / k1))
        while order.compare(scale(K + 1, vh), target) < 0:
            K += 1
        reached = True
    else:
        K = fallback_terms
        reached = order.compare(scale(K + 1, vh), target) >= 0
        notes.append(
            f"v(h) = {vh} has zero leading key; summed {K + 1} terms (non-Archimedean direction)"
        )
    tail = scale(K + 1, vh)
    s_bound = _vmin(order, target, tail)
    one = HahnSeries.one(p, order)
    neg_h = -h
    total = one.truncate(s_bound)
    power = one
    for _ in range(K):
        power = series_mul(power, neg_h).truncate(s_bound)
        total = total + power
    total = total.truncate(s_bound)
    inv = series_mul(total, lead_inv_s)
    if reached:
        inv = inv.truncate(inv_target)
    else:
        notes.append(f"exact only below {inv.bound}")
    check = series_mul(f, inv)
    if verify:
        assert check.equal_below(HahnSeries.one(p, order), check.bound), "f * f^-1 != 1 below the bound"
    done = reached and (check.bound is None or order.compare(check.bound, target) >= 0)
    return Inversion(inv, K + 1, done, notes)


# --- powers of the maximal ideal ------------------------------------------------

def _series_val(f, order):
    if isinstance(f, HahnSeries):
        return f.val(), f.order
    if order is None:
        raise DimensionMismatch("an order is required")
    return order.min(f.terms) if f.terms else INF, order


def m_power_membership(f, i: int, order: MonomialOrder = None) -> bool:
    v, order = _series_val(f, order)
    if v is INF:
        return True
    return cone_power_membership(v, i, order)


def monomial_witness(g, i, ring, order):
    """Monomials x^e_1 .. x^e_i (each of positive value) and the unit c with prod = c x^g."""
    parts = factor_into_positives(g, i, order)
    one = ring.field.one()
    factors = [Element._raw(ring, {e: one}) for e in parts]
    prod = factors[0]
    for fac in factors[1:]:
        prod = mul(prod, fac)
    assert list(prod.terms) == [tuple(g)], "witness product lost its monomial"
    unit = prod.terms[tuple(g)]
    return parts, factors, unit


def m_power_witness(f, i: int, order: MonomialOrder = None):
    """Factors F_1, x^e_2, ..., x^e_i in m whose product is f exactly."""
    v, order = _series_val(f, order)
    ring = f.ring
    parts = factor_into_positives(v, i, order)
    one = ring.field.one()
    tail = Element._raw(ring, {(0,) * ring.n: one})
    mons = [Element._raw(ring, {e: one}) for e in parts[1:]]
    for mon in mons:
        tail = mul(tail, mon)
    tail_inv = inverse_monomial(tail) if mons else tail
    if isinstance(f, HahnSeries):
        first = series_mul(f, HahnSeries.from_element(tail_inv, order))
        back = series_mul(first, HahnSeries.from_element(tail, order))
        assert back.equal_below(f, back.bound)
    else:
        first = mul(f, tail_inv)
        assert mul(first, tail) == f
    return [first] + mons


@dataclass
class ConjectureVerdict:
    kind: str  # "witness" | "intersection_trivial" | "dense"
    order: MonomialOrder
    depth: int
    witness: tuple = None
    min_positive: tuple = None
    factorizations: list = field(default_factory=list)
    min_elements: list = field(default_factory=list)
    notes: list = field(default_factory=list)


def _choose_witness(order, m0):
    n = order.n
    if order.kind in ("lex", "unimodular"):
        from .exponents import _solve

        g = tuple(int(x) for x in _solve(order.matrix, (1,) + (0,) * (n - 1)))
        return g
    for j in range(n):
        e = tuple(int(k == j) for k in range(n))
        # e parallel to m0 iff all 2x2 minors vanish
        if any(e[a] * m0[b] - e[b] * m0[a] for a in range(n) for b in range(n)):
            return e if order.is_positive(e) else scale(-1, e)
    raise AssertionError("no basis vector transverse to the least positive element")


def conjecture_check(order: MonomialOrder, depth: int, ring=None) -> ConjectureVerdict:
    """Search for a nonzero element of every m^i, i <= depth, with verified factorizations."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    m0 = min_positive(order)
    if m0 is None:
        return ConjectureVerdict("dense", order, depth, notes=["no least positive element; m^i = m"])
    n = order.n
    if n == 1:
        verdict = ConjectureVerdict("intersection_trivial", order, depth, min_positive=m0)
        for i in range(1, depth + 1):
            verdict.min_elements.append(scale(i, m0))
        verdict.notes.append("v(m^i) >= i * v(m_0): an element of finite value v leaves m^i once i exceeds v")
        return verdict
    if ring is None:
        from .families import quantum_torus

        ring = quantum_torus(n)
    g = _choose_witness(order, m0)
    verdict = ConjectureVerdict("witness", order, depth, witness=g, min_positive=m0)
    for i in range(1, depth + 1):
        lo = scale(i, m0)
        assert cone_power_membership(lo, i, order)
        assert not cone_power_membership(vsub(lo, m0), i, order)
        verdict.min_elements.append(lo)
        assert cone_power_membership(g, i, order), f"witness left {i}A"
        parts, _, unit = monomial_witness(g, i, ring, order)
        verdict.factorizations.append((i, parts, unit))
    verdict.notes.append("the intersections over i > 1 and over i >= 1 agree (m^1 contains every m^i)")
    return verdict
