"""Leading-exponent valuations into Z^n and their comparison."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch, NegativeValuation, NotQuasiCommutative, SkewPBWError
from .exponents import (
    MonomialOrder,
    cone_power_membership,
    determinant,
    rational_rank,
    scale,
)


class _Infinity:
    """The value of 0; larger than every exponent."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "inf"

    def __add__(self, other):
        return self

    __radd__ = __add__


INF = _Infinity()

ZERO = "zero"
UNIT = "unit_ring"
IN_W = "in_W"
OUTSIDE = "outside_Lambda"


@dataclass(frozen=True)
class ValuationSpec:
    order: MonomialOrder
    ring: object = None

    def __call__(self, f):
        return val(f, self.order)


def _terms_and_order(f, order):
    from .completion import HahnSeries

    if isinstance(f, HahnSeries):
        return f.known_terms_for_val(), order or f.order
    if order is None:
        raise SkewPBWError("an order is needed to evaluate the valuation of a ring element")
    if order.n != f.ring.n:
        raise DimensionMismatch(f"order on Z^{order.n} for a ring with n = {f.ring.n}")
    return f.terms, order


def val(f, order: MonomialOrder = None):
    """Least exponent of the support, or INF for zero."""
    terms, order = _terms_and_order(f, order)
    if not terms:
        return INF
    return order.min(terms)


def val_add(a, b):
    if a is INF or b is INF:
        return INF
    return tuple(x + y for x, y in zip(a, b))


def val_le(a, b, order):
    """a <= b with INF on top."""
    if b is INF:
        return True
    if a is INF:
        return False
    return order.compare(a, b) <= 0


def classify(f, order: MonomialOrder = None) -> str:
    v = val(f, order)
    if v is INF:
        return ZERO
    order = order or f.order
    s = order.sign(v)
    return UNIT if s == 0 else IN_W if s > 0 else OUTSIDE


def residue(f, order: MonomialOrder = None):
    """Image in O/m = k: the constant coefficient of an element with v >= 0."""
    v = val(f, order)
    field_ = (f.ring.field if hasattr(f, "ring") else None)
    if v is INF:
        return field_.zero()
    order = order or f.order
    if order.sign(v) < 0:
        raise NegativeValuation(f"valuation {v} < 0; residue undefined")
    return f.terms.get((0,) * order.n, field_.zero())


def require_quasi_commutative(p):
    if not p.quasi_commutative:
        raise NotQuasiCommutative("the leading-exponent map is a valuation only in the quasi-commutative case")


@dataclass
class ComparisonReport:
    holds: bool
    checked_elements: int
    checked_pairs: int
    counterexample: dict = None
    corpus: list = field(default_factory=list)


def _apply(tau, g):
    return tuple(sum(Fraction(t) * a for t, a in zip(row, g)) for row in tau)


def _int_vec(v):
    return tuple(int(x) if Fraction(x).denominator == 1 else x for x in v)


def compare_valuations(ord1: MonomialOrder, ord2: MonomialOrder, tau, samples) -> ComparisonReport:
    """Check that tau carries nu_1 onto nu_2 and preserves order on the sample corpus.

    nu_2(f) is the ord2-least element of tau(supp f).
    """
    tau = [list(row) for row in tau]
    k = len(tau)
    if not tau or any(len(row) != ord1.n for row in tau):
        raise DimensionMismatch(f"tau must have {ord1.n} columns")
    if k != ord2.n:
        raise DimensionMismatch(f"tau has {k} rows but the target order is on Z^{ord2.n}")
    if rational_rank(tau, ord1.n) < k:
        raise SkewPBWError("tau is rank deficient; not an epimorphism")
    corpus = []
    exps = []
    for f in samples:
        terms = f.terms if hasattr(f, "terms") else {tuple(f): 1}
        if not terms:
            continue
        v1 = ord1.min(terms)
        images = [_apply(tau, u) for u in terms]
        v2 = min(images, key=ord2.key)
        corpus.append(sorted(terms, key=ord1.key))
        exps.extend(terms)
        if _apply(tau, v1) != v2:
            return ComparisonReport(
                False, len(corpus), 0,
                {"kind": "valuation", "support": sorted(terms, key=ord1.key),
                 "nu1": v1, "tau_nu1": _int_vec(_apply(tau, v1)), "nu2": _int_vec(v2)},
                corpus,
            )
    pairs = 0
    for a in exps:
        for b in exps:
            if ord1.compare(a, b) <= 0:
                pairs += 1
                ta, tb = _apply(tau, a), _apply(tau, b)
                if ord2.compare(ta, tb) > 0:
                    return ComparisonReport(
                        False, len(corpus), pairs,
                        {"kind": "order", "g": a, "h": b, "tau_g": _int_vec(ta), "tau_h": _int_vec(tb)},
                        corpus,
                    )
    return ComparisonReport(True, len(corpus), pairs, None, corpus)


def maximal_rank(tau) -> bool:
    """tau in GL(n, Z)."""
    n = len(tau)
    if any(len(row) != n for row in tau):
        raise DimensionMismatch("maximal rank is decided for square tau")
    if any(Fraction(x).denominator != 1 for row in tau for x in row):
        return False
    return abs(determinant(tau)) == 1


@dataclass
class PowerBoundReport:
    hypothesis_holds: bool
    regime: str
    lambda1: Fraction = None
    lambdas: list = field(default_factory=list)
    bound_ok: bool = True
    exclusions_ok: bool = True
    checked: int = 0


def power_value_bound(order: MonomialOrder, i_max: int = 10, v_max: int = 10) -> PowerBoundReport:
    """Rank-one check of lambda_i >= i * lambda_1 and of the exclusion nu(b) = v => b not in W^i for i * lambda_1 > v."""
    w = order._flag[0]
    n = order.n
    if n > 1:
        # Positive vectors in the kernel of the first row have projected value 0.
        return PowerBoundReport(False, "non-Archimedean: inf of the rank-one projection of nu(W) is 0")
    a = abs(w[0])
    lam1 = a
    # lambda_i by brute force over sums of i positive generators g with |g| <= box
    box = i_max + 1
    positives = [g for g in range(-box, box + 1) if order.is_positive((g,))]
    values = {Fraction(w[0] * g) for g in positives}
    level = set(values)
    lambdas = []
    for i in range(1, i_max + 1):
        if i > 1:
            cap = lam1 * (i_max + 1)
            level = {x + y for x in level for y in values if x + y <= cap}
        lambdas.append(min(level))
    bound_ok = all(lam >= i * lam1 for i, lam in enumerate(lambdas, 1))
    exclusions_ok = True
    checked = 0
    for g in positives:
        v = Fraction(w[0] * g)
        if v > v_max * lam1:
            continue
        for i in range(1, i_max + 2):
            member = cone_power_membership((g,), i, order)
            checked += 1
            if i * lam1 > v and member:
                exclusions_ok = False
            if i * lam1 <= v and not member:
                exclusions_ok = False
    return PowerBoundReport(True, "Archimedean rank one", lam1, lambdas, bound_ok, exclusions_ok, checked)


def min_of_cone_power(order: MonomialOrder, i: int):
    from .exponents import min_positive

    m0 = min_positive(order)
    return None if m0 is None else scale(i, m0)
