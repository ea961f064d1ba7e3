"""Deterministic text rendering of coefficients, elements and series."""
from __future__ import annotations

from ..coeffs.poly import RatFunc
from ..exponents import lex_order


def format_coeff(c):
    return c.format() if isinstance(c, RatFunc) else str(c)


def _coeff_factor(c):
    """Coefficient text safe to place before ``*monomial``."""
    s = format_coeff(c)
    if isinstance(c, RatFunc) and c.den.is_const() and c.den.const_value() == 1 and len(c.num.terms) > 1:
        return f"({s})"
    return s


def format_monomial(u):
    parts = []
    for i, a in enumerate(u):
        if a == 1:
            parts.append(f"x{i + 1}")
        elif a:
            parts.append(f"x{i + 1}^{a}")
    return "*".join(parts)


def _term(c, u):
    mono = format_monomial(u)
    if not mono:
        s = format_coeff(c)
        if isinstance(c, RatFunc) and len(c.num.terms) > 1 and c.den.is_const():
            s = f"({s})"
        return s
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{_coeff_factor(c)}*{mono}"


def _join(terms):
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def format_element(f, order=None) -> str:
    """Terms in descending order (lex by default)."""
    order = order or lex_order(f.ring.n)
    exps = sorted(f.terms, key=order.key, reverse=True)
    return _join([_term(f.terms[u], u) for u in exps])


def format_exponent(u):
    return "(" + ", ".join(str(a) for a in u) + ")"


def format_series(s) -> str:
    """Ascending terms followed by the reliability tail marker."""
    exps = sorted(s.terms, key=s.order.key)
    body = _join([_term(s.terms[u], u) for u in exps])
    if s.bound is None:
        return body
    tail = f"O(≥ {format_exponent(s.bound)})"
    return tail if body == "0" else f"{body} + {tail}"
