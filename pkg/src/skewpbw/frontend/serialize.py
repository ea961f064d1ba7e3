"""Presentation documents (JSON) and order specifications.

Document schema::

    {"n": 2, "r": 0,
     "field": {"kind": "Qt", "params": ["q"]},     # or Q, Z, {"kind": "Fp", "p": 7}
     "q": [["1", "q"], ["1/q", "1"]],              # full matrix, default all 1
     "sigma": [null, {"q": "2"}],                  # per-variable scalings t -> c t
     "delta": [{"t": "1"}],                        # delta = sum c_t d/dt
     "lower_terms": {"2,1": "1"},                  # x2 x1 = q_12 x1 x2 + (1)
     "order": {"kind": "lex"} | {"matrix": [["1", "1"], ["0", "1"]]}}
"""
from __future__ import annotations

import hashlib
import json
import os

from ..coeffs.fields import domain_from_json
from ..coeffs.maps import Automorphism, Derivation
from ..errors import ParseError, PresentationError
from ..exponents import lex_order, make_matrix_order
from ..presentation import Presentation, validate
from .parser import parse_coefficient, parse_linear
from .printer import format_coeff


def _coeff(text, field, where):
    try:
        return parse_coefficient(str(text), field)
    except (ParseError, ValueError, ZeroDivisionError) as e:
        raise PresentationError(f"bad coefficient {text!r}: {e}", where) from e


def presentation_from_dict(doc) -> Presentation:
    try:
        n = int(doc["n"])
    except (KeyError, TypeError, ValueError) as e:
        raise PresentationError("missing or bad variable count", "n") from e
    r = int(doc.get("r", 0))
    try:
        field = domain_from_json(doc.get("field", {"kind": "Q"}))
    except (ValueError, KeyError) as e:
        raise PresentationError(str(e), "field") from e
    m = len(field.params)
    qdoc = doc.get("q")
    if qdoc is None:
        q = tuple(tuple(field.one() for _ in range(n)) for _ in range(n))
    else:
        if len(qdoc) != n or any(len(row) != n for row in qdoc):
            raise PresentationError(f"q must be {n}x{n}", "q")
        q = tuple(
            tuple(_coeff(x, field, f"q[{i + 1}][{j + 1}]") for j, x in enumerate(row))
            for i, row in enumerate(qdoc)
        )
    sigma = []
    sdoc = doc.get("sigma") or [None] * n
    if len(sdoc) != n:
        raise PresentationError(f"need {n} sigma entries", "sigma")
    for k, s in enumerate(sdoc):
        where = f"sigma[{k + 1}]"
        if s is None or s == "id":
            sigma.append(Automorphism.identity(m))
        elif isinstance(s, dict):
            unknown = set(s) - set(field.params)
            if unknown:
                raise PresentationError(f"unknown parameters {sorted(unknown)}", where)
            sigma.append(Automorphism(tuple(_coeff(s.get(name, "1"), _q_of(field), where) for name in field.params)))
        else:
            if len(s) != m:
                raise PresentationError(f"need {m} scalings", where)
            sigma.append(Automorphism(tuple(_coeff(c, _q_of(field), where) for c in s)))
    delta = []
    ddoc = doc.get("delta") or [None] * n
    if len(ddoc) != n:
        raise PresentationError(f"need {n} delta entries", "delta")
    for k, d in enumerate(ddoc):
        where = f"delta[{k + 1}]"
        if not d:
            delta.append(Derivation())
            continue
        if not m:
            raise PresentationError("derivations need a parameter field", where)
        unknown = set(d) - set(field.params)
        if unknown:
            raise PresentationError(f"unknown parameters {sorted(unknown)}", where)
        delta.append(Derivation(tuple(_coeff(d.get(name, "0"), field, where) for name in field.params)))
    lower = {}
    for key, text in (doc.get("lower_terms") or {}).items():
        where = f"lower_terms[{key}]"
        try:
            j, i = (int(x) for x in key.split(","))
        except ValueError as e:
            raise PresentationError("keys look like \"j,i\"", where) from e
        try:
            terms = parse_linear(str(text), n, field)
        except (ParseError, PresentationError) as e:
            raise PresentationError(str(e), where) from e
        if terms:
            lower[(j - 1, i - 1)] = terms
    p = Presentation(
        n=n, field=field, q=q, r=r, sigma=tuple(sigma), delta=tuple(delta),
        lower_terms=lower, name=str(doc.get("name", "")),
    )
    return validate(p)


def _q_of(field):
    from ..coeffs.fields import QQ

    return QQ


def parse_presentation(text: str) -> Presentation:
    return parse_document(text)[0]


def parse_document(text: str):
    """(presentation, order or None) from a JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from e
    if not isinstance(doc, dict):
        raise ParseError("presentation document must be a JSON object")
    p = presentation_from_dict(doc)
    order = None
    if "order" in doc:
        order = order_from_spec(doc["order"], p.n)
    return p, order


def load_document(path):
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())


def presentation_to_dict(p: Presentation, order=None) -> dict:
    params = p.field.params
    doc = {
        "n": p.n,
        "r": p.r,
        "field": p.field.to_json(),
        "q": [[format_coeff(x) for x in row] for row in p.q],
        "sigma": [s.to_json(params) for s in p.sigma],
        "delta": [d.to_json(params) for d in p.delta],
        "lower_terms": {
            f"{j + 1},{i + 1}": _format_linear(t) for (j, i), t in sorted(p.lower_terms.items())
        },
    }
    if p.name:
        doc["name"] = p.name
    if order is not None:
        doc["order"] = order.to_json()
    return doc


def _format_linear(terms):
    from .printer import _join, _term

    keys = sorted(terms, key=lambda e: tuple(reversed(e)), reverse=True)
    return _join([_term(terms[e], e) for e in keys])


def presentation_hash(p: Presentation) -> str:
    canon = json.dumps(presentation_to_dict(p), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()[:16]


def order_from_spec(spec, n=None):
    """Order from "lex", "lex<n>", a JSON matrix string, or a document dict."""
    if spec is None:
        spec = os.environ.get("SKEWPBW_ORDER") or "lex"
    if isinstance(spec, dict):
        if spec.get("kind") == "lex":
            size = int(spec.get("n", n or 0))
            if not size:
                raise ParseError("lex order needs a dimension")
            return lex_order(size)
        if "matrix" in spec:
            return make_matrix_order([[_frac(x) for x in row] for row in spec["matrix"]])
        raise ParseError(f"bad order spec {spec!r}")
    spec = str(spec).strip()
    if spec.startswith("lex"):
        rest = spec[3:]
        size = int(rest) if rest else n
        if not size:
            raise ParseError("lex order needs a dimension (use lex<n>)")
        if n is not None and size != n:
            raise PresentationError(f"order on Z^{size} for a ring with n = {n}", "order")
        return lex_order(size)
    try:
        mat = json.loads(spec)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad order spec {spec!r}") from e
    order = make_matrix_order([[_frac(x) for x in row] for row in mat])
    if n is not None and order.n != n:
        raise PresentationError(f"order on Z^{order.n} for a ring with n = {n}", "order")
    return order


def _frac(x):
    from fractions import Fraction

    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad rational {x!r}") from e


def parse_matrix(text):
    try:
        mat = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad matrix {text!r}") from e
    return [[_frac(x) for x in row] for row in mat]
