"""Skew PBW / skew quantum ring presentations.

Conventions (indices 0-based internally, 1-based in every message and file):

* ``x_i r = sigma_i(r) x_i + delta_i(r)``
* ``x_j x_i = q[i][j] x_i x_j + lower_terms[(j, i)]`` for ``j > i``; with no
  lower term this is the relation ``x_i x_j = q_ji x_j x_i``.
* ``lower_terms`` values are dicts ``{exponent: coeff}`` of degree <= 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from .coeffs.fields import ZZ, Domain, IntegerRing, QQ
from .coeffs.maps import Automorphism, Derivation
from .errors import (
    DeltaWithNontrivialSigma,
    LaurentRequiresQuasiCommutative,
    NotQuasiCommutative,
    PresentationError,
    QMatrixInvalid,
    SigmaNoncommuting,
)


@dataclass(frozen=True, eq=False)
class Presentation:
    n: int
    field: Domain
    q: tuple
    r: int = 0
    sigma: tuple = ()
    delta: tuple = ()
    lower_terms: dict = field(default_factory=dict)
    name: str = ""
    quasi_commutative: bool = False
    bijective: bool = False
    validated: bool = False
    _cache: dict = field(default_factory=dict, repr=False)

    def data(self):
        lower = {k: dict(v) for k, v in self.lower_terms.items()}
        return (self.n, self.r, self.field, self.q, self.sigma, self.delta, lower)

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self is other or self.data() == other.data()

    def __hash__(self):
        return hash((self.n, self.r, self.field))

    @property
    def params(self):
        return self.field.params

    def lower(self, j, i):
        return self.lower_terms.get((j, i), {})

    def laurent(self, k):
        return k < self.r

    def is_commutative(self):
        return (
            self.quasi_commutative
            and all(s.is_identity for s in self.sigma)
            and all(self.q[i][j] == 1 for i in range(self.n) for j in range(self.n))
        )


def _is_unit(dom, a):
    if isinstance(dom, IntegerRing):
        return a in (1, -1)
    return bool(a)


def make_presentation(n, field, q=None, r=0, sigma=None, delta=None, lower_terms=None, name=""):
    """Build and validate a presentation; missing pieces default to trivial data."""
    if q is None:
        q = [[1] * n for _ in range(n)]
    q = tuple(tuple(field.convert(x) for x in row) for row in q)
    m = len(field.params)
    sigma = tuple(sigma) if sigma is not None else (Automorphism.identity(m),) * n
    delta = tuple(delta) if delta is not None else (Derivation(),) * n
    lower = {}
    for (j, i), terms in (lower_terms or {}).items():
        conv = {tuple(e): field.convert(c) for e, c in terms.items()}
        conv = {e: c for e, c in conv.items() if c}
        if conv:
            lower[(j, i)] = conv
    p = Presentation(n=n, field=field, q=q, r=r, sigma=sigma, delta=delta, lower_terms=lower, name=name)
    return validate(p)


def validate(p: Presentation) -> Presentation:
    n, dom = p.n, p.field
    if n < 1:
        raise PresentationError("need at least one variable", "n")
    if not 0 <= p.r <= n:
        raise PresentationError(f"Laurent count r={p.r} outside [0, {n}]", "r")
    if len(p.q) != n or any(len(row) != n for row in p.q):
        raise QMatrixInvalid(f"q must be {n}x{n}", "q")
    for i in range(n):
        if p.q[i][i] != 1:
            raise QMatrixInvalid(f"q_{i + 1}{i + 1} = {dom.format(p.q[i][i])}, expected 1", f"q[{i + 1}][{i + 1}]")
        for j in range(n):
            if not _is_unit(dom, p.q[i][j]):
                raise QMatrixInvalid(f"q_{i + 1}{j + 1} is not a unit", f"q[{i + 1}][{j + 1}]")
            if p.q[i][j] * p.q[j][i] != 1:
                raise QMatrixInvalid(
                    f"q_{i + 1}{j + 1} * q_{j + 1}{i + 1} = "
                    f"{dom.format(p.q[i][j] * p.q[j][i])} != 1",
                    f"q[{max(i, j) + 1}][{min(i, j) + 1}]",
                )
    m = len(dom.params)
    if len(p.sigma) != n:
        raise PresentationError(f"need {n} automorphisms, got {len(p.sigma)}", "sigma")
    for k, s in enumerate(p.sigma):
        if len(s.scales) not in (0, m):
            raise PresentationError(f"sigma_{k + 1} has {len(s.scales)} scalings for {m} parameters", f"sigma[{k + 1}]")
    if len(p.delta) != n:
        raise PresentationError(f"need {n} derivations, got {len(p.delta)}", "delta")
    for a in range(n):
        for b in range(a + 1, n):
            sa, sb = p.sigma[a], p.sigma[b]
            if len(sa.scales) == len(sb.scales) and sa.compose(sb) != sb.compose(sa):
                raise SigmaNoncommuting(f"sigma_{a + 1} and sigma_{b + 1} do not commute", f"sigma[{b + 1}]")
    for k, s in enumerate(p.sigma):
        for i in range(n):
            for j in range(n):
                if s(p.q[i][j]) != p.q[i][j]:
                    raise QMatrixInvalid(
                        f"sigma_{k + 1} moves q_{i + 1}{j + 1}; multiparameters must be sigma-invariant",
                        f"q[{i + 1}][{j + 1}]",
                    )
    for k, d in enumerate(p.delta):
        if not d.is_zero:
            if not m:
                raise PresentationError("derivations need a parameter field", f"delta[{k + 1}]")
            if not p.sigma[k].is_identity:
                raise DeltaWithNontrivialSigma(
                    f"delta_{k + 1} != 0 requires sigma_{k + 1} = id", f"delta[{k + 1}]"
                )
    for (j, i), terms in p.lower_terms.items():
        if not (0 <= i < j < n):
            raise PresentationError(f"lower term key ({j + 1},{i + 1}) needs j > i", "lower_terms")
        for e in terms:
            if len(e) != n or sum(e) > 1 or any(x < 0 for x in e):
                raise PresentationError(f"lower term of x{j + 1}x{i + 1} has degree > 1", f"lower_terms[{j + 1},{i + 1}]")
    qc = all(d.is_zero for d in p.delta) and not p.lower_terms
    bij = all(_is_unit(dom, p.q[i][j]) for i in range(n) for j in range(n))
    if p.r > 0 and not (qc and bij):
        raise LaurentRequiresQuasiCommutative(
            "Laurent variables need a quasi-commutative bijective presentation", "r"
        )
    out = replace(p, quasi_commutative=qc, bijective=bij, validated=True, _cache={})
    if not qc:
        from .elements import check_relations

        check_relations(out)
    return out


@dataclass(frozen=True)
class Stage:
    """theta_i: sigma_i on coefficients, z_l -> scalars[l] * z_l for l < i."""

    index: int
    sigma: Automorphism
    scalars: tuple


@dataclass(frozen=True)
class IteratedForm:
    """R[z_1; theta_1] ... [z_n; theta_n] with nested dict elements.

    A level-i element is ``{power: level-(i-1) element}``; level 0 is a
    coefficient.  Products use (a z^m)(b z^k) = a theta^m(b) z^(m+k) only.
    """

    stages: tuple
    field: Domain

    def theta(self, i, a, level, power):
        """Apply theta_i^power to a level-``level`` element (level < i)."""
        st = self.stages[i]
        if level == 0:
            return st.sigma(a, power)
        c = st.scalars[level - 1] ** power
        out = {}
        for k, b in a.items():
            tb = self.theta(i, b, level - 1, power)
            out[k] = self._scale(tb, level - 1, c ** k)
        return out

    def _scale(self, a, level, c):
        if level == 0:
            return c * a
        return {k: self._scale(b, level - 1, c) for k, b in a.items()}

    def _add(self, a, b, level):
        if level == 0:
            return a + b
        out = dict(a)
        for k, v in b.items():
            s = self._add(out[k], v, level - 1) if k in out else v
            if self._is_zero(s, level - 1):
                out.pop(k, None)
            else:
                out[k] = s
        return out

    @staticmethod
    def _is_zero(a, level):
        return not a

    def mul(self, a, b, level=None):
        if level is None:
            level = len(self.stages)
        if level == 0:
            return a * b
        out = {}
        for m, ac in a.items():
            for k, bc in b.items():
                t = self.mul(ac, self.theta(level - 1, bc, level - 1, m), level - 1)
                if self._is_zero(t, level - 1):
                    continue
                out = self._add(out, {m + k: t}, level)
        return out

    def nest(self, terms):
        n = len(self.stages)
        out = {}
        for u, c in terms.items():
            node = c
            for level in range(1, n + 1):
                node = {u[level - 1]: node}
            out = self._add(out, node, n)
        return out

    def flatten(self, a, level=None):
        if level is None:
            level = len(self.stages)
        if level == 0:
            return {(): a}
        out = {}
        for k, b in a.items():
            for tail, c in self.flatten(b, level - 1).items():
                out[tail + (k,)] = c
        return out

    def describe(self):
        lines = []
        for st in self.stages:
            i = st.index
            parts = [f"theta_{i + 1} = sigma_{i + 1} on coefficients"]
            parts += [f"theta_{i + 1}(z_{l + 1}) = {self.field.format(c)}*z_{l + 1}" for l, c in enumerate(st.scalars)]
            lines.append("; ".join(parts))
        return lines


def iterated_form(p: Presentation) -> IteratedForm:
    if not p.quasi_commutative:
        raise NotQuasiCommutative("iterated Ore form needs a quasi-commutative presentation")
    stages = tuple(
        Stage(i, p.sigma[i], tuple(p.q[l][i] for l in range(i))) for i in range(p.n)
    )
    return IteratedForm(stages, p.field)


def associated_graded(p: Presentation) -> Presentation:
    if p.r != 0:
        raise PresentationError("associated graded ring is defined here for r = 0", "r")
    if p.quasi_commutative:
        return p
    gr = replace(
        p,
        delta=(Derivation(),) * p.n,
        lower_terms={},
        name=f"Gr({p.name})" if p.name else "",
        validated=False,
        _cache={},
    )
    return validate(gr)


def extend_scalars(p: Presentation) -> Presentation:
    """Transport a presentation over Z to the same data over Q."""
    if p.field is not ZZ and not isinstance(p.field, IntegerRing):
        raise PresentationError(f"extend_scalars expects a Z-mode presentation, got {p.field}", "field")
    if not all(s.is_identity for s in p.sigma):
        raise PresentationError("Z-mode presentations carry identity automorphisms", "sigma")
    q = tuple(tuple(QQ.convert(x) for x in row) for row in p.q)
    lower = {k: {e: QQ.convert(c) for e, c in v.items()} for k, v in p.lower_terms.items()}
    out = replace(
        p, field=QQ, q=q, lower_terms=lower, sigma=(Automorphism(),) * p.n,
        delta=(Derivation(),) * p.n, validated=False, _cache={},
    )
    return validate(out)


def describe_flags(p: Presentation) -> dict:
    return {
        "n": p.n,
        "r": p.r,
        "field": str(p.field),
        "quasi_commutative": p.quasi_commutative,
        "bijective": p.bijective,
    }

