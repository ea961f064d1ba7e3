"""Integer lattice rank and the genericity test for monomial multiparameters."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import Unsupported
from .poly import RatFunc


def _normalize_sign(v):
    lead = next((x for x in v if x != 0), 0)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


def integer_lattice_rank(vectors):
    """Rank of the Z-span of ``vectors`` and a Z-basis of their relation lattice.

    Row-reduces ``[V | I]`` with unimodular integer operations (extended gcd
    steps); rows whose V part vanishes carry the relations.
    """
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if not vectors:
        return {"rank": 0, "kernel": []}
    m = len(vectors[0])
    if any(len(v) != m for v in vectors):
        raise ValueError("vectors of unequal length")
    k = len(vectors)
    rows = [list(v) + [int(i == j) for j in range(k)] for i, v in enumerate(vectors)]
    r = 0
    for c in range(m):
        for i in range(r + 1, k):
            # gcd-combine rows r and i in column c
            a, b = rows[r][c], rows[i][c]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            ra, rb = rows[r], rows[i]
            rows[r] = [x * p + y * s for p, s in zip(ra, rb)]
            rows[i] = [(a // g) * s - (b // g) * p for p, s in zip(ra, rb)]
        if rows[r][c] != 0:
            r += 1
        if r == k:
            break
    kernel = [_normalize_sign(row[m:]) for row in rows if not any(row[:m])]
    return {"rank": k - len(kernel), "kernel": kernel}


def _xgcd(a, b):
    """g, x, y with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass
class GenericityResult:
    generic: bool
    pairs: list
    exponents: list
    rank: int
    dependency: tuple = None
    notes: list = field(default_factory=list)

    def certificate(self):
        if self.generic:
            return {"rank": self.rank, "count": len(self.pairs)}
        return {"dependency": dict(zip([f"q{i}{j}" for i, j in self.pairs], self.dependency))}


def _monomial_exponent(a, m):
    if isinstance(a, RatFunc):
        mono = a.laurent_monomial()
        if mono is None or mono[0] != 1:
            return None
        return mono[1]
    if a == 1:
        return (0,) * m
    return None


def genericity_check(q, sigma, m=None):
    """Decide independence of the q_ij (i < j) in K*/N for monomial q and sigma trivial on parameters.

    ``m`` is the number of parameters (inferred from the entries when omitted).
    Pairs are reported 1-based.
    """
    n = len(q)
    if m is None:
        m = next((x.nvars for row in q for x in row if isinstance(x, RatFunc)), 0)
    for k, s in enumerate(sigma):
        if not s.is_identity:
            raise Unsupported(f"sigma_{k + 1} acts nontrivially on parameters; N is not computed")
    pairs, exps = [], []
    for i in range(n):
        for j in range(i + 1, n):
            e = _monomial_exponent(q[i][j], m)
            if e is None:
                raise Unsupported(f"q_{i + 1}{j + 1} = {q[i][j]} is not a pure Laurent monomial")
            pairs.append((i + 1, j + 1))
            exps.append(e)
    if not pairs:
        return GenericityResult(True, [], [], 0)
    res = integer_lattice_rank(exps)
    generic = not res["kernel"]
    dep = None if generic else res["kernel"][0]
    return GenericityResult(generic, pairs, exps, res["rank"], dep)


def verify_dependency(q, pairs, dependency):
    """Substitute the dependency vector: prod q_ij^a_ij must be 1."""
    prod = None
    for (i, j), a in zip(pairs, dependency):
        term = q[i - 1][j - 1] ** a
        prod = term if prod is None else prod * term
    return prod == 1
