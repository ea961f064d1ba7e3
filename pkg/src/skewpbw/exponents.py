"""Exponent lattices, matrix monomial orders and positive cones.

Exponent vectors are plain tuples of Python ints.  A :class:`MonomialOrder`
compares ``u`` and ``v`` by the lexicographic sign of ``M (u - v)`` for an
exact rational matrix ``M`` whose kernel on the lattice is trivial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionMismatch, NoMinimalElement, NotInCone, NotInjective

ExponentVector = tuple  # tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(k, u):
    return tuple(k * a for a in u)


def zero(n):
    return (0,) * n


def _rref(rows, ncols):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rational_rank(rows, ncols):
    return len(_rref(rows, ncols)[1])


def primitive(vec):
    """Scale a rational vector to a primitive integer vector, first nonzero > 0."""
    den = 1
    for x in vec:
        den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def rational_kernel(rows, ncols):
    """Basis of the rational null space, each vector made primitive integral."""
    red, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(primitive(v))
    return basis


def _det(mat):
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def determinant(mat):
    return _det(mat)


def _solve(mat, rhs):
    """Solve the square nonsingular system mat * x = rhs over Q."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(mat, rhs)]
    red, pivots = _rref(aug, n)
    return tuple(red[i][n] for i in range(n))


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on Z^n induced by a rational matrix (rows compared lexicographically)."""

    matrix: tuple
    n: int
    kind: str
    _flag: tuple = field(default=(), compare=False, repr=False)

    def key(self, u):
        if len(u) != self.n:
            raise DimensionMismatch(f"exponent {u} has length {len(u)}, order expects {self.n}")
        if self.kind == "lex":
            return tuple(u)
        return tuple(sum(m * a for m, a in zip(row, u)) for row in self.matrix)

    def sign(self, g):
        """Sign of g relative to 0: -1, 0 or 1."""
        for k in self.key(g):
            if k:
                return 1 if k > 0 else -1
        return 0

    def compare(self, u, v):
        if len(u) != len(v):
            raise DimensionMismatch(f"cannot compare {u} and {v}")
        return self.sign(sub(u, v))

    def less(self, u, v):
        return self.compare(u, v) < 0

    def is_positive(self, g):
        return self.sign(g) > 0

    def min(self, exps):
        return min(exps, key=self.key)

    def max(self, exps):
        return max(exps, key=self.key)

    def to_json(self):
        if self.kind == "lex":
            return {"kind": "lex", "n": self.n}
        return {"matrix": [[str(x) for x in row] for row in self.matrix]}

    def __str__(self):
        if self.kind == "lex":
            return f"lex{self.n}"
        rows = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.matrix)
        return f"[{rows}]"


def lex_order(n: int) -> MonomialOrder:
    eye = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    return MonomialOrder(eye, n, "lex", eye)


def make_matrix_order(M: Sequence[Sequence]) -> MonomialOrder:
    rows = tuple(tuple(Fraction(x) for x in row) for row in M)
    if not rows or not rows[0]:
        raise DimensionMismatch("order matrix needs at least one row and one column")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("ragged order matrix")
    if rational_rank(rows, n) < n:
        ker = rational_kernel(rows, n)[0]
        raise NotInjective(f"order matrix has rank < {n}; kernel vector {ker}", kernel=ker)
    flag = []
    for row in rows:
        if rational_rank(flag + [row], n) > len(flag):
            flag.append(row)
        if len(flag) == n:
            break
    square = len(rows) == n
    if square and all(rows[i][j] == (i == j) for i in range(n) for j in range(n)):
        kind = "lex"
    elif square and all(x.denominator == 1 for row in rows for x in row) and abs(_det(rows)) == 1:
        kind = "unimodular"
    else:
        kind = "general"
    return MonomialOrder(rows, n, kind, tuple(flag))


def compare(u, v, ord: MonomialOrder) -> int:
    """-1, 0, 1 for u < v, u == v, u > v."""
    if len(u) != ord.n or len(v) != ord.n:
        raise DimensionMismatch(f"order on Z^{ord.n} cannot compare {u}, {v}")
    return ord.compare(u, v)


def min_positive(ord: MonomialOrder) -> Optional[ExponentVector]:
    """Least element of the positive cone.

    For a full-rank rational matrix the lattice points on which the first
    n-1 independent rows vanish form a rank-one sublattice; its positive
    generator lies below every vector that has an earlier nonzero key.  So a
    minimum always exists for representable orders and ``None`` is returned
    only if the flag is degenerate.
    """
    n = ord.n
    if ord.kind == "unimodular":
        g = tuple(int(x) for x in _solve(ord.matrix, (0,) * (n - 1) + (1,)))
    else:
        flag = list(ord._flag[: n - 1])
        ker = rational_kernel(flag, n) if flag else [tuple(int(i == n - 1) for i in range(n))]
        if len(ker) != 1:
            return None
        g = ker[0]
    return g if ord.is_positive(g) else scale(-1, g)


def cone_power_membership(g, i: int, ord: MonomialOrder) -> bool:
    """Is g a sum of i strictly positive vectors?"""
    if i < 1:
        raise ValueError("cone power index must be >= 1")
    if len(g) != ord.n:
        raise DimensionMismatch(f"{g} not in Z^{ord.n}")
    m0 = min_positive(ord)
    if m0 is None:
        return ord.is_positive(g)
    return ord.compare(g, scale(i, m0)) >= 0


def factor_into_positives(g, i: int, ord: MonomialOrder) -> list:
    m0 = min_positive(ord)
    if m0 is None:
        raise NoMinimalElement("order has no least positive element")
    if not cone_power_membership(g, i, ord):
        raise NotInCone(f"{g} is not a sum of {i} positive elements (needs >= {scale(i, m0)})")
    parts = [sub(g, scale(i - 1, m0))] + [m0] * (i - 1)
    total = zero(ord.n)
    for p in parts:
        assert ord.is_positive(p)
        total = add(total, p)
    assert total == tuple(g)
    return parts
