"""Ready-made presentations used by the tests, scripts and CLI defaults."""
from __future__ import annotations

from .coeffs.fields import QQ, ZZ, PrimeField, RationalFunctionField
from .coeffs.maps import Automorphism, partial
from .presentation import make_presentation


def _q_from_upper(field, n, upper):
    """Full q matrix from {(i, j): q_ij} for i < j (0-based)."""
    q = [[field.one() for _ in range(n)] for _ in range(n)]
    for (i, j), v in upper.items():
        v = field.convert(v)
        q[i][j] = v
        q[j][i] = v ** -1 if not isinstance(v, int) else v
    return q


def quantum_space(n, field, upper=None, r=0, sigma=None, name=""):
    """K_q[x_1^{+-1}..x_r^{+-1}, x_{r+1}..x_n] from its upper-triangular multiparameters."""
    q = _q_from_upper(field, n, upper or {})
    return make_presentation(n, field, q=q, r=r, sigma=sigma, name=name or f"quantum space n={n} r={r}")


def quantum_plane(field=None, q=None):
    field = field or RationalFunctionField(("q",))
    qv = q if q is not None else field.param(0)
    return quantum_space(2, field, {(0, 1): qv}, name="quantum plane")


def quantum_torus(n=2, field=None, upper=None, sigma=None):
    if field is None:
        field = RationalFunctionField(("q",))
    if upper is None:
        qv = field.param(0) if field.params else field.convert(2)
        upper = {(i, j): qv for i in range(n) for j in range(i + 1, n)}
    return quantum_space(n, field, upper, r=n, sigma=sigma, name=f"quantum torus n={n}")


def quantum_weyl(field=None):
    """x2 x1 = q x1 x2 + 1."""
    field = field or RationalFunctionField(("q",))
    q = _q_from_upper(field, 2, {(0, 1): field.param(0)})
    return make_presentation(2, field, q=q, lower_terms={(1, 0): {(0, 0): 1}}, name="quantum Weyl")


def weyl_algebra(field=None):
    """A_1 over Q(t): x t = t x + 1."""
    field = field or RationalFunctionField(("t",))
    return make_presentation(1, field, delta=[partial(field, field.params[0])], name="Weyl A1")


def skew_quantum_space(n, field, upper, scales, r=0):
    sigma = [Automorphism(tuple(s)) for s in scales]
    return quantum_space(n, field, upper, r=r, sigma=sigma, name=f"skew quantum space n={n}")


__all__ = [
    "quantum_space", "quantum_plane", "quantum_torus", "quantum_weyl", "weyl_algebra",
    "skew_quantum_space", "QQ", "ZZ", "PrimeField", "RationalFunctionField",
]
