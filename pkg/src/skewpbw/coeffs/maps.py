"""Scaling automorphisms and derivations of the coefficient field."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ModeMismatch
from .fields import Fp, RationalFunctionField
from .poly import RatFunc


@dataclass(frozen=True)
class Automorphism:
    """t_k -> scales[k] * t_k; the identity on Q, F_p and Z."""

    scales: tuple = ()

    @classmethod
    def identity(cls, m=0):
        return cls((Fraction(1),) * m)

    def __post_init__(self):
        object.__setattr__(self, "scales", tuple(Fraction(c) for c in self.scales))
        if any(c == 0 for c in self.scales):
            raise ValueError("scaling automorphism needs nonzero constants")

    @property
    def is_identity(self):
        return all(c == 1 for c in self.scales)

    def power(self, k):
        return Automorphism(tuple(c ** k for c in self.scales))

    def compose(self, other):
        return Automorphism(tuple(a * b for a, b in zip(self.scales, other.scales)))

    def __call__(self, a, k=1):
        return apply_automorphism(self, a, k)

    def coboundary(self, a, k=1):
        """n with sigma^k(a) = a * n, for a monomial a = c t^e."""
        if not isinstance(a, RatFunc):
            return 1
        mono = a.laurent_monomial()
        if mono is None:
            raise ValueError("coboundary witness needs a monomial")
        _, e = mono
        out = Fraction(1)
        for c, ej in zip(self.scales, e):
            out *= c ** (k * ej)
        return out

    def to_json(self, params=()):
        if self.is_identity:
            return None
        return {name: str(c) for name, c in zip(params, self.scales)}


def apply_automorphism(sigma: Automorphism, a, k: int = 1):
    if k == 0 or sigma.is_identity:
        if isinstance(a, RatFunc) and len(sigma.scales) not in (0, a.nvars):
            raise ModeMismatch("automorphism and element over different parameters")
        return a
    if isinstance(a, RatFunc):
        if len(sigma.scales) != a.nvars:
            raise ModeMismatch("automorphism and element over different parameters")
        return a.scale_vars([c ** k for c in sigma.scales])
    raise ModeMismatch(f"non-identity scaling applied to {type(a).__name__}")


@dataclass(frozen=True)
class Derivation:
    """sum_k coeffs[k] * d/dt_k on Q(t); ``coeffs`` empty means the zero map."""

    coeffs: tuple = ()

    @property
    def is_zero(self):
        return all(not c for c in self.coeffs)

    def __call__(self, a):
        return apply_derivation(self, a)

    def to_json(self, params=()):
        if self.is_zero:
            return None
        return {name: c.format() for name, c in zip(params, self.coeffs) if c}


def partial(field: RationalFunctionField, name: str) -> Derivation:
    k = field.param_index(name)
    return Derivation(tuple(field.one() if i == k else field.zero() for i in range(field.m)))


def apply_derivation(delta: Derivation, a):
    if isinstance(a, RatFunc):
        out = a * 0
        for k, c in enumerate(delta.coeffs):
            if c:
                out = out + c * a.diff(k)
        return out
    if delta.is_zero:
        return a * 0 if not isinstance(a, Fp) else Fp(0, a.p)
    raise ModeMismatch("derivations need a parameter field Q(t)")
