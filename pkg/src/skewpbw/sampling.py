"""Seeded random elements and the presentation families used by tests and scripts."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .coeffs.fields import QQ, PrimeField, RationalFunctionField
from .coeffs.maps import Automorphism
from .elements import Element
from . import families


@dataclass(frozen=True)
class SampleConfig:
    max_degree: int = 5
    max_terms: int = 3
    coeff_range: int = 5
    seed: int = 0


def family_catalog():
    """name -> presentation, covering every field mode and both relation types."""
    Qt = RationalFunctionField(("t",))
    t = Qt.param(0)
    F7 = PrimeField(7)
    out = {
        "plane/Q": families.quantum_plane(QQ, Fraction(2)),
        "plane/F7": families.quantum_plane(F7, F7.convert(3)),
        "plane/Q(t)": families.quantum_plane(Qt, t),
        "space3/Q": families.quantum_space(3, QQ, {(0, 1): 2, (0, 2): Fraction(1, 3), (1, 2): -1}),
        "space4/F7": families.quantum_space(4, F7, {(i, j): F7.convert((i + 2 * j) % 6 + 1) for i in range(4) for j in range(i + 1, 4)}),
        "space3/Q(t)": families.quantum_space(3, Qt, {(0, 1): t, (0, 2): t ** 2, (1, 2): t ** -1}),
        "torus2/Q": families.quantum_torus(2, QQ, {(0, 1): 2}),
        "torus3/F7": families.quantum_torus(3, F7, {(0, 1): F7.convert(2), (0, 2): F7.convert(3), (1, 2): F7.convert(5)}),
        "torus2/Q(t)": families.quantum_torus(2, Qt),
        "mixed3/Q(t)": families.quantum_space(3, Qt, {(0, 1): t, (0, 2): 2, (1, 2): t ** 3}, r=1),
        "skew2/Q(t)": families.skew_quantum_space(2, Qt, {(0, 1): 3}, [(2,), (Fraction(1, 2),)]),
        "qweyl/Q(q)": families.quantum_weyl(),
        "weyl/Q(t)": families.weyl_algebra(),
    }
    return out


def random_coeff(field, rng: random.Random, cfg: SampleConfig = SampleConfig(), nonzero=False):
    c = cfg.coeff_range
    while True:
        if isinstance(field, RationalFunctionField):
            x = field.param(0)
            a = field.convert(rng.randint(-c, c))
            b = field.convert(rng.randint(-c, c))
            num = a + b * x ** rng.randint(0, 2)
            val = num if rng.random() < 0.7 else num / (x + rng.randint(1, 3))
        elif field is QQ or field.__class__.__name__ == "RationalField":
            val = Fraction(rng.randint(-c, c), rng.randint(1, 3))
        else:
            val = field.convert(rng.randint(-c, c))
        if not nonzero or val:
            return val


def random_exponent(ring, rng, max_degree):
    n, r = ring.n, ring.r
    budget = rng.randint(0, max_degree)
    u = [0] * n
    for _ in range(budget):
        k = rng.randrange(n)
        if k < r and rng.random() < 0.5:
            u[k] -= 1
        else:
            u[k] += 1
    return tuple(u)


def random_element(ring, rng: random.Random, cfg: SampleConfig = SampleConfig(), nonzero=True) -> Element:
    while True:
        terms = {}
        for _ in range(rng.randint(1, cfg.max_terms)):
            u = random_exponent(ring, rng, cfg.max_degree)
            terms[u] = random_coeff(ring.field, rng, cfg, nonzero=True)
        f = Element(ring, terms)
        if f or not nonzero:
            return f


def random_monomial(ring, rng, max_degree=5, unit=False):
    u = random_exponent(ring, rng, max_degree)
    c = ring.field.one() if unit else random_coeff(ring.field, rng, nonzero=True)
    return Element(ring, {u: c})


def identity_sigma(ring):
    return all(isinstance(s, Automorphism) and s.is_identity for s in ring.sigma)
