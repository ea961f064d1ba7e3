"""Acceptance suite: one check per criterion, each reporting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""
import itertools
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from skewpbw import families
from skewpbw.coeffs import QQ, Automorphism, RationalFunctionField, genericity_check, verify_dependency
from skewpbw.completion import HahnSeries, conjecture_check, series_invert, series_mul
from skewpbw.elements import (
    Element,
    inverse_monomial,
    iterated_mul,
    leading_form,
    mul,
    normalize_product,
    transfer,
)
from skewpbw.exponents import cone_power_membership, lex_order, make_matrix_order
from skewpbw.frontend.cli import run_command
from skewpbw.frontend.parser import parse_element
from skewpbw.frontend.printer import format_element
from skewpbw.presentation import associated_graded
from skewpbw.sampling import SampleConfig, family_catalog, random_coeff, random_element
from skewpbw.valuation import power_value_bound, val, val_add, val_le

ROOT = Path(__file__).resolve().parent.parent
REPORT = []
FAMILIES = family_catalog()
PAIRS = 1000
TRIPLES = 500


def _pairs(p, count, seed, cfg=SampleConfig()):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_element(p, rng, cfg), random_element(p, rng, cfg)


def criterion_1():
    start = time.perf_counter()
    order = lex_order(2)
    torus = families.quantum_torus(2)
    verdict = conjecture_check(order, 100, torus)
    one = torus.field.one()
    x1 = Element(torus, {(1, 0): one})
    ok = verdict.kind == "witness" and verdict.witness == (1, 0)
    for i, parts, unit in verdict.factorizations:
        prod = HahnSeries.one(torus, order)
        for e in parts:
            prod = series_mul(prod, HahnSeries(torus, order, {e: one}))
        ok &= prod.to_element() == x1 * unit and len(parts) == i
    ok &= verdict.min_elements == [(0, i) for i in range(1, 101)]
    ok &= all(not cone_power_membership((0, i - 1), i, order) for i in range(1, 101))
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5
    return ok, f"witness x1 in m^i for i <= 100, min of iA = (0, i), {elapsed:.2f}s"


def _brute_levels(order, reach, depth):
    box = [(a, b) for a in range(-reach, reach + 1) for b in range(-reach, reach + 1)]
    positives = [e for e in box if order.is_positive(e)]
    level = set(positives)
    yield level
    for _ in range(depth - 1):
        level = {
            (s[0] + e[0], s[1] + e[1])
            for s in level
            for e in positives
            if abs(s[0] + e[0]) <= reach and abs(s[1] + e[1]) <= reach
        }
        yield level


def criterion_2():
    start = time.perf_counter()
    orders = [lex_order(2), make_matrix_order([[1, 1], [0, 1]]), make_matrix_order([[2, 3], [0, 1]])]
    mismatches = checked = 0
    for order in orders:
        # summands of a decomposition of g with |g| <= 6 stay within 4 * 6
        for i, level in enumerate(_brute_levels(order, 24, 4), 1):
            for g in itertools.product(range(-6, 7), repeat=2):
                checked += 1
                mismatches += cone_power_membership(g, i, order) != (g in level)
    elapsed = time.perf_counter() - start
    return mismatches == 0 and elapsed < 30, f"{checked} checks, {mismatches} mismatches, {elapsed:.1f}s"


def criterion_3():
    failures = total = 0
    for k, (name, p) in enumerate(sorted(FAMILIES.items())):
        for f, g in _pairs(p, PAIRS, 300 + k):
            total += 1
            failures += mul(f, g) != normalize_product(f, g)
    return failures == 0, f"{total} pairs over {len(FAMILIES)} families, {failures} failures"


def criterion_4():
    failures = total = 0
    cfg = SampleConfig(max_terms=2)
    for k, (name, p) in enumerate(sorted(FAMILIES.items())):
        rng = random.Random(400 + k)
        for _ in range(TRIPLES):
            f, g, h = (random_element(p, rng, cfg) for _ in range(3))
            total += 1
            ok = (f * g) * h == f * (g * h) and f * (g + h) == f * g + f * h and (f + g) * h == f * h + g * h
            failures += not ok
    return failures == 0, f"{total} triples over {len(FAMILIES)} families, {failures} failures"


def criterion_5():
    failures = total = 0
    qc = [(n, p) for n, p in sorted(FAMILIES.items()) if p.quasi_commutative]
    per = -(-PAIRS // len(qc))
    for k, (name, p) in enumerate(qc):
        order = lex_order(p.n)
        for f, g in _pairs(p, per, 500 + k):
            total += 1
            vf, vg = val(f, order), val(g, order)
            ok = val(f * g, order) == val_add(vf, vg)
            s = val(f + g, order)
            lo = order.min([vf, vg])
            ok &= val_le(lo, s, order)
            if vf != vg:
                ok &= s == lo
            failures += not ok
    return failures == 0, f"{total} pairs, {failures} failures"


def criterion_6():
    zeros = total = 0
    per = -(-PAIRS // len(FAMILIES))
    for k, (name, p) in enumerate(sorted(FAMILIES.items())):
        for f, g in _pairs(p, per, 600 + k):
            total += 1
            zeros += (f * g).is_zero()
    return zeros == 0, f"{total} nonzero pairs, {zeros} zero products"


def _random_invertible_series(rng, ring, order):
    m = (rng.randint(-3, 3), rng.randint(-3, 3))
    terms = {m: random_coeff(ring.field, rng, nonzero=True)}
    for _ in range(rng.randint(1, 4)):
        e = (m[0] + rng.randint(1, 3), m[1] + rng.randint(-3, 3))
        terms[e] = random_coeff(ring.field, rng, nonzero=True)
    return HahnSeries(ring, order, terms)


def criterion_7():
    order = lex_order(2)
    rng = random.Random(7)
    rings = [families.quantum_torus(2), families.quantum_torus(2, QQ, {(0, 1): Fraction(3, 2)})]
    bound = (3, 0)
    failures = 0
    for k in range(50):
        ring = rings[k % 2]
        f = _random_invertible_series(rng, ring, order)
        inv = series_invert(f, bound)
        prod = series_mul(f, inv.series)
        ok = inv.reached_target and prod.equal_below(HahnSeries.one(ring, order), bound)
        failures += not ok
    return failures == 0, f"50 series, f*f^-1 - 1 vanishes below (3, 0); {failures} failures"


def criterion_8():
    failures = total = 0
    qc = [(n, p) for n, p in sorted(FAMILIES.items()) if p.quasi_commutative]
    per = -(-TRIPLES // len(qc))
    for k, (name, p) in enumerate(qc):
        for f, g in _pairs(p, per, 800 + k):
            total += 1
            failures += iterated_mul(f, g) != mul(f, g)
    return failures == 0, f"{total} pairs, {failures} failures"


def criterion_9():
    failures = total = 0
    for k, p in enumerate([families.quantum_weyl(), families.weyl_algebra()]):
        gr = associated_graded(p)
        for f, g in _pairs(p, TRIPLES, 900 + k):
            total += 1
            sf, sg = transfer(leading_form(f), gr), transfer(leading_form(g), gr)
            top = transfer(leading_form(f * g), gr)
            failures += top != sf * sg
    return failures == 0, f"{total} pairs, {failures} failures"


def criterion_10():
    K = RationalFunctionField(("t1", "t2", "t3"))
    t1, t2, t3 = (K.param(k) for k in range(3))

    def qmat(upper, n=3):
        q = [[K.one()] * n for _ in range(n)]
        for (i, j), v in upper.items():
            q[i][j], q[j][i] = v, v ** -1
        return q

    ident = [Automorphism.identity(3)] * 3
    dep = qmat({(0, 1): t1, (0, 2): t2, (1, 2): t1 * t2})
    std = qmat({(0, 1): t1, (0, 2): t2, (1, 2): t3})
    triv = qmat({}, 2)
    r1, r2, r3 = genericity_check(dep, ident), genericity_check(std, ident), genericity_check(triv, ident[:2])
    ok = not r1.generic and verify_dependency(dep, r1.pairs, r1.dependency)
    ok &= tuple(r1.dependency) in {(1, 1, -1), (-1, -1, 1)}
    ok &= r2.generic and r2.rank == 3
    ok &= not r3.generic and verify_dependency(triv, r3.pairs, r3.dependency)
    return ok, f"non-generic {tuple(r1.dependency)}, generic rank {r2.rank}, non-generic {tuple(r3.dependency)}"


def criterion_11():
    order = lex_order(1)
    rep = power_value_bound(order, i_max=10, v_max=10)
    ok = rep.hypothesis_holds and rep.lambda1 == 1 and rep.lambdas == list(range(1, 11))
    ok &= rep.bound_ok and rep.exclusions_ok
    for v in range(0, 11):
        for i in range(1, 13):
            ok &= cone_power_membership((v,), i, order) == (i <= v)
    return ok, f"lambda_i = i for i <= 10, exclusions exhaustive for v <= 10 ({rep.checked} checks)"


def criterion_12():
    rng = random.Random(12)
    failures = 0
    tori = [families.quantum_torus(2), FAMILIES["torus3/F7"], FAMILIES["torus2/Q"]]
    for k in range(100):
        p = tori[k % 3]
        order = lex_order(p.n)
        a, b = (random_element(p, rng, SampleConfig(max_terms=1)) for _ in range(2))
        c = a * b * inverse_monomial(a) * inverse_monomial(b)
        failures += val(c, order) != (0,) * p.n
    return failures == 0, f"100 commutators, {failures} with nonzero value"


def criterion_13():
    rng = random.Random(13)
    names = sorted(FAMILIES)
    failures = 0
    for k in range(200):
        p = FAMILIES[names[k % len(names)]]
        f = random_element(p, rng, nonzero=False)
        text = format_element(f)
        g = parse_element(text, p)
        failures += g != f or format_element(g) != text
    argv_list = [
        ["conjecture", "--order", "lex2", "--depth", "30"],
        ["normalize", "-p", str(ROOT / "presentations" / "plane.json"), "-e", "x2*x1"],
        ["--json", "invert", "-p", "@torus2", "-e", "x2 + x1", "--bound", "(3,0)"],
        ["mul", "-p", "@weyl", "-a", "x1^2", "-b", "t^3"],
    ]
    stable = all(run_command(a) == run_command(a) for a in argv_list)
    cmd = [sys.executable, "-m", "skewpbw", *argv_list[0]]
    outs = {subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)}
    stable &= len(outs) == 1
    return failures == 0 and stable, f"200 round trips, {failures} failures; CLI output byte-identical: {stable}"


CRITERIA = [
    (1, "counterexample reproduction", criterion_1),
    (2, "cone-power oracle", criterion_2),
    (3, "rewriting oracle", criterion_3),
    (4, "ring axioms", criterion_4),
    (5, "valuation axioms", criterion_5),
    (6, "domain property", criterion_6),
    (7, "series inversion", criterion_7),
    (8, "iterated form", criterion_8),
    (9, "associated graded", criterion_9),
    (10, "genericity", criterion_10),
    (11, "archimedean bound", criterion_11),
    (12, "commutator valuation", criterion_12),
    (13, "round trip and determinism", criterion_13),
]


def _run(number, title, check):
    try:
        ok, detail = check()
    except Exception as exc:  # a crash is a failure with its message
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d} ({title}): {detail}"
    print(line)
    REPORT.append(line)
    return ok, line


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    ok, line = _run(number, title, check)
    assert ok, line


if __name__ == "__main__":
    results = [_run(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
