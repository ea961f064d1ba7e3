"""Reproduce the counterexample: under lex on Z^2, x1 lies in every power of m.

    python scripts/counterexample.py --depth 100 [--order "[[1,1],[0,1]]"]

Every factorization is multiplied back in the completion and compared with
(unit) * x1 before it is printed.
"""
import argparse
import time

from skewpbw import families
from skewpbw.completion import HahnSeries, conjecture_check, series_mul
from skewpbw.frontend.printer import format_coeff, format_monomial
from skewpbw.frontend.serialize import order_from_spec


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=100)
    ap.add_argument("--order", default="lex2")
    ap.add_argument("--show", type=int, default=5, help="factorizations to print")
    args = ap.parse_args()

    order = order_from_spec(args.order)
    ring = families.quantum_torus(order.n)
    start = time.perf_counter()
    verdict = conjecture_check(order, args.depth, ring)
    print(f"order {order}, least positive element {verdict.min_positive}")
    if verdict.kind != "witness":
        print(f"verdict: {verdict.kind}")
        return
    one = ring.field.one()
    target = HahnSeries(ring, order, {verdict.witness: one})
    for i, parts, unit in verdict.factorizations:
        prod = HahnSeries.one(ring, order)
        for e in parts:
            prod = series_mul(prod, HahnSeries(ring, order, {e: one}))
        assert prod.to_element() == target.to_element() * unit
        assert verdict.min_elements[i - 1] == tuple(i * a for a in verdict.min_positive)
        if i <= args.show or i == args.depth:
            factors = " * ".join(format_monomial(e) for e in parts)
            print(f"  i = {i:3d}: {factors}  = ({format_coeff(unit)}) * {format_monomial(verdict.witness)}")
    elapsed = time.perf_counter() - start
    print(f"{format_monomial(verdict.witness)} is in m^i for all i <= {args.depth} ({elapsed:.2f}s, all products verified)")


if __name__ == "__main__":
    main()
