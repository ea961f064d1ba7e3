"""Invert a few series over the quantum torus and show where the result is exact.

    python scripts/inversion_demo.py --bound "(3,0)"
"""
import argparse

from skewpbw import families
from skewpbw.completion import HahnSeries, series_invert, series_mul
from skewpbw.exponents import lex_order
from skewpbw.frontend.parser import parse_element

EXAMPLES = ["1 - x1", "x1", "x2 + x1", "q*x1^-1*x2 + 2 + x1^2", "1 + x2"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", default="(3,0)")
    args = ap.parse_args()
    bound = tuple(int(a) for a in args.bound.strip("()").split(","))
    ring, order = families.quantum_torus(2), lex_order(2)
    for text in EXAMPLES:
        f = HahnSeries.from_element(parse_element(text, ring), order)
        inv = series_invert(f, bound)
        check = series_mul(f, inv.series)
        print(f"f = {text}")
        print(f"  f^-1 = {inv.series}")
        print(f"  f * f^-1 = {check}   target reached: {inv.reached_target}")
        for note in inv.notes:
            print(f"  note: {note}")


if __name__ == "__main__":
    main()
