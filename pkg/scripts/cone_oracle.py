"""Compare the closed form iA = {g >= i*m0} with brute-force sums of positive vectors.

    python scripts/cone_oracle.py --box 6 --max-i 4
"""
import argparse
import itertools
import time

from skewpbw.exponents import cone_power_membership, lex_order, make_matrix_order, min_positive

ORDERS = {
    "lex": [[1, 0], [0, 1]],
    "unimodular": [[1, 1], [0, 1]],
    "weight": [[2, 3], [0, 1]],
    "swap": [[0, 1], [1, 0]],
}


def brute_levels(order, reach, depth):
    box = list(itertools.product(range(-reach, reach + 1), repeat=2))
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


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--box", type=int, default=6)
    ap.add_argument("--max-i", type=int, default=4)
    args = ap.parse_args()
    reach = args.box * args.max_i
    for name, mat in ORDERS.items():
        order = make_matrix_order(mat) if name != "lex" else lex_order(2)
        start = time.perf_counter()
        bad = 0
        for i, level in enumerate(brute_levels(order, reach, args.max_i), 1):
            for g in itertools.product(range(-args.box, args.box + 1), repeat=2):
                bad += cone_power_membership(g, i, order) != (g in level)
        print(f"{name:10s} m0 = {min_positive(order)}  mismatches: {bad}  ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
