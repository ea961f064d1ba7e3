"""Check mul against the letter-by-letter rewriting oracle on every sample family.

    python scripts/oracle_sweep.py --pairs 200 --max-degree 5
"""
import argparse
import random
import time

from skewpbw.elements import mul, normalize_product
from skewpbw.sampling import SampleConfig, family_catalog, random_element


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--max-degree", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = SampleConfig(max_degree=args.max_degree)
    for name, p in sorted(family_catalog().items()):
        rng = random.Random(args.seed)
        start = time.perf_counter()
        bad = 0
        for _ in range(args.pairs):
            f, g = random_element(p, rng, cfg), random_element(p, rng, cfg)
            bad += mul(f, g) != normalize_product(f, g)
        print(f"{name:12s} {args.pairs} pairs  failures: {bad}  ({time.perf_counter() - start:.2f}s)")


if __name__ == "__main__":
    main()
