"""Print the degree table for the first few primes, optionally extended.

    python scripts/reproduce_table.py            # n = 2, 3, 5, 7, 11
    python scripts/reproduce_table.py --upto 31  # every prime up to 31
"""

import argparse

from innercoh._arith import is_prime
from innercoh.intervals import render_markdown, s0_cusp_overlap, table_row


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--upto", type=int, default=11)
    args = parser.parse_args()

    primes = [p for p in range(2, args.upto + 1) if is_prime(p)]
    print(render_markdown([table_row(p) for p in primes]))
    print("S0 inside the cusp window:")
    for p in primes:
        overlap = sorted(s0_cusp_overlap(p))
        print(f"  n = {p:3d}: {overlap if overlap else 'none'}")


if __name__ == "__main__":
    main()
