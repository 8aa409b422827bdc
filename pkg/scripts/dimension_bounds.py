"""Upper bounds on dim H^k_{!/cusp} at the degrees in S0, constant coefficients.

For each prime rank and level modulus the bound is b_k * (number of residual
finite parts), the latter being phi(N).  Rows also flag which window each
degree falls in, so the n = 5, 7 overlaps with the cusp window stand out.
"""

import argparse

from innercoh.dirichlet import enumerate_characters
from innercoh.intervals import degree_profile
from innercoh.lie_cohomology import betti
from innercoh.spectral import VerdictKind, classify
from innercoh.weights import from_standard


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--primes", type=int, nargs="+", default=[5, 7, 11, 13])
    parser.add_argument("--levels", type=int, nargs="+", default=[1, 3, 4, 7, 12])
    args = parser.parse_args()

    print("| n | N | k | window | b_k | finite parts | bound |")
    print("|---|---|---|---|---|---|---|")
    for n in args.primes:
        prof = degree_profile(n)
        for N in args.levels:
            parts = len(enumerate_characters(N))
            report = classify(n, from_standard(n, [0] * n), N)
            for k, v in enumerate(report.per_degree):
                if v.kind is VerdictKind.RESIDUAL_KERNEL:
                    print(f"| {n} | {N} | {k} | {prof.window_of(k)} | {betti(n, k)} "
                          f"| {parts} | {v.bound} |")


if __name__ == "__main__":
    main()
