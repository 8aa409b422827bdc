"""Betti numbers of H^*(g, K_inf, C) = H^*(SU(n)/SO(n), C).

The cohomology ring is an exterior algebra on generators of degrees
``2l - 1`` for odd ``l`` with ``1 < l <= n``.  Ranks are computed by
multiplying out ``prod (1 + t^s)``; :func:`oracle_betti` counts subsets
directly and is kept for cross-checking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")


@dataclass(frozen=True)
class GeneratorDegrees:
    n: int
    degrees: tuple[int, ...]

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __contains__(self, k) -> bool:
        return k in self.degrees

    @property
    def top_degree(self) -> int:
        return sum(self.degrees)


@dataclass(frozen=True)
class PoincarePolynomial:
    """Betti numbers as a dense coefficient tuple, index = degree."""

    coeffs: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]

    def at_one(self) -> int:
        return sum(self.coeffs)

    def times(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return PoincarePolynomial(tuple(out))

    def to_dict(self) -> dict[str, int]:
        return {str(k): self.coeffs[k] for k in self.support()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        terms = []
        for k in self.support():
            c = self.coeffs[k]
            mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


def generator_degrees(n: int) -> GeneratorDegrees:
    _check_rank(n)
    return GeneratorDegrees(n, tuple(2 * l - 1 for l in range(3, n + 1, 2)))


def poincare_polynomial(n: int) -> PoincarePolynomial:
    coeffs = [1]
    for s in generator_degrees(n):
        nxt = coeffs + [0] * s
        for k, c in enumerate(coeffs):
            nxt[k + s] += c
        coeffs = nxt
    return PoincarePolynomial(tuple(coeffs))


def betti(n: int, k: int) -> int:
    return poincare_polynomial(n)[k]


def oracle_betti(n: int, k: int) -> int:
    """Count subsets of the generator degrees summing to ``k``."""
    gens = generator_degrees(n).degrees
    return sum(
        1
        for r in range(len(gens) + 1)
        for subset in combinations(gens, r)
        if sum(subset) == k
    )


def with_circle_factor(n: int) -> PoincarePolynomial:
    """Poincare polynomial of H^*(g, O(n), C): the extra degree-1 circle class."""
    return PoincarePolynomial((1, 1)).times(poincare_polynomial(n))
