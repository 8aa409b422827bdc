"""Residual spectrum and the per-degree classification of H^k_{!/cusp}.

Level structure is modelled by one modulus N: the finite parts available at
level N are the Dirichlet characters mod N.  At degrees in S^0 the report
carries an upper bound on the dimension, not the dimension itself; the exact
value is the kernel of the boundary restriction, which is not computed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from ._arith import fmt_rational, is_prime
from .dirichlet import DirichletCharacter, enumerate_characters, nth_roots, unit_group_structure
from .intervals import degree_profile
from .lie_cohomology import betti, generator_degrees
from .weights import (
    Weight,
    central_exponent,
    from_standard,
    is_constant_coefficient,
    is_dominant,
    is_integral,
    sheaf_is_nonzero,
)

RESIDUAL_SYMBOL = "ker(r^k | Φ_BG(Res_f(λ)))"
MULTIPLICITY = 1


class DomainError(ValueError):
    """Input is well formed but outside the regime where the result applies."""


def _check_prime(n: int) -> None:
    if not isinstance(n, int) or not is_prime(n):
        raise DomainError(f"rank must be prime, got {n!r}")


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")


@dataclass(frozen=True)
class ParabolicShape:
    parts: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def proper(self) -> bool:
        return len(self.parts) > 1

    @property
    def equal_parts(self) -> bool:
        return len(set(self.parts)) == 1


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def standard_parabolic_shapes(n: int, proper: bool = True) -> list[ParabolicShape]:
    """Ordered compositions of n; the one-part shape only when ``proper=False``."""
    _check_rank(n)
    shapes = [ParabolicShape(c) for c in _compositions(n)]
    return [s for s in shapes if s.proper] if proper else shapes


def xi0_shapes(n: int) -> list[ParabolicShape]:
    """Proper shapes whose blocks all have the same size, finest first.

    Built from block sizes dividing n rather than by filtering compositions.
    """
    _check_rank(n)
    return [ParabolicShape((size,) * (n // size)) for size in range(1, n) if n % size == 0]


@dataclass(frozen=True)
class ResidualDescriptor:
    finite_part: DirichletCharacter
    type_exponent: Fraction
    multiplicity: int = MULTIPLICITY

    def to_dict(self) -> dict:
        return {
            "finite_part": self.finite_part.to_dict(),
            "type_exponent": fmt_rational(self.type_exponent),
            "multiplicity": self.multiplicity,
        }


def _check_residual_regime(n: int, w: Weight) -> None:
    _check_prime(n)
    if w.n != n:
        raise ValueError(f"weight has rank {w.n}, expected {n}")
    if not is_integral(w):
        raise DomainError("weight is not integral")
    if not is_constant_coefficient(w):
        raise DomainError("weight is not a multiple of the determinant")
    if not sheaf_is_nonzero(w):
        raise DomainError("central exponent nd is odd, the sheaf vanishes")


def residual_fiber(
    n: int, w: Weight, N: int, central: DirichletCharacter
) -> list[ResidualDescriptor]:
    """Residual finite parts ``mu`` with ``mu^n`` equal to the central character."""
    _check_residual_regime(n, w)
    if central.modulus != N:
        raise ValueError(f"central character has modulus {central.modulus}, expected {N}")
    d = central_exponent(w) / n
    return [ResidualDescriptor(mu, d) for mu in nth_roots(central, n)]


def residual_spectrum(n: int, w: Weight, N: int) -> list[ResidualDescriptor]:
    """One descriptor per character mod N, collected fiber by fiber."""
    _check_residual_regime(n, w)
    out = []
    for omega in enumerate_characters(N):
        out.extend(residual_fiber(n, w, N, omega))
    return out


class VerdictKind(str, Enum):
    SHEAF_ZERO = "SheafZero"
    NONCONSTANT_ZERO = "NonconstantZero"
    ZERO = "Zero"
    RESIDUAL_KERNEL = "ResidualKernel"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    bound: Optional[int] = None
    symbolic: Optional[str] = None

    @property
    def vanishes(self) -> bool:
        return self.kind is not VerdictKind.RESIDUAL_KERNEL

    def to_dict(self, k: int) -> dict:
        out = {"k": k, "verdict": self.kind.value}
        if self.bound is not None:
            out["bound"] = self.bound
        if self.symbolic is not None:
            out["symbolic"] = self.symbolic
        return out


@dataclass(frozen=True)
class CohomologyReport:
    n: int
    weight: Weight
    level: int
    per_degree: tuple[Verdict, ...] = field(repr=False)

    def verdict(self, k: int) -> Verdict:
        return self.per_degree[k]

    @property
    def dim_sym(self) -> int:
        return len(self.per_degree) - 1

    def nonvanishing_degrees(self) -> list[int]:
        return [k for k, v in enumerate(self.per_degree) if not v.vanishes]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "weight": self.weight.to_dict(),
            "level": self.level,
            "verdicts": [v.to_dict(k) for k, v in enumerate(self.per_degree)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def to_markdown(self) -> str:
        lines = [
            f"GL_{self.n}, weight {self.weight}, level modulus N = {self.level} "
            f"(finite parts: Dirichlet characters mod N)",
            "",
            "| k | verdict | dim bound | expression |",
            "|---|---|---|---|",
        ]
        for k, v in enumerate(self.per_degree):
            bound = "" if v.bound is None else str(v.bound)
            expr = (v.symbolic or "").replace("|", "\\|")
            lines.append(f"| {k} | {v.kind.value} | {bound} | {expr} |")
        return "\n".join(lines) + "\n"


def classify(n: int, w: Weight, N: int) -> CohomologyReport:
    _check_prime(n)
    if w.n != n:
        raise ValueError(f"weight has rank {w.n}, expected {n}")
    if not is_integral(w):
        raise DomainError("weight is not integral")
    if not is_dominant(w):
        raise DomainError("weight is not dominant")
    unit_group_structure(N)  # validates the modulus

    prof = degree_profile(n)
    if not sheaf_is_nonzero(w):
        verdicts = [Verdict(VerdictKind.SHEAF_ZERO)] * (prof.dim_sym + 1)
    elif not is_constant_coefficient(w):
        verdicts = [Verdict(VerdictKind.NONCONSTANT_ZERO)] * (prof.dim_sym + 1)
    elif n in (2, 3):
        verdicts = [Verdict(VerdictKind.ZERO)] * (prof.dim_sym + 1)
    else:
        s0 = generator_degrees(n)
        finite_parts = len(residual_spectrum(n, w, N))
        verdicts = [
            Verdict(VerdictKind.RESIDUAL_KERNEL, betti(n, k) * finite_parts, RESIDUAL_SYMBOL)
            if k in s0
            else Verdict(VerdictKind.ZERO)
            for k in prof.I
        ]
    return CohomologyReport(n, w, N, tuple(verdicts))


def duality_pairing_check(n: int) -> bool:
    """Verdicts at degree 0 and at the top degree agree for the constant sheaf."""
    report = classify(n, from_standard(n, [0] * n), 1)
    return report.verdict(0) == report.verdict(report.dim_sym)
