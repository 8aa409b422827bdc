"""Degree windows on [0, dim X_Sym] for GL_n.

``a(n)`` and ``b(n)`` bound the range where cuspidal cohomology can live; the
rest of [0, dim] splits into the inner window ``(0, a)`` and the irrelevant
window ``(b, dim)``.  Endpoints are exact rationals and membership is decided
by exact comparison, so for n = 2 the window [3/4, 9/4] holds {1, 2}.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from ._arith import fmt_rational, is_prime
from .lie_cohomology import GeneratorDegrees, generator_degrees


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")


def _check_prime(n: int) -> None:
    if not isinstance(n, int) or not is_prime(n):
        raise ValueError(f"rank must be prime, got {n!r}")


def dim_symmetric_space(n: int) -> int:
    _check_rank(n)
    return comb(n + 1, 2) - 1


def cusp_bounds(n: int) -> tuple[Fraction, Fraction]:
    _check_rank(n)
    full = Fraction(comb(n + 1, 2))
    half_rank_gap = Fraction(n + 1, 2)
    return (full - half_rank_gap) / 2, (full + half_rank_gap) / 2


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    dim_sym: int
    a: Fraction
    b: Fraction
    I: tuple[int, ...]
    I_inner: tuple[int, ...]
    I_cusp: tuple[int, ...]
    I_irr: tuple[int, ...]
    s0: GeneratorDegrees

    def window_of(self, k: int) -> str:
        if k in (0, self.dim_sym):
            return "end"
        if k in self.I_inner:
            return "inner"
        if k in self.I_cusp:
            return "cusp"
        if k in self.I_irr:
            return "irr"
        raise ValueError(f"degree {k} outside [0, {self.dim_sym}]")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dim_sym": self.dim_sym,
            "a": fmt_rational(self.a),
            "b": fmt_rational(self.b),
            "I_inner": list(self.I_inner),
            "I_cusp": list(self.I_cusp),
            "I_irr": list(self.I_irr),
            "S0": list(self.s0.degrees),
        }


def degree_profile(n: int) -> DegreeProfile:
    dim = dim_symmetric_space(n)
    a, b = cusp_bounds(n)
    degrees = range(dim + 1)
    return DegreeProfile(
        n=n,
        dim_sym=dim,
        a=a,
        b=b,
        I=tuple(degrees),
        I_inner=tuple(k for k in degrees if 0 < k < a),
        I_cusp=tuple(k for k in degrees if a <= k <= b),
        I_irr=tuple(k for k in degrees if b < k < dim),
        s0=generator_degrees(n),
    )


def s0_cusp_overlap(n: int) -> frozenset[int]:
    _check_prime(n)
    prof = degree_profile(n)
    return frozenset(prof.s0.degrees) & frozenset(prof.I_cusp)


@dataclass(frozen=True)
class TableRow:
    n: int
    dim_sym: int
    a: Fraction
    b: Fraction
    cusp_degrees: tuple[int, ...]
    s0: tuple[int, ...]

    def interval_text(self) -> str:
        text = f"[{fmt_rational(self.a)},{fmt_rational(self.b)}]"
        if self.a.denominator != 1 or self.b.denominator != 1:
            text += " = " + set_text(self.cusp_degrees)
        return text

    def s0_text(self) -> str:
        return set_text(self.s0)

    def cells(self) -> list[str]:
        return [str(self.n), str(self.dim_sym), self.interval_text(), self.s0_text()]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dim_sym": self.dim_sym,
            "I_cusp": {
                "a": fmt_rational(self.a),
                "b": fmt_rational(self.b),
                "degrees": list(self.cusp_degrees),
            },
            "S0": list(self.s0),
        }


def set_text(values: Iterable[int]) -> str:
    values = list(values)
    return "{" + ",".join(map(str, values)) + "}" if values else "∅"


def table_row(n: int) -> TableRow:
    _check_prime(n)
    prof = degree_profile(n)
    return TableRow(n, prof.dim_sym, prof.a, prof.b, prof.I_cusp, prof.s0.degrees)


TABLE_HEADER = ["n", "dim X_Sym", "I_cusp = [a(n),b(n)]", "S0"]


def render_markdown(rows: list[TableRow]) -> str:
    lines = [
        "| " + " | ".join(TABLE_HEADER) + " |",
        "|" + "|".join("---" for _ in TABLE_HEADER) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(row.cells()) + " |")
    return "\n".join(lines) + "\n"


def render_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "dim_sym", "a", "b", "I_cusp", "S0"])
    for row in rows:
        writer.writerow([
            row.n,
            row.dim_sym,
            fmt_rational(row.a),
            fmt_rational(row.b),
            " ".join(map(str, row.cusp_degrees)),
            " ".join(map(str, row.s0)),
        ])
    return buf.getvalue()


def render_json(rows: list[TableRow]) -> str:
    return json.dumps([r.to_dict() for r in rows], indent=2) + "\n"
