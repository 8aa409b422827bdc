"""Rational characters of the diagonal torus of GL_n.

A weight is stored by its coefficients ``b`` against the standard characters
``e_1, ..., e_n``.  The fundamental coordinates (``a_i`` against the
fundamental weights, ``d`` against the determinant) are a derived view.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._arith import Rational, fmt_rational, to_fraction


class WeightError(ValueError):
    """Raised for malformed weights or when a predicate precondition fails."""


@dataclass(frozen=True)
class FundamentalView:
    a: tuple[Fraction, ...]
    d: Fraction
    nd: Fraction

    @property
    def n(self) -> int:
        return len(self.a) + 1

    def congruence_residue(self) -> Fraction:
        """``nd - sum(i * a_i)`` reduced mod n; zero for integral weights."""
        r = self.nd - sum(i * ai for i, ai in enumerate(self.a, start=1))
        return r % self.n

    def shifted_congruence_residue(self) -> Fraction:
        """Residue of ``nd - sum(i * (a_i - 1))`` mod n.

        Differs from :meth:`congruence_residue` by ``n(n-1)/2``, so the two
        agree for odd n and disagree by ``n/2`` for even n.  Kept for
        diagnostics only; integrality never consults it.
        """
        r = self.nd - sum(i * (ai - 1) for i, ai in enumerate(self.a, start=1))
        return r % self.n


@dataclass(frozen=True)
class Weight:
    n: int
    b: tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise WeightError(f"rank must be an integer >= 2, got {self.n!r}")
        if len(self.b) != self.n:
            raise WeightError(f"expected {self.n} coordinates, got {len(self.b)}")
        try:
            coords = tuple(to_fraction(x) for x in self.b)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise WeightError(str(exc)) from exc
        object.__setattr__(self, "b", coords)

    def to_dict(self) -> dict:
        return {"n": self.n, "b": [fmt_rational(x) for x in self.b]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Weight":
        return from_standard(int(data["n"]), data["b"])

    @classmethod
    def from_json(cls, text: str) -> "Weight":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        return "(" + ",".join(fmt_rational(x) for x in self.b) + ")"


def from_standard(n: int, b: Sequence[Rational | str]) -> Weight:
    return Weight(n, tuple(b))


def from_fundamental(n: int, a: Sequence[Rational | str], d: Rational | str) -> Weight:
    """Rebuild standard coordinates from ``a_1..a_{n-1}`` and ``d``.

    Uses ``n*d = n*b_n + sum(i * a_i)`` and ``b_i = b_{i+1} + a_i``.
    """
    if n < 2:
        raise WeightError(f"rank must be an integer >= 2, got {n!r}")
    if len(a) != n - 1:
        raise WeightError(f"expected {n - 1} fundamental coefficients, got {len(a)}")
    try:
        af = [to_fraction(x) for x in a]
        nd = n * to_fraction(d)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise WeightError(str(exc)) from exc
    b_last = (nd - sum(i * ai for i, ai in enumerate(af, start=1))) / n
    b = [b_last]
    for ai in reversed(af):
        b.append(b[-1] + ai)
    return Weight(n, tuple(reversed(b)))


def fundamental_view(w: Weight) -> FundamentalView:
    a = tuple(w.b[i] - w.b[i + 1] for i in range(w.n - 1))
    nd = sum(w.b, Fraction(0))
    return FundamentalView(a=a, d=nd / w.n, nd=nd)


def is_integral(w: Weight) -> bool:
    """Integrality tested in fundamental coordinates.

    All ``a_i`` and ``nd`` integers, and ``nd = sum(i * a_i) (mod n)``.  This
    is equivalent to every standard coordinate being an integer.
    """
    fv = fundamental_view(w)
    if any(ai.denominator != 1 for ai in fv.a) or fv.nd.denominator != 1:
        return False
    return fv.congruence_residue() == 0


def is_dominant(w: Weight) -> bool:
    return all(ai >= 0 for ai in fundamental_view(w).a)


def central_exponent(w: Weight) -> Fraction:
    """``nd``: the exponent of the central character ``z -> z^nd``."""
    return sum(w.b, Fraction(0))


def sheaf_is_nonzero(w: Weight) -> bool:
    """Whether ``-I_n`` acts trivially, i.e. nd is even."""
    if not is_integral(w):
        raise WeightError(f"weight {w} is not integral")
    return central_exponent(w).numerator % 2 == 0


def is_constant_coefficient(w: Weight) -> bool:
    """True when the weight is a multiple of the determinant (all a_i = 0)."""
    return all(ai == 0 for ai in fundamental_view(w).a)
