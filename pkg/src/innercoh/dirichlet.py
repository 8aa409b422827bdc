"""Dirichlet characters with exact values.

``(Z/NZ)^x`` is split by CRT into cyclic factors, each with a fixed generator
lifted to a unit mod N.  A character is the vector of exponents ``e_i`` with
``chi(g_i) = exp(2 pi i e_i / m_i)``, so values are rationals mod 1 and
character equality is exponent-vector equality.

Factor conventions:

* odd ``p^k``: one cyclic factor of order ``phi(p^k)``, generated by the
  least primitive root mod ``p^k``;
* ``2``: nothing;
* ``4``: ``C_2`` generated by ``-1``;
* ``2^k`` with ``k >= 3``: ``C_2 x C_{2^{k-2}}`` generated by ``-1`` and ``5``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, prod
from typing import Optional

from ._arith import factorize, lcm, totient


@dataclass(frozen=True)
class CyclicFactor:
    generator: int  # unit mod N
    order: int
    prime: int
    power: int  # p^power is the prime-power component this factor lives in
    local_generator: int  # generator reduced mod p^power


@dataclass(frozen=True)
class UnitGroupStructure:
    modulus: int
    factors: tuple[CyclicFactor, ...]
    _dlog: dict = field(compare=False, hash=False, repr=False)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(f.order for f in self.factors)

    @property
    def order(self) -> int:
        return prod(self.orders)

    def units(self) -> list[int]:
        return sorted(self._dlog)

    def dlog(self, a: int) -> Optional[tuple[int, ...]]:
        """Exponent vector of ``a`` against the generators, None for non-units."""
        return self._dlog.get(a % self.modulus)

    def element(self, exps) -> int:
        x = 1 % self.modulus
        for f, e in zip(self.factors, exps):
            x = x * pow(f.generator, e, self.modulus) % self.modulus
        return x


def _primitive_root(q: int, p: int) -> int:
    """Least primitive root mod the odd prime power ``q = p^k``."""
    phi = totient(q)
    prime_divs = [r for r, _ in factorize(phi)]
    for g in range(2, q):
        if g % p == 0:
            continue
        if all(pow(g, phi // r, q) != 1 for r in prime_divs):
            return g
    raise ArithmeticError(f"no primitive root mod {q}")


def _crt_lift(residue: int, q: int, modulus: int) -> int:
    """Unit mod ``modulus`` congruent to ``residue`` mod q and to 1 elsewhere."""
    rest = modulus // q
    if rest == 1:
        return residue % modulus
    # x = residue (mod q), x = 1 (mod rest)
    t = (residue - 1) * pow(rest, -1, q) % q
    return (1 + rest * t) % modulus


@lru_cache(maxsize=None)
def unit_group_structure(N: int) -> UnitGroupStructure:
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"modulus must be a positive integer, got {N!r}")
    factors = []
    for p, k in factorize(N):
        q = p**k
        if p == 2:
            if k >= 2:
                factors.append(CyclicFactor(_crt_lift(-1, q, N), 2, 2, k, q - 1))
            if k >= 3:
                factors.append(CyclicFactor(_crt_lift(5, q, N), 2 ** (k - 2), 2, k, 5))
        else:
            g = _primitive_root(q, p)
            factors.append(CyclicFactor(_crt_lift(g, q, N), totient(q), p, k, g))

    table: dict[int, tuple[int, ...]] = {}
    for exps in product(*(range(f.order) for f in factors)):
        x = 1 % N
        for f, e in zip(factors, exps):
            x = x * pow(f.generator, e, N) % N
        table[x] = exps
    group = UnitGroupStructure(N, tuple(factors), table)
    if len(table) != totient(N):
        raise ArithmeticError(f"generator decomposition mod {N} is not direct")
    return group


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        orders = self.group.orders
        if len(self.exponents) != len(orders):
            raise ValueError(
                f"mod {self.modulus} needs {len(orders)} exponents, got {len(self.exponents)}"
            )
        object.__setattr__(
            self, "exponents", tuple(int(e) % m for e, m in zip(self.exponents, orders))
        )

    @property
    def group(self) -> UnitGroupStructure:
        return unit_group_structure(self.modulus)

    @property
    def order(self) -> int:
        return lcm(m // gcd(m, e) for m, e in zip(self.group.orders, self.exponents))

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    def values_on_generators(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(e, m) for e, m in zip(self.exponents, self.group.orders))

    def __call__(self, a: int) -> Optional[Fraction]:
        return evaluate(self, a)

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if other.modulus != self.modulus:
            raise ValueError("characters have different moduli")
        return DirichletCharacter(
            self.modulus, tuple(x + y for x, y in zip(self.exponents, other.exponents))
        )

    def __pow__(self, k: int) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, tuple(k * e for e in self.exponents))

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "exponents": list(self.exponents),
            "conductor": conductor(self),
            "order": self.order,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "DirichletCharacter":
        return cls(int(data["modulus"]), tuple(int(e) for e in data["exponents"]))


def principal_character(N: int) -> DirichletCharacter:
    return DirichletCharacter(N, (0,) * len(unit_group_structure(N).factors))


def enumerate_characters(N: int) -> list[DirichletCharacter]:
    """All characters mod N in lexicographic exponent order, principal first."""
    group = unit_group_structure(N)
    return [DirichletCharacter(N, exps) for exps in product(*(range(m) for m in group.orders))]


def evaluate(chi: DirichletCharacter, a: int) -> Optional[Fraction]:
    """Value at ``a`` as a turn fraction ``q`` in [0, 1) (value ``e^{2 pi i q}``).

    Returns None when ``gcd(a, N) > 1``, i.e. the value is zero.
    """
    logs = chi.group.dlog(a)
    if logs is None:
        return None
    q = sum(
        (Fraction(e * x, m) for e, x, m in zip(chi.exponents, logs, chi.group.orders)),
        Fraction(0),
    )
    return q % 1


def _local_conductor(chi: DirichletCharacter, p: int, k: int) -> int:
    """Least ``p^j`` through which the ``p^k``-component of chi factors."""
    comps = [(f, e) for f, e in zip(chi.group.factors, chi.exponents) if f.prime == p]
    if all(e == 0 for _, e in comps):
        return 1
    if p != 2:
        (f, e), = comps
        # kernel of reduction to p^j is generated by g^{phi(p^j)}
        for j in range(1, k + 1):
            if e * totient(p**j) % f.order == 0:
                return p**j
        return p**k
    # p = 2: comps are (-1) and, for k >= 3, 5.  Reduction mod 2^j has kernel
    # everything for j <= 1, <5> for j = 2, and <5^{2^{j-2}}> for j >= 3.
    e5 = comps[1][1] if len(comps) > 1 else 0
    m5 = comps[1][0].order if len(comps) > 1 else 1
    if e5 == 0:
        return 4
    for j in range(3, k + 1):
        if e5 * 2 ** (j - 2) % m5 == 0:
            return 2**j
    return 2**k


def conductor(chi: DirichletCharacter) -> int:
    return prod(_local_conductor(chi, p, k) for p, k in factorize(chi.modulus))


def _lift_unit(r: int, small: int, big: int) -> int:
    """A unit mod ``big`` congruent to ``r`` mod ``small`` (small | big)."""
    for t in range(big // small):
        u = r + t * small
        if gcd(u, big) == 1:
            return u % big
    raise ArithmeticError(f"no unit lift of {r} mod {small} to mod {big}")


def deflate(chi: DirichletCharacter, M: int) -> DirichletCharacter:
    """The character mod ``M`` inducing ``chi``; requires ``conductor(chi) | M | N``."""
    N = chi.modulus
    if N % M or M % conductor(chi):
        raise ValueError(f"{M} must lie between conductor {conductor(chi)} and modulus {N}")
    small = unit_group_structure(M)
    exps = []
    for f in small.factors:
        q = evaluate(chi, _lift_unit(f.generator, M, N))
        exps.append(int(q * f.order))
    return DirichletCharacter(M, tuple(exps))


def primitive_character(chi: DirichletCharacter) -> DirichletCharacter:
    return deflate(chi, conductor(chi))


def nth_roots(chi: DirichletCharacter, n: int) -> list[DirichletCharacter]:
    """All ``mu`` mod N with ``mu^n = chi``, solved factor by factor.

    On a cyclic factor of order m the equation is ``n x = e (mod m)``; it is
    solvable iff ``g = gcd(n, m)`` divides ``e`` and then has g solutions.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"exponent must be a positive integer, got {n!r}")
    per_factor = []
    for e, m in zip(chi.exponents, chi.group.orders):
        g = gcd(n, m)
        if e % g:
            return []
        step = m // g
        x0 = (e // g) * pow(n // g, -1, step) % step if step > 1 else 0
        per_factor.append([x0 + t * step for t in range(g)])
    return [DirichletCharacter(chi.modulus, exps) for exps in product(*per_factor)]


def fiber_size(N: int, n: int) -> int:
    """Size of every nonempty fiber of ``mu -> mu^n`` on characters mod N."""
    return prod(gcd(n, m) for m in unit_group_structure(N).orders)
