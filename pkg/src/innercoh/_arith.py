"""Small exact-arithmetic helpers shared across modules."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Union

Rational = Union[int, Fraction]


def is_prime(n: int) -> bool:
    """Deterministic trial division; ranks and moduli here are tiny."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n >= 1`` as ascending ``(p, k)`` pairs."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def to_fraction(x: Union[Rational, str]) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, float):
        raise TypeError(f"floating-point value {x!r} is not exact")
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational")
        if "." in s or "e" in s.lower():
            raise ValueError(f"{x!r} is not a rational of the form p/q")
        return Fraction(s)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def fmt_rational(x: Rational) -> str:
    """Lowest-terms ``p/q`` with ``/1`` omitted."""
    return str(Fraction(x))
