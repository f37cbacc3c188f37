"""Root strings, structure-constant magnitudes |N| and normalized |Ntilde|.

Signs of the structure constants are never fixed; the curvature pipeline
only needs magnitudes.  |Ntilde| values are kept exact as q*sqrt(r) with q
rational and r a square-free integer, so squared values are exact rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rootsys import RootSystem, RootVector, norm2


class EqualOrOpposite(ValueError):
    """Root-string arguments must satisfy alpha != +-beta."""


class EqualRootsForMinus(ValueError):
    """Ntilde with the minus sign needs two distinct roots."""


def root_string_down(system: RootSystem, alpha: RootVector, beta: RootVector) -> int:
    """Largest p >= 0 such that beta - p*alpha is a root."""
    if alpha.coords2 == beta.coords2 or alpha.coords2 == (-beta).coords2:
        raise EqualOrOpposite("root string undefined for alpha = +-beta")
    p = 0
    cur = beta - alpha
    while system.is_root(cur):
        p += 1
        if p > 4:
            raise ValueError("root string longer than any reduced system allows")
        cur = cur - alpha
    return p


def n_abs(system: RootSystem, alpha: RootVector, beta: RootVector) -> int:
    """|N_{alpha,beta}|: zero if alpha+beta is not a root, else p+1."""
    if alpha.coords2 == beta.coords2 or alpha.coords2 == (-beta).coords2:
        raise EqualOrOpposite("|N| undefined for alpha = +-beta")
    if not system.is_root(alpha + beta):
        return 0
    return root_string_down(system, alpha, beta) + 1


def _sqrt_decompose(x: Fraction) -> tuple[Fraction, int]:
    """Write sqrt(x) = q*sqrt(r) with q rational, r square-free."""
    if x == 0:
        return Fraction(0), 1
    n = x.numerator * x.denominator
    s, r = 1, 1
    d = 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
            s *= d
        if n % d == 0:
            n //= d
            r *= d
        d += 1
    r *= n
    return Fraction(s, x.denominator), r


@dataclass(frozen=True)
class NtildeMag:
    """Exact magnitude q*sqrt(r), r square-free (r = 1 when q = 0)."""

    q: Fraction
    r: int

    @classmethod
    def zero(cls) -> "NtildeMag":
        return cls(Fraction(0), 1)

    @classmethod
    def from_square(cls, sq: Fraction) -> "NtildeMag":
        q, r = _sqrt_decompose(sq)
        return cls(q, r)

    @property
    def square(self) -> Fraction:
        return self.q * self.q * self.r

    def __float__(self) -> float:
        return float(self.q) * math.sqrt(self.r)

    def __bool__(self) -> bool:
        return self.q != 0


def ntilde_abs(
    system: RootSystem, alpha: RootVector, beta: RootVector, sign: str = "+"
) -> NtildeMag:
    """|Ntilde_{alpha,+-beta}| = (|alpha||beta|/|alpha+-beta|) * |N_{alpha,+-beta}|.

    Zero when alpha+-beta is not a root.  For sign "+" the arguments may be
    equal (2*alpha is never a root, so the value is zero).
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if sign == "-":
        if alpha.coords2 == beta.coords2:
            raise EqualRootsForMinus("Ntilde_{alpha,-alpha} is undefined")
        other = -beta
    else:
        if alpha.coords2 == beta.coords2:
            return NtildeMag.zero()
        other = beta
    combo = alpha + other
    if not system.is_root(combo):
        return NtildeMag.zero()
    n = n_abs(system, alpha, other)
    sq = norm2(alpha) * norm2(beta) / norm2(combo) * n * n
    return NtildeMag.from_square(sq)
