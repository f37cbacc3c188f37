"""Exact root systems for B_n, C_n, D_n, G2, F4, E6, E7, E8.

Roots are stored with doubled Euclidean coordinates so that half-integer
roots (F4 and the E series) stay exact.  Every positive root also carries
its exact coefficients with respect to the simple-root basis, computed by
rational Gaussian elimination.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

Coords = Tuple[int, ...]


class UnsupportedAlgebra(ValueError):
    """Family/rank combination outside the supported ranges."""


class NotAPositiveRoot(ValueError):
    """The given vector is not a positive root of the system."""


class DimensionMismatch(ValueError):
    """Operands live in different ambient dimensions."""


class Family(str, Enum):
    B = "B"
    C = "C"
    D = "D"
    G2 = "G2"
    F4 = "F4"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"

    @property
    def is_classical(self) -> bool:
        return self in (Family.B, Family.C, Family.D)


_EXCEPTIONAL_RANK = {Family.G2: 2, Family.F4: 4, Family.E6: 6, Family.E7: 7, Family.E8: 8}
_MIN_RANK = {Family.B: 3, Family.C: 3, Family.D: 4}


@dataclass(frozen=True)
class AlgebraId:
    """A simple Lie algebra: classical family with rank, or exceptional."""

    family: Family
    n: int = 0

    def __post_init__(self) -> None:
        if self.family.is_classical:
            if self.n < _MIN_RANK[self.family]:
                raise UnsupportedAlgebra(
                    f"{self.family.value}_n needs n >= {_MIN_RANK[self.family]}, got {self.n}"
                )
        else:
            fixed = _EXCEPTIONAL_RANK[self.family]
            if self.n not in (0, fixed):
                raise UnsupportedAlgebra(f"{self.family.value} has fixed rank {fixed}")
            object.__setattr__(self, "n", fixed)

    @property
    def rank(self) -> int:
        return self.n

    @property
    def label(self) -> str:
        if self.family.is_classical:
            return f"{self.family.value}{self.n}"
        return self.family.value


@dataclass(frozen=True)
class RootVector:
    """A root, stored as twice its Euclidean coordinates (all integers)."""

    coords2: Coords

    @property
    def ambient_dim(self) -> int:
        return len(self.coords2)

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.coords2, other.coords2)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a - b for a, b in zip(self.coords2, other.coords2)))

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coords2))

    def coords(self) -> Tuple[Fraction, ...]:
        """Euclidean coordinates as exact rationals."""
        return tuple(Fraction(c, 2) for c in self.coords2)


def inner(a: RootVector, b: RootVector) -> Fraction:
    """Exact Euclidean inner product (a, b)."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"{a.ambient_dim} vs {b.ambient_dim}")
    return Fraction(sum(x * y for x, y in zip(a.coords2, b.coords2)), 4)


def norm2(a: RootVector) -> Fraction:
    """Exact squared length |a|^2."""
    return inner(a, a)


def _solve_exact(a: List[List[Fraction]], b: List[List[Fraction]]) -> List[List[Fraction]]:
    """Solve A X = B exactly by Gaussian elimination; A square nonsingular."""
    n = len(a)
    m = len(b[0])
    aug = [row[:] + rhs[:] for row, rhs in zip(a, b)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class RootSystem:
    """Positive roots, simple roots and exact simple-root coordinates."""

    def __init__(
        self,
        algebra: AlgebraId,
        positive_roots: Sequence[RootVector],
        simple_roots: Sequence[RootVector],
    ) -> None:
        self.algebra = algebra
        self.positive_roots: Tuple[RootVector, ...] = tuple(positive_roots)
        self.simple_roots: Tuple[RootVector, ...] = tuple(simple_roots)
        self.ambient_dim = self.positive_roots[0].ambient_dim
        self.rank = len(self.simple_roots)
        self._index: Dict[Coords, int] = {
            r.coords2: i for i, r in enumerate(self.positive_roots)
        }
        if len(self._index) != len(self.positive_roots):
            raise ValueError("duplicate positive roots")
        self.simple_coords: Tuple[Tuple[int, ...], ...] = self._solve_simple_coords()

    def _solve_simple_coords(self) -> Tuple[Tuple[int, ...], ...]:
        # Normal equations (S S^t) x = S r; exact since the simple roots are
        # independent and every positive root lies in their span.
        s_rows = [[Fraction(c, 2) for c in a.coords2] for a in self.simple_roots]
        gram = [
            [sum(x * y for x, y in zip(r1, r2)) for r2 in s_rows] for r1 in s_rows
        ]
        rhs = [
            [
                sum(x * Fraction(c, 2) for x, c in zip(row, root.coords2))
                for root in self.positive_roots
            ]
            for row in s_rows
        ]
        sol = _solve_exact(gram, rhs)
        out: List[Tuple[int, ...]] = []
        for j, root in enumerate(self.positive_roots):
            coeffs = [sol[i][j] for i in range(self.rank)]
            recon = [
                sum(c * Fraction(v, 2) for c, v in zip(coeffs, col))
                for col in zip(*(a.coords2 for a in self.simple_roots))
            ]
            if recon != [Fraction(c, 2) for c in root.coords2]:
                raise ValueError(f"simple-root solve failed for {root}")
            if any(c.denominator != 1 or c < 0 for c in coeffs):
                raise ValueError(f"non-integral simple coordinates for {root}")
            out.append(tuple(int(c) for c in coeffs))
        return tuple(out)

    # -- lookup -------------------------------------------------------------

    def index_of(self, root: RootVector) -> int:
        """Index of a positive root; raises NotAPositiveRoot otherwise."""
        try:
            return self._index[root.coords2]
        except KeyError:
            raise NotAPositiveRoot(f"{root} is not a positive root of {self.algebra.label}")

    def lookup(self, coords: Coords | RootVector) -> Optional[Tuple[int, int]]:
        """Signed root reference (index, +1/-1) for +-coords, if it is a root."""
        c = coords.coords2 if isinstance(coords, RootVector) else tuple(coords)
        if len(c) != self.ambient_dim:
            raise DimensionMismatch(f"expected ambient dim {self.ambient_dim}")
        i = self._index.get(c)
        if i is not None:
            return i, +1
        i = self._index.get(tuple(-x for x in c))
        if i is not None:
            return i, -1
        return None

    def is_root(self, coords: Coords | RootVector) -> bool:
        return self.lookup(coords) is not None

    def simple_coords_of(self, root: RootVector) -> Tuple[int, ...]:
        """Exact nonnegative integer coefficients of a positive root."""
        return self.simple_coords[self.index_of(root)]

    # -- serialization ------------------------------------------------------

    def to_json(self) -> str:
        doc = {
            "algebra": self.algebra.label,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "positive_roots": [list(r.coords2) for r in self.positive_roots],
            "simple_roots": [list(r.coords2) for r in self.simple_roots],
        }
        return json.dumps(doc, sort_keys=True)


# -- per-family construction ------------------------------------------------


def _unit(n: int, i: int, value: int = 2) -> RootVector:
    c = [0] * n
    c[i] = value
    return RootVector(tuple(c))


def _pair(n: int, i: int, j: int, si: int, sj: int) -> RootVector:
    c = [0] * n
    c[i] = 2 * si
    c[j] = 2 * sj
    return RootVector(tuple(c))


def _half(signs: Sequence[int]) -> RootVector:
    return RootVector(tuple(signs))


def _roots_bcd(family: Family, n: int) -> Tuple[List[RootVector], List[RootVector]]:
    sums = [_pair(n, i, j, 1, 1) for i in range(n) for j in range(i + 1, n)]
    diffs = [_pair(n, i, j, 1, -1) for i in range(n) for j in range(i + 1, n)]
    chain = [_pair(n, i, i + 1, 1, -1) for i in range(n - 1)]
    if family is Family.B:
        roots = sums + diffs + [_unit(n, i) for i in range(n)]
        simple = chain + [_unit(n, n - 1)]
    elif family is Family.C:
        sums_c = [
            _pair(n, i, j, 1, 1) if i != j else _unit(n, i, 4)
            for i in range(n)
            for j in range(i, n)
        ]
        roots = sums_c + diffs
        simple = chain + [_unit(n, n - 1, 4)]
    else:
        roots = sums + diffs
        simple = chain + [_pair(n, n - 2, n - 1, 1, 1)]
    return roots, simple


def _roots_g2() -> Tuple[List[RootVector], List[RootVector]]:
    a = [RootVector(v) for v in ((2, -2, 0), (-2, 0, 2), (0, -2, 2))]
    b = [RootVector(v) for v in ((-4, 2, 2), (2, -4, 2), (-2, -2, 4))]
    return a + b, [a[0], b[0]]


def _roots_f4() -> Tuple[List[RootVector], List[RootVector]]:
    half_signs = [
        (1, 1, 1, 1),
        (1, 1, -1, 1),
        (1, 1, 1, -1),
        (1, 1, -1, -1),
        (1, -1, 1, 1),
        (1, -1, -1, 1),
        (1, -1, 1, -1),
        (1, -1, -1, -1),
    ]
    a = [_half(s) for s in half_signs] + [_unit(4, i) for i in range(4)]
    b = [_pair(4, i, j, 1, 1) for i in range(4) for j in range(i + 1, 4)] + [
        _pair(4, i, j, 1, -1) for i in range(4) for j in range(i + 1, 4)
    ]
    simple = [b[9], b[11], a[11], a[7]]
    return a + b, simple


def _e_half(minus: Sequence[int], m: int, tail: Sequence[int]) -> RootVector:
    signs = [1] * m
    for i in minus:
        signs[i] = -1
    return RootVector(tuple(signs) + tuple(tail))


def _minus_sets(m: int, k: int) -> List[Tuple[int, ...]]:
    return list(itertools.combinations(range(m), k))


def _roots_e6() -> Tuple[List[RootVector], List[RootVector]]:
    a = [_pair(8, i, j, 1, 1) for i in range(5) for j in range(i + 1, 5)]
    b = [_pair(8, i, j, -1, 1) for i in range(5) for j in range(i + 1, 5)]
    tail = (-1, -1, 1)
    c = [_e_half(s, 5, tail) for s in _minus_sets(5, 2)]
    d = [_e_half((), 5, tail)] + [
        _e_half(tuple(i for i in range(5) if i != keep), 5, tail) for keep in range(5)
    ]
    simple = [d[1], a[0], b[0], b[4], b[7], b[9]]
    return a + b + c + d, simple


def _roots_e7() -> Tuple[List[RootVector], List[RootVector]]:
    a = [_pair(8, i, j, 1, 1) for i in range(6) for j in range(i + 1, 6)]
    b = [_pair(8, i, j, -1, 1) for i in range(6) for j in range(i + 1, 6)]
    b.append(_pair(8, 6, 7, -1, 1))
    tail = (-1, 1)
    c = [_e_half((i,), 6, tail) for i in range(6)]
    d = [_e_half(s, 6, tail) for s in _minus_sets(6, 3)]
    e = [
        _e_half(tuple(i for i in range(6) if i != keep), 6, tail) for keep in range(6)
    ]
    simple = [e[0], a[0], b[0], b[5], b[9], b[12], b[14]]
    return a + b + c + d + e, simple


def _roots_e8() -> Tuple[List[RootVector], List[RootVector]]:
    a = [_pair(8, i, j, 1, 1) for i in range(8) for j in range(i + 1, 8)]
    b = [_pair(8, i, j, -1, 1) for i in range(8) for j in range(i + 1, 8)]
    tail = (1,)
    c = [_e_half(s, 7, tail) for s in _minus_sets(7, 2)]
    d = [_e_half(s, 7, tail) for s in _minus_sets(7, 4)]
    e = [_e_half((), 7, tail)] + [
        _e_half(tuple(i for i in range(7) if i != keep), 7, tail) for keep in range(7)
    ]
    simple = [e[1], a[0], b[0], b[7], b[13], b[18], b[22], b[25]]
    return a + b + c + d + e, simple


_EXPECTED_COUNT = {
    Family.G2: 6,
    Family.F4: 24,
    Family.E6: 36,
    Family.E7: 63,
    Family.E8: 120,
}


def build_root_system(algebra: AlgebraId) -> RootSystem:
    """Full root system of the algebra, in the canonical listing order."""
    fam = algebra.family
    if fam is Family.G2:
        roots, simple = _roots_g2()
    elif fam is Family.F4:
        roots, simple = _roots_f4()
    elif fam is Family.E6:
        roots, simple = _roots_e6()
    elif fam is Family.E7:
        roots, simple = _roots_e7()
    elif fam is Family.E8:
        roots, simple = _roots_e8()
    else:
        roots, simple = _roots_bcd(fam, algebra.n)
    system = RootSystem(algebra, roots, simple)
    expected = _EXPECTED_COUNT.get(fam, algebra.n * algebra.n)
    if fam is Family.D:
        expected = algebra.n * (algebra.n - 1)
    if len(system.positive_roots) != expected:
        raise ValueError(f"{algebra.label}: expected {expected} positive roots")
    return system


def simple_coords_of(system: RootSystem, root: RootVector) -> Tuple[int, ...]:
    """Simple-root coefficients of a positive root of the system."""
    return system.simple_coords_of(root)
