"""Graded decomposition and Weyl frame of a Kahler C-space (g, alpha_p).

The frame lists every positive root whose p-th simple coordinate is k >= 1,
ordered by ascending grade k and, within a grade, by the canonical root
order of the system.  For (G2, alpha_2) this reproduces the reference
frame ordering used by the shipped golden matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional

import json

from .rootsys import AlgebraId, Family, RootSystem, RootVector, build_root_system


class IndexOutOfRange(ValueError):
    """Simple-root index outside 1..rank."""


class NotClassical(ValueError):
    """Closed-form dimension/Ricci formulas exist only for B, C, D."""


@dataclass(frozen=True)
class FrameEntry:
    """One Weyl-frame vector: a root, its grade k, and its frame position."""

    root: RootVector
    grade: int
    index: int


@dataclass
class GradedSpace:
    """The Kahler C-space (g, alpha_p) with its graded Weyl frame."""

    system: RootSystem
    p: int
    levels: Dict[int, List[FrameEntry]]
    frame: List[FrameEntry]
    dim: int
    mu: Optional[Fraction] = None
    _tables: Any = field(default=None, repr=False, compare=False)

    @property
    def k_max(self) -> int:
        return max(self.levels) if self.levels else 0

    @property
    def label(self) -> str:
        return f"({self.system.algebra.label}, alpha_{self.p})"

    def grading_json(self) -> str:
        doc = {
            "algebra": self.system.algebra.label,
            "p": self.p,
            "dim": self.dim,
            "levels": {
                str(k): [self.system.index_of(e.root) for e in entries]
                for k, entries in sorted(self.levels.items())
            },
        }
        return json.dumps(doc, sort_keys=True)


def grade_space(system: RootSystem, p: int) -> GradedSpace:
    """Partition the positive roots by their alpha_p coefficient."""
    if not 1 <= p <= system.rank:
        raise IndexOutOfRange(f"p must be in 1..{system.rank}, got {p}")
    by_level: Dict[int, List[RootVector]] = {}
    for root, coords in zip(system.positive_roots, system.simple_coords):
        k = coords[p - 1]
        if k >= 1:
            by_level.setdefault(k, []).append(root)
    frame: List[FrameEntry] = []
    levels: Dict[int, List[FrameEntry]] = {}
    for k in sorted(by_level):
        entries = [
            FrameEntry(root, k, len(frame) + i) for i, root in enumerate(by_level[k])
        ]
        levels[k] = entries
        frame.extend(entries)
    return GradedSpace(system, p, levels, frame, len(frame))


@lru_cache(maxsize=None)
def _make_space_cached(family: Family, n: int, p: int) -> GradedSpace:
    system = build_root_system(AlgebraId(family, n))
    return grade_space(system, p)


def make_space(family: Family | str, n: int, p: int) -> GradedSpace:
    """Construct (and memoize) the space for (family, n, p).

    The returned object is shared: frames and cached curvature tables are
    immutable once built, so reuse across callers is safe.
    """
    fam = Family(family)
    if not fam.is_classical:
        n = AlgebraId(fam).n
    return _make_space_cached(fam, n, p)


def dimension_formula(family: Family, n: int, p: int) -> int:
    """Closed-form complex dimension for the classical families."""
    if family is Family.B or family is Family.C:
        return p * (4 * n - 3 * p + 1) // 2
    if family is Family.D:
        return p * (4 * n - 3 * p - 1) // 2
    raise NotClassical(f"no closed-form dimension for {family.value}")


def ricci_formula(family: Family, n: int, p: int) -> Fraction:
    """Closed-form Einstein constant for the classical families."""
    if family is Family.B:
        return Fraction(2 * n - p)
    if family is Family.C:
        return Fraction(2 * n - p + 1)
    if family is Family.D:
        return Fraction(2 * n - p - 1)
    raise NotClassical(f"no closed-form Ricci constant for {family.value}")
