"""QB verdicts: numeric spectral pipeline and closed-form classification.

The numeric route follows the eigenvalue criterion: with Ric = mu*g, the
space has QB >= 0 iff both quadratic forms (the bisectional matrix M1 and
the off-diagonal pair form M2) have largest eigenvalue at most mu, and
QB > 0 if in addition mu is a simple eigenvalue of M1 and M2 stays
strictly below mu.  M1 is analyzed exactly; M2 is bounded through the
dominating pair matrix Z by plain and weighted row sums.

The closed-form route encodes the published classification: for the
classical families QB >= 0 iff 5p+1 <= 4n (B), 5p <= 4n+3 (C),
5p+3 <= 4n (D), strictly for QB > 0; each exceptional family has a fixed
list of admissible p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .cspace import GradedSpace, make_space
from .curvature import build_M1, build_Z, z_row_sums
from .rootsys import Family
from .spectral import (
    eigen_top,
    mu_multiplicity,
    row_sum_bound,
    weighted_row_sum_bound,
)

DEFAULT_TOL = 1e-6
DEFAULT_S_SCHEDULE = (0, 1, 4, 10)


class OutOfTheoremScope(ValueError):
    """Hermitian-symmetric spaces and (family, n, p) outside the theorems."""


class Discrepancy(RuntimeError):
    """Numeric and closed-form classifications disagree."""

    def __init__(self, label: str, closed_form: "ClosedFormResult", verdict: "Verdict"):
        super().__init__(
            f"{label}: closed form {closed_form} vs numeric {verdict.status.value}"
        )
        self.label = label
        self.closed_form = closed_form
        self.verdict = verdict


class Status(str, Enum):
    QB_POSITIVE = "QB_POSITIVE"
    QB_FAILS = "QB_FAILS"
    QB_NONNEG_BOUNDARY = "QB_NONNEG_BOUNDARY"
    INCONCLUSIVE = "INCONCLUSIVE"
    OUT_OF_THEOREM_SCOPE = "OUT_OF_THEOREM_SCOPE"


@dataclass
class Verdict:
    """Outcome of the numeric pipeline on one space."""

    status: Status
    mu: Fraction
    m1_top: List[float]
    m2_bound: Optional[float] = None
    method_notes: List[str] = field(default_factory=list)


@dataclass(frozen=True)
class ClosedFormResult:
    qb_nonneg: bool
    qb_positive: bool

    def __post_init__(self) -> None:
        if self.qb_positive and not self.qb_nonneg:
            raise ValueError("QB > 0 implies QB >= 0")


_EXCEPTIONAL_POSITIVE = {
    Family.G2: {2},
    Family.F4: {1, 2, 4},
    Family.E6: {2, 3, 5},
    Family.E7: {1, 2, 5},
    Family.E8: {1, 2, 8},
}

# Hermitian-symmetric (g, alpha_p), excluded from both theorems.
_HERMITIAN_SYMMETRIC = {
    (Family.G2, 1),
    (Family.E6, 1),
    (Family.E6, 6),
    (Family.E7, 7),
}


def theorem_scope(family: Family, n: int, p: int) -> None:
    """Raise OutOfTheoremScope unless (family, n, p) is a covered case."""
    if family is Family.B or family is Family.C:
        if n < 3 or not 1 < p < n:
            raise OutOfTheoremScope(f"({family.value}{n}, alpha_{p})")
    elif family is Family.D:
        if n < 4 or not 1 < p < n - 1:
            raise OutOfTheoremScope(f"({family.value}{n}, alpha_{p})")
    else:
        rank = {Family.G2: 2, Family.F4: 4, Family.E6: 6, Family.E7: 7, Family.E8: 8}[family]
        if not 1 <= p <= rank or (family, p) in _HERMITIAN_SYMMETRIC:
            raise OutOfTheoremScope(f"({family.value}, alpha_{p})")


def classify_closed_form(family: Family, n: int, p: int) -> ClosedFormResult:
    """Published classification for (family, n, p)."""
    theorem_scope(family, n, p)
    if family is Family.B:
        return ClosedFormResult(5 * p + 1 <= 4 * n, 5 * p + 1 < 4 * n)
    if family is Family.C:
        return ClosedFormResult(5 * p <= 4 * n + 3, 5 * p < 4 * n + 3)
    if family is Family.D:
        return ClosedFormResult(5 * p + 3 <= 4 * n, 5 * p + 3 < 4 * n)
    good = p in _EXCEPTIONAL_POSITIVE[family]
    return ClosedFormResult(good, good)


def classify_numeric(
    space: GradedSpace,
    tol: float = DEFAULT_TOL,
    s_schedule: Sequence[int] = DEFAULT_S_SCHEDULE,
) -> Verdict:
    """Spectral verdict: M1 eigenvalues against mu, then Z bounds for M2."""
    family = space.system.algebra.family
    theorem_scope(family, space.system.algebra.n, space.p)
    m1 = build_M1(space)
    mu = m1.mu
    mu_f = float(mu)
    summary = eigen_top(m1.as_array())
    top = summary.top_eigenvalues[:4]
    notes: List[str] = []
    if summary.eigenvalues[0] > mu_f + tol:
        notes.append(f"M1 eigenvalue {summary.eigenvalues[0]:.4f} exceeds mu")
        return Verdict(Status.QB_FAILS, mu, top, None, notes)
    mult = mu_multiplicity(summary, mu_f, tol)
    if mult != 1:
        notes.append(f"mu has multiplicity {mult} in M1")
        return Verdict(Status.INCONCLUSIVE, mu, top, None, notes)

    sums = z_row_sums(space)
    bound = row_sum_bound(sums)
    best = bound
    if 0 in s_schedule and bound < mu_f - tol:
        notes.append(f"row-sum bound {bound:.10g} < mu (s=0)")
        return Verdict(Status.QB_POSITIVE, mu, top, bound, notes)
    z = build_Z(space)
    for s in s_schedule:
        if s == 0:
            continue
        bound = weighted_row_sum_bound(z, mu_f, s)
        best = min(best, bound)
        if bound < mu_f - tol:
            notes.append(f"weighted row-sum bound {bound:.10g} < mu (s={s})")
            return Verdict(Status.QB_POSITIVE, mu, top, bound, notes)
    notes.append(f"best M2 bound {best:.10g} did not certify < mu")
    return Verdict(Status.INCONCLUSIVE, mu, top, best, notes)


@dataclass
class CaseReport:
    """Numeric and closed-form results for one space, plus the final label."""

    family: Family
    n: int
    p: int
    dim: int
    verdict: Verdict
    closed_form: ClosedFormResult
    final_status: Status
    consistent: bool

    @property
    def label(self) -> str:
        if self.family.is_classical:
            return f"({self.family.value}{self.n}, alpha_{self.p})"
        return f"({self.family.value}, alpha_{self.p})"

    def to_json_dict(self) -> dict:
        v = self.verdict
        return {
            "algebra": f"{self.family.value}{self.n}" if self.family.is_classical else self.family.value,
            "p": self.p,
            "dim": self.dim,
            "mu": str(v.mu),
            "m1_top4": [float(f"{x:.4f}") for x in v.m1_top],
            "m2_bound": None if v.m2_bound is None else float(f"{v.m2_bound:.10g}"),
            "method": "; ".join(v.method_notes),
            "status": self.final_status.value,
        }


def _final_status(closed_form: ClosedFormResult, verdict: Verdict) -> Status:
    if closed_form.qb_positive:
        return Status.QB_POSITIVE
    if closed_form.qb_nonneg:
        return Status.QB_NONNEG_BOUNDARY
    return Status.QB_FAILS


def _consistent(closed_form: ClosedFormResult, verdict: Verdict) -> bool:
    if closed_form.qb_positive:
        return verdict.status is Status.QB_POSITIVE
    if not closed_form.qb_nonneg:
        return verdict.status is Status.QB_FAILS
    return verdict.status is not Status.QB_FAILS


def _analyze(
    family: Family, n: int, p: int, tol: float, s_schedule: Tuple[int, ...]
) -> CaseReport:
    theorem_scope(family, n, p)
    space = make_space(family, n, p)
    verdict = classify_numeric(space, tol=tol, s_schedule=s_schedule)
    closed_form = classify_closed_form(family, n, p)
    return CaseReport(
        family=family,
        n=n,
        p=p,
        dim=space.dim,
        verdict=verdict,
        closed_form=closed_form,
        final_status=_final_status(closed_form, verdict),
        consistent=_consistent(closed_form, verdict),
    )


_analyze_cached = lru_cache(maxsize=None)(_analyze)


def analyze(
    family: Family | str,
    n: int,
    p: int,
    tol: float = DEFAULT_TOL,
    s_schedule: Sequence[int] = DEFAULT_S_SCHEDULE,
) -> CaseReport:
    """Run both classification routes on (family, n, p)."""
    fam = Family(family)
    if not fam.is_classical:
        n = {Family.G2: 2, Family.F4: 4, Family.E6: 6, Family.E7: 7, Family.E8: 8}[fam]
    schedule = tuple(s_schedule)
    if tol == DEFAULT_TOL and schedule == DEFAULT_S_SCHEDULE:
        return _analyze_cached(fam, n, p, tol, schedule)
    return _analyze(fam, n, p, tol, schedule)


def cross_check(family: Family | str, n: int, p: int) -> CaseReport:
    """Differential test of the two routes; raises Discrepancy on mismatch."""
    report = analyze(family, n, p)
    if not report.consistent:
        raise Discrepancy(report.label, report.closed_form, report.verdict)
    return report


def sweep_classical(
    family: Family | str, n_range: Tuple[int, int]
) -> List[CaseReport]:
    """Cross-checked reports for every valid p with n in the given range."""
    fam = Family(family)
    if not fam.is_classical:
        raise OutOfTheoremScope("sweep is defined for the classical families")
    reports = []
    for n in range(n_range[0], n_range[1] + 1):
        top = n - 1 if fam is not Family.D else n - 2
        for p in range(2, top + 1):
            reports.append(cross_check(fam, n, p))
    return reports


def exceptional_cases() -> List[Tuple[Family, int]]:
    """All non-Hermitian-symmetric exceptional (family, p)."""
    cases = []
    for fam, rank in ((Family.G2, 2), (Family.F4, 4), (Family.E6, 6), (Family.E7, 7), (Family.E8, 8)):
        for p in range(1, rank + 1):
            if (fam, p) not in _HERMITIAN_SYMMETRIC:
                cases.append((fam, p))
    return cases
