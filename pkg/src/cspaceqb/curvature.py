"""Curvature in the Weyl frame: exact bisectional matrix M1 and the sparse
nonnegative pair matrix Z that dominates the off-diagonal quadratic form.

M1 entries are exact rationals.  Z entries are doubles built from magnitude
bounds on the structure constants: for a quadruple (A, B, C, D) of frame
vectors with A != B, C != D and alpha - beta = delta - gamma, the entry is
the smaller of the two curvature-symmetric magnitude estimates, and the
exact |bisectional| value when beta = gamma.  All other entries vanish.

For the C family one extra exact fact is used: when the four roots pair up
as {e_a - e_i, e_a + e_i} and {e_a - e_j, e_a + e_j} around a doubled
coordinate vector 2 e_a, the two routes of the curvature formula cancel and
the component is exactly zero, so Z stores zero there.  The magnitude bound
alone is not tight for those quadruples and would spoil the spectral
certificates near the C-family classification boundary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .chevalley import ntilde_abs
from .cspace import FrameEntry, GradedSpace
from .rootsys import Family, inner


class NotEinstein(RuntimeError):
    """M1 row sums are not all equal: the construction is inconsistent."""


class BadQuadruple(ValueError):
    """Frame entries passed to a curvature operation are malformed."""


class CurvMatrix:
    """Exact symmetric matrix of bisectional curvatures in the Weyl frame."""

    def __init__(self, space: GradedSpace, entries: List[List[Fraction]], mu: Fraction):
        self.space = space
        self.entries = entries
        self.mu = mu

    @property
    def dim(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.entries])

    def to_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.entries) + "\n"


class PairBoundMatrix:
    """Sparse symmetric nonnegative matrix over ordered frame pairs.

    Pair (A, B) has id B.index * dim + A.index (first index fastest), so a
    dense dump lists pairs as (0,0), (1,0), (2,0), ...  Rows and columns of
    diagonal pairs (A, A) carry no entries.
    """

    def __init__(self, space: GradedSpace, rows: np.ndarray, cols: np.ndarray, vals: np.ndarray):
        self.space = space
        self.dim = space.dim
        self.rows = rows
        self.cols = cols
        self.vals = vals

    @property
    def n_pairs(self) -> int:
        return self.dim * self.dim

    @property
    def nnz(self) -> int:
        return len(self.vals)

    def pair_of(self, pid: int) -> Tuple[int, int]:
        return pid % self.dim, pid // self.dim

    def pid(self, a: int, b: int) -> int:
        return b * self.dim + a

    def row_sums(self) -> np.ndarray:
        return np.bincount(self.rows, weights=self.vals, minlength=self.n_pairs)

    def matvec(self, x: np.ndarray) -> np.ndarray:
        return np.bincount(self.rows, weights=self.vals * x[self.cols], minlength=self.n_pairs)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.n_pairs, self.n_pairs))
        out[self.rows, self.cols] = self.vals
        return out

    def to_coo_csv(self) -> str:
        lines = ["row_pair,col_pair,value"]
        order = np.lexsort((self.cols, self.rows))
        for i in order:
            lines.append(f"{self.rows[i]},{self.cols[i]},{self.vals[i]:.10g}")
        return "\n".join(lines) + "\n"


# -- exact bisectional values -------------------------------------------------


def bisectional(space: GradedSpace, A: FrameEntry, B: FrameEntry) -> Fraction:
    """Exact R(e_A, conj e_A, e_B, conj e_B) in the Weyl frame."""
    alpha, i = A.root, A.grade
    beta, j = B.root, B.grade
    if i > j:
        alpha, beta, i, j = beta, alpha, j, i
    nt2 = ntilde_abs(space.system, alpha, beta, "+").square
    return (inner(alpha, beta) + Fraction(i, 2 * (i + j)) * nt2) / j


def build_M1(space: GradedSpace) -> CurvMatrix:
    """Assemble the exact bisectional matrix and its Einstein constant."""
    tables = _frame_tables(space)
    return tables.m1


# -- magnitude machinery ------------------------------------------------------


def _coeff1(i, j, k, l):
    return (k - j) * (k > j) - k * l / (i + k)


def _coeff2(i, j, k, l):
    return -(k - j) * (k > j) + k * (i > j) + l * (j > i) + l * ((i == j) & (k == l))


class _FrameTables:
    """Cached per-space data: exact M1 plus float tables for Z assembly."""

    def __init__(self, space: GradedSpace):
        self.space = space
        system = space.system
        dim = space.dim
        roots = [e.root for e in space.frame]
        self.grades = np.array([e.grade for e in space.frame], dtype=np.int64)
        self.R2 = np.array([r.coords2 for r in roots], dtype=np.int64)
        m = self.R2.shape[1]
        self._pow = (64 ** np.arange(m)).astype(np.int64)
        keys = self.encode(self.R2)
        order = np.argsort(keys)
        self._sorted_keys = keys[order]
        self._perm = order.astype(np.int64)

        # Exact symmetric M1 and the Ntilde magnitude tables in one sweep.
        entries: List[List[Fraction]] = [[Fraction(0)] * dim for _ in range(dim)]
        self.nt_plus = np.zeros((dim, dim))
        self.nt_minus = np.zeros((dim, dim))
        half = Fraction(1, 2)
        for a in range(dim):
            ra, ka = roots[a], int(self.grades[a])
            for b in range(a, dim):
                rb, kb = roots[b], int(self.grades[b])
                mag = ntilde_abs(system, ra, rb, "+")
                i, j = min(ka, kb), max(ka, kb)
                val = (inner(ra, rb) + Fraction(i, 1) * half * mag.square / (i + j)) / j
                entries[a][b] = entries[b][a] = val
                self.nt_plus[a, b] = self.nt_plus[b, a] = float(mag)
                if a != b:
                    fm = float(ntilde_abs(system, ra, rb, "-"))
                    self.nt_minus[a, b] = self.nt_minus[b, a] = fm
        sums = [sum(row) for row in entries]
        if any(s != sums[0] for s in sums):
            raise NotEinstein(f"{space.label}: row sums of M1 are not constant")
        mu = sums[0]
        space.mu = mu
        self.m1 = CurvMatrix(space, entries, mu)
        self.bis_abs = np.abs(self.m1.as_array())

        if system.algebra.family is Family.C:
            du = np.zeros((m, m), dtype=np.int64)
            np.fill_diagonal(du, 4)
            self._doubled_unit_keys = np.sort(self.encode(du))
        else:
            self._doubled_unit_keys = None

    def encode(self, vecs: np.ndarray) -> np.ndarray:
        return (vecs + 32) @ self._pow

    def find(self, keys: np.ndarray) -> np.ndarray:
        """Frame indices for encoded coordinate keys, -1 where absent."""
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, len(self._sorted_keys) - 1)
        hit = self._sorted_keys[pos] == keys
        return np.where(hit, self._perm[pos], -1)

    def delta_indices(self, a: int, b: int) -> np.ndarray:
        """Frame index of alpha - beta + gamma for every gamma, -1 if absent."""
        targets = self.R2[a] - self.R2[b] + self.R2
        return self.find(self.encode(targets))

    def row_values(self, a: int, b: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Nonzero Z entries of the pair row (a, b): (gammas, deltas, values)."""
        dd = self.delta_indices(a, b)
        cs = np.nonzero(dd >= 0)[0]
        ds = dd[cs]
        g = self.grades
        i, j = g[a], g[b]
        k, l = g[cs], g[ds]
        pref = 0.5 / np.sqrt(float(i * j) * k * l)
        est1 = pref * (
            np.abs(_coeff1(i, j, k, l)) * self.nt_plus[a, cs] * self.nt_plus[b, ds]
            + np.abs(_coeff2(i, j, k, l)) * self.nt_minus[a, b] * self.nt_minus[cs, ds]
        )
        est2 = pref * (
            np.abs(_coeff1(k, j, i, l)) * self.nt_plus[cs, a] * self.nt_plus[b, ds]
            + np.abs(_coeff2(k, j, i, l)) * self.nt_minus[cs, b] * self.nt_minus[a, ds]
        )
        vals = np.minimum(est1, est2)
        if self._doubled_unit_keys is not None:
            sums = self.encode(self.R2[a] + self.R2[cs])
            vals[np.isin(sums, self._doubled_unit_keys)] = 0.0
        vals[cs == b] = self.bis_abs[a, b]
        keep = vals != 0.0
        return cs[keep], ds[keep], vals[keep]


def _frame_tables(space: GradedSpace) -> _FrameTables:
    if space._tables is None:
        space._tables = _FrameTables(space)
    return space._tables


def general_estimate(
    space: GradedSpace, A: FrameEntry, B: FrameEntry, C: FrameEntry, D: FrameEntry
) -> float:
    """Upper bound for |R(A, conj B, C, conj D)| per the pair-matrix recipe.

    Exactly zero when alpha - beta != delta - gamma; |bisectional(A, B)|
    when beta = gamma; otherwise the minimum of the two ordered magnitude
    estimates (plus the C-family exact vanishing).
    """
    for e in (A, B, C, D):
        if not isinstance(e, FrameEntry):
            raise BadQuadruple("expected frame entries")
    if A.index == B.index or C.index == D.index:
        return 0.0
    alpha, beta, gamma, delta = A.root, B.root, C.root, D.root
    if (alpha - beta).coords2 != (delta - gamma).coords2:
        return 0.0
    if B.index == C.index:
        return abs(float(bisectional(space, A, B)))
    if space.system.algebra.family is Family.C:
        s = (alpha + gamma).coords2
        nz = [v for v in s if v != 0]
        if nz == [4]:
            return 0.0
    e1 = _estimate_ordered(space, A, B, C, D)
    e2 = _estimate_ordered(space, C, B, A, D)
    return min(e1, e2)


def _estimate_ordered(
    space: GradedSpace, A: FrameEntry, B: FrameEntry, C: FrameEntry, D: FrameEntry
) -> float:
    system = space.system
    i, j, k, l = A.grade, B.grade, C.grade, D.grade
    pref = 0.5 / np.sqrt(float(i * j * k * l))
    r1 = abs(_coeff1(i, j, k, l)) * float(
        ntilde_abs(system, A.root, C.root, "+")
    ) * float(ntilde_abs(system, B.root, D.root, "+"))
    r2 = abs(_coeff2(i, j, k, l)) * float(
        ntilde_abs(system, A.root, B.root, "-")
    ) * float(ntilde_abs(system, C.root, D.root, "-"))
    return pref * (r1 + r2)


def _assemble(space: GradedSpace, collect: bool):
    t = _frame_tables(space)
    dim = space.dim
    row_sums = np.zeros(dim * dim)
    rows: List[np.ndarray] = []
    cols: List[np.ndarray] = []
    vals: List[np.ndarray] = []
    for b in range(dim):
        for a in range(dim):
            if a == b:
                continue
            cs, ds, v = t.row_values(a, b)
            row_sums[b * dim + a] = v.sum()
            if collect and len(v):
                rows.append(np.full(len(v), b * dim + a, dtype=np.int64))
                cols.append(ds * dim + cs)
                vals.append(v)
    if not collect:
        return row_sums, None
    z = PairBoundMatrix(
        space,
        np.concatenate(rows) if rows else np.zeros(0, dtype=np.int64),
        np.concatenate(cols) if cols else np.zeros(0, dtype=np.int64),
        np.concatenate(vals) if vals else np.zeros(0),
    )
    return row_sums, z


def build_Z(space: GradedSpace) -> PairBoundMatrix:
    """Assemble the sparse dominating pair matrix."""
    return _assemble(space, collect=True)[1]


def z_row_sums(space: GradedSpace) -> np.ndarray:
    """Per-pair-row sums of Z, streamed without storing the matrix."""
    return _assemble(space, collect=False)[0]
