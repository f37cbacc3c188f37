"""Curvature analysis of Kahler C-spaces with b2 = 1.

Builds exact root systems, graded Weyl frames and bisectional curvature
matrices for the spaces (g, alpha_p), bounds the off-diagonal curvature
form by row-sum estimates, and decides nonnegative/positive quadratic
orthogonal bisectional curvature.
"""

from .rootsys import (
    AlgebraId,
    Family,
    RootSystem,
    RootVector,
    build_root_system,
    inner,
    norm2,
)
from .chevalley import NtildeMag, n_abs, ntilde_abs, root_string_down
from .cspace import (
    FrameEntry,
    GradedSpace,
    dimension_formula,
    grade_space,
    make_space,
    ricci_formula,
)
from .curvature import (
    CurvMatrix,
    PairBoundMatrix,
    bisectional,
    build_M1,
    build_Z,
    general_estimate,
    z_row_sums,
)
from .spectral import (
    SpectralSummary,
    eigen_top,
    jacobi_eigh,
    mu_multiplicity,
    row_sum_bound,
    weighted_caps,
    weighted_row_sum_bound,
)
from .classify import (
    CaseReport,
    ClosedFormResult,
    Discrepancy,
    OutOfTheoremScope,
    Status,
    Verdict,
    analyze,
    classify_closed_form,
    classify_numeric,
    cross_check,
    exceptional_cases,
    sweep_classical,
)

__version__ = "0.1.0"
