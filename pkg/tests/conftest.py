import numpy as np
import pytest

from cspaceqb import Family


@pytest.fixture
def rng():
    return np.random.default_rng(20250811)


def classical_cases(n_max=12):
    """All in-scope classical (family, n, p) up to rank n_max."""
    cases = []
    for fam, lo in ((Family.B, 3), (Family.C, 3), (Family.D, 4)):
        for n in range(lo, n_max + 1):
            top = n - 1 if fam is not Family.D else n - 2
            for p in range(2, top + 1):
                cases.append((fam, n, p))
    return cases
