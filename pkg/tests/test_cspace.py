import json
from fractions import Fraction

import pytest

from cspaceqb import Family, build_M1, dimension_formula, make_space, ricci_formula
from cspaceqb.cspace import IndexOutOfRange, NotClassical, grade_space
from cspaceqb.rootsys import AlgebraId, build_root_system

from conftest import classical_cases


def test_g2_alpha2_grading():
    space = make_space("G2", 2, 2)
    assert [len(space.levels[k]) for k in sorted(space.levels)] == [4, 1]
    assert space.dim == 5
    assert space.k_max == 2
    # frame order fixed by the reference matrices
    assert [e.root.coords2 for e in space.frame] == [
        (-2, 0, 2), (0, -2, 2), (-4, 2, 2), (2, -4, 2), (-2, -2, 4)
    ]


def test_b3_alpha2_dimension():
    assert make_space("B", 3, 2).dim == 7


def test_e8_alpha4_levels():
    space = make_space("E8", 8, 4)
    assert space.dim == 106
    assert space.k_max == 6
    assert [len(space.levels[k]) for k in range(1, 7)] == [30, 30, 20, 15, 6, 5]


def test_f4_alpha2_levels():
    space = make_space("F4", 4, 2)
    assert [len(space.levels[k]) for k in sorted(space.levels)] == [12, 6, 2]


def test_e7_alpha5_levels():
    space = make_space("E7", 7, 5)
    assert space.dim == 50
    assert [len(space.levels[k]) for k in sorted(space.levels)] == [30, 15, 5]


EXCEPTIONAL_LEVEL_SIZES = {
    ("G2", 2): [4, 1],
    ("F4", 1): [14, 1],
    ("F4", 2): [12, 6, 2],
    ("F4", 3): [6, 9, 2, 3],
    ("F4", 4): [8, 7],
    ("E6", 2): [20, 1],
    ("E6", 3): [20, 5],
    ("E6", 4): [18, 9, 2],
    ("E6", 5): [20, 5],
    ("E7", 1): [32, 1],
    ("E7", 2): [35, 7],
    ("E7", 3): [30, 15, 2],
    ("E7", 4): [24, 18, 8, 3],
    ("E7", 5): [30, 15, 5],
    ("E7", 6): [32, 10],
    ("E8", 1): [64, 14],
    ("E8", 2): [56, 28, 8],
    ("E8", 3): [42, 35, 14, 7],
    ("E8", 4): [30, 30, 20, 15, 6, 5],
    ("E8", 5): [40, 30, 20, 10, 4],
    ("E8", 6): [48, 30, 16, 3],
    ("E8", 7): [54, 27, 2],
    ("E8", 8): [56, 1],
}


def test_exceptional_level_sizes_match_published_listings():
    for (fam, p), sizes in EXCEPTIONAL_LEVEL_SIZES.items():
        space = make_space(fam, 0, p)
        got = [len(space.levels[k]) for k in sorted(space.levels)]
        assert got == sizes, (fam, p, got)


def test_partition_property():
    for fam, n, p in [("B", 5, 3), ("C", 4, 2), ("D", 6, 4), ("F4", 4, 3), ("E6", 6, 4)]:
        space = make_space(fam, n, p)
        system = space.system
        zero_grade = sum(1 for c in system.simple_coords if c[space.p - 1] == 0)
        assert space.dim + zero_grade == len(system.positive_roots)


def test_grade_additivity_of_root_sums():
    # bracket grading at the coordinate level: grades add when roots add
    system = build_root_system(AlgebraId(Family.F4))
    p = 2
    grade = {r.coords2: c[p - 1] for r, c in zip(system.positive_roots, system.simple_coords)}
    for r1 in system.positive_roots:
        for r2 in system.positive_roots:
            s = r1 + r2
            if s.coords2 in grade:
                assert grade[s.coords2] == grade[r1.coords2] + grade[r2.coords2]


def test_dimension_formula_examples():
    assert dimension_formula(Family.B, 3, 2) == 7
    assert dimension_formula(Family.C, 3, 2) == 7
    assert dimension_formula(Family.D, 4, 2) == 9
    with pytest.raises(NotClassical):
        dimension_formula(Family.F4, 4, 2)


def test_dimension_formula_matches_grading():
    for fam, n, p in classical_cases(12):
        assert dimension_formula(fam, n, p) == make_space(fam, n, p).dim


def test_ricci_formula_examples():
    assert ricci_formula(Family.B, 3, 2) == 4
    assert ricci_formula(Family.C, 3, 2) == 5
    assert ricci_formula(Family.D, 4, 2) == 5
    with pytest.raises(NotClassical):
        ricci_formula(Family.G2, 2, 2)


def test_mu_set_after_m1():
    space = make_space("B", 4, 2)
    build_M1(space)
    assert space.mu == ricci_formula(Family.B, 4, 2) == Fraction(6)


def test_grade_space_index_error():
    system = build_root_system(AlgebraId(Family.G2))
    with pytest.raises(IndexOutOfRange):
        grade_space(system, 3)


def test_grading_json():
    doc = json.loads(make_space("G2", 2, 2).grading_json())
    assert doc == {"algebra": "G2", "p": 2, "dim": 5, "levels": {"1": [1, 2, 3, 4], "2": [5]}}
