import pytest

from cspaceqb import (
    Family,
    OutOfTheoremScope,
    Status,
    analyze,
    classify_closed_form,
    classify_numeric,
    cross_check,
    exceptional_cases,
    make_space,
)
from cspaceqb.classify import ClosedFormResult, sweep_classical


def test_closed_form_classical():
    assert classify_closed_form(Family.B, 3, 2) == ClosedFormResult(True, True)
    assert classify_closed_form(Family.B, 4, 3) == ClosedFormResult(True, False)
    assert classify_closed_form(Family.B, 5, 4) == ClosedFormResult(False, False)
    assert classify_closed_form(Family.C, 3, 2) == ClosedFormResult(True, True)
    assert classify_closed_form(Family.C, 8, 7) == ClosedFormResult(True, False)
    assert classify_closed_form(Family.D, 4, 2) == ClosedFormResult(True, True)
    assert classify_closed_form(Family.D, 7, 5) == ClosedFormResult(True, False)


def test_closed_form_exceptional():
    assert classify_closed_form(Family.G2, 2, 2).qb_positive
    for p, ok in [(1, True), (2, True), (3, False), (4, True)]:
        assert classify_closed_form(Family.F4, 4, p).qb_positive is ok
        assert classify_closed_form(Family.F4, 4, p).qb_nonneg is ok
    assert not classify_closed_form(Family.E7, 7, 3).qb_positive
    assert classify_closed_form(Family.E8, 8, 8).qb_positive


def test_scope_exclusions():
    for fam, n, p in [
        (Family.B, 3, 1), (Family.B, 3, 3), (Family.C, 4, 4), (Family.D, 5, 4),
        (Family.G2, 2, 1), (Family.E6, 6, 1), (Family.E6, 6, 6), (Family.E7, 7, 7),
    ]:
        with pytest.raises(OutOfTheoremScope):
            classify_closed_form(fam, n, p)
        with pytest.raises(OutOfTheoremScope):
            classify_numeric(make_space(fam, n, p))


def test_numeric_g2_positive():
    v = classify_numeric(make_space("G2", 2, 2))
    assert v.status is Status.QB_POSITIVE
    assert v.mu == 9
    assert v.m2_bound == pytest.approx(8.6309, abs=1e-3)
    assert any("s=1" in note for note in v.method_notes)


def test_numeric_f4_alpha3_fails():
    v = classify_numeric(make_space("F4", 4, 3))
    assert v.status is Status.QB_FAILS
    assert v.m2_bound is None
    assert v.m1_top[0] == pytest.approx(3.6888, abs=1e-3)


def test_numeric_e8_alpha8_plain_rowsum():
    v = classify_numeric(make_space("E8", 8, 8))
    assert v.status is Status.QB_POSITIVE
    assert v.m2_bound == pytest.approx(11.5, abs=1e-3)
    assert any("s=0" in note for note in v.method_notes)


def test_numeric_boundary_is_inconclusive():
    v = classify_numeric(make_space("B", 4, 3))
    assert v.status is Status.INCONCLUSIVE
    assert any("multiplicity" in note for note in v.method_notes)


def test_cross_check_spot_cases():
    r = cross_check("D", 4, 2)
    assert r.final_status is Status.QB_POSITIVE
    assert r.verdict.status is Status.QB_POSITIVE
    r = cross_check("C", 3, 2)
    assert r.final_status is Status.QB_POSITIVE
    r = cross_check("B", 4, 3)
    assert r.final_status is Status.QB_NONNEG_BOUNDARY
    assert r.verdict.status is Status.INCONCLUSIVE


def test_sweep_small_ranks_consistent():
    for fam in ("B", "C", "D"):
        for report in sweep_classical(fam, (3 if fam != "D" else 4, 6)):
            assert report.consistent, report.label


def test_exceptional_case_list():
    cases = exceptional_cases()
    assert len(cases) == 23
    assert (Family.G2, 1) not in cases
    assert (Family.E7, 7) not in cases
    assert (Family.E8, 8) in cases


def test_report_json_schema():
    doc = analyze("G2", 2, 2).to_json_dict()
    assert set(doc) == {"algebra", "p", "dim", "mu", "m1_top4", "m2_bound", "method", "status"}
    assert doc["algebra"] == "G2"
    assert doc["mu"] == "9"
    assert doc["m1_top4"] == [9.0, 8.5, 1.5, 1.5]
    assert doc["status"] == "QB_POSITIVE"
