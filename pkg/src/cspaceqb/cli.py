"""Command-line front end: per-space analysis, family sweeps, and
regeneration of the shipped reference tables and matrices.

Exit codes: 0 success, 1 fixture mismatch, 2 out of theorem scope,
3 numeric/closed-form discrepancy, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from typing import List, Optional, Sequence

import numpy as np

from .classify import (
    CaseReport,
    DEFAULT_S_SCHEDULE,
    DEFAULT_TOL,
    Discrepancy,
    OutOfTheoremScope,
    Status,
    analyze,
)
from .cspace import IndexOutOfRange, make_space
from .curvature import build_M1, build_Z
from .rootsys import AlgebraId, Family, UnsupportedAlgebra, build_root_system
from .spectral import weighted_row_sum_bound

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_SCOPE = 2
EXIT_DISCREPANCY = 3
EXIT_USAGE = 64

_STATUS_TEXT = {
    Status.QB_POSITIVE: "QB > 0",
    Status.QB_FAILS: "does not satisfy QB >= 0",
    Status.QB_NONNEG_BOUNDARY: "QB >= 0 but not QB > 0 (boundary case)",
    Status.INCONCLUSIVE: "inconclusive",
    Status.OUT_OF_THEOREM_SCOPE: "out of theorem scope",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_family(text: str) -> Family:
    try:
        return Family(text.upper())
    except ValueError:
        print(f"error: unknown family {text!r}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _resolve_np(args) -> tuple[Family, int, int]:
    fam = _parse_family(args.family)
    p = args.p if args.p is not None else args.p_pos
    if p is None:
        print("error: missing p (positional or --p)", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    if fam.is_classical:
        if args.n is None:
            print("error: classical families need --n", file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
        n = args.n
    else:
        n = AlgebraId(fam).n
    return fam, n, p


def _default_format(chosen: Optional[str]) -> str:
    if chosen:
        return chosen
    return "markdown" if sys.stdout.isatty() else "json"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_dict(report: CaseReport) -> dict:
    return report.to_json_dict()


def _report_markdown(report: CaseReport) -> str:
    v = report.verdict
    lines = [
        f"# {report.label}",
        "",
        f"dim = {report.dim}",
        f"Ric = {v.mu} g",
        "top-4 M1 eigenvalues: " + " ".join(f"{x:.4f}" for x in v.m1_top),
    ]
    if v.m2_bound is not None:
        lines.append(f"M2 bound: {v.m2_bound:.10g} ({'; '.join(v.method_notes)})")
    else:
        lines.append(f"M2 bound: not needed ({'; '.join(v.method_notes)})")
    lines.append(f"verdict: {_STATUS_TEXT[report.final_status]}")
    return "\n".join(lines) + "\n"


_CSV_HEADER = "algebra,p,dim,mu,m1_1,m1_2,m1_3,m1_4,m2_bound,status,consistent\n"


def _report_csv_row(report: CaseReport) -> str:
    v = report.verdict
    top = list(v.m1_top) + [float("nan")] * (4 - len(v.m1_top))
    m2 = "" if v.m2_bound is None else f"{v.m2_bound:.10g}"
    alg = f"{report.family.value}{report.n}" if report.family.is_classical else report.family.value
    eigs = ",".join(f"{x:.4f}" for x in top[:4])
    return f"{alg},{report.p},{report.dim},{v.mu},{eigs},{m2},{report.final_status.value},{report.consistent}\n"


def cmd_roots(args) -> int:
    fam = _parse_family(args.family)
    n = args.n if args.n is not None else 0
    try:
        system = build_root_system(AlgebraId(fam, n))
    except UnsupportedAlgebra as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(system.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_grade(args) -> int:
    fam, n, p = _resolve_np(args)
    space = make_space(fam, n, p)
    _emit(space.grading_json() + "\n", args.out)
    return EXIT_OK


def cmd_m1(args) -> int:
    fam, n, p = _resolve_np(args)
    space = make_space(fam, n, p)
    _emit(build_M1(space).to_csv(), args.out)
    return EXIT_OK


def cmd_z(args) -> int:
    fam, n, p = _resolve_np(args)
    space = make_space(fam, n, p)
    _emit(build_Z(space).to_coo_csv(), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    fam, n, p = _resolve_np(args)
    tol = args.tol if args.tol is not None else DEFAULT_TOL
    schedule = _parse_schedule(args.s_schedule)
    try:
        report = analyze(fam, n, p, tol=tol, s_schedule=schedule)
    except OutOfTheoremScope as exc:
        print(f"out of theorem scope: {exc}", file=sys.stderr)
        return EXIT_SCOPE
    fmt = _default_format(args.format)
    if fmt == "json":
        _emit(json.dumps(_report_dict(report), sort_keys=True) + "\n", args.out)
    elif fmt == "csv":
        _emit(_CSV_HEADER + _report_csv_row(report), args.out)
    else:
        _emit(_report_markdown(report), args.out)
    if not report.consistent:
        print(f"discrepancy: {report.label}", file=sys.stderr)
        return EXIT_DISCREPANCY
    return EXIT_OK


def _parse_schedule(text: Optional[str]) -> Sequence[int]:
    if not text:
        return DEFAULT_S_SCHEDULE
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        print(f"error: bad s-schedule {text!r}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def cmd_sweep(args) -> int:
    fam = _parse_family(args.family)
    if not fam.is_classical:
        print("error: sweep applies to the classical families B, C, D", file=sys.stderr)
        return EXIT_USAGE
    lo, hi = _parse_range(args.n)
    reports: List[CaseReport] = []
    rc = EXIT_OK
    for n in range(lo, hi + 1):
        top = n - 1 if fam is not Family.D else n - 2
        for p in range(2, top + 1):
            report = analyze(fam, n, p)
            reports.append(report)
            if not report.consistent:
                rc = EXIT_DISCREPANCY
    fmt = _default_format(args.format)
    if fmt == "json":
        _emit(json.dumps([_report_dict(r) for r in reports], sort_keys=True) + "\n", args.out)
    elif fmt == "csv":
        _emit(_CSV_HEADER + "".join(_report_csv_row(r) for r in reports), args.out)
    else:
        lines = ["| algebra | p | dim | mu | closed form | numeric | ok |", "|---|---|---|---|---|---|---|"]
        for r in reports:
            cf = "QB>0" if r.closed_form.qb_positive else ("QB>=0" if r.closed_form.qb_nonneg else "fails")
            alg = f"{r.family.value}{r.n}"
            lines.append(
                f"| {alg} | {r.p} | {r.dim} | {r.verdict.mu} | {cf} | {r.verdict.status.value} | {r.consistent} |"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return rc


def _golden_text(name: str) -> str:
    return resources.files("cspaceqb.golden").joinpath(name).read_text()


def _reproduce_g2_matrix() -> tuple[bool, str]:
    space = make_space("G2", 2, 2)
    got = build_M1(space).to_csv()
    want = _golden_text("g2_alpha2_B.csv")
    if got == want:
        return True, "g2-B: exact match\n"
    return False, f"g2-B mismatch:\n--- expected\n{want}--- got\n{got}"


def _reproduce_g2_z() -> tuple[bool, str]:
    space = make_space("G2", 2, 2)
    got = build_Z(space).to_dense()
    want = np.array(
        [[float(x) for x in line.split(",")] for line in _golden_text("g2_alpha2_Z.csv").splitlines()]
    )
    err = float(np.max(np.abs(got - want)))
    if err <= 1e-9:
        return True, f"g2-Z: match (max error {err:.3e})\n"
    return False, f"g2-Z mismatch: max error {err:.3e}\n"


def _reproduce_tables(family: Family) -> tuple[bool, str]:
    doc = json.loads(_golden_text("exceptional_tables.json"))
    lines = []
    ok_all = True
    for case in doc["cases"]:
        if case["algebra"] != family.value:
            continue
        report = analyze(family, 0, case["p"])
        v = report.verdict
        problems = []
        if report.dim != case["dim"]:
            problems.append(f"dim {report.dim} != {case['dim']}")
        if str(v.mu) != case["ric"]:
            problems.append(f"mu {v.mu} != {case['ric']}")
        for got, want in zip(v.m1_top, case["m1_top4"]):
            if abs(got - want) > 1e-3:
                problems.append(f"eigenvalue {got:.4f} != {want}")
        if case["m2_method"] == "rowsum":
            if v.m2_bound is None or abs(v.m2_bound - case["m2_bound"]) > 1e-3:
                problems.append(f"m2 bound {v.m2_bound} != {case['m2_bound']}")
        elif case["m2_method"] == "weighted":
            space = make_space(family, 0, case["p"])
            build_M1(space)
            bound = weighted_row_sum_bound(build_Z(space), float(space.mu), case["m2_s"])
            if abs(bound - case["m2_bound"]) > 1e-3:
                problems.append(f"weighted bound {bound:.4f} != {case['m2_bound']}")
        want_status = Status.QB_POSITIVE if case["qb_positive"] else Status.QB_FAILS
        if report.final_status is not want_status:
            problems.append(f"status {report.final_status.value} != {want_status.value}")
        label = f"{family.value} p={case['p']}"
        if problems:
            ok_all = False
            lines.append(f"{label}: MISMATCH ({'; '.join(problems)})")
        else:
            lines.append(f"{label}: ok")
    return ok_all, "\n".join(lines) + "\n"


def cmd_reproduce(args) -> int:
    target = args.target
    if target == "g2-B":
        ok, text = _reproduce_g2_matrix()
    elif target == "g2-Z":
        ok, text = _reproduce_g2_z()
    elif target in ("f4-tables", "e6-tables", "e7-tables", "e8-tables"):
        fam = Family(target[:2].upper())
        ok, text = _reproduce_tables(fam)
    else:
        print(f"error: unknown target {target!r}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_MISMATCH


def _add_common(sub: argparse.ArgumentParser, with_p: bool = True) -> None:
    sub.add_argument("family", help="B, C, D, G2, F4, E6, E7 or E8")
    if with_p:
        sub.add_argument("p_pos", nargs="?", type=int, default=None, metavar="p")
        sub.add_argument("--p", type=int, default=None)
    sub.add_argument("--n", type=int, default=None, help="rank for B/C/D")
    sub.add_argument("--format", choices=["json", "csv", "markdown"], default=None)
    sub.add_argument("--out", default=None, help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cspaceqb", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("roots", help="dump a root system as JSON")
    sub.add_argument("family")
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--out", default=None)
    sub.set_defaults(func=cmd_roots)

    for name, func in (("grade", cmd_grade), ("m1", cmd_m1), ("z", cmd_z)):
        sub = subs.add_parser(name, help=f"dump the {name} data for (g, alpha_p)")
        _add_common(sub)
        sub.set_defaults(func=func)

    sub = subs.add_parser("analyze", help="classify one space")
    _add_common(sub)
    sub.add_argument("--tol", type=float, default=None)
    sub.add_argument("--s-schedule", default=None, help="comma-separated, e.g. 0,1,4,10")
    sub.set_defaults(func=cmd_analyze)

    sub = subs.add_parser("sweep", help="classify a classical family over a rank range")
    sub.add_argument("family")
    sub.add_argument("--n", required=True, help="rank or range, e.g. 3..6")
    sub.add_argument("--format", choices=["json", "csv", "markdown"], default=None)
    sub.add_argument("--out", default=None)
    sub.set_defaults(func=cmd_sweep)

    sub = subs.add_parser("reproduce", help="regenerate a shipped reference artifact")
    sub.add_argument("target", help="g2-B, g2-Z, f4-tables, e6-tables, e7-tables, e8-tables")
    sub.add_argument("--out", default=None)
    sub.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Discrepancy as exc:
        print(f"discrepancy: {exc}", file=sys.stderr)
        return EXIT_DISCREPANCY
    except OutOfTheoremScope as exc:
        print(f"out of theorem scope: {exc}", file=sys.stderr)
        return EXIT_SCOPE
    except (UnsupportedAlgebra, IndexOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
