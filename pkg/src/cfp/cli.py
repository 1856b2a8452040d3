"""Batch front end: load a problem, certify and/or solve, emit trace + report.

Exit codes: 0 for a converged solve / all-pass check battery, 1 for failed
checks or non-convergence, 2 for input errors (bad flags, missing files,
unparsable problem files).
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from pathlib import Path

from . import library
from .errors import CfpError, ProblemFileError, UnknownProblemError
from .problem import CoupledProblem
from .problemfile import RunSettings, load_problem_file
from .report import CheckReport, Verdict
from .solver import IterationTrace, SolveReport, solve
from .space import Point
from .verifier import standard_checks

SEED_ENV_VAR = "CFP_SEED"

TRACE_COLUMNS = ("n", "x", "y", "gx", "gy", "delta", "residual", "monotone_ok")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfp",
        description="Coupled fixed point solver and hypothesis certifier.",
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--problem", metavar="ID",
                        help="built-in problem id (see --list)")
    source.add_argument("--file", metavar="PATH", help="problem file path")
    source.add_argument("--list", action="store_true",
                        help="list built-in problem ids and exit")
    parser.add_argument("--check", action="store_true",
                        help="run the hypothesis certification battery")
    parser.add_argument("--solve", action="store_true",
                        help="run the coupled iteration (default when --check absent)")
    parser.add_argument("--trace-out", metavar="PATH", help="write trace CSV here")
    parser.add_argument("--report-out", metavar="PATH", help="write the report here too")
    parser.add_argument("--tol", type=float, help="residual tolerance (default 1e-10)")
    parser.add_argument("--max-iter", type=int, help="iteration cap (default 1000)")
    parser.add_argument("--samples", type=int,
                        help="sample budget per hypothesis check (default 10000)")
    parser.add_argument("--seed", type=int,
                        help=f"sampling seed (default: ${SEED_ENV_VAR} or 42)")
    parser.add_argument("--expect-separation", action="store_true",
                        help="treat a single_contraction failure as informational "
                             "when sum_contraction passes")
    return parser


def _coords_cell(p: Point) -> str:
    return ";".join(repr(c) for c in p)


def write_trace_csv(trace: IterationTrace, path: str | Path) -> None:
    """Trace rows with the fixed column schema; vector cells are ';'-joined."""
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(TRACE_COLUMNS)
        for step in trace.steps:
            writer.writerow([
                step.n,
                _coords_cell(step.x),
                _coords_cell(step.y),
                _coords_cell(step.gx),
                _coords_cell(step.gy),
                "" if step.delta is None else repr(step.delta),
                repr(step.residual),
                f"{str(step.mono_x).lower()};{str(step.mono_y).lower()}",
            ])


def format_report(
    solve_report: SolveReport | None,
    checks: list[CheckReport],
) -> str:
    lines = []
    if solve_report is not None:
        lines.append(f"converged={str(solve_report.converged).lower()}")
        lines.append(f"iterations={solve_report.iterations}")
        lines.append(f"final_x={_coords_cell(solve_report.final.x)}")
        lines.append(f"final_y={_coords_cell(solve_report.final.y)}")
        lines.append(f"final_residual={solve_report.final_residual!r}")
        lines.append(f"stop_reason={solve_report.stop_reason}")
    for check in checks:
        lines.append(f"check.{check.hypothesis}={check.verdict}")
    return "\n".join(lines) + "\n"


def _check_failures(checks: list[CheckReport], expect_separation: bool) -> list[str]:
    by_name = {c.hypothesis: c for c in checks}
    failures = [c.hypothesis for c in checks if c.verdict is Verdict.FAIL]
    if expect_separation and "single_contraction" in failures:
        summed = by_name.get("sum_contraction")
        if summed is not None and summed.verdict is Verdict.PASS_SAMPLED:
            failures.remove("single_contraction")
    return failures


def _load(args) -> tuple[CoupledProblem, RunSettings]:
    if args.problem is not None:
        return library.get(args.problem).problem, RunSettings()
    return load_problem_file(args.file)


def _resolve_seed(args, run: RunSettings) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ProblemFileError(
                f"{SEED_ENV_VAR} must be an integer, got {env!r}"
            ) from None
    return run.seed


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list:
        for problem_id in library.ids():
            print(problem_id)
        return 0

    try:
        problem, run = _load(args)
        seed = _resolve_seed(args, run)
    except (UnknownProblemError, ProblemFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    tol = args.tol if args.tol is not None else run.tol
    max_iter = args.max_iter if args.max_iter is not None else run.max_iter
    samples = args.samples if args.samples is not None else run.samples
    do_solve = args.solve or not args.check

    failed = False
    checks: list[CheckReport] = []
    solve_report = None
    try:
        if args.check:
            checks = standard_checks(problem, samples, seed)
            for check in checks:
                print(check.summary(), file=sys.stderr)
                for witness in check.witnesses[:3]:
                    print(
                        f"  witness[{witness.index}]: inputs={witness.inputs!r} "
                        f"lhs={witness.lhs!r} rhs={witness.rhs!r}",
                        file=sys.stderr,
                    )
            failures = _check_failures(checks, args.expect_separation)
            if failures:
                print(f"failed checks: {', '.join(failures)}", file=sys.stderr)
                failed = True
        if do_solve:
            solve_report, trace = solve(problem, tol=tol, max_iter=max_iter)
            if args.trace_out:
                write_trace_csv(trace, args.trace_out)
            if not solve_report.converged:
                print(
                    f"did not converge: stop_reason={solve_report.stop_reason} "
                    f"final_residual={solve_report.final_residual!r}",
                    file=sys.stderr,
                )
                failed = True
    except CfpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    report_text = format_report(solve_report, checks)
    sys.stdout.write(report_text)
    if args.report_out:
        Path(args.report_out).write_text(report_text, encoding="utf-8")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
