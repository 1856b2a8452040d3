"""Problem files: a sectioned key=value format defining a coupled problem.

Layout (parsed with configparser; keys are case-sensitive)::

    [problem]
    dim = 1
    F = (x - 2*y)/4        # pair operator
    g = 5*x/6              # coincidence map
    g_inv = 6*t/5          # right inverse of g
    phi = linear:0.9       # or an expression in t
    x0 = -3
    y0 = 3
    box_lo = -10
    box_hi = 10
    metric = l1            # optional: l1 (default) or linf

    [run]                  # optional section, all keys optional
    tol = 1e-10
    max_iter = 1000
    samples = 10000
    seed = 42

Scalar problems use the bare variables x, y (and t in g_inv / phi).  For
dim = n > 1 each of F, g, g_inv is a ';'-separated list of n per-coordinate
expressions over the indexed variables x1..xn, y1..yn (t1..tn for g_inv),
and x0/y0/box_lo/box_hi are comma-separated vectors of length n.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from pathlib import Path

from . import expr as _expr
from .comparator import Comparator
from .errors import ParseError, ProblemFileError
from .problem import CoupledProblem
from .space import Box, MetricKind, Pair, Point, Space

_REQUIRED = ("dim", "F", "g", "g_inv", "phi", "x0", "y0", "box_lo", "box_hi")


@dataclass(frozen=True)
class RunSettings:
    tol: float = 1e-10
    max_iter: int = 1000
    samples: int = 10_000
    seed: int = 42


def _parse_exprs(text: str, key: str, dim: int, allowed: set[str]):
    parts = text.split(";") if dim > 1 else [text]
    if len(parts) != dim:
        raise ProblemFileError(
            f"key {key!r} must give {dim} ';'-separated expression(s), got {len(parts)}"
        )
    asts = []
    for part in parts:
        try:
            ast = _expr.parse(part)
        except ParseError as exc:
            raise ProblemFileError(f"key {key!r}: {exc}") from exc
        stray = _expr.free_variables(ast) - allowed
        if stray:
            raise ProblemFileError(
                f"key {key!r} references unknown variable(s) "
                f"{', '.join(sorted(stray))}; allowed: {', '.join(sorted(allowed))}"
            )
        asts.append(ast)
    return asts


def _vector(text: str, key: str, dim: int) -> Point:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != dim:
        raise ProblemFileError(
            f"key {key!r} must have {dim} comma-separated value(s), got {len(parts)}"
        )
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise ProblemFileError(f"key {key!r}: {exc}") from exc


def _names(stem: str, dim: int) -> list[str]:
    return [stem] if dim == 1 else [f"{stem}{i}" for i in range(1, dim + 1)]


def _point_map2(asts, x_names, y_names):
    def apply(x: Point, y: Point) -> Point:
        bindings = dict(zip(x_names, x))
        bindings.update(zip(y_names, y))
        return tuple(_expr.evaluate(a, bindings) for a in asts)

    return apply


def _point_map(asts, names):
    def apply(p: Point) -> Point:
        return tuple(_expr.evaluate(a, dict(zip(names, p))) for a in asts)

    return apply


def _comparator_from(text: str) -> Comparator:
    text = text.strip()
    if text.startswith("linear:"):
        try:
            k = float(text.removeprefix("linear:"))
        except ValueError as exc:
            raise ProblemFileError(f"key 'phi': {exc}") from exc
        return Comparator.linear(k)
    try:
        comp = Comparator.expression(text)
    except ParseError as exc:
        raise ProblemFileError(f"key 'phi': {exc}") from exc
    stray = _expr.free_variables(comp.ast) - {"t"}
    if stray:
        raise ProblemFileError(
            f"key 'phi' may only reference t, found {', '.join(sorted(stray))}"
        )
    return comp


def load_problem_file(path: str | Path) -> tuple[CoupledProblem, RunSettings]:
    """Parse a problem file into a runnable problem plus run settings."""
    path = Path(path)
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keys are case-sensitive (F vs f)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc}") from exc
    try:
        parser.read_string(text, source=str(path))
    except configparser.Error as exc:
        raise ProblemFileError(f"bad problem file {path}: {exc}") from exc

    if not parser.has_section("problem"):
        raise ProblemFileError(f"{path}: missing [problem] section")
    section = parser["problem"]
    missing = [k for k in _REQUIRED if k not in section]
    if missing:
        raise ProblemFileError(f"{path}: missing key(s) {', '.join(missing)}")

    try:
        dim = int(section["dim"])
    except ValueError as exc:
        raise ProblemFileError(f"key 'dim': {exc}") from exc
    if dim < 1:
        raise ProblemFileError(f"key 'dim' must be >= 1, got {dim}")

    x_names, y_names, t_names = _names("x", dim), _names("y", dim), _names("t", dim)
    f_asts = _parse_exprs(section["F"], "F", dim, set(x_names) | set(y_names))
    g_asts = _parse_exprs(section["g"], "g", dim, set(x_names))
    ginv_asts = _parse_exprs(section["g_inv"], "g_inv", dim, set(t_names))

    x0 = _vector(section["x0"], "x0", dim)
    y0 = _vector(section["y0"], "y0", dim)
    lo = _vector(section["box_lo"], "box_lo", dim)
    hi = _vector(section["box_hi"], "box_hi", dim)

    metric_text = section.get("metric", "l1").strip().lower()
    try:
        metric = MetricKind(metric_text)
    except ValueError:
        raise ProblemFileError(
            f"key 'metric' must be 'l1' or 'linf', got {metric_text!r}"
        ) from None

    run_section = parser["run"] if parser.has_section("run") else {}
    try:
        run = RunSettings(
            tol=float(run_section.get("tol", 1e-10)),
            max_iter=int(run_section.get("max_iter", 1000)),
            samples=int(run_section.get("samples", 10_000)),
            seed=int(run_section.get("seed", 42)),
        )
    except ValueError as exc:
        raise ProblemFileError(f"[run] section: {exc}") from exc

    try:
        space = Space(dimension=dim, box=Box(lo, hi), metric=metric,
                      samples=run.samples)
        problem = CoupledProblem(
            space=space,
            f=_point_map2(f_asts, x_names, y_names),
            g=_point_map(g_asts, x_names),
            g_section=_point_map(ginv_asts, t_names),
            comparator=_comparator_from(section["phi"]),
            initial=Pair(x0, y0),
            name=path.stem,
        )
    except ProblemFileError:
        raise
    except Exception as exc:
        raise ProblemFileError(f"{path}: {exc}") from exc
    return problem, run
