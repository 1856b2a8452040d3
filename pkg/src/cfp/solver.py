"""Coupled Picard iteration on the product space, trace capture, and bridging.

The update realizes g(x') = f(x, y), g(y') = f(y, x) through the problem's
g-section, records the per-step contraction gap (the half-sum distance
between consecutive g-image pairs) and the monotonicity of those g-images,
and stops on the coincidence residual.  The bridging procedure exhibits
uniqueness numerically by driving a comparable pair toward two candidate
solutions simultaneously.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .comparator import Comparator
from .errors import ComparabilityError, DomainError, EvalError, SectionRangeError
from .problem import CoupledProblem, InitialOrientation, check_initial, residual
from .report import CheckReport, Verdict, Witness, finish_report
from .space import Comparison, Pair, Point


class StopReason(enum.Enum):
    RESIDUAL_TOL = "ResidualTol"
    DELTA_TOL = "DeltaTol"
    MAX_ITER = "MaxIter"
    NUMERIC_ERROR = "NumericError"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TraceStep:
    n: int
    x: Point
    y: Point
    gx: Point
    gy: Point
    delta: float | None  # gap to the previous g-image pair; absent at n=0
    residual: float
    mono_x: bool  # g-image moved the certified way in the first slot
    mono_y: bool  # ... and in the second slot

    @property
    def monotone_ok(self) -> tuple[bool, bool]:
        return (self.mono_x, self.mono_y)


@dataclass
class IterationTrace:
    steps: list[TraceStep] = field(default_factory=list)
    orientation: InitialOrientation = InitialOrientation.NEITHER

    def deltas(self) -> list[float]:
        return [s.delta for s in self.steps if s.delta is not None]

    def delta_ratios(self) -> list[float]:
        d = self.deltas()
        return [d[i + 1] / d[i] for i in range(len(d) - 1) if d[i] > 0.0]


@dataclass(frozen=True)
class SolveReport:
    converged: bool
    iterations: int
    final: Pair
    final_residual: float
    stop_reason: StopReason
    delta_ratios: list[float]


def lift(problem: CoupledProblem, pt: Pair) -> Pair:
    """Apply the product-space operator: (x, y) -> (f(x, y), f(y, x))."""
    return Pair(problem.f(pt.x, pt.y), problem.f(pt.y, pt.x))


def iterate_once(problem: CoupledProblem, pt: Pair) -> Pair:
    """One coupled step x' = section(f(x, y)), y' = section(f(y, x)).

    Verifies that the section actually solved g(x') = f(x, y) to the
    problem's section tolerance and raises SectionRangeError naming the
    offending value otherwise.
    """
    image = lift(problem, pt)
    nx = problem.g_section(image.x)
    ny = problem.g_section(image.y)
    dev_x = problem.space.distance(problem.g(nx), image.x)
    dev_y = problem.space.distance(problem.g(ny), image.y)
    if dev_x > problem.section_tol:
        raise SectionRangeError(image.x, dev_x, problem.section_tol)
    if dev_y > problem.section_tol:
        raise SectionRangeError(image.y, dev_y, problem.section_tol)
    return Pair(nx, ny)


def _finite(p: Point) -> bool:
    return all(math.isfinite(c) for c in p)


def _mono_flags(
    space, prev_gx: Point, prev_gy: Point, gx: Point, gy: Point,
    orientation: InitialOrientation,
) -> tuple[bool, bool]:
    if orientation is InitialOrientation.DESCENDING:
        return (space.leq(gx, prev_gx), space.leq(prev_gy, gy))
    # ascending convention also covers BOTH (stationary) and NEITHER
    # (uncertified; flags are then diagnostic and may be false)
    return (space.leq(prev_gx, gx), space.leq(gy, prev_gy))


def solve(
    problem: CoupledProblem,
    tol: float = 1e-10,
    max_iter: int = 1000,
) -> tuple[SolveReport, IterationTrace]:
    """Run the coupled iteration from the problem's initial pair.

    Stops when the coincidence residual is <= tol (converged), when the
    step gap stagnates below tol * 1e-2 without meeting the residual
    (DeltaTol, not converged), at max_iter, or on a non-finite value.
    Two runs on the same problem produce bit-identical traces.
    """
    if tol <= 0.0:
        raise DomainError(f"tol must be > 0, got {tol!r}")
    if max_iter < 1:
        raise DomainError(f"max_iter must be >= 1, got {max_iter!r}")

    orientation = check_initial(problem)
    trace = IterationTrace(orientation=orientation)
    space = problem.space

    current = problem.initial
    gx, gy = problem.g(current.x), problem.g(current.y)
    res = residual(problem, current)
    trace.steps.append(TraceStep(0, current.x, current.y, gx, gy, None, res, True, True))

    reason = StopReason.MAX_ITER
    n = 0
    if res <= tol:
        reason = StopReason.RESIDUAL_TOL
    else:
        while n < max_iter:
            try:
                nxt = iterate_once(problem, current)
                ngx, ngy = problem.g(nxt.x), problem.g(nxt.y)
                res = residual(problem, nxt)
            except SectionRangeError:
                raise
            except (ArithmeticError, EvalError):
                reason = StopReason.NUMERIC_ERROR
                break
            n += 1
            if not (_finite(nxt.x) and _finite(nxt.y) and _finite(ngx) and _finite(ngy)):
                reason = StopReason.NUMERIC_ERROR
                break
            delta = 0.5 * (space.distance(ngx, gx) + space.distance(ngy, gy))
            mono_x, mono_y = _mono_flags(space, gx, gy, ngx, ngy, orientation)
            trace.steps.append(
                TraceStep(n, nxt.x, nxt.y, ngx, ngy, delta, res, mono_x, mono_y)
            )
            current, gx, gy = nxt, ngx, ngy
            if not math.isfinite(res):
                reason = StopReason.NUMERIC_ERROR
                break
            if res <= tol:
                reason = StopReason.RESIDUAL_TOL
                break
            if delta <= tol * 1e-2:
                reason = StopReason.DELTA_TOL
                break

    final_res = trace.steps[-1].residual
    report = SolveReport(
        converged=reason is StopReason.RESIDUAL_TOL,
        iterations=n,
        final=Pair(trace.steps[-1].x, trace.steps[-1].y),
        final_residual=final_res,
        stop_reason=reason,
        delta_ratios=trace.delta_ratios(),
    )
    return report, trace


def delta_contraction_audit(
    trace: IterationTrace,
    comparator: Comparator,
    slack: float = 1e-12,
) -> CheckReport:
    """Verify gap(n+1) <= c(gap(n)) + slack on every recorded consecutive pair."""
    deltas = trace.deltas()
    witnesses: list[Witness] = []
    tested = 0
    for i in range(len(deltas) - 1):
        tested += 1
        bound = comparator(deltas[i]) + slack
        if deltas[i + 1] > bound:
            witnesses.append(Witness(
                inputs=(deltas[i], deltas[i + 1]),
                lhs=deltas[i + 1],
                rhs=bound,
                index=i + 1,
                note="gap exceeded comparator bound",
            ))
    return finish_report("delta_contraction", tested, witnesses, slack)


def bridge_uniqueness(
    problem: CoupledProblem,
    a: Pair,
    b: Pair,
    bridge: Pair,
    tol: float = 1e-10,
    max_iter: int = 1000,
) -> CheckReport:
    """Numerically exhibit uniqueness by iterating a bridging pair.

    Preconditions: a and b are coincidence points to tol, and the image of
    the bridge under the product operator is comparable to the images of
    both a and b.  The bridge orbit's g-images are then driven toward the
    g-images of a and of b simultaneously; the check passes when both gap
    sequences fall below tol, which forces the two g-image pairs within
    2 * tol of each other by the triangle inequality.
    """
    res_a = residual(problem, a)
    res_b = residual(problem, b)
    if res_a > tol or res_b > tol:
        raise DomainError(
            f"bridge endpoints must be coincidence points to {tol!r} "
            f"(residuals {res_a!r}, {res_b!r})"
        )
    space = problem.space
    image_a, image_b, image_u = lift(problem, a), lift(problem, b), lift(problem, bridge)
    for label, image in (("a", image_a), ("b", image_b)):
        if space.pair_compare(image_u, image) is Comparison.INCOMPARABLE:
            raise ComparabilityError(
                f"bridge image {image_u!r} is incomparable to the image of {label}"
            )

    ga = Pair(problem.g(a.x), problem.g(a.y))
    gb = Pair(problem.g(b.x), problem.g(b.y))
    gaps_a: list[float] = []
    gaps_b: list[float] = []
    current = bridge
    n = 0
    while True:
        gu = Pair(problem.g(current.x), problem.g(current.y))
        gaps_a.append(space.pair_distance(ga, gu))
        gaps_b.append(space.pair_distance(gb, gu))
        if gaps_a[-1] <= tol and gaps_b[-1] <= tol:
            break
        if n >= max_iter:
            break
        current = iterate_once(problem, current)
        n += 1

    witnesses: list[Witness] = []
    if gaps_a[-1] > tol or gaps_b[-1] > tol:
        witnesses.append(Witness(
            inputs=(bridge,),
            lhs=max(gaps_a[-1], gaps_b[-1]),
            rhs=tol,
            index=n,
            note="bridge gaps did not fall below tol within max_iter",
        ))
    report = CheckReport(
        hypothesis="bridge_uniqueness",
        verdict=Verdict.FAIL if witnesses else Verdict.PASS_SAMPLED,
        samples_tested=n,
        witnesses=witnesses,
        slack=0.0,
    )
    report.series["gap_to_a"] = gaps_a
    report.series["gap_to_b"] = gaps_b
    return report
