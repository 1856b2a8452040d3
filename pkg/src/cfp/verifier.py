"""Sampling-based certification of the solvability hypotheses.

Every check draws deterministic samples from the problem space's box (one
random.Random stream per check, seeded), tests the relevant inequality with
an additive slack, and returns a CheckReport whose witnesses carry both
sides of every violated comparison.  Comparable tuples are built by
construction (base point plus nonnegative offsets) rather than by rejection,
so high-dimensional runs do not come back vacuous.  A PassSampled verdict is
evidence, never proof.

Checks never raise on violations; a problem whose maps themselves blow up
propagates that evaluation error.
"""

from __future__ import annotations

import random
from typing import Iterator, Sequence

from .comparator import Comparator
from .errors import DomainError
from .problem import CoupledProblem, Quadruple
from .report import CheckReport, Witness, finish_report
from .solver import lift
from .space import Comparison, Pair, Point

#: default positive grid for comparator class checks
DEFAULT_GRID = (1e-3, 1e-2, 0.1, 1.0, 10.0, 100.0)

#: additive slack for inequality comparisons; boundary equality passes
DEFAULT_SLACK = 1e-12

#: tolerance for point-identity checks (commutativity, range inclusion)
IDENTITY_TOL = 1e-10


def _sampled_quadruples(
    problem: CoupledProblem, n_samples: int, seed: int
) -> Iterator[Quadruple]:
    """Yield (x, y, u, v) with u <= x and y <= v componentwise, in the box."""
    rng = random.Random(seed)
    box = problem.space.box
    for _ in range(n_samples):
        u = box.sample(rng)
        x = box.sample_above(rng, u)
        y = box.sample(rng)
        v = box.sample_above(rng, y)
        yield (x, y, u, v)


def _g_comparable(problem: CoupledProblem, quad: Quadruple) -> bool:
    """Premise of the contraction conditions: g(x) >= g(u) and g(y) <= g(v)."""
    x, y, u, v = quad
    leq = problem.space.leq
    return leq(problem.g(u), problem.g(x)) and leq(problem.g(y), problem.g(v))


def check_mixed_g_monotone(
    problem: CoupledProblem,
    n_samples: int,
    seed: int = 42,
    slack: float = DEFAULT_SLACK,
) -> CheckReport:
    """Sample the two monotonicity implications of the operator.

    First slot: g(x1) <= g(x2) must force f(x1, y) <= f(x2, y); second slot:
    g(y1) <= g(y2) must force f(x, y1) >= f(x, y2).  Violations are recorded
    componentwise.
    """
    if n_samples < 1:
        raise DomainError(f"n_samples must be >= 1, got {n_samples!r}")
    rng = random.Random(seed)
    box = problem.space.box
    leq = problem.space.leq
    witnesses: list[Witness] = []
    tested = 0
    index = 0
    for _ in range(n_samples):
        x1 = box.sample(rng)
        x2 = box.sample_above(rng, x1)
        y = box.sample(rng)
        if leq(problem.g(x1), problem.g(x2)):
            tested += 1
            lo, hi = problem.f(x1, y), problem.f(x2, y)
            for j, (a, b) in enumerate(zip(lo, hi)):
                if a > b + slack:
                    witnesses.append(Witness(
                        inputs=(x1, x2, y), lhs=a, rhs=b, index=index,
                        note=f"first-slot monotonicity violated in coordinate {j}"))
                    break
        index += 1

        y1 = box.sample(rng)
        y2 = box.sample_above(rng, y1)
        x = box.sample(rng)
        if leq(problem.g(y1), problem.g(y2)):
            tested += 1
            hi2, lo2 = problem.f(x, y1), problem.f(x, y2)
            for j, (a, b) in enumerate(zip(hi2, lo2)):
                if a < b - slack:
                    witnesses.append(Witness(
                        inputs=(y1, y2, x), lhs=a, rhs=b, index=index,
                        note=f"second-slot antitonicity violated in coordinate {j}"))
                    break
        index += 1
    return finish_report("mixed_g_monotone", tested, witnesses, slack)


def _contraction_check(
    problem: CoupledProblem,
    n_samples: int,
    seed: int,
    slack: float,
    comparator: Comparator | None,
    hypothesis: str,
    summed: bool,
) -> CheckReport:
    if n_samples < 1:
        raise DomainError(f"n_samples must be >= 1, got {n_samples!r}")
    comp = comparator if comparator is not None else problem.comparator
    d = problem.space.distance
    witnesses: list[Witness] = []
    tested = 0
    quads = list(problem.witness_seeds)
    for index, quad in enumerate(
        quads + list(_sampled_quadruples(problem, n_samples, seed))
    ):
        if not _g_comparable(problem, quad):
            continue
        tested += 1
        x, y, u, v = quad
        mid = 0.5 * (d(problem.g(x), problem.g(u)) + d(problem.g(y), problem.g(v)))
        if summed:
            lhs = d(problem.f(x, y), problem.f(u, v)) + d(problem.f(y, x), problem.f(v, u))
            rhs = 2.0 * comp(mid)
        else:
            lhs = d(problem.f(x, y), problem.f(u, v))
            rhs = comp(mid)
        if lhs > rhs + slack:
            witnesses.append(Witness(inputs=quad, lhs=lhs, rhs=rhs, index=index))
    return finish_report(hypothesis, tested, witnesses, slack)


def check_sum_contraction(
    problem: CoupledProblem,
    n_samples: int,
    seed: int = 42,
    slack: float = DEFAULT_SLACK,
    comparator: Comparator | None = None,
) -> CheckReport:
    """Symmetric two-branch condition: on g-comparable quadruples,
    d(f(x,y), f(u,v)) + d(f(y,x), f(v,u)) <= 2*c(half-sum of g-distances)."""
    return _contraction_check(
        problem, n_samples, seed, slack, comparator, "sum_contraction", summed=True
    )


def check_single_contraction(
    problem: CoupledProblem,
    n_samples: int,
    seed: int = 42,
    slack: float = DEFAULT_SLACK,
    comparator: Comparator | None = None,
) -> CheckReport:
    """Single-branch condition d(f(x,y), f(u,v)) <= c(half-sum of g-distances).

    Strictly stronger than the summed condition; the shipped 1-D catalog
    problem satisfies the summed one while provably failing this one.
    """
    return _contraction_check(
        problem, n_samples, seed, slack, comparator, "single_contraction", summed=False
    )


def check_bl_contraction(
    problem: CoupledProblem,
    k: float,
    n_samples: int,
    seed: int = 42,
    slack: float = DEFAULT_SLACK,
) -> CheckReport:
    """Constant-factor condition d(f(x,y), f(u,v)) <= (k/2)[d(x,u) + d(y,v)].

    Raw points are used on both sides (the classical identity-map special
    case); the quadruple premise is raw comparability x >= u, y <= v.
    """
    if not (0.0 <= k < 1.0):
        raise DomainError(f"k must be in [0, 1), got {k!r}")
    if n_samples < 1:
        raise DomainError(f"n_samples must be >= 1, got {n_samples!r}")
    d = problem.space.distance
    leq = problem.space.leq
    witnesses: list[Witness] = []
    tested = 0
    quads = list(problem.witness_seeds)
    for index, quad in enumerate(
        quads + list(_sampled_quadruples(problem, n_samples, seed))
    ):
        x, y, u, v = quad
        if not (leq(u, x) and leq(y, v)):
            continue
        tested += 1
        lhs = d(problem.f(x, y), problem.f(u, v))
        rhs = 0.5 * k * (d(x, u) + d(y, v))
        if lhs > rhs + slack:
            witnesses.append(Witness(inputs=quad, lhs=lhs, rhs=rhs, index=index))
    return finish_report("bl_contraction", tested, witnesses, slack)


def check_commutativity(
    problem: CoupledProblem,
    n_samples: int,
    seed: int = 42,
    tol: float = IDENTITY_TOL,
) -> CheckReport:
    """Sample d(g(f(x,y)), f(g(x), g(y))) <= tol."""
    if n_samples < 1:
        raise DomainError(f"n_samples must be >= 1, got {n_samples!r}")
    rng = random.Random(seed)
    box = problem.space.box
    d = problem.space.distance
    witnesses: list[Witness] = []
    for index in range(n_samples):
        x = box.sample(rng)
        y = box.sample(rng)
        dev = d(problem.g(problem.f(x, y)), problem.f(problem.g(x), problem.g(y)))
        if dev > tol:
            witnesses.append(Witness(inputs=(x, y), lhs=dev, rhs=tol, index=index))
    return finish_report("commutativity", n_samples, witnesses, tol)


def check_range_inclusion(
    problem: CoupledProblem,
    n_samples: int,
    seed: int = 42,
    tol: float = IDENTITY_TOL,
) -> CheckReport:
    """Sample that the section lands operator values inside g's range:
    d(g(g_section(f(x,y))), f(x,y)) <= tol."""
    if n_samples < 1:
        raise DomainError(f"n_samples must be >= 1, got {n_samples!r}")
    rng = random.Random(seed)
    box = problem.space.box
    d = problem.space.distance
    witnesses: list[Witness] = []
    for index in range(n_samples):
        x = box.sample(rng)
        y = box.sample(rng)
        w = problem.f(x, y)
        dev = d(problem.g(problem.g_section(w)), w)
        if dev > tol:
            witnesses.append(Witness(inputs=(x, y), lhs=dev, rhs=tol, index=index))
    return finish_report("range_inclusion", n_samples, witnesses, tol)


def search_bridge(
    problem: CoupledProblem,
    a: Pair,
    b: Pair,
    n_samples: int,
    seed: int = 42,
) -> Pair | None:
    """Best-effort search for a bridging pair.

    Samples candidate pairs from the box and returns the first whose image
    under the product operator is comparable to the images of both a and b;
    None when the budget is exhausted (including a zero budget).
    """
    rng = random.Random(seed)
    box = problem.space.box
    compare = problem.space.pair_compare
    image_a = lift(problem, a)
    image_b = lift(problem, b)
    for _ in range(n_samples):
        cand = Pair(box.sample(rng), box.sample(rng))
        image = lift(problem, cand)
        if (compare(image, image_a) is not Comparison.INCOMPARABLE
                and compare(image, image_b) is not Comparison.INCOMPARABLE):
            return cand
    return None


def standard_checks(
    problem: CoupledProblem,
    n_samples: int,
    seed: int = 42,
    grid: Sequence[float] = DEFAULT_GRID,
) -> list[CheckReport]:
    """The full certification battery in a fixed report order."""
    from .comparator import check_comparator_class

    return [
        check_comparator_class(problem.comparator, grid),
        check_mixed_g_monotone(problem, n_samples, seed),
        check_commutativity(problem, n_samples, seed),
        check_range_inclusion(problem, n_samples, seed),
        check_sum_contraction(problem, n_samples, seed),
        check_single_contraction(problem, n_samples, seed),
    ]
