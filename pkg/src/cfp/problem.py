"""Problem bundle: the operator pair, a section, a comparator, and a start.

A coupled problem packages everything the solver and the certifier need: a
bivariate operator ``f``, a coincidence map ``g`` with a chosen right inverse
``g_section`` (so the implicit update g(x') = f(x, y) becomes an explicit
deterministic step), a comparator, the ambient space, and the initial pair.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

from .comparator import Comparator
from .space import Pair, Point, Space

PointMap = Callable[[Point], Point]
PointMap2 = Callable[[Point, Point], Point]

Quadruple = tuple[Point, Point, Point, Point]  # (x, y, u, v)


class InitialOrientation(enum.Enum):
    """Which displayed start condition the initial pair satisfies.

    ASCENDING:  g(x0) <= f(x0, y0) and g(y0) >= f(y0, x0); the iteration's
                g-images then climb in the first slot and descend in the
                second.  DESCENDING is the mirrored condition.  NEITHER runs
                are legal but uncertified.
    """

    ASCENDING = "Ascending"
    DESCENDING = "Descending"
    BOTH = "Both"
    NEITHER = "Neither"


@dataclass(frozen=True)
class CoupledProblem:
    space: Space
    f: PointMap2
    g: PointMap
    g_section: PointMap
    comparator: Comparator
    initial: Pair
    #: tolerance for d(g(g_section(t)), t) when the section is exercised
    section_tol: float = 1e-10
    #: quadruples force-included by every contraction check (canonical
    #: counterexamples shipped with catalog problems)
    witness_seeds: tuple[Quadruple, ...] = ()
    name: str = ""


def residual(problem: CoupledProblem, pt: Pair) -> float:
    """Coincidence defect d(g(x), f(x,y)) + d(g(y), f(y,x)); zero at a solution."""
    d = problem.space.distance
    return d(problem.g(pt.x), problem.f(pt.x, pt.y)) + d(
        problem.g(pt.y), problem.f(pt.y, pt.x)
    )


def check_initial(problem: CoupledProblem) -> InitialOrientation:
    """Classify the initial pair against the two admissible start conditions."""
    x0, y0 = problem.initial.x, problem.initial.y
    gx0, gy0 = problem.g(x0), problem.g(y0)
    fx0, fy0 = problem.f(x0, y0), problem.f(y0, x0)
    leq = problem.space.leq
    ascending = leq(gx0, fx0) and leq(fy0, gy0)
    descending = leq(fx0, gx0) and leq(gy0, fy0)
    if ascending and descending:
        return InitialOrientation.BOTH
    if ascending:
        return InitialOrientation.ASCENDING
    if descending:
        return InitialOrientation.DESCENDING
    return InitialOrientation.NEITHER
