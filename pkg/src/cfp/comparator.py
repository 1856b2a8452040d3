"""Comparison functions that drive the contraction, and their class check.

An admissible comparator c maps [0, inf) to [0, inf) with c(t) < t for every
t > 0 and right upper limits below t.  Built-in kinds:

    linear(k)     t -> k*t for a fixed k in [0, 1)
    rational()    t -> t / (1 + t)
    expression(e) t -> eval(e, t=t) for an expression in the variable t

All kinds return exactly 0.0 at t = 0, so a zero gap stays a fixed point of
the gap recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import expr as _expr
from .errors import DomainError
from .report import CheckReport, Witness, finish_report

#: right-approach offsets used to sample the limit condition
DEFAULT_STENCIL = (1e-3, 1e-6, 1e-9)


@dataclass(frozen=True)
class Comparator:
    kind: str  # "linear" | "rational" | "expression"
    k: float = 0.0
    source: str = ""
    ast: object = None
    #: continuity known by construction; lets the class check settle the
    #: right-limit condition from the pointwise one instead of sampling
    continuous: bool = False

    @classmethod
    def linear(cls, k: float) -> "Comparator":
        if not (0.0 <= k < 1.0):
            raise DomainError(f"linear comparator needs k in [0, 1), got {k!r}")
        return cls(kind="linear", k=float(k), continuous=True)

    @classmethod
    def rational(cls) -> "Comparator":
        return cls(kind="rational", continuous=True)

    @classmethod
    def expression(cls, source: str, continuous: bool = False) -> "Comparator":
        ast = _expr.parse(source)
        return cls(kind="expression", source=source, ast=ast, continuous=continuous)

    def __call__(self, t: float) -> float:
        if t < 0.0:
            raise DomainError(f"comparator argument must be >= 0, got {t!r}")
        if t == 0.0:
            return 0.0
        if self.kind == "linear":
            return self.k * t
        if self.kind == "rational":
            return t / (1.0 + t)
        return _expr.evaluate(self.ast, {"t": t})

    def describe(self) -> str:
        if self.kind == "linear":
            return f"linear(k={self.k!r})"
        if self.kind == "rational":
            return "rational t/(1+t)"
        return f"expression({self.source!r})"


def check_comparator_class(
    comparator: Comparator,
    grid: Sequence[float],
    slack: float = 0.0,
    stencil: Sequence[float] = DEFAULT_STENCIL,
) -> CheckReport:
    """Check class membership on a grid of positive arguments.

    The pointwise condition c(t) < t is checked exactly at every grid point.
    The right-limit condition is settled by continuity for the closed-form
    kinds; for expression comparators it is sampled at t + eps for each
    stencil offset, requiring c(t + eps) < t - slack.  The sampled verdict
    is evidence, not proof, and the report says so.
    """
    if not grid:
        raise DomainError("grid must be nonempty")
    if any(t <= 0.0 for t in grid):
        raise DomainError("grid entries must be > 0")

    witnesses: list[Witness] = []
    tested = 0
    for idx, t in enumerate(grid):
        tested += 1
        value = comparator(t)
        if not value < t:
            witnesses.append(Witness(inputs=(t,), lhs=value, rhs=t, index=idx,
                                     note="pointwise c(t) < t violated"))
            continue
        if not comparator.continuous:
            for eps in stencil:
                approach = comparator(t + eps)
                if not approach < t - slack:
                    witnesses.append(Witness(
                        inputs=(t, eps), lhs=approach, rhs=t - slack, index=idx,
                        note=f"right-limit sample at t + {eps}"))
    note = (
        "limit condition follows from continuity"
        if comparator.continuous
        else "limit condition sampled, not proven"
    )
    return finish_report("comparator_class", tested, witnesses, slack, note)
