"""Coupled fixed point / coincidence point iteration with certification.

The package solves coupled problems g(x) = f(x, y), g(y) = f(y, x) by Picard
iteration on the pair space under the half-sum metric, and certifies (by
deterministic sampling) every hypothesis the convergence argument needs:
mixed monotonicity, the contraction conditions, commutativity of f and g,
range inclusion, start-pair admissibility, and comparator class membership.
"""

from .comparator import Comparator, check_comparator_class
from .errors import (
    CfpError,
    ComparabilityError,
    DimensionMismatch,
    DomainError,
    EvalError,
    ParseError,
    ProblemFileError,
    SectionRangeError,
    UnknownProblemError,
)
from .library import CatalogEntry, get, ids
from .problem import CoupledProblem, InitialOrientation, check_initial, residual
from .problemfile import RunSettings, load_problem_file
from .report import CheckReport, Verdict, Witness
from .solver import (
    IterationTrace,
    SolveReport,
    StopReason,
    TraceStep,
    bridge_uniqueness,
    delta_contraction_audit,
    iterate_once,
    lift,
    solve,
)
from .space import (
    Box,
    Comparison,
    MetricKind,
    Pair,
    Point,
    Space,
    as_point,
    interval_space,
    pair,
)
from .verifier import (
    check_bl_contraction,
    check_commutativity,
    check_mixed_g_monotone,
    check_range_inclusion,
    check_single_contraction,
    check_sum_contraction,
    search_bridge,
    standard_checks,
)

__version__ = "0.1.0"

__all__ = [
    "Box",
    "CatalogEntry",
    "CfpError",
    "CheckReport",
    "Comparator",
    "ComparabilityError",
    "Comparison",
    "CoupledProblem",
    "DimensionMismatch",
    "DomainError",
    "EvalError",
    "InitialOrientation",
    "IterationTrace",
    "MetricKind",
    "Pair",
    "ParseError",
    "Point",
    "ProblemFileError",
    "RunSettings",
    "SectionRangeError",
    "SolveReport",
    "Space",
    "StopReason",
    "TraceStep",
    "UnknownProblemError",
    "Verdict",
    "Witness",
    "as_point",
    "bridge_uniqueness",
    "check_bl_contraction",
    "check_commutativity",
    "check_comparator_class",
    "check_initial",
    "check_mixed_g_monotone",
    "check_range_inclusion",
    "check_single_contraction",
    "check_sum_contraction",
    "delta_contraction_audit",
    "get",
    "ids",
    "interval_space",
    "iterate_once",
    "lift",
    "load_problem_file",
    "pair",
    "residual",
    "search_bridge",
    "solve",
    "standard_checks",
]
