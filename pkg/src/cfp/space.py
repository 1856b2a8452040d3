"""Ambient space: R^n with a metric, a componentwise order, and a sampling box.

Points are plain tuples of floats.  The product space of pairs carries the
half-sum metric and the mixed order ((u, v) <= (x, y) iff x >= u and y <= v
componentwise), under which the coupled operator becomes monotone.

Two facts about these built-in spaces are relied on but documented rather
than tested, because they hold by construction for R^n with the
componentwise order and either shipped metric: the pair space is complete,
and the limit of a componentwise monotone convergent sequence bounds the
whole sequence (so order relationships survive passage to the limit).
Extensions beyond R^n must supply both properties themselves.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CfpError, DimensionMismatch

Point = tuple[float, ...]


def as_point(values: Iterable[float], dim: int | None = None) -> Point:
    """Coerce to a point tuple, rejecting NaN/inf and wrong dimensions."""
    pt = tuple(float(v) for v in values)
    if dim is not None and len(pt) != dim:
        raise DimensionMismatch(dim, len(pt))
    if not all(math.isfinite(c) for c in pt):
        raise CfpError(f"non-finite coordinate in point {pt!r}")
    return pt


class MetricKind(enum.Enum):
    L1 = "l1"
    LINF = "linf"


class Comparison(enum.Enum):
    LESS_EQ = "LessEq"
    GREATER_EQ = "GreaterEq"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class Pair:
    """A point of the product space: an ordered pair of same-dimension points."""

    x: Point
    y: Point

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise DimensionMismatch(len(self.x), len(self.y))

    @property
    def dim(self) -> int:
        return len(self.x)

    def swapped(self) -> "Pair":
        return Pair(self.y, self.x)


def pair(x, y) -> Pair:
    """Build a Pair from scalars, or from coordinate sequences."""
    xs = (float(x),) if isinstance(x, (int, float)) else as_point(x)
    ys = (float(y),) if isinstance(y, (int, float)) else as_point(y)
    return Pair(xs, ys)


@dataclass(frozen=True)
class Box:
    """Axis-aligned sampling box with per-coordinate bounds."""

    lo: Point
    hi: Point

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise DimensionMismatch(len(self.lo), len(self.hi))
        for a, b in zip(self.lo, self.hi):
            if not (a <= b):
                raise CfpError(f"empty box: lo {self.lo!r} not <= hi {self.hi!r}")

    def sample(self, rng: random.Random) -> Point:
        return tuple(rng.uniform(a, b) for a, b in zip(self.lo, self.hi))

    def sample_above(self, rng: random.Random, base: Point) -> Point:
        """Sample a point >= base componentwise, clipped to the box."""
        return tuple(
            min(c + rng.uniform(0.0, b - a), b)
            for c, a, b in zip(base, self.lo, self.hi)
        )


@dataclass(frozen=True)
class Space:
    """R^n with a metric kind, the componentwise order, and a sampler."""

    dimension: int
    box: Box
    metric: MetricKind = MetricKind.L1
    samples: int = 10_000

    def __post_init__(self):
        if self.dimension < 1:
            raise CfpError(f"dimension must be >= 1, got {self.dimension}")
        if len(self.box.lo) != self.dimension:
            raise DimensionMismatch(self.dimension, len(self.box.lo))

    def _check_dim(self, p: Sequence[float]):
        if len(p) != self.dimension:
            raise DimensionMismatch(self.dimension, len(p))

    def distance(self, a: Point, b: Point) -> float:
        self._check_dim(a)
        self._check_dim(b)
        if self.metric is MetricKind.L1:
            return sum(abs(u - v) for u, v in zip(a, b))
        return max(abs(u - v) for u, v in zip(a, b))

    def leq(self, a: Point, b: Point) -> bool:
        """Componentwise a <= b."""
        self._check_dim(a)
        self._check_dim(b)
        return all(u <= v for u, v in zip(a, b))

    def pair_distance(self, a: Pair, b: Pair) -> float:
        """Half-sum product metric on pairs."""
        return 0.5 * (self.distance(a.x, b.x) + self.distance(a.y, b.y))

    def pair_compare(self, a: Pair, b: Pair) -> Comparison:
        """Mixed product order: a <= b iff b.x >= a.x and b.y <= a.y."""
        le = self.leq(a.x, b.x) and self.leq(b.y, a.y)
        ge = self.leq(b.x, a.x) and self.leq(a.y, b.y)
        if le and ge:
            return Comparison.EQUAL
        if le:
            return Comparison.LESS_EQ
        if ge:
            return Comparison.GREATER_EQ
        return Comparison.INCOMPARABLE

    def comparable(self, a: Pair, b: Pair) -> bool:
        return self.pair_compare(a, b) is not Comparison.INCOMPARABLE


def interval_space(
    lo: float,
    hi: float,
    dimension: int = 1,
    metric: MetricKind = MetricKind.L1,
    samples: int = 10_000,
) -> Space:
    """Space over the cube [lo, hi]^dimension."""
    return Space(
        dimension=dimension,
        box=Box((lo,) * dimension, (hi,) * dimension),
        metric=metric,
        samples=samples,
    )
