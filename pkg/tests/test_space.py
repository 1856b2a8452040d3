"""Metric axioms, the product order laws, and the pair-space operations."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfp.errors import CfpError, DimensionMismatch
from cfp.space import (
    Box,
    Comparison,
    MetricKind,
    Pair,
    Space,
    as_point,
    interval_space,
    pair,
)


@pytest.fixture
def line():
    return interval_space(-10.0, 10.0)


class TestPairDistance:
    def test_unit_pair(self, line):
        assert line.pair_distance(pair(0, 0), pair(1, 1)) == 1.0

    def test_identity(self, line):
        rng = random.Random(7)
        for _ in range(20):
            a = pair(rng.uniform(-5, 5), rng.uniform(-5, 5))
            assert line.pair_distance(a, a) == 0.0

    def test_start_to_solution_distance(self, line):
        assert line.pair_distance(pair(-3, 3), pair(0, 0)) == 3.0

    def test_dimension_mismatch(self, line):
        with pytest.raises(DimensionMismatch):
            line.pair_distance(Pair((0.0, 0.0), (0.0, 0.0)), pair(0, 0))


class TestProductCompare:
    def test_less_eq(self, line):
        assert line.pair_compare(pair(0, 1), pair(1, 0)) is Comparison.LESS_EQ

    def test_incomparable(self, line):
        assert line.pair_compare(pair(0, 0), pair(1, 1)) is Comparison.INCOMPARABLE

    def test_equal(self, line):
        a = pair(0.5, -0.5)
        assert line.pair_compare(a, a) is Comparison.EQUAL

    def test_greater_eq(self, line):
        assert line.pair_compare(pair(1, 0), pair(0, 1)) is Comparison.GREATER_EQ


def _random_pair(rng, space):
    return Pair(space.box.sample(rng), space.box.sample(rng))


@pytest.mark.parametrize("metric", [MetricKind.L1, MetricKind.LINF])
@pytest.mark.parametrize("dim", [1, 3])
def test_metric_axioms_on_1000_random_triples(metric, dim):
    space = interval_space(-10.0, 10.0, dimension=dim, metric=metric)
    rng = random.Random(4242)
    for _ in range(1000):
        a, b, c = (_random_pair(rng, space) for _ in range(3))
        dab = space.pair_distance(a, b)
        assert dab == space.pair_distance(b, a)
        assert dab >= 0.0
        assert space.pair_distance(a, a) == 0.0
        if a != b:
            assert dab > 0.0
        assert space.pair_distance(a, c) <= dab + space.pair_distance(b, c) + 1e-12


@pytest.mark.parametrize("dim", [1, 2, 4])
def test_order_laws_on_constructed_chains(dim):
    # chains a <= b <= c are built directly so transitivity is exercised,
    # not vacuously skipped
    space = interval_space(-10.0, 10.0, dimension=dim)
    rng = random.Random(11)
    for _ in range(500):
        ax = space.box.sample(rng)
        bx = space.box.sample_above(rng, ax)
        cx = space.box.sample_above(rng, bx)
        cy = space.box.sample(rng)
        by = space.box.sample_above(rng, cy)
        ay = space.box.sample_above(rng, by)
        a, b, c = Pair(ax, ay), Pair(bx, by), Pair(cx, cy)
        # reflexive
        assert space.pair_compare(a, a) is Comparison.EQUAL
        # chain comparisons
        assert space.pair_compare(a, b) in (Comparison.LESS_EQ, Comparison.EQUAL)
        assert space.pair_compare(b, c) in (Comparison.LESS_EQ, Comparison.EQUAL)
        # transitive
        assert space.pair_compare(a, c) in (Comparison.LESS_EQ, Comparison.EQUAL)
        # antisymmetric: mutual <= forces equality
        if (space.pair_compare(a, b) is Comparison.LESS_EQ
                and space.pair_compare(b, a) is Comparison.LESS_EQ):
            assert a == b


@given(
    st.lists(st.floats(-100, 100), min_size=1, max_size=4),
    st.lists(st.floats(-100, 100), min_size=1, max_size=4),
)
@settings(max_examples=200)
def test_compare_antisymmetric_hypothesis(xs, ys):
    n = min(len(xs), len(ys))
    space = interval_space(-100.0, 100.0, dimension=n)
    a = Pair(tuple(xs[:n]), tuple(ys[:n]))
    b = Pair(tuple(ys[:n]), tuple(xs[:n]))
    ab = space.pair_compare(a, b)
    ba = space.pair_compare(b, a)
    if ab is Comparison.LESS_EQ and ba is Comparison.LESS_EQ:
        assert a == b
    if ab is Comparison.EQUAL:
        assert ba is Comparison.EQUAL


class TestConstruction:
    def test_as_point_rejects_nan(self):
        with pytest.raises(CfpError):
            as_point((float("nan"),))

    def test_as_point_rejects_inf(self):
        with pytest.raises(CfpError):
            as_point((1.0, float("inf")))

    def test_as_point_dimension(self):
        with pytest.raises(DimensionMismatch):
            as_point((1.0, 2.0), dim=3)

    def test_pair_dimension_consistency(self):
        with pytest.raises(DimensionMismatch):
            Pair((1.0,), (1.0, 2.0))

    def test_empty_box_rejected(self):
        with pytest.raises(CfpError):
            Box((1.0,), (0.0,))

    def test_sample_above_stays_in_box_and_above_base(self):
        space = interval_space(-2.0, 2.0, dimension=3)
        rng = random.Random(0)
        for _ in range(200):
            base = space.box.sample(rng)
            above = space.box.sample_above(rng, base)
            assert space.leq(base, above)
            assert space.leq(above, space.box.hi)

    def test_bad_dimension(self):
        with pytest.raises(CfpError):
            Space(dimension=0, box=Box((), ()))
