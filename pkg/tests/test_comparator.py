"""Comparator kinds and the class membership check."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfp.comparator import Comparator, check_comparator_class
from cfp.errors import DomainError
from cfp.report import Verdict


class TestEvaluation:
    def test_linear(self):
        assert Comparator.linear(0.9)(1.0) == 0.9

    def test_zero_is_fixed_for_every_kind(self):
        for comp in (Comparator.linear(0.9), Comparator.rational(),
                     Comparator.expression("t/2"), Comparator.expression("t")):
            assert comp(0.0) == 0.0

    def test_rational(self):
        assert Comparator.rational()(2.0) == pytest.approx(2.0 / 3.0, abs=1e-15)

    def test_negative_argument_rejected(self):
        with pytest.raises(DomainError):
            Comparator.linear(0.5)(-0.1)

    def test_linear_gain_bounds_enforced(self):
        with pytest.raises(DomainError):
            Comparator.linear(1.0)
        with pytest.raises(DomainError):
            Comparator.linear(-0.1)
        Comparator.linear(0.0)
        Comparator.linear(0.999999)

    def test_expression_kind(self):
        comp = Comparator.expression("3*t/4")
        assert comp(0.5) == 0.375


class TestClassCheck:
    def test_linear_passes(self):
        report = check_comparator_class(Comparator.linear(0.9), (0.1, 1.0, 10.0))
        assert report.verdict is Verdict.PASS_SAMPLED
        assert report.witnesses == []

    def test_identity_fails_pointwise(self):
        report = check_comparator_class(Comparator.expression("t"), (1.0,))
        assert report.verdict is Verdict.FAIL
        witness = report.witnesses[0]
        assert witness.inputs == (1.0,)
        assert witness.lhs == 1.0  # value at t
        assert witness.rhs == 1.0  # the bound t itself

    def test_three_quarters_passes(self):
        # as closed-form linear and as a sampled expression
        for comp in (Comparator.linear(0.75), Comparator.expression("3*t/4")):
            report = check_comparator_class(comp, (0.5,))
            assert report.verdict is Verdict.PASS_SAMPLED

    def test_rational_passes(self):
        report = check_comparator_class(Comparator.rational(), (1e-3, 1.0, 1e3))
        assert report.verdict is Verdict.PASS_SAMPLED

    def test_sampled_note_for_expressions(self):
        report = check_comparator_class(Comparator.expression("t/2"), (1.0,))
        assert "sampled" in report.note

    def test_grid_validation(self):
        with pytest.raises(DomainError):
            check_comparator_class(Comparator.linear(0.5), ())
        with pytest.raises(DomainError):
            check_comparator_class(Comparator.linear(0.5), (0.0, 1.0))

    def test_steep_ramp_right_of_grid_point_caught_by_stencil(self):
        # fine at t=1 itself (0.5 < 1) but already above 1 at t = 1 + 1e-3;
        # only the right-approach samples can see this
        comp = Comparator.expression("max(t/2, 2000*(t - 1))")
        report = check_comparator_class(comp, (1.0,))
        assert report.verdict is Verdict.FAIL
        assert any(w.note.startswith("right-limit") for w in report.witnesses)


@given(st.floats(min_value=0.0, max_value=1.0, exclude_max=True),
       st.lists(st.floats(min_value=1e-6, max_value=1e6), min_size=1, max_size=6))
@settings(max_examples=300)
def test_every_linear_gain_passes_on_any_positive_grid(k, grid):
    report = check_comparator_class(Comparator.linear(k), grid)
    assert report.verdict is Verdict.PASS_SAMPLED
