"""Catalog contents and entry-level certification invariants."""

import pytest

from cfp import library
from cfp.errors import UnknownProblemError
from cfp.problem import residual
from cfp.report import Verdict
from cfp.solver import iterate_once
from cfp.space import pair
from cfp.verifier import (
    check_commutativity,
    check_mixed_g_monotone,
    check_range_inclusion,
    check_sum_contraction,
)

ALL_IDS = ("berinde-ex2", "bl-linear", "vec-monotone-n")


def test_known_solutions():
    assert library.get("berinde-ex2").known_solution == pair(0, 0)
    assert library.get("bl-linear").known_solution == pair(0, 0)


def test_unknown_id():
    with pytest.raises(UnknownProblemError, match="nope"):
        library.get("nope")


def test_ids_listing():
    listed = library.ids()
    for problem_id in ALL_IDS:
        assert problem_id in listed


def test_vec_alias_points_at_same_instance():
    a = library.get("vec-monotone-n")
    b = library.get("vec-monotone-5")
    assert a.known_solution == b.known_solution
    assert a.problem.space == b.problem.space


@pytest.mark.parametrize("problem_id", ALL_IDS)
def test_every_entry_passes_its_certification_battery(problem_id):
    problem = library.get(problem_id).problem
    for check in (check_mixed_g_monotone, check_commutativity,
                  check_range_inclusion, check_sum_contraction):
        report = check(problem, 2000)
        assert report.verdict is Verdict.PASS_SAMPLED, (problem_id, report.summary())


@pytest.mark.parametrize("problem_id", ALL_IDS)
def test_known_solutions_are_certified_and_stationary(problem_id):
    entry = library.get(problem_id)
    assert entry.known_solution is not None
    assert residual(entry.problem, entry.known_solution) <= 1e-12
    stepped = iterate_once(entry.problem, entry.known_solution)
    assert entry.problem.space.pair_distance(stepped, entry.known_solution) <= 1e-12
