"""Problem file loading: happy paths, defaults, and diagnostics."""

import textwrap

import pytest

from cfp.errors import ProblemFileError
from cfp.problem import residual
from cfp.problemfile import load_problem_file
from cfp.solver import solve
from cfp.space import MetricKind, pair

EX2_FILE = textwrap.dedent("""\
    [problem]
    dim = 1
    F = (x - 2*y)/4
    g = 5*x/6
    g_inv = 6*t/5
    phi = linear:0.9
    x0 = -3
    y0 = 3
    box_lo = -10
    box_hi = 10

    [run]
    tol = 1e-10
    max_iter = 500
""")


@pytest.fixture
def ex2_path(tmp_path):
    path = tmp_path / "ex2.prob"
    path.write_text(EX2_FILE)
    return path


def test_file_problem_matches_catalog_solve(ex2_path, ex2):
    problem, run = load_problem_file(ex2_path)
    assert run.tol == 1e-10
    assert run.max_iter == 500
    assert run.samples == 10_000  # default
    assert run.seed == 42  # default
    file_report, _ = solve(problem, tol=run.tol, max_iter=run.max_iter)
    catalog_report, _ = solve(ex2.problem, tol=1e-10, max_iter=500)
    assert file_report.final == catalog_report.final
    assert file_report.iterations == catalog_report.iterations


def test_metric_default_and_override(tmp_path):
    text = EX2_FILE.replace("box_hi = 10", "box_hi = 10\nmetric = linf")
    path = tmp_path / "p.prob"
    path.write_text(text)
    problem, _ = load_problem_file(path)
    assert problem.space.metric is MetricKind.LINF
    path2 = tmp_path / "q.prob"
    path2.write_text(EX2_FILE)
    problem2, _ = load_problem_file(path2)
    assert problem2.space.metric is MetricKind.L1


def test_expression_comparator(tmp_path):
    text = EX2_FILE.replace("phi = linear:0.9", "phi = 9*t/10")
    path = tmp_path / "p.prob"
    path.write_text(text)
    problem, _ = load_problem_file(path)
    assert problem.comparator(1.0) == 0.9


def test_two_dimensional_problem(tmp_path):
    path = tmp_path / "vec.prob"
    path.write_text(textwrap.dedent("""\
        [problem]
        dim = 2
        F = 0.1*tanh(x1) - 0.2*tanh(y2); 0.15*tanh(x2) - 0.1*tanh(y1)
        g = x1; x2
        g_inv = t1; t2
        phi = linear:0.5
        x0 = -1, -1
        y0 = 1, 1
        box_lo = -2, -2
        box_hi = 2, 2
    """))
    problem, run = load_problem_file(path)
    assert problem.space.dimension == 2
    report, _ = solve(problem, tol=1e-11, max_iter=500)
    assert report.converged
    assert residual(problem, report.final) <= 1e-11


def test_missing_file():
    with pytest.raises(ProblemFileError, match="cannot read"):
        load_problem_file("missing.toml")


def test_missing_keys(tmp_path):
    path = tmp_path / "p.prob"
    path.write_text("[problem]\ndim = 1\nF = x\n")
    with pytest.raises(ProblemFileError, match="missing key"):
        load_problem_file(path)


def test_missing_section(tmp_path):
    path = tmp_path / "p.prob"
    path.write_text("[run]\ntol = 1e-8\n")
    with pytest.raises(ProblemFileError, match=r"\[problem\]"):
        load_problem_file(path)


def test_expression_error_carries_position(tmp_path):
    text = EX2_FILE.replace("F = (x - 2*y)/4", "F = (x - 2*y/4")
    path = tmp_path / "p.prob"
    path.write_text(text)
    with pytest.raises(ProblemFileError, match="offset"):
        load_problem_file(path)


def test_unknown_variable_rejected(tmp_path):
    text = EX2_FILE.replace("g = 5*x/6", "g = 5*z/6")
    path = tmp_path / "p.prob"
    path.write_text(text)
    with pytest.raises(ProblemFileError, match="unknown variable"):
        load_problem_file(path)


def test_dim_mismatch_in_vectors(tmp_path):
    text = EX2_FILE.replace("x0 = -3", "x0 = -3, 1")
    path = tmp_path / "p.prob"
    path.write_text(text)
    with pytest.raises(ProblemFileError, match="x0"):
        load_problem_file(path)


def test_wrong_expression_count(tmp_path):
    text = EX2_FILE.replace("dim = 1", "dim = 2").replace("x0 = -3", "x0 = -3, 3")
    path = tmp_path / "p.prob"
    path.write_text(text)
    with pytest.raises(ProblemFileError, match="expression"):
        load_problem_file(path)


def test_bad_metric(tmp_path):
    text = EX2_FILE.replace("box_hi = 10", "box_hi = 10\nmetric = l7")
    path = tmp_path / "p.prob"
    path.write_text(text)
    with pytest.raises(ProblemFileError, match="metric"):
        load_problem_file(path)


def test_bad_linear_gain(tmp_path):
    text = EX2_FILE.replace("phi = linear:0.9", "phi = linear:1.5")
    path = tmp_path / "p.prob"
    path.write_text(text)
    with pytest.raises(ProblemFileError):
        load_problem_file(path)
