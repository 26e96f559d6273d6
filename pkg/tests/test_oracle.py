import numpy as np
import pytest

from piezoscanner import oracle, scanner
from piezoscanner.oracle import (
    BeamProblem,
    convergence_orders,
    convergence_study,
    profile_error,
    solve_fd,
    solve_fd_finite_rigidity,
)

# Scanner A loading of the half-model (see test_scanner.py for provenance).
A = 150e-6
SPAN = 1000e-6
FORCE = -4.395282352941177e-05
RIGIDITY = 9.29782828606914e-11


def problem_a(nodes=2001) -> BeamProblem:
    return BeamProblem(span=SPAN, a=A, force=FORCE, rigidity=RIGIDITY, nodes=nodes)


class TestProblemValidation:
    def test_even_node_count_rejected(self):
        with pytest.raises(ValueError):
            BeamProblem(span=SPAN, a=A, force=FORCE, rigidity=RIGIDITY, nodes=100)

    def test_too_few_nodes_rejected(self):
        with pytest.raises(ValueError):
            BeamProblem(span=SPAN, a=A, force=FORCE, rigidity=RIGIDITY, nodes=9)

    def test_junction_outside_span_rejected(self):
        with pytest.raises(ValueError):
            BeamProblem(span=SPAN, a=SPAN, force=FORCE, rigidity=RIGIDITY)


class TestSolveFd:
    def test_zero_force(self):
        solution = solve_fd(BeamProblem(span=SPAN, a=A, force=0.0, rigidity=RIGIDITY))
        assert solution.reaction == 0.0
        assert np.all(solution.deflection == 0.0)

    def test_boundary_conditions(self):
        solution = solve_fd(problem_a())
        scale = np.max(np.abs(solution.deflection))
        assert abs(solution.deflection[0]) <= 1e-10 * scale
        assert abs(solution.deflection[-1]) <= 1e-10 * scale

    def test_midspan_reaction(self):
        solution = solve_fd(BeamProblem(span=SPAN, a=SPAN / 2, force=FORCE, rigidity=RIGIDITY))
        assert solution.reaction == pytest.approx(-5 * FORCE / 14, rel=1e-4)

    def test_scanner_a_reaction(self):
        solution = solve_fd(problem_a())
        expected = scanner.reaction(FORCE, solution.a_snapped, SPAN)
        assert solution.reaction == pytest.approx(expected, rel=5e-3)

    def test_scanner_a_profile(self):
        problem = problem_a()
        assert profile_error(problem, solve_fd(problem)) <= 5e-3

    def test_tilt_matches_closed_form(self):
        solution = solve_fd(problem_a())
        expected = abs(scanner.tilt(FORCE, solution.a_snapped, SPAN, RIGIDITY))
        assert solution.tilt() == pytest.approx(expected, rel=5e-3)


class TestConvergence:
    def test_errors_strictly_decrease(self):
        errors = convergence_study(problem_a(), [101, 201, 401])
        assert errors[0] > errors[1] > errors[2]

    def test_order_at_least_second(self):
        counts = [101, 201, 401]
        errors = convergence_study(problem_a(), counts)
        assert min(convergence_orders(counts, errors)) >= 1.8

    def test_refinement_ratio_near_four(self):
        errors = convergence_study(problem_a(), [201, 401])
        ratio = errors[0] / errors[1]
        assert 3.0 <= ratio <= 5.0

    def test_zero_force_all_zero(self):
        problem = BeamProblem(span=SPAN, a=A, force=0.0, rigidity=RIGIDITY)
        assert convergence_study(problem, [101, 201]) == [0.0, 0.0]


class TestFiniteRigidity:
    def test_tilt_insensitive_to_rigid_idealization(self):
        exact = solve_fd(problem_a()).tilt()
        finite = solve_fd_finite_rigidity(problem_a(), rigidity_ratio=1e6).tilt()
        assert abs(finite - exact) / exact < 1e-4
