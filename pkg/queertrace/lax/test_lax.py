# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

from fractions import Fraction

import numpy as np
import pytest

from queertrace.algebra.constructors import build_matrix_algebra, build_matrix_superalgebra
from queertrace.exceptions import AlgebraInputError, AlgebraMismatchError, DegenerateFormError, LaxBlowUpError
from queertrace.lax.carrier import GL, GLSUPER, Q, QTRACE, SUPERTRACE, TRACE, LaxCarrier
from queertrace.lax.flow import PRule, conservation_report, lax_flow, measure_order
from queertrace.lax.poisson import (
	Linear,
	PowTrace,
	form_is_nondegenerate,
	gradient_check,
	gradient_convergence,
	involution_check,
	poisson_bracket,
)
from queertrace.queerify.queer import QPair, lie_queerify

gl3 = LaxCarrier(GL, 3)
q2 = LaxCarrier(Q, 2)
gl12 = LaxCarrier(GLSUPER, 2, 1)


def test_carriers_from_algebras():
	assert LaxCarrier.from_algebra(build_matrix_algebra(3)) == gl3
	assert LaxCarrier.from_algebra(build_matrix_superalgebra(1, 2)) == gl12
	assert LaxCarrier.from_algebra(lie_queerify(build_matrix_algebra(2))) == q2
	assert gl12.name == "gl(1|2)"
	assert q2.size == 4


def test_carrier_validation():
	with pytest.raises(AlgebraInputError):
		LaxCarrier("sl", 2)
	with pytest.raises(AlgebraInputError):
		LaxCarrier(GLSUPER, 2, 0)


def test_queer_pairs_become_block_matrices():
	mat2 = build_matrix_algebra(2)
	pair = QPair(mat2.basis_element("E12"), mat2.element({"E11": 2}))
	state = q2.to_array(pair)
	assert state.shape == (4, 4)
	assert q2.contains(state)
	assert q2.functional(QTRACE, state) == 2
	with pytest.raises(AlgebraMismatchError):
		gl3.to_array(pair)


def test_functionals():
	state = np.diag([1.0, 2.0, 3.0])
	assert gl12.functional(SUPERTRACE, state) == 1.0 - 5.0
	assert gl12.functional(TRACE, state) == 6.0
	with pytest.raises(AlgebraMismatchError):
		gl3.functional(QTRACE, state)


def test_skew_rule_keeps_q_states_in_the_carrier():
	state = q2.random_state(7)
	p = PRule()(q2, state)
	assert q2.contains(p)
	assert np.allclose(p, -p.T)


def test_trace_powers_are_conserved_on_gl3():
	trajectory = lax_flow(gl3, gl3.random_state(42), PRule(), h=1e-3, t_end=1.0)
	report = conservation_report(trajectory, TRACE, [1, 2, 3])
	assert report.max_drift() < 1e-8
	assert len(trajectory) == 1001
	assert trajectory.t_end == pytest.approx(1.0)


def test_queertrace_powers_are_conserved_on_q2():
	trajectory = lax_flow(q2, q2.random_state(42), PRule(), h=1e-3, t_end=1.0)
	report = conservation_report(trajectory, QTRACE, [1, 2, 3])
	assert report.max_drift() < 1e-8
	assert all(q2.contains(state, tol=1e-9) for state in trajectory.states[::100])


def test_q_states_carry_both_blocks_through_the_flow():
	trajectory = lax_flow(q2, q2.random_state(42), PRule(), h=1e-2, t_end=0.5)
	for state in (trajectory.states[0], trajectory.states[-1]):
		x, y = q2.blocks(state)
		assert np.abs(x).max() > 1e-3
		assert np.abs(y).max() > 1e-3
		assert q2.contains(state, tol=1e-9)
	assert q2.functional(QTRACE, trajectory.states[0]) == pytest.approx(np.trace(q2.blocks(trajectory.states[0])[1]))


def test_supertrace_powers_are_conserved_on_gl_super():
	trajectory = lax_flow(gl12, gl12.random_state(3), PRule(), h=1e-3, t_end=0.5)
	assert conservation_report(trajectory, SUPERTRACE, [1, 2, 3]).max_drift() < 1e-8


def test_rk4_order():
	result = measure_order(gl3, gl3.random_state(42))
	assert 12 <= result["ratio"] <= 20


def test_zero_rule_keeps_the_state():
	state = gl3.random_state(1)
	trajectory = lax_flow(gl3, state, PRule("zero"), h=0.1, t_end=0.5)
	assert np.array_equal(trajectory.states[-1], state)


def test_fixed_rule_shape_is_checked():
	with pytest.raises(AlgebraInputError):
		lax_flow(gl3, gl3.random_state(1), PRule("fixed", np.eye(2)), h=0.1, t_end=0.1)
	with pytest.raises(AlgebraInputError):
		PRule("fixed")


def test_blow_up_is_reported():
	state = 10 * np.ones((2, 2)) + np.diag([1.0, -1.0])
	rule = PRule("fixed", np.array([[0.0, 1e200], [0.0, 0.0]]))
	with pytest.raises(LaxBlowUpError) as info:
		lax_flow(LaxCarrier(GL, 2), state, rule, h=1.0, t_end=50.0)
	assert info.value.step >= 1


def test_csv_time_series(tmp_path):
	trajectory = lax_flow(gl3, gl3.random_state(2), PRule(), h=0.01, t_end=0.1)
	report = conservation_report(trajectory, TRACE, [1, 2])
	path = tmp_path / "drift.csv"
	report.write_csv(path)
	lines = path.read_text().splitlines()
	assert lines[0] == "t,k=1,k=2"
	assert len(lines) == 12


def test_form_degeneracy():
	assert form_is_nondegenerate(gl3)
	assert form_is_nondegenerate(gl12, SUPERTRACE)
	assert not form_is_nondegenerate(q2)


def test_poisson_bracket_on_a_degenerate_form_fails():
	state = q2.random_state(1)
	with pytest.raises(DegenerateFormError):
		poisson_bracket(PowTrace(2), PowTrace(3), state, q2)


def test_linear_functions_bracket_like_the_lie_algebra():
	rng = np.random.default_rng(0)
	X = gl3.random_rational_state(rng)
	M, N = gl3.random_rational_state(rng), gl3.random_rational_state(rng)
	value = poisson_bracket(Linear(M), Linear(N), X, gl3)
	assert value == gl3.pairing(X, M @ N - N @ M)
	assert isinstance(value, Fraction)


def test_power_traces_are_in_involution():
	report = involution_check(2, 3, samples=25, seed=42)
	assert report["passed"]
	assert report["allZero"]
	assert report["control"]["nonzeroSamples"] > 0


def test_gradients():
	X = np.random.default_rng(42).standard_normal((3, 3))
	assert gradient_check(PowTrace(2), X) < 1e-8
	assert gradient_check(PowTrace(3), X) < 1e-6
	convergence = gradient_convergence(PowTrace(3), X)
	assert 3.5 <= convergence["ratio"] <= 4.5
