# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from queertrace.exceptions import InhomogeneousElementError, PreconditionError, TruncationError
from queertrace.psido.evidence import truncated_trace_table
from queertrace.psido.laurent import LaurentPoly, gen_binomial
from queertrace.psido.operator import (
	PsiOp,
	adler_trace,
	adler_vanishing_suite,
	identity_psi,
	psi_commutator,
	psi_mul,
	psi_res,
	psi_to_weyl,
	random_psi,
	weyl_to_psi,
)
from queertrace.psido.super import (
	CANDIDATES,
	SuperFunction,
	SuperPsiOp,
	calibrate,
	identity_spsi,
	mr_supertrace,
	mr_vanishing_suite,
	spsi_associativity_suite,
	spsi_mul,
	spsi_res,
	spsi_supercommutator,
	super_D_action,
)
from queertrace.weyl.operator import WeylOp, weyl_mul

FLOOR = -8


def x_pow(e, floor=FLOOR):
	return PsiOp.x(e, floor)


def D(k=1, floor=FLOOR):
	return PsiOp.D(k, floor)


@settings(deadline=None, max_examples=200)
@given(st.integers(-6, 6), st.integers(0, 6))
def test_pascal_rule_for_generalized_binomials(n, k):
	assert gen_binomial(n, k) + gen_binomial(n, k + 1) == gen_binomial(n + 1, k + 1)


def test_generalized_binomial_values():
	assert gen_binomial(-1, 3) == -1
	assert gen_binomial(-2, 2) == 3
	assert gen_binomial(5, 0) == 1


def test_laurent_derivative():
	f = LaurentPoly({-1: 1, 2: 3})
	assert f.derivative() == LaurentPoly({-2: -1, 1: 6})
	assert LaurentPoly.constant(4).derivative() == LaurentPoly()


def test_leibniz_products():
	assert psi_mul(D(), x_pow(1), FLOOR) == psi_mul(x_pow(1), D(), FLOOR) + identity_psi(FLOOR)
	expected = PsiOp({-1: LaurentPoly.monomial(1), -2: LaurentPoly.constant(-1)}, FLOOR)
	assert psi_mul(D(-1), x_pow(1), FLOOR) == expected
	assert psi_mul(D(), D(-1), FLOOR) == identity_psi(FLOOR)
	assert psi_mul(D(-1), D(), FLOOR) == identity_psi(FLOOR)


def test_inverse_against_a_laurent_coefficient_is_an_infinite_series():
	product = psi_mul(D(-1), x_pow(-1), -5)
	# D^-1 x^-1 = sum_k (-1)^k (x^-1)^{(k)} D^{-1-k}, and (x^-1)^{(k)} = (-1)^k k! x^{-1-k}
	assert product.coefficient(-1) == LaurentPoly.monomial(-1)
	assert product.coefficient(-3) == LaurentPoly.monomial(-3, 2)
	assert product.coefficient(-5) == LaurentPoly.monomial(-5, 24)
	assert not product.exact


def test_truncation_errors():
	with pytest.raises(TruncationError):
		psi_res(PsiOp.D(1, floor=0))
	with pytest.raises(TruncationError):
		D().coefficient(FLOOR - 1)
	with pytest.raises(TruncationError):
		psi_mul(D(-3), D(-3), -2)


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 2**32 - 1))
def test_product_is_associative_to_the_floor(seed):
	rng = np.random.default_rng(seed)
	p, q, r = (random_psi(rng, orders=(-2, 2), degrees=(-2, 2), floor=-12) for _ in range(3))
	left = psi_mul(psi_mul(p, q, -10), r, -10)
	right = psi_mul(p, psi_mul(q, r, -10), -10)
	for order in range(-4, 7):
		assert left.terms.get(order, LaurentPoly()) == right.terms.get(order, LaurentPoly())


def test_adler_trace_witness():
	assert adler_trace(psi_mul(x_pow(-1), D(-1), FLOOR)) == 1
	assert adler_trace(psi_mul(D(-1), x_pow(-1), FLOOR)) == 1
	assert adler_trace(psi_mul(x_pow(-2), D(-1), FLOOR)) == 0


def test_adler_trace_vanishes_on_commutators():
	report = adler_vanishing_suite(trials=100, seed=42)
	assert report["passed"], report["counterexample"]
	assert report["witness"] == "1"


def test_residue_of_a_commutator_is_a_derivative():
	p = psi_mul(x_pow(2), D(), FLOOR)
	q = psi_mul(x_pow(-1), D(-2), FLOOR)
	res = psi_res(psi_commutator(p, q, -4))
	assert res.coefficient(-1) == 0


def test_weyl_embedding_is_multiplicative():
	p = WeylOp.monomial((2,), (1,)) + WeylOp.constant(3)
	q = WeylOp.monomial((1,), (2,), -1)
	assert weyl_to_psi(weyl_mul(p, q), FLOOR) == psi_mul(weyl_to_psi(p, FLOOR), weyl_to_psi(q, FLOOR), FLOOR)
	assert psi_to_weyl(weyl_to_psi(p, FLOOR)) == p


# N=1 super calculus


def sfn(even=None, odd=None, floor=FLOOR):
	return SuperPsiOp.function(SuperFunction(even, odd), floor)


def SD(k=1, floor=FLOOR):
	return SuperPsiOp.D(k, floor)


xi = sfn(odd=LaurentPoly.constant(1))
sx = sfn(LaurentPoly.monomial(1))
sone = identity_spsi(FLOOR)


def test_superfunction_xi_squares_to_zero():
	assert not SuperFunction.xi() * SuperFunction.xi()
	assert SuperFunction.xi().sigma() == -SuperFunction.xi()


def test_D_xi():
	assert spsi_mul(SD(), xi, FLOOR) == sone - spsi_mul(xi, SD(), FLOOR)


def test_D_x():
	assert spsi_mul(SD(), sx, FLOOR) == xi + spsi_mul(sx, SD(), FLOOR)


def test_D_squared_x():
	assert spsi_mul(SD(2), sx, FLOOR) == spsi_mul(sx, SD(2), FLOOR) + sone


def test_D_squares_to_the_derivative():
	assert spsi_mul(SD(), SD(), FLOOR) == SD(2)


def test_D_inverse():
	assert spsi_mul(SD(), SD(-1), FLOOR) == sone
	assert spsi_mul(SD(-1), SD(), FLOOR) == sone


def test_inverse_undoes_D_on_functions():
	g = sfn(LaurentPoly({-1: 2, 1: 1}), LaurentPoly.monomial(-2))
	left = spsi_mul(SD(), spsi_mul(SD(-1), g, -10), -10)
	assert left.coefficient(0) == g.coefficient(0)
	for order in range(-6, 0):
		assert not left.coefficient(order)


def test_super_parity():
	assert SD().parity() == 1
	assert xi.parity() == 1
	assert sx.parity() == 0
	assert (SD() + sx).parity() is None


def test_supercommutator_needs_homogeneous_operands():
	with pytest.raises(InhomogeneousElementError):
		spsi_supercommutator(SD() + sx, sx)


def test_super_residue():
	op = SuperPsiOp({-1: SuperFunction(LaurentPoly(), LaurentPoly.monomial(-1))}, FLOOR)
	assert spsi_res(op) == SuperFunction(LaurentPoly(), LaurentPoly.monomial(-1))


def test_calibration_selects_one_convention():
	report = calibrate(trials=30, seed=42)
	assert len(report.passing) == 1
	chosen = report.passing[0]
	assert (report.convention.order, report.convention.part) == (chosen.order, chosen.part)
	assert chosen in CANDIDATES
	witness = SuperPsiOp({-1: SuperFunction(LaurentPoly(), LaurentPoly.monomial(-1))}, FLOOR)
	assert mr_supertrace(witness) == 1


def test_mr_supertrace_vanishes_on_supercommutators():
	report = mr_vanishing_suite(trials=100, seed=42)
	assert report["passed"], report["counterexample"]


def test_super_associativity():
	report = spsi_associativity_suite(trials=30, seed=42)
	assert report["passed"], report["failures"]


def test_mr_supertrace_needs_a_low_floor():
	with pytest.raises(TruncationError):
		mr_supertrace(SD(1, floor=0))


def test_truncated_trace_table():
	rows = truncated_trace_table(1)
	assert [row["algebra"] for row in rows] == ["q(Psi)", "q(Psi_1)"]
	for row in rows:
		assert row["monomials"] > 0
		assert row["brackets"] > 0
		assert isinstance(row["liftedWitness"], bool)
	with pytest.raises(PreconditionError):
		truncated_trace_table(0)


def test_scalar_coefficients_are_exact():
	op = PsiOp({0: Fraction(1, 3)}, FLOOR)
	assert op.coefficient(0) == LaurentPoly.constant(Fraction(1, 3))


def test_residues():
	assert psi_res(PsiOp({-1: LaurentPoly.monomial(2), -2: LaurentPoly.monomial(1)}, FLOOR)) == LaurentPoly.monomial(2)
	assert not psi_res(D())
	bracket = psi_commutator(D(), psi_mul(x_pow(-1), D(-1), FLOOR), FLOOR)
	assert psi_res(bracket) == LaurentPoly.monomial(-2, -1)
	assert adler_trace(bracket) == 0


def test_D_acts_on_superfunctions():
	assert super_D_action(SuperFunction.xi()) == SuperFunction(1)
	assert super_D_action(SuperFunction(LaurentPoly.monomial(1))) == SuperFunction.xi()
	assert super_D_action(SuperFunction(LaurentPoly(), LaurentPoly.monomial(2))) == SuperFunction(LaurentPoly.monomial(2))


def test_super_residues_and_parity_of_the_supertrace():
	witness = SuperPsiOp({-1: SuperFunction(LaurentPoly(), LaurentPoly.monomial(-1))}, FLOOR)
	assert spsi_res(witness) == SuperFunction(LaurentPoly(), LaurentPoly.monomial(-1))
	assert not spsi_res(SD())
	assert mr_supertrace(SuperPsiOp({-1: SuperFunction(LaurentPoly.monomial(-1))}, FLOOR)) == 0
