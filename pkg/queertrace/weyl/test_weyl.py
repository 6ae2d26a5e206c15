# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from queertrace.exceptions import AlgebraMismatchError, InhomogeneousElementError, UnsupportedFunctionError
from queertrace.weyl.apply import weyl_apply, weyl_symbols
from queertrace.weyl.membership import commutant_membership
from queertrace.weyl.operator import WeylOp, weyl_bracket, weyl_mul
from queertrace.weyl.supertrace import (
	case2_family_check,
	lebedev_case1_values,
	regularized_supertrace,
	supertrace_property_suite,
	weight_zero_trace_evidence,
	weyl_supertrace_T,
	weyl_supertrace_T_by_apply,
)

x, d = WeylOp.x(), WeylOp.d()
one = WeylOp.constant(1)

exponent = st.integers(0, 3)
monomial = st.builds(lambda a, b, c: WeylOp.monomial((a,), (b,), c), exponent, exponent, st.integers(-3, 3))
polynomial = st.lists(monomial, min_size=1, max_size=4).map(lambda ms: sum(ms[1:], ms[0]))


def test_normal_ordering():
	assert weyl_mul(d, x) == weyl_mul(x, d) + one
	d2, x2 = WeylOp.monomial((0,), (2,)), WeylOp.monomial((2,), (0,))
	expected = WeylOp.monomial((2,), (2,)) + WeylOp.monomial((1,), (1,), 4) + WeylOp.constant(2)
	assert weyl_mul(d2, x2) == expected


def test_distinct_variables_commute():
	x1, d2 = WeylOp.x(1, 2), WeylOp.d(2, 2)
	assert weyl_mul(d2, x1) == weyl_mul(x1, d2)
	assert weyl_mul(WeylOp.d(1, 2), x1) == weyl_mul(x1, WeylOp.d(1, 2)) + WeylOp.constant(1, 2)


def test_mixing_variable_counts_fails():
	with pytest.raises(AlgebraMismatchError):
		weyl_mul(x, WeylOp.x(1, 2))


@settings(deadline=None, max_examples=60)
@given(polynomial, polynomial, polynomial)
def test_product_is_associative(p, q, r):
	assert weyl_mul(weyl_mul(p, q), r) == weyl_mul(p, weyl_mul(q, r))


def test_supercommutator_of_generators():
	# x and d are odd
	assert weyl_bracket(x, d) == WeylOp.monomial((1,), (1,), 2) + one
	assert weyl_bracket(x, d, "plain") == -one


def test_supercommutator_needs_homogeneous_operands():
	with pytest.raises(InhomogeneousElementError):
		weyl_bracket(x + one, d)


def test_T_values():
	assert weyl_supertrace_T(one) == Fraction(1, 2)
	assert weyl_supertrace_T(WeylOp.monomial((1,), (1,))) == Fraction(-1, 4)
	assert weyl_supertrace_T(WeylOp.monomial((2,), (2,))) == Fraction(1, 4)
	assert weyl_supertrace_T(WeylOp.monomial((2,), (1,))) == 0
	assert weyl_supertrace_T(WeylOp.constant(1, 2)) == Fraction(1, 4)


@settings(deadline=None, max_examples=40)
@given(polynomial)
def test_T_matches_its_defining_evaluation(p):
	assert weyl_supertrace_T(p) == weyl_supertrace_T_by_apply(p)


def test_case1_values():
	rows = lebedev_case1_values(8)
	assert len(rows) == 9
	assert all(row["passed"] for row in rows)
	assert rows[0]["expected"] == Fraction(-1, 4)


@pytest.mark.parametrize("nvars", [1, 2])
def test_supertrace_symmetry_suite(nvars):
	report = supertrace_property_suite(nvars=nvars, maxdeg=6, trials=200, seed=42)
	assert report["passed"], report["counterexample"]
	assert report["nonzeroChecks"] > 0


def test_case2_family():
	assert case2_family_check(trials=20)["passed"]


@pytest.mark.parametrize("a", [0, 1, 2, 3])
def test_weight_zero_monomials_decompose(a):
	p = WeylOp.monomial((a,), (a,))
	result = commutant_membership(p, allow_scalar=True)
	assert result.success
	assert result.scalar == 2 * weyl_supertrace_T(p)
	assert result.reconstruct() == p


def test_nonzero_weight_is_a_commutator():
	p = WeylOp.monomial((3,), (1,)) + WeylOp.monomial((0,), (2,), 5)
	result = commutant_membership(p)
	assert result.success
	assert result.scalar == 0
	assert result.reconstruct() == p


def test_one_is_not_a_supercommutator():
	result = commutant_membership(one)
	assert not result.success
	assert result.certificate == Fraction(1, 2)


def test_weyl_apply():
	(s,) = weyl_symbols(1)
	assert weyl_apply(WeylOp.monomial((1,), (1,)), "x^2") == 2 * s**2
	assert weyl_apply(d, 1 / (s + 1)) == sympy.cancel(-1 / (s + 1) ** 2)
	with pytest.raises(UnsupportedFunctionError):
		weyl_apply(d, "sin(x)")


def test_weight_zero_evidence_contains_T():
	evidence = weight_zero_trace_evidence(4)
	assert evidence["monomials"] == 5
	assert evidence["traceDim"] >= 1
	assert evidence["containsT"]


def test_regularized_supertrace_of_one():
	report = regularized_supertrace(one, terms=6)
	assert report["partialSums"] == [1, 0, 1, 0, 1, 0]
	assert report["abel"] == report["T"] == Fraction(1, 2)


def test_xd_needs_the_scalar():
	p = WeylOp.monomial((1,), (1,))
	assert not commutant_membership(p).success
	result = commutant_membership(p, allow_scalar=True)
	assert result.success
	assert result.scalar == Fraction(-1, 2)
