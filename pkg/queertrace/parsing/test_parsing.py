# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from queertrace.exceptions import ExpressionSyntaxError
from queertrace.parsing.lexer import ATOM, END, NUMBER, tokenize
from queertrace.parsing.parser import PSIDO, SUPERPSIDO, WEYL, parse_operator_expression
from queertrace.parsing.printer import format_value
from queertrace.psido.laurent import LaurentPoly
from queertrace.psido.operator import PsiOp
from queertrace.psido.super import SuperFunction, SuperPsiOp
from queertrace.weyl.operator import WeylOp

COEFFS = ("1", "-2", "3/4")

WEYL_CORPUS = [
	"0",
	"1",
	"-1/2",
	"x",
	"d",
	"d*x",
	"x*d - d*x",
	"(x + d)^2",
	"(x + d)^3",
	"(x*d + 1)^2",
	"d^3*x^2",
	"2 x d",
	"x1*d2 - d2*x1",
	"d1*x1 + x2^2*d2",
	"(x1 + d2)*(d1 + x2)",
	"3/5*x1^2*d1 - 1/5*d2^3",
] + [f"{c}*x^{a}*d^{b}" for c, a, b in itertools.product(COEFFS, range(3), range(3))] + [
	f"d^{b}*x^{a}" for a, b in itertools.product(range(1, 4), range(1, 4))
]

PSIDO_CORPUS = [
	"0",
	"D",
	"D^-1",
	"x^-1*D^-1",
	"D*x",
	"D^-1*x",
	"D^-1*x^-1",
	"(x + x^-1)*D^2 - 1/2",
	"(D + x)^2",
	"D^-2*x^2 + x*D",
	"x*D - D*x",
	"3/7*x^-3*D^-3",
	"(D^-1)^2*x",
	"x^2*D^-1*x^-1",
	"(x*D^-1)^2",
	"D^-3*x^3 - (D^-1)^3",
] + [f"{c}*x^{e}*D^{k}" for c, e, k in itertools.product(("1", "-1/3"), (-2, 0, 1), (-2, -1, 0, 2))] + [
	f"D^{k}*x^{e}" for k, e in itertools.product((-2, -1, 1, 2), (-1, 1, 2))
]

SUPERPSIDO_CORPUS = [
	"xi",
	"xi^2",
	"D*xi",
	"D*x",
	"D^2*x",
	"D*D",
	"D^-1*xi",
	"xi*x^-1*D^-1",
	"(1 + xi*x)*D",
	"D*xi*x^2 - xi*D",
	"(xi + D)^2",
	"D^-1*x*xi",
	"(D^-1)^2*xi*x",
	"xi*x*D^-1 + x^2*D",
	"(xi + x)*D^-1*xi",
	"(D^-1*xi)^2",
] + [f"{c}*xi*x^{e}*D^{k}" for c, e, k in itertools.product(("1", "-2/3"), (-1, 0, 2), (-2, -1, 1, 2))] + [
	f"D^{k}*x^{e}" for k, e in itertools.product((-2, -1, 1, 2), (-1, 1, 2))
]


def round_trip(text, dialect):
	value = parse_operator_expression(text, dialect)
	nvars = value.nvars if dialect == WEYL else None
	again = parse_operator_expression(format_value(value), dialect, nvars=nvars)
	assert again == value, (text, format_value(value))


def test_corpora_are_large_enough():
	for corpus in (WEYL_CORPUS, PSIDO_CORPUS, SUPERPSIDO_CORPUS):
		assert len(corpus) >= 50
		assert len(set(corpus)) == len(corpus)


@pytest.mark.parametrize("text", WEYL_CORPUS)
def test_weyl_round_trip(text):
	round_trip(text, WEYL)


@pytest.mark.parametrize("text", PSIDO_CORPUS)
def test_psido_round_trip(text):
	round_trip(text, PSIDO)


@pytest.mark.parametrize("text", SUPERPSIDO_CORPUS)
def test_superpsido_round_trip(text):
	round_trip(text, SUPERPSIDO)


exponent = st.integers(0, 3)
weyl_ops = st.lists(
	st.builds(lambda a, b, c: WeylOp.monomial((a,), (b,), c), exponent, exponent, st.fractions(max_denominator=5)),
	min_size=1,
	max_size=4,
).map(lambda ms: sum(ms[1:], ms[0]))


@settings(deadline=None, max_examples=100)
@given(weyl_ops)
def test_printed_weyl_operators_parse_back(op):
	assert parse_operator_expression(format_value(op), WEYL, nvars=1) == op


def test_examples():
	assert parse_operator_expression("x^2*d^2") == WeylOp.monomial((2,), (2,))
	assert parse_operator_expression("d*x") == WeylOp.monomial((1,), (1,)) + WeylOp.constant(1)
	assert parse_operator_expression("x^-1*D^-1", PSIDO) == PsiOp({-1: LaurentPoly.monomial(-1)})
	assert format_value(parse_operator_expression("d*x")) == "x*d + 1"


def test_indexed_variables_infer_nvars():
	op = parse_operator_expression("x2*d1")
	assert op.nvars == 2
	assert op == WeylOp.monomial((0, 1), (1, 0))
	assert format_value(op) == "x2*d1"


def test_super_atoms():
	assert not parse_operator_expression("xi^2", SUPERPSIDO)
	xi_d = parse_operator_expression("D*xi", SUPERPSIDO)
	expected = SuperPsiOp({0: SuperFunction(1), 1: SuperFunction(LaurentPoly(), LaurentPoly.constant(-1))})
	assert xi_d == expected
	assert format_value(xi_d) == "-xi*D + 1"


def test_tokens_carry_positions():
	tokens = tokenize("3*x2 ^ 2")
	assert [t.kind for t in tokens] == [NUMBER, "op", ATOM, "op", NUMBER, END]
	assert tokens[2].index == 2
	assert tokens[3].pos == 5
	assert tokens[-1].pos == 8


@pytest.mark.parametrize(
	"text,dialect,position",
	[
		("x + * d", WEYL, 4),
		("x $ d", WEYL, 2),
		("x^-1", WEYL, 0),
		("2/0", WEYL, 2),
		("(x + d", WEYL, 6),
		("D*x", WEYL, 0),
		("d*x", PSIDO, 0),
		("xi^-1", SUPERPSIDO, 0),
		("(x + D)^-2", PSIDO, 8),
		("x^", PSIDO, 2),
	],
)
def test_syntax_errors_carry_positions(text, dialect, position):
	with pytest.raises(ExpressionSyntaxError) as info:
		parse_operator_expression(text, dialect)
	assert info.value.position == position
	assert info.value.expected


def test_index_outside_declared_variables():
	with pytest.raises(ExpressionSyntaxError):
		parse_operator_expression("x3", WEYL, nvars=2)
	with pytest.raises(ExpressionSyntaxError):
		parse_operator_expression("x0*d1", WEYL)


def test_rational_constants():
	assert parse_operator_expression("3/6") == WeylOp.constant(Fraction(1, 2))
	assert parse_operator_expression("2^-2") == WeylOp.constant(Fraction(1, 4))
	with pytest.raises(ExpressionSyntaxError):
		parse_operator_expression("0^-1")
