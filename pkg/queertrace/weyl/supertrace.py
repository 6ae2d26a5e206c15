# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
The even supertrace T on W_n.

For one variable T(P) = P(1/(x+1)) at x = 1 on weight zero and 0 otherwise; on monomials this is
T(x^a d^a) = (-1)^a a! / 2^{a+1}. For n variables T is the product of the one-variable values,
zero unless every per-variable weight vanishes.

The value can also be guessed from the divergent alternating sum sum_n (-1)^n (P x^n)|_{x=1}:
its Abel sum is P(1/(1+x))|_{x=1}. ``regularized_supertrace`` reports both.
"""

from fractions import Fraction
from math import factorial

import numpy as np
import sympy

from queertrace.algebra import linalg
from queertrace.algebra.scalar import format_scalar
from queertrace.exceptions import PreconditionError
from queertrace.logger import logger
from queertrace.weyl.apply import evaluate_at_one, weyl_apply, weyl_symbols
from queertrace.weyl.operator import WeylOp, monomials_up_to, weyl_bracket, weyl_mul

log = logger("weyl")


def _single(a, b):
	if a != b:
		return Fraction(0)
	return Fraction((-1) ** a * factorial(a), 2 ** (a + 1))


def weyl_supertrace_T(p):
	total = Fraction(0)
	for (alpha, beta), c in p.terms.items():
		value = c
		for a, b in zip(alpha, beta):
			value *= _single(a, b)
			if not value:
				break
		total += value
	return total


def weyl_supertrace_T_by_apply(p):
	"""T by its defining evaluation: the weight-zero part applied to prod 1/(1+x_i), at x = 1."""
	zero = p.weight_vector_component((0,) * p.nvars)
	if not zero:
		return Fraction(0)
	symbols = weyl_symbols(p.nvars)
	f = sympy.Mul(*[1 / (s + 1) for s in symbols])
	value = evaluate_at_one(weyl_apply(zero, f), p.nvars)
	return Fraction(int(value.p), int(value.q))


def lebedev_case1_values(nmax=8):
	"""Rows (n, T(x^{n+1}d^n * d), T(d * x^{n+1}d^n), expected) for n = 0..nmax."""
	rows = []
	d = WeylOp.d()
	for n in range(nmax + 1):
		p = WeylOp.monomial((n + 1,), (n,))
		expected = -Fraction(-1, 2) ** (n + 2) * factorial(n + 1)
		left = weyl_supertrace_T(weyl_mul(p, d))
		right = weyl_supertrace_T(weyl_mul(d, p))
		rows.append(
			{
				"n": n,
				"T(PQ)": left,
				"T(QP)": right,
				"expected": expected,
				"passed": left == expected and right == -expected,
			}
		)
	return rows


def _random_monomial(rng, nvars, maxdeg):
	deg = int(rng.integers(0, maxdeg + 1))
	exps = rng.multinomial(deg, [1 / (2 * nvars)] * (2 * nvars))
	return WeylOp.monomial(tuple(int(e) for e in exps[:nvars]), tuple(int(e) for e in exps[nvars:]))


def _balanced_partner(rng, p, maxdeg):
	"""A monomial whose weight vector cancels that of the monomial p."""
	((alpha, beta),) = p.terms
	shift = [int(s) for s in rng.integers(0, 2, size=len(alpha))]
	if sum(alpha) + sum(beta) + 2 * sum(shift) > maxdeg:
		shift = [0] * len(alpha)
	return WeylOp.monomial(
		tuple(b + s for b, s in zip(beta, shift)),
		tuple(a + s for a, s in zip(alpha, shift)),
	)


def supertrace_property_suite(nvars=1, maxdeg=6, trials=500, seed=42):
	"""
	Check T(PQ) = (-1)^{p(P)p(Q)} T(QP) on random monomial pairs.

	Trial i draws from ``default_rng([seed, i])``; every other trial picks Q with the opposite
	weight so that both sides are often nonzero.
	"""
	if trials < 1:
		raise PreconditionError("supertrace_property_suite needs trials >= 1")
	nonzero = 0
	counterexample = None
	for trial in range(trials):
		rng = np.random.default_rng([seed, trial])
		p = _random_monomial(rng, nvars, maxdeg)
		q = _balanced_partner(rng, p, maxdeg) if trial % 2 else _random_monomial(rng, nvars, maxdeg)
		left = weyl_supertrace_T(weyl_mul(p, q))
		right = weyl_supertrace_T(weyl_mul(q, p)) * (-1) ** (p.parity() * q.parity())
		if left:
			nonzero += 1
		if left != right:
			counterexample = {"trial": trial, "P": repr(p), "Q": repr(q), "T(PQ)": format_scalar(left)}
			break
	report = {
		"nvars": nvars,
		"maxdeg": maxdeg,
		"trials": trials,
		"seed": seed,
		"nonzeroChecks": nonzero,
		"passed": counterexample is None,
		"counterexample": counterexample,
	}
	log.info("supertrace suite W_%s: passed=%s nonzero=%s", nvars, report["passed"], nonzero)
	return report


def case2_family_check(trials=50, seed=42, maxa=5):
	"""For random P of weight -1 in W_1: T(P x) = -T(x P), and T(P x) = -P(1/(x+1))|_{x=1}."""
	x = WeylOp.x()
	failures = []
	for trial in range(trials):
		rng = np.random.default_rng([seed, trial])
		terms = {}
		for a in range(maxa + 1):
			c = int(rng.integers(-5, 6))
			if c:
				terms[((a,), (a + 1,))] = Fraction(c, int(rng.integers(1, 4)))
		p = WeylOp(1, terms)
		left = weyl_supertrace_T(weyl_mul(p, x))
		right = weyl_supertrace_T(weyl_mul(x, p))
		if left != -right:
			failures.append(trial)
			continue
		# P x applied to 1/(x+1) equals P(x/(x+1)) = P(1 - 1/(x+1)) = -P(1/(x+1)) for P of weight -1
		direct = weyl_apply(p, 1 / (weyl_symbols(1)[0] + 1))
		value = evaluate_at_one(direct, 1)
		if left != -Fraction(int(value.p), int(value.q)):
			failures.append(trial)
	return {"trials": trials, "seed": seed, "passed": not failures, "failures": failures}


def weight_zero_trace_evidence(k=6):
	"""
	Truncated uniqueness evidence for T in W_1.

	On span{x^a d^a : a <= k}, count the functionals killing every supercommutator [M, N] of
	monomials with opposite weights and deg M + deg N <= 2k. Reported, not asserted.
	"""
	keys = monomials_up_to(1, 2 * k)
	weight0 = [((a,), (a,)) for a in range(k + 1)]
	position = {key: n for n, key in enumerate(weight0)}
	rows = []
	for m_key in keys:
		for n_key in keys:
			deg = sum(m_key[0]) + sum(m_key[1]) + sum(n_key[0]) + sum(n_key[1])
			weight = m_key[0][0] - m_key[1][0] + n_key[0][0] - n_key[1][0]
			if deg > 2 * k or weight or m_key > n_key:
				continue
			m = WeylOp.monomial(*m_key)
			n = WeylOp.monomial(*n_key)
			b = weyl_bracket(m, n)
			if b:
				vec = [Fraction(0)] * len(weight0)
				for key, c in b.terms.items():
					vec[position[key]] = c
				rows.append(vec)
	null = linalg.nullspace(rows, len(weight0))
	t_vector = [_single(a, a) for a in range(k + 1)]
	return {
		"k": k,
		"monomials": len(weight0),
		"brackets": len(rows),
		"rank": linalg.rank(rows, len(weight0)),
		"traceDim": len(null),
		"containsT": linalg.span_contains(null, t_vector, len(weight0)) if null else False,
	}


def regularized_supertrace(p, terms=20):
	"""
	Partial sums of sum_n (-1)^n (P x^n)|_{x=1} next to their Abel sum.

	Only the weight-zero part contributes to the Abel value. One variable.
	"""
	if p.nvars != 1:
		raise PreconditionError("regularized_supertrace is defined for W_1")
	partial = []
	total = Fraction(0)
	for n in range(terms):
		value = Fraction(0)
		for ((a,), (b,)), c in p.weight_vector_component((0,)).terms.items():
			if n >= b:
				value += c * Fraction(factorial(n), factorial(n - b))
		total += (-1) ** n * value
		partial.append(total)
	abel = weyl_supertrace_T_by_apply(p)
	return {"partialSums": partial, "abel": abel, "T": weyl_supertrace_T(p)}
