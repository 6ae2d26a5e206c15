# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""Weyl operators acting on rational functions, through sympy."""

from functools import cache

import sympy

from queertrace.exceptions import UnsupportedFunctionError


@cache
def weyl_symbols(nvars):
	"""x for one variable, x1..xn otherwise."""
	if nvars == 1:
		return (sympy.Symbol("x"),)
	return tuple(sympy.Symbol(f"x{i}") for i in range(1, nvars + 1))


def to_function(f, nvars=1):
	if isinstance(f, str):
		try:
			f = sympy.sympify(f, locals={s.name: s for s in weyl_symbols(nvars)})
		except (sympy.SympifyError, SyntaxError, TypeError) as e:
			raise UnsupportedFunctionError(f"Cannot read function {f!r}: {e}")
	f = sympy.sympify(f)
	symbols = weyl_symbols(nvars)
	if not f.free_symbols <= set(symbols):
		raise UnsupportedFunctionError(f"{f} uses symbols outside {', '.join(map(str, symbols))}")
	if not f.is_rational_function(*symbols):
		raise UnsupportedFunctionError(f"{f} is not a rational function")
	return f


def weyl_apply(p, f):
	"""P(f) for a rational function f; the result is brought to canonical form with ``cancel``."""
	symbols = weyl_symbols(p.nvars)
	f = to_function(f, p.nvars)
	total = sympy.Integer(0)
	for (alpha, beta), c in p.terms.items():
		g = f
		for s, b in zip(symbols, beta):
			if b:
				g = sympy.diff(g, s, b)
		mono = sympy.Mul(*[s**a for s, a in zip(symbols, alpha)])
		total += sympy.Rational(c.numerator, c.denominator) * mono * g
	return sympy.cancel(total)


def evaluate_at_one(expr, nvars):
	"""Exact value of a rational function at x_i = 1, as a sympy Rational."""
	return sympy.nsimplify(expr.subs({s: 1 for s in weyl_symbols(nvars)}), rational=True)
