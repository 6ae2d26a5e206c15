# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Canonical text for operators. Every string produced here parses back to an equal value in the
matching dialect.
"""

from fractions import Fraction

from queertrace.algebra.scalar import format_scalar


def _join(parts):
	"""Join (coefficient, body) pairs as ``a + b - c``; an empty body means a bare constant."""
	if not parts:
		return "0"
	out = []
	for n, (coeff, body) in enumerate(parts):
		negative = coeff < 0
		magnitude = -coeff if negative else coeff
		if not body:
			text = format_scalar(magnitude)
		elif magnitude == 1:
			text = body
		else:
			text = f"{format_scalar(magnitude)}*{body}"
		if n == 0:
			out.append(f"-{text}" if negative else text)
		else:
			out.append(f" - {text}" if negative else f" + {text}")
	return "".join(out)


def _power(symbol, exponent):
	if exponent == 0:
		return ""
	return symbol if exponent == 1 else f"{symbol}^{exponent}"


def _factors(*factors):
	return "*".join(f for f in factors if f)


def format_weyl(op):
	"""Normal-ordered text, e.g. ``3/2*x*d - 1/2`` or ``x1^2*d1^2``."""
	indexed = op.nvars > 1
	parts = []
	keys = sorted(op.terms, key=lambda key: (-(sum(key[0]) + sum(key[1])), tuple(-e for e in key[0] + key[1])))
	for alpha, beta in keys:
		xs = [_power(f"x{i + 1}" if indexed else "x", a) for i, a in enumerate(alpha)]
		ds = [_power(f"d{i + 1}" if indexed else "d", b) for i, b in enumerate(beta)]
		parts.append((op.terms[(alpha, beta)], _factors(*xs, *ds)))
	return _join(parts)


def format_laurent(f):
	"""Descending powers of x, e.g. ``3*x^2 + 2*x^-1``."""
	parts = [(c, _power("x", e)) for e, c in sorted(f.coeffs.items(), reverse=True)]
	return _join(parts)


def _coefficient_times(text, single, operator):
	if not operator:
		return text
	if text == "1":
		return operator
	if text == "-1":
		return f"-{operator}"
	if not single:
		text = f"({text})"
	return f"{text}*{operator}"


def format_psi(op):
	"""Descending D-orders, e.g. ``x*D^2 + (3*x^2 + 2*x^-1)*D^-1``."""
	parts = []
	for k, f in op.terms.items():
		single = len(f.coeffs) == 1
		parts.append(_coefficient_times(format_laurent(f), single, _power("D", k)))
	return _join_terms(parts)


def format_superfunction(f):
	"""``f0 + xi*f1`` with parentheses around a multi-term f1."""
	parts = []
	if f.even:
		parts.append(format_laurent(f.even))
	if f.odd:
		odd = format_laurent(f.odd)
		if len(f.odd.coeffs) == 1:
			(e, c), = f.odd.coeffs.items()
			parts.append(_join([(c, _factors("xi", _power("x", e)))]))
		else:
			parts.append(f"xi*({odd})")
	return _join_terms(parts)


def format_spsi(op):
	"""Descending D-orders of superfunction coefficients, e.g. ``xi*x^-1*D^-1``."""
	parts = []
	for k, f in op.terms.items():
		text = format_superfunction(f)
		single = len(f.even.coeffs) + len(f.odd.coeffs) == 1
		parts.append(_coefficient_times(text, single, _power("D", k)))
	return _join_terms(parts)


def _join_terms(texts):
	if not texts:
		return "0"
	out = [texts[0]]
	for text in texts[1:]:
		if text.startswith("-"):
			out.append(f" - {text[1:]}")
		else:
			out.append(f" + {text}")
	return "".join(out)


def format_value(value):
	"""Dispatch on the operator type; plain scalars print as ``p/q``."""
	from queertrace.psido.operator import PsiOp
	from queertrace.psido.super import SuperPsiOp
	from queertrace.weyl.operator import WeylOp

	if isinstance(value, WeylOp):
		return format_weyl(value)
	if isinstance(value, PsiOp):
		return format_psi(value)
	if isinstance(value, SuperPsiOp):
		return format_spsi(value)
	return format_scalar(Fraction(value))
