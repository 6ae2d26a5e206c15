# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Exact scalars.

Scalars are ``fractions.Fraction`` values: arbitrary precision, always reduced, positive
denominator. On disk and on the command line they are written ``"p/q"`` or ``"p"``.
"""

import re
from fractions import Fraction

from queertrace.exceptions import AlgebraInputError

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def to_scalar(value):
	"""Coerce an int, Fraction or ``"p/q"`` string to a Scalar. Floats are rejected."""
	if isinstance(value, bool):
		raise AlgebraInputError(f"Not a scalar: {value!r}")
	if isinstance(value, Fraction):
		return value
	if isinstance(value, int):
		return Fraction(value)
	if isinstance(value, str):
		match = _SCALAR_RE.match(value)
		if not match:
			raise AlgebraInputError(f"Not a rational scalar: {value!r}")
		num, den = match.groups()
		if den is not None and int(den) == 0:
			raise AlgebraInputError(f"Zero denominator in scalar: {value!r}")
		return Fraction(int(num), int(den) if den else 1)
	# sympy / gmpy rationals expose numerator and denominator
	if hasattr(value, "numerator") and hasattr(value, "denominator") and not isinstance(value, float):
		return Fraction(int(value.numerator), int(value.denominator))
	raise AlgebraInputError(f"Not an exact scalar: {value!r}")


def format_scalar(value):
	value = Fraction(value)
	if value.denominator == 1:
		return str(value.numerator)
	return f"{value.numerator}/{value.denominator}"


def sign(exponent):
	"""(-1)**exponent as an int."""
	return -1 if exponent % 2 else 1
