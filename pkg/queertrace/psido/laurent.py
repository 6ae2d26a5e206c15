# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""Laurent polynomials in x with exact coefficients, and generalized binomials."""

from fractions import Fraction
from math import factorial, prod

from queertrace.algebra.scalar import to_scalar
from queertrace.exceptions import AlgebraInputError


def gen_binomial(n, k):
	"""binom(n, k) = n(n-1)...(n-k+1)/k!, valid for negative n."""
	if k < 0:
		raise AlgebraInputError(f"gen_binomial needs k >= 0, got {k}")
	return Fraction(prod(n - i for i in range(k)), factorial(k))


class LaurentPoly:
	__slots__ = ("coeffs",)

	def __init__(self, coeffs=None):
		clean = {}
		for e, c in (coeffs or {}).items():
			c = to_scalar(c)
			if c:
				clean[int(e)] = clean.get(int(e), Fraction(0)) + c
		self.coeffs = {e: c for e, c in sorted(clean.items()) if c}

	@classmethod
	def monomial(cls, exponent, coeff=1):
		return cls({exponent: coeff})

	@classmethod
	def constant(cls, value):
		return cls({0: value})

	def __eq__(self, other):
		if not isinstance(other, LaurentPoly):
			return NotImplemented
		return self.coeffs == other.coeffs

	__hash__ = None

	def __bool__(self):
		return bool(self.coeffs)

	def __add__(self, other):
		out = dict(self.coeffs)
		for e, c in other.coeffs.items():
			out[e] = out.get(e, Fraction(0)) + c
		return LaurentPoly(out)

	def __neg__(self):
		return LaurentPoly({e: -c for e, c in self.coeffs.items()})

	def __sub__(self, other):
		return self + (-other)

	def scale(self, factor):
		factor = to_scalar(factor)
		return LaurentPoly({e: factor * c for e, c in self.coeffs.items()})

	def __mul__(self, other):
		if not isinstance(other, LaurentPoly):
			return self.scale(other)
		out = {}
		for e1, c1 in self.coeffs.items():
			for e2, c2 in other.coeffs.items():
				out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
		return LaurentPoly(out)

	def __rmul__(self, other):
		return self.scale(other)

	def derivative(self, k=1):
		out = {}
		for e, c in self.coeffs.items():
			factor = prod(e - i for i in range(k))
			if factor:
				out[e - k] = c * factor
		return LaurentPoly(out)

	def coefficient(self, exponent):
		return self.coeffs.get(exponent, Fraction(0))

	def is_polynomial(self):
		return all(e >= 0 for e in self.coeffs)

	def vanishing_order(self):
		"""Smallest k with the k-th derivative zero, or None if no derivative vanishes."""
		if not self.coeffs:
			return 0
		if not self.is_polynomial():
			return None
		return max(self.coeffs) + 1

	@property
	def low(self):
		return min(self.coeffs, default=0)

	@property
	def high(self):
		return max(self.coeffs, default=0)

	def __repr__(self):
		from queertrace.parsing.printer import format_laurent

		return f"LaurentPoly({format_laurent(self)!r})"
