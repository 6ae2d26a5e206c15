# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Normal-ordered elements of the Weyl algebra W_n.

A term is keyed by ``(alpha, beta)``, the exponent tuples of x_1..x_n and d_1..d_n, standing for
x^alpha d^beta with every x to the left. Every generator is odd, so a monomial has parity
(|alpha| + |beta|) mod 2; its weight vector is alpha - beta.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, perm

from queertrace.algebra.scalar import sign, to_scalar
from queertrace.exceptions import AlgebraInputError, AlgebraMismatchError, InhomogeneousElementError


@dataclass(frozen=True)
class WeylAlgebra:
	"""W_n as an ambient object (used where an algebra, not an element, is expected)."""

	nvars: int

	def __post_init__(self):
		if self.nvars < 1:
			raise AlgebraInputError("W_n needs n >= 1")

	@property
	def name(self):
		return f"W_{self.nvars}"

	def one(self):
		return WeylOp.constant(1, self.nvars)

	def monomial(self, alpha, beta):
		return WeylOp.monomial(alpha, beta)


class WeylOp:
	__slots__ = ("nvars", "terms")

	def __init__(self, nvars, terms=None):
		if nvars < 1:
			raise AlgebraInputError("WeylOp needs nvars >= 1")
		clean = {}
		for (alpha, beta), c in (terms or {}).items():
			alpha, beta = tuple(int(a) for a in alpha), tuple(int(b) for b in beta)
			if len(alpha) != nvars or len(beta) != nvars:
				raise AlgebraInputError(f"Monomial {alpha}, {beta} does not have {nvars} variables")
			if any(e < 0 for e in alpha + beta):
				raise AlgebraInputError("Weyl exponents must be nonnegative")
			c = to_scalar(c)
			if c:
				key = (alpha, beta)
				clean[key] = clean.get(key, Fraction(0)) + c
		self.nvars = nvars
		self.terms = {k: v for k, v in sorted(clean.items()) if v}

	@classmethod
	def monomial(cls, alpha, beta, coeff=1):
		alpha, beta = tuple(alpha), tuple(beta)
		return cls(len(alpha), {(alpha, beta): coeff})

	@classmethod
	def constant(cls, value, nvars=1):
		zeros = (0,) * nvars
		return cls(nvars, {(zeros, zeros): value})

	@classmethod
	def x(cls, i=1, nvars=1):
		alpha = tuple(1 if j == i - 1 else 0 for j in range(nvars))
		return cls.monomial(alpha, (0,) * nvars)

	@classmethod
	def d(cls, i=1, nvars=1):
		beta = tuple(1 if j == i - 1 else 0 for j in range(nvars))
		return cls.monomial((0,) * nvars, beta)

	def _check(self, other):
		if not isinstance(other, WeylOp):
			raise AlgebraMismatchError(f"Expected a WeylOp, got {type(other).__name__}")
		if other.nvars != self.nvars:
			raise AlgebraMismatchError(f"Operators in W_{self.nvars} and W_{other.nvars} do not combine")

	def __eq__(self, other):
		if not isinstance(other, WeylOp):
			return NotImplemented
		return self.nvars == other.nvars and self.terms == other.terms

	__hash__ = None

	def __bool__(self):
		return bool(self.terms)

	def __add__(self, other):
		self._check(other)
		out = dict(self.terms)
		for k, c in other.terms.items():
			out[k] = out.get(k, Fraction(0)) + c
		return WeylOp(self.nvars, out)

	def __neg__(self):
		return WeylOp(self.nvars, {k: -c for k, c in self.terms.items()})

	def __sub__(self, other):
		return self + (-other)

	def scale(self, factor):
		factor = to_scalar(factor)
		return WeylOp(self.nvars, {k: factor * c for k, c in self.terms.items()})

	def __mul__(self, other):
		if isinstance(other, WeylOp):
			return weyl_mul(self, other)
		return self.scale(other)

	def __rmul__(self, other):
		return self.scale(other)

	def __repr__(self):
		from queertrace.parsing.printer import format_weyl

		return f"WeylOp({format_weyl(self)!r})"

	@property
	def degree(self):
		return max((sum(a) + sum(b) for a, b in self.terms), default=0)

	def parity(self):
		"""Parity if homogeneous (0 for the zero operator), else None."""
		parities = {(sum(a) + sum(b)) % 2 for a, b in self.terms}
		if len(parities) > 1:
			return None
		return parities.pop() if parities else 0

	def weights(self):
		"""Weight vectors occurring in the operator."""
		return {tuple(x - y for x, y in zip(a, b)) for a, b in self.terms}

	def weight(self):
		"""Total weight when homogeneous, else None."""
		totals = {sum(w) for w in self.weights()}
		if len(totals) > 1:
			return None
		return totals.pop() if totals else 0

	def weight_component(self, weight):
		"""The part of total weight ``weight``."""
		return WeylOp(self.nvars, {(a, b): c for (a, b), c in self.terms.items() if sum(a) - sum(b) == weight})

	def weight_vector_component(self, vector):
		vector = tuple(vector)
		return WeylOp(
			self.nvars,
			{(a, b): c for (a, b), c in self.terms.items() if tuple(x - y for x, y in zip(a, b)) == vector},
		)


def _reorder_one(b, c):
	"""d^b x^c = sum_k C(b,k) c!/(c-k)! x^{c-k} d^{b-k}, as a list of (k, coefficient)."""
	return [(k, comb(b, k) * perm(c, k)) for k in range(min(b, c) + 1)]


def weyl_mul(p, q):
	"""Normal-ordered product, using d_i x_i = x_i d_i + 1 and commuting distinct variables."""
	p._check(q)
	n = p.nvars
	out = {}
	for (a1, b1), c1 in p.terms.items():
		for (a2, b2), c2 in q.terms.items():
			expansions = [_reorder_one(b1[i], a2[i]) for i in range(n)]
			for choice in itertools.product(*expansions):
				coeff = c1 * c2
				alpha, beta = [], []
				for i, (k, f) in enumerate(choice):
					coeff *= f
					alpha.append(a1[i] + a2[i] - k)
					beta.append(b1[i] + b2[i] - k)
				key = (tuple(alpha), tuple(beta))
				out[key] = out.get(key, Fraction(0)) + coeff
	return WeylOp(n, out)


def weyl_bracket(p, q, kind="super"):
	"""[P, Q] = PQ - (-1)^{p(P)p(Q)} QP, or the plain commutator for ``kind="plain"``."""
	if kind == "plain":
		return weyl_mul(p, q) - weyl_mul(q, p)
	pp, pq = p.parity(), q.parity()
	if pp is None or pq is None:
		raise InhomogeneousElementError("Weyl supercommutator needs parity-homogeneous operands")
	return weyl_mul(p, q) - weyl_mul(q, p).scale(sign(pp * pq))


def monomials_up_to(nvars, maxdeg):
	"""All exponent keys (alpha, beta) of total degree <= maxdeg, in a fixed order."""
	keys = []
	for exps in itertools.product(range(maxdeg + 1), repeat=2 * nvars):
		if sum(exps) <= maxdeg:
			keys.append((tuple(exps[:nvars]), tuple(exps[nvars:])))
	return sorted(keys, key=lambda k: (sum(k[0]) + sum(k[1]), k))
