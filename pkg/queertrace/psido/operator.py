# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Formal pseudo-differential operators sum_{k <= N} f_k D^k with Laurent coefficients.

Products follow the Leibniz rule (f D^a)(g D^b) = sum_k binom(a, k) f g^{(k)} D^{a+b-k}. An
operator stores the orders at or above its ``floor``; ``exact`` is True while nothing below the
floor has been dropped. For exact inputs every stored coefficient of a product is an exact
finite sum, so the floor only limits how far down terms are materialized.
"""

from fractions import Fraction

import numpy as np

from queertrace.config import conf
from queertrace.exceptions import AlgebraMismatchError, TruncationError
from queertrace.logger import logger
from queertrace.psido.laurent import LaurentPoly, gen_binomial

log = logger("psido")


def default_floor():
	return int(conf.get("psido_floor", -8))


class PsiOp:
	__slots__ = ("terms", "floor", "exact")

	def __init__(self, terms=None, floor=None, exact=True):
		floor = default_floor() if floor is None else int(floor)
		clean = {}
		for k, f in (terms or {}).items():
			if not isinstance(f, LaurentPoly):
				f = LaurentPoly.constant(f)
			if not f:
				continue
			if k < floor:
				exact = False
				continue
			clean[int(k)] = clean[int(k)] + f if int(k) in clean else f
		self.terms = {k: f for k, f in sorted(clean.items(), reverse=True) if f}
		self.floor = floor
		self.exact = exact

	@classmethod
	def D(cls, power=1, floor=None):
		return cls({power: LaurentPoly.constant(1)}, floor)

	@classmethod
	def function(cls, f, floor=None):
		if not isinstance(f, LaurentPoly):
			f = LaurentPoly.constant(f)
		return cls({0: f}, floor)

	@classmethod
	def x(cls, power=1, floor=None):
		return cls.function(LaurentPoly.monomial(power), floor)

	@property
	def top(self):
		return max(self.terms, default=None)

	def __eq__(self, other):
		if not isinstance(other, PsiOp):
			return NotImplemented
		return self.terms == other.terms and self.floor == other.floor

	__hash__ = None

	def __bool__(self):
		return bool(self.terms)

	def coefficient(self, order):
		if order < self.floor:
			raise TruncationError(f"order {order} lies below the truncation floor {self.floor}")
		return self.terms.get(order, LaurentPoly())

	def with_floor(self, floor):
		"""Re-truncate at ``floor``; raising the floor may drop terms."""
		if floor < self.floor and not self.exact:
			raise TruncationError(f"cannot lower the floor of a truncated operator below {self.floor}")
		return PsiOp(self.terms, floor, self.exact)

	def __add__(self, other):
		if not isinstance(other, PsiOp):
			raise AlgebraMismatchError("PsiOp can only be added to PsiOp")
		floor, exact = _sum_floor(self, other)
		out = dict(self.terms)
		for k, f in other.terms.items():
			out[k] = out[k] + f if k in out else f
		return PsiOp(out, floor, exact)

	def __neg__(self):
		return PsiOp({k: -f for k, f in self.terms.items()}, self.floor, self.exact)

	def __sub__(self, other):
		return self + (-other)

	def scale(self, factor):
		return PsiOp({k: f.scale(factor) for k, f in self.terms.items()}, self.floor, self.exact)

	def __mul__(self, other):
		if isinstance(other, PsiOp):
			return psi_mul(self, other)
		return self.scale(other)

	def __rmul__(self, other):
		return self.scale(other)

	def __repr__(self):
		from queertrace.parsing.printer import format_psi

		return f"PsiOp({format_psi(self)!r}, floor={self.floor})"


def _sum_floor(p, q):
	if p.exact and q.exact:
		return min(p.floor, q.floor), True
	candidates = [op.floor for op in (p, q) if not op.exact]
	return max(candidates), False


def reliable_floor(p, q, floor):
	"""Lowest order at which the product of p and q is still determined by the stored terms."""
	if p.exact and q.exact:
		return floor
	bounds = [floor]
	if not p.exact and q.top is not None:
		bounds.append(p.floor + q.top)
	if not q.exact and p.top is not None:
		bounds.append(p.top + q.floor)
	return max(bounds)


def product_floor(p, q, floor=None):
	if floor is not None:
		return int(floor)
	return p.floor + q.floor - int(conf.get("product_floor_margin", 4))


def psi_mul(p, q, floor=None):
	"""Leibniz product truncated at ``floor`` (default: sum of the input floors minus a margin)."""
	if not isinstance(p, PsiOp) or not isinstance(q, PsiOp):
		raise AlgebraMismatchError("psi_mul multiplies PsiOp values")
	floor = product_floor(p, q, floor)
	if not p or not q:
		return PsiOp({}, floor, p.exact and q.exact)
	if floor > p.top + q.top:
		raise TruncationError(f"floor {floor} lies above the top order {p.top + q.top} of the product")
	effective = reliable_floor(p, q, floor)
	exact = p.exact and q.exact
	out = {}
	for a, f in p.terms.items():
		for b, g in q.terms.items():
			k = 0
			derivative = g
			while derivative:
				if a >= 0 and k > a:
					break
				order = a + b - k
				if order < effective:
					exact = False
					break
				term = (f * derivative).scale(gen_binomial(a, k))
				out[order] = out[order] + term if order in out else term
				k += 1
				derivative = derivative.derivative()
	return PsiOp(out, effective, exact)


def psi_commutator(p, q, floor=None):
	floor = product_floor(p, q, floor)
	return psi_mul(p, q, floor) - psi_mul(q, p, floor)


def psi_res(p):
	"""The coefficient of D^{-1}."""
	if p.floor > -1:
		raise TruncationError(f"residue needs floor <= -1, operator is truncated at {p.floor}")
	return p.terms.get(-1, LaurentPoly())


def adler_trace(p):
	"""The x^{-1} coefficient of res P: the part of res P that is not a derivative."""
	return psi_res(p).coefficient(-1)


def weyl_to_psi(op, floor=None):
	"""Embed a one-variable Weyl operator, identifying d with D."""
	if op.nvars != 1:
		raise AlgebraMismatchError("Only W_1 embeds into the pseudo-differential operators")
	terms = {}
	for ((a,), (b,)), c in op.terms.items():
		terms[b] = terms.get(b, LaurentPoly()) + LaurentPoly.monomial(a, c)
	return PsiOp(terms, floor)


def psi_to_weyl(p):
	"""Inverse of ``weyl_to_psi`` for differential operators with polynomial coefficients."""
	from queertrace.weyl.operator import WeylOp

	terms = {}
	for k, f in p.terms.items():
		if k < 0 or not f.is_polynomial():
			raise AlgebraMismatchError("Only differential operators with polynomial coefficients lie in W_1")
		for e, c in f.coeffs.items():
			terms[((e,), (k,))] = c
	return WeylOp(1, terms)


def psi_to_dict(p):
	from queertrace.parsing.printer import format_laurent

	return {
		"floor": p.floor,
		"exact": p.exact,
		"terms": {str(k): format_laurent(f) for k, f in p.terms.items()},
	}


def zero_psi(floor=None):
	return PsiOp({}, floor)


def identity_psi(floor=None):
	return PsiOp({0: LaurentPoly.constant(Fraction(1))}, floor)


def _random_laurent(rng, low, high):
	coeffs = {}
	for e in range(low, high + 1):
		c = int(rng.integers(-3, 4))
		if c and rng.random() < 0.5:
			coeffs[e] = c
	return LaurentPoly(coeffs)


def random_psi(rng, orders=(-3, 3), degrees=(-3, 3), floor=-8):
	"""A random exact PsiOp; the top order always carries a nonzero coefficient."""
	low, high = orders
	terms = {}
	for k in range(low, high + 1):
		f = _random_laurent(rng, *degrees)
		if not f and k == high:
			f = LaurentPoly.monomial(int(rng.integers(degrees[0], degrees[1] + 1)))
		if f:
			terms[k] = f
	return PsiOp(terms, floor)


def adler_vanishing_suite(trials=500, seed=42, floor=-3):
	"""adler_trace([P, Q]) = 0 on random exact pairs, plus the witness adler_trace(x^-1 D^-1) = 1."""
	counterexample = None
	for trial in range(trials):
		rng = np.random.default_rng([seed, trial])
		p, q = random_psi(rng), random_psi(rng)
		value = adler_trace(psi_commutator(p, q, floor))
		if value:
			counterexample = {"trial": trial, "P": repr(p), "Q": repr(q), "value": str(value)}
			break
	witness = adler_trace(psi_mul(PsiOp.x(-1), PsiOp.D(-1)))
	log.info("adler suite: %s trials, counterexample=%s", trials, counterexample is not None)
	return {
		"trials": trials,
		"seed": seed,
		"witness": str(witness),
		"passed": counterexample is None and witness == 1,
		"counterexample": counterexample,
	}
