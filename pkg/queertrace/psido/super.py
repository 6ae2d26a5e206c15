# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
N=1 extended pseudo-differential operators.

Coefficients are superfunctions f0(x) + xi f1(x). The odd derivation D = d/dxi + xi d/dx squares
to d/dx. Products are generated by

	D o g      = D(g) + sigma(g) D
	D^-1 o g   = sigma(g) D^-1 - (D^-1 o D(sigma g)) D^-1

where sigma(g0 + xi g1) = g0 - xi g1 is the parity involution. The second rule recurses with the
order strictly decreasing, so truncation at the floor terminates.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

import numpy as np

from queertrace.config import conf
from queertrace.exceptions import AlgebraMismatchError, CalibrationError, InhomogeneousElementError, TruncationError
from queertrace.logger import logger
from queertrace.psido.laurent import LaurentPoly
from queertrace.psido.operator import default_floor

log = logger("psido")


class SuperFunction:
	__slots__ = ("even", "odd")

	def __init__(self, even=None, odd=None):
		self.even = even if isinstance(even, LaurentPoly) else LaurentPoly.constant(even or 0)
		self.odd = odd if isinstance(odd, LaurentPoly) else LaurentPoly.constant(odd or 0)

	@classmethod
	def xi(cls):
		return cls(LaurentPoly(), LaurentPoly.constant(1))

	def __eq__(self, other):
		if not isinstance(other, SuperFunction):
			return NotImplemented
		return self.even == other.even and self.odd == other.odd

	__hash__ = None

	def __bool__(self):
		return bool(self.even) or bool(self.odd)

	def __add__(self, other):
		return SuperFunction(self.even + other.even, self.odd + other.odd)

	def __neg__(self):
		return SuperFunction(-self.even, -self.odd)

	def __sub__(self, other):
		return self + (-other)

	def scale(self, factor):
		return SuperFunction(self.even.scale(factor), self.odd.scale(factor))

	def __mul__(self, other):
		if not isinstance(other, SuperFunction):
			return self.scale(other)
		# (a0 + xi a1)(b0 + xi b1) = a0 b0 + xi (a1 b0 + a0 b1)
		return SuperFunction(self.even * other.even, self.odd * other.even + self.even * other.odd)

	def sigma(self):
		return SuperFunction(self.even, -self.odd)

	def parity(self):
		if self.even and self.odd:
			return None
		return 1 if self.odd else 0

	def berezin(self):
		"""Top xi-coefficient."""
		return self.odd

	def __repr__(self):
		from queertrace.parsing.printer import format_superfunction

		return f"SuperFunction({format_superfunction(self)!r})"


def super_D_action(f):
	"""D(f0 + xi f1) = f1 + xi f0'."""
	return SuperFunction(f.odd, f.even.derivative())


class SuperPsiOp:
	__slots__ = ("terms", "floor", "exact")

	def __init__(self, terms=None, floor=None, exact=True):
		floor = default_floor() if floor is None else int(floor)
		clean = {}
		for k, f in (terms or {}).items():
			if not isinstance(f, SuperFunction):
				f = SuperFunction(f)
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
		return cls({power: SuperFunction(1)}, floor)

	@classmethod
	def function(cls, f, floor=None):
		return cls({0: f}, floor)

	@property
	def top(self):
		return max(self.terms, default=None)

	def __eq__(self, other):
		if not isinstance(other, SuperPsiOp):
			return NotImplemented
		return self.terms == other.terms and self.floor == other.floor

	__hash__ = None

	def __bool__(self):
		return bool(self.terms)

	def parity(self):
		"""Parity p(f) + k of every term f D^k when homogeneous, else None."""
		parities = set()
		for k, f in self.terms.items():
			for part, p in ((f.even, 0), (f.odd, 1)):
				if part:
					parities.add((p + k) % 2)
		if len(parities) > 1:
			return None
		return parities.pop() if parities else 0

	def coefficient(self, order):
		if order < self.floor:
			raise TruncationError(f"order {order} lies below the truncation floor {self.floor}")
		return self.terms.get(order, SuperFunction())

	def __add__(self, other):
		if not isinstance(other, SuperPsiOp):
			raise AlgebraMismatchError("SuperPsiOp can only be added to SuperPsiOp")
		if self.exact and other.exact:
			floor, exact = min(self.floor, other.floor), True
		else:
			floor, exact = max(op.floor for op in (self, other) if not op.exact), False
		out = dict(self.terms)
		for k, f in other.terms.items():
			out[k] = out[k] + f if k in out else f
		return SuperPsiOp(out, floor, exact)

	def __neg__(self):
		return SuperPsiOp({k: -f for k, f in self.terms.items()}, self.floor, self.exact)

	def __sub__(self, other):
		return self + (-other)

	def scale(self, factor):
		return SuperPsiOp({k: f.scale(factor) for k, f in self.terms.items()}, self.floor, self.exact)

	def __mul__(self, other):
		if isinstance(other, SuperPsiOp):
			return spsi_mul(self, other)
		return self.scale(other)

	def __rmul__(self, other):
		return self.scale(other)

	def __repr__(self):
		from queertrace.parsing.printer import format_spsi

		return f"SuperPsiOp({format_spsi(self)!r}, floor={self.floor})"


def _accumulate(target, order, f):
	if f:
		target[order] = target[order] + f if order in target else f


def _left_d(ops):
	"""D o (sum c_j D^j)."""
	out = {}
	for j, c in ops.items():
		_accumulate(out, j, super_D_action(c))
		_accumulate(out, j + 1, c.sigma())
	return out


def _left_dinv_function(g, floor):
	"""D^-1 o g as {order: coefficient} down to ``floor``; also whether anything was dropped."""
	if not g:
		return {}, False
	if -1 < floor:
		return {}, True
	out = {-1: g.sigma()}
	inner, dropped = _left_dinv_function(super_D_action(g.sigma()), floor + 1)
	for j, c in inner.items():
		_accumulate(out, j - 1, -c)
	return out, dropped


def _left_dinv(ops, floor):
	out, dropped = {}, False
	for j, c in ops.items():
		part, cut = _left_dinv_function(c, floor - j)
		dropped = dropped or cut
		for i, e in part.items():
			_accumulate(out, i + j, e)
	return out, dropped


def _left_power(a, g, floor):
	"""D^a o g down to ``floor``."""
	ops, dropped = {0: g}, False
	if a >= 0:
		for _ in range(a):
			ops = _left_d(ops)
	else:
		for _ in range(-a):
			ops, cut = _left_dinv(ops, floor)
			dropped = dropped or cut
	kept = {j: c for j, c in ops.items() if j >= floor and c}
	if any(j < floor and c for j, c in ops.items()):
		dropped = True
	return kept, dropped


def spsi_mul(p, q, floor=None):
	"""(f D^a)(g D^b) = sum_j f c_j D^{j+b} where D^a o g = sum_j c_j D^j."""
	if not isinstance(p, SuperPsiOp) or not isinstance(q, SuperPsiOp):
		raise AlgebraMismatchError("spsi_mul multiplies SuperPsiOp values")
	if floor is None:
		floor = p.floor + q.floor - int(conf.get("product_floor_margin", 4))
	if not p or not q:
		return SuperPsiOp({}, floor, p.exact and q.exact)
	if floor > p.top + q.top:
		raise TruncationError(f"floor {floor} lies above the top order {p.top + q.top} of the product")
	effective = floor
	if not p.exact:
		effective = max(effective, p.floor + q.top)
	if not q.exact:
		effective = max(effective, p.top + q.floor)
	exact = p.exact and q.exact
	out = {}
	for a, f in p.terms.items():
		for b, g in q.terms.items():
			expansion, dropped = _left_power(a, g, effective - b)
			exact = exact and not dropped
			for j, c in expansion.items():
				_accumulate(out, j + b, f * c)
	return SuperPsiOp(out, effective, exact)


def spsi_supercommutator(p, q, floor=None):
	"""[P, Q] = PQ - (-1)^{p(P)p(Q)} QP for homogeneous P, Q."""
	pp, pq = p.parity(), q.parity()
	if pp is None or pq is None:
		raise InhomogeneousElementError("Supercommutator needs homogeneous operators")
	if floor is None:
		floor = p.floor + q.floor - int(conf.get("product_floor_margin", 4))
	return spsi_mul(p, q, floor) - spsi_mul(q, p, floor).scale((-1) ** (pp * pq))


def spsi_res(p):
	"""The coefficient of D^{-1}."""
	if p.floor > -1:
		raise TruncationError(f"residue needs floor <= -1, operator is truncated at {p.floor}")
	return p.terms.get(-1, SuperFunction())


# Manin-Radul supertrace calibration


@dataclass(frozen=True)
class Convention:
	"""A candidate functional: the x^-1 coefficient of one part of the D^order coefficient."""

	order: int
	part: str
	epsilon: int = 1

	def __call__(self, p):
		if p.floor > self.order:
			raise TruncationError(f"operator is truncated above order {self.order}")
		f = p.terms.get(self.order, SuperFunction())
		piece = f.odd if self.part == "xi" else f.even
		return self.epsilon * piece.coefficient(-1)

	def to_dict(self):
		return {"order": self.order, "part": self.part, "epsilon": self.epsilon}


CANDIDATES = tuple(Convention(order, part) for order in (-1, -2) for part in ("xi", "even"))


def _laurent(rng, low, high):
	coeffs = {}
	for e in range(low, high + 1):
		c = int(rng.integers(-3, 4))
		if c and rng.random() < 0.5:
			coeffs[e] = c
	return LaurentPoly(coeffs)


def random_homogeneous_spsi(rng, parity, orders=(-3, 3), degrees=(-3, 3), floor=-8):
	"""A random SuperPsiOp whose terms all have parity ``parity``; the top order is always present."""
	terms = {}
	low, high = orders
	for k in range(low, high + 1):
		if k < high and rng.random() < 0.4:
			continue
		g = _laurent(rng, *degrees)
		if not g and k == high:
			g = LaurentPoly.monomial(int(rng.integers(degrees[0], degrees[1] + 1)))
		# p(f) + k = parity
		f = SuperFunction(g, LaurentPoly()) if (k % 2) == parity else SuperFunction(LaurentPoly(), g)
		if f:
			terms[k] = f
	return SuperPsiOp(terms, floor)


def _structured_probes():
	d = SuperPsiOp.D(1, floor=-6)
	probes = []
	for e in (-1, -2, 0, 1):
		for k in (-1, -2, -3):
			xi_f = SuperPsiOp({k: SuperFunction(LaurentPoly(), LaurentPoly.monomial(e))}, floor=-6)
			probes.append(spsi_supercommutator(d, xi_f, floor=-4))
	return probes


@dataclass
class CalibrationReport:
	convention: Convention | None
	passing: list = field(default_factory=list)
	probes: int = 0

	def to_dict(self):
		return {
			"convention": self.convention.to_dict() if self.convention else None,
			"passing": [c.to_dict() for c in self.passing],
			"candidates": [c.to_dict() for c in CANDIDATES],
			"probes": self.probes,
		}


def calibrate(trials=60, seed=42):
	"""Keep the candidates that vanish on every probe supercommutator; exactly one must survive."""
	probes = _structured_probes()
	for trial in range(trials):
		rng = np.random.default_rng([seed, trial])
		p = random_homogeneous_spsi(rng, int(rng.integers(0, 2)), orders=(-2, 2), degrees=(-2, 2))
		q = random_homogeneous_spsi(rng, int(rng.integers(0, 2)), orders=(-2, 2), degrees=(-2, 2))
		probes.append(spsi_supercommutator(p, q, floor=-3))

	witness = SuperPsiOp({-1: SuperFunction(LaurentPoly(), LaurentPoly.monomial(-1))}, floor=-6)
	passing = [c for c in CANDIDATES if all(c(b) == 0 for b in probes)]
	if len(passing) != 1:
		raise CalibrationError(
			f"{len(passing)} supertrace conventions survived calibration",
			{"passing": [c.to_dict() for c in passing]},
		)
	chosen = passing[0]
	# epsilon normalizes the witness xi x^-1 D^-1 to +1
	epsilon = 1 if chosen(witness) > 0 else -1
	convention = Convention(chosen.order, chosen.part, epsilon)
	log.info("supertrace calibration selected %s", convention)
	return CalibrationReport(convention, passing, len(probes))


@cache
def calibrated_convention():
	return calibrate().convention


def mr_supertrace(p):
	"""The calibrated even supertrace: Berezin integral of the residue, x^-1 coefficient."""
	if p.floor > -1:
		raise TruncationError(f"supertrace needs floor <= -1, operator is truncated at {p.floor}")
	return calibrated_convention()(p)


def mr_vanishing_suite(trials=500, seed=42, floor=-3):
	"""mr_supertrace([P, Q]) = 0 on random homogeneous exact pairs."""
	convention = calibrated_convention()
	counterexample = None
	for trial in range(trials):
		rng = np.random.default_rng([seed, 10_000 + trial])
		p = random_homogeneous_spsi(rng, int(rng.integers(0, 2)))
		q = random_homogeneous_spsi(rng, int(rng.integers(0, 2)))
		value = convention(spsi_supercommutator(p, q, floor=floor))
		if value:
			counterexample = {"trial": trial, "P": repr(p), "Q": repr(q), "value": str(value)}
			break
	return {"trials": trials, "seed": seed, "passed": counterexample is None, "counterexample": counterexample}


def spsi_associativity_suite(trials=200, seed=42, floor=-4):
	"""(PQ)R = P(QR) at every order >= floor on random homogeneous triples."""
	failures = []
	for trial in range(trials):
		rng = np.random.default_rng([seed, 20_000 + trial])
		p, q, r = (
			random_homogeneous_spsi(rng, int(rng.integers(0, 2)), orders=(-2, 2), degrees=(-2, 2), floor=-12)
			for _ in range(3)
		)
		depth = floor - 6
		left = spsi_mul(spsi_mul(p, q, depth), r, depth)
		right = spsi_mul(p, spsi_mul(q, r, depth), depth)
		for order in range(floor, 7):
			if left.terms.get(order, SuperFunction()) != right.terms.get(order, SuperFunction()):
				failures.append(trial)
				break
	return {"trials": trials, "seed": seed, "passed": not failures, "failures": failures[:5]}


def zero_spsi(floor=None):
	return SuperPsiOp({}, floor)


def identity_spsi(floor=None):
	return SuperPsiOp({0: SuperFunction(Fraction(1))}, floor)
