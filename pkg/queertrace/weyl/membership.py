# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Decomposing P in W_1 as s*1 + sum of supercommutators.

Nonzero weights are handled by the weight operator: [xd, Q] = wht(Q) Q. The weight-zero part is
an exact linear solve against the brackets [x, x^a d^{a+1}] and [d, x^{a+1} d^a]; since x and d
generate W_1 these span the weight-zero supercommutator.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from queertrace.algebra import linalg
from queertrace.config import conf
from queertrace.exceptions import PreconditionError, PropertyCheckError
from queertrace.logger import logger
from queertrace.weyl.operator import WeylOp, weyl_bracket
from queertrace.weyl.supertrace import weyl_supertrace_T

log = logger("weyl")


@dataclass
class MembershipResult:
	success: bool
	scalar: Fraction = Fraction(0)
	pairs: list = field(default_factory=list)
	degree_cap: int = 0
	certificate: Fraction | None = None

	def reconstruct(self, nvars=1):
		total = WeylOp.constant(self.scalar, nvars)
		for a, b in self.pairs:
			total = total + weyl_bracket(a, b)
		return total

	def to_dict(self):
		from queertrace.parsing.printer import format_weyl

		return {
			"success": self.success,
			"scalar": str(self.scalar),
			"pairs": [[format_weyl(a), format_weyl(b)] for a, b in self.pairs],
			"degreeCap": self.degree_cap,
			"certificate": None if self.certificate is None else str(self.certificate),
		}


def _weight_zero_solve(p0, cap, allow_scalar):
	"""Solve p0 = s*1 + sum u_a [x, x^a d^{a+1}] + v_a [d, x^{a+1} d^a] with brackets of degree <= cap."""
	x, d = WeylOp.x(), WeylOp.d()
	top = max((a for ((a,), _) in p0.terms), default=0)
	candidates = []
	# 2a + 1 <= cap
	for a in range((cap + 1) // 2):
		candidates.append((x, WeylOp.monomial((a,), (a + 1,))))
		candidates.append((d, WeylOp.monomial((a + 1,), (a,))))
	brackets = [weyl_bracket(left, right) for left, right in candidates]
	nrows = max([top] + [max(a for ((a,), _) in b.terms) for b in brackets if b]) + 1

	def vec(op):
		v = [Fraction(0)] * nrows
		for ((a,), _), c in op.terms.items():
			v[a] = c
		return v

	columns = [vec(b) for b in brackets]
	if allow_scalar:
		columns = [vec(WeylOp.constant(1))] + columns
	solution = linalg.solve(columns, vec(p0), nrows)
	if solution is None:
		return None
	scalar = Fraction(0)
	if allow_scalar:
		scalar, solution = solution[0], solution[1:]
	pairs = [(left, right.scale(c)) for (left, right), c in zip(candidates, solution) if c]
	return scalar, pairs


def commutant_membership(p, degree_cap=None, allow_scalar=False):
	"""
	Write P = sum [A_i, B_i] in W_1, or P = s*1 + sum [A_i, B_i] with ``allow_scalar=True``.

	The cap starts at ``degree_cap`` (default deg P + degree_cap_margin) and doubles on failure
	up to ``degree_cap_limit``. Without the scalar a P outside the supercommutator fails with
	certificate T(P) != 0. With it, success gives s = T(P)/T(1) = 2 T(P).
	"""
	if p.nvars != 1:
		raise PreconditionError("commutant_membership works in W_1")
	limit = int(conf.get("degree_cap_limit", 24))
	cap = degree_cap if degree_cap is not None else p.degree + int(conf.get("degree_cap_margin", 6))
	if cap < p.degree:
		raise PreconditionError(f"degree cap {cap} is below deg P = {p.degree}")

	xd = WeylOp.monomial((1,), (1,))
	pairs = []
	for w in sorted({wt for wt in (a[0] - b[0] for a, b in p.terms) if wt}):
		pairs.append((xd, p.weight_component(w).scale(Fraction(1, w))))
	p0 = p.weight_component(0)

	while True:
		solved = _weight_zero_solve(p0, cap, allow_scalar)
		if solved is not None:
			scalar, zero_pairs = solved
			result = MembershipResult(True, scalar, pairs + zero_pairs, cap)
			if result.reconstruct() != p:
				raise PropertyCheckError("weight decomposition failed to reconstruct P")
			return result
		if not allow_scalar and weyl_supertrace_T(p0):
			# T kills every supercommutator, so no cap can succeed
			return MembershipResult(False, degree_cap=cap, certificate=weyl_supertrace_T(p))
		if cap >= limit:
			log.warning("commutant_membership gave up at degree cap %s", cap)
			return MembershipResult(False, degree_cap=cap, certificate=weyl_supertrace_T(p))
		cap = min(max(2 * cap, 1), limit)
		log.info("commutant_membership: raising degree cap to %s", cap)
