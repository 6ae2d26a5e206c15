# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
If A = [A, A] then A (x) B = [A (x) B, A (x) B] for unital B: a (x) b = [a1 (x) 1, a2 (x) b] whenever
a = [a1, a2]. A nonzero finite-dimensional algebra always has a nonzero (super)trace, so table
inputs can only fail the precondition; the infinite-dimensional witness is W_1 with the plain
commutator, where x^a d^b = [d, x^{a+1} d^b] / (a + 1).
"""

from fractions import Fraction

from queertrace.algebra.constructors import tensor_product
from queertrace.algebra.table import AlgebraTable
from queertrace.exceptions import AlgebraInputError, PreconditionError
from queertrace.logger import logger
from queertrace.queerify.bracket import liefy, superliefy
from queertrace.traces.functional import trace_space
from queertrace.weyl.operator import WeylAlgebra, WeylOp, monomials_up_to, weyl_mul

log = logger("traces")


def _lie(algebra):
	return superliefy(algebra) if algebra.is_super else liefy(algebra)


def _tensor(op, element):
	"""W_1 (x) B as {(weyl key, basis index): coefficient}."""
	out = {}
	for key, c in op.terms.items():
		for i, e in element.coeffs.items():
			out[(key, i)] = out.get((key, i), Fraction(0)) + c * e
	return {k: v for k, v in out.items() if v}


def _difference(left, right):
	out = dict(left)
	for k, v in right.items():
		out[k] = out.get(k, Fraction(0)) - v
	return {k: v for k, v in out.items() if v}


def _weyl_check(b, degree):
	unit = b.one()
	d = WeylOp.d()
	checked = 0
	failures = []
	for alpha, beta in monomials_up_to(1, degree):
		(a,), (m,) = alpha, beta
		target = WeylOp.monomial(alpha, beta)
		partner = WeylOp.monomial((a + 1,), (m,), Fraction(1, a + 1))
		for idx, e in enumerate(b.basis_elements()):
			# [d (x) 1, partner (x) e] with the plain commutator
			left = _tensor(weyl_mul(d, partner), unit * e)
			right = _tensor(weyl_mul(partner, d), e * unit)
			if _difference(_difference(left, right), _tensor(target, e)):
				failures.append({"monomial": repr(target), "basis": b.basis[idx]})
			checked += 1
	return checked, failures


def no_trace_propagation_check(a, b, degree=6):
	"""
	Confirm that A (x) B has no trace when A has none.

	``a`` is an AlgebraTable (its (super)liefied trace space must vanish) or a WeylAlgebra(1), read
	as an ungraded algebra with the plain commutator; in that case every monomial of degree
	<= ``degree`` tensored with every basis element of ``b`` is exhibited as a commutator.
	"""
	if not isinstance(b, AlgebraTable):
		raise AlgebraInputError("B must be an algebra table")
	b.one()

	if isinstance(a, WeylAlgebra):
		if a.nvars != 1:
			raise PreconditionError("The commutator witness is written for W_1")
		checked, failures = _weyl_check(b, degree)
		report = {
			"A": f"{a.name} (ungraded)",
			"B": b.name,
			"degree": degree,
			"checked": checked,
			"failures": failures,
			"traceDim": 0 if not failures else None,
			"passed": not failures,
		}
		log.info("no-trace propagation %s (x) %s: %s checks", a.name, b.name, checked)
		return report

	before = trace_space(_lie(a))
	if before.even_dim or before.odd_dim:
		raise PreconditionError(
			f"{a.name} carries {before.even_dim} even and {before.odd_dim} odd traces; the check needs none",
			{"evenDim": before.even_dim, "oddDim": before.odd_dim},
		)
	after = trace_space(_lie(tensor_product(a, b, signed=a.is_super and b.is_super)))
	return {
		"A": a.name,
		"B": b.name,
		"traceDim": after.even_dim + after.odd_dim,
		"passed": not (after.even_dim or after.odd_dim),
	}
