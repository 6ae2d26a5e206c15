# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""Named functionals: tr, str, qtr, lifted odd supertraces and tensor traces."""

from fractions import Fraction

from queertrace.algebra.constructors import element_to_matrix, matrix_size, tensor_product
from queertrace.algebra.table import Element
from queertrace.exceptions import AlgebraInputError, PreconditionError
from queertrace.queerify.bracket import LIE, LIESUPER, liefy, superliefy
from queertrace.queerify.queer import QPair, element_to_qpair, lie_queerify, queer_base
from queertrace.traces.functional import TraceFunctional, assert_vanishes, vanishing_failures


def _require_matrix(algebra, what):
	size = matrix_size(algebra)
	if size is None:
		raise AlgebraInputError(f"{what} needs a matrix algebra, got {algebra.name}")
	return size


def matrix_trace_functional(lie):
	"""tr on liefy(Mat(n)) (or on any Mat(m|n) carrier, ignoring parity)."""
	size = _require_matrix(lie.carrier, "matrix trace")
	coeffs = [Fraction(0)] * lie.dim
	for i in range(size):
		coeffs[i * size + i] = Fraction(1)
	return TraceFunctional(lie, coeffs, 0)


def supertrace_functional(lie):
	"""str on Mat(m|n): the even block trace minus the odd block trace."""
	origin = lie.carrier.origin
	if origin[:1] == ("mat",):
		return matrix_trace_functional(lie)
	if origin[:1] != ("matsuper",):
		raise AlgebraInputError(f"supertrace needs a matrix superalgebra, got {lie.carrier.name}")
	m, n = origin[1], origin[2]
	size = m + n
	coeffs = [Fraction(0)] * lie.dim
	for i in range(size):
		coeffs[i * size + i] = Fraction(1 if i < m else -1)
	return TraceFunctional(lie, coeffs, 0)


def queertrace(value):
	"""qtr(X, Y) = tr(Y). Accepts a QPair over Mat(n) or an Element of q(n)."""
	if isinstance(value, Element):
		try:
			value = element_to_qpair(value)
		except AlgebraInputError:
			raise AlgebraInputError(f"queertrace needs an element of q(n), got one of {value.algebra.name}")
	if not isinstance(value, QPair):
		raise AlgebraInputError("queertrace needs a QPair or an element of q(n)")
	if value.algebra.origin[:1] != ("mat",):
		raise AlgebraInputError(f"queertrace is defined on q(n); pair lives over {value.algebra.name}")
	rows = element_to_matrix(value.Y)
	return sum((rows[i][i] for i in range(len(rows))), Fraction(0))


def queertrace_functional(qn):
	"""qtr as a TraceFunctional on lie_queerify(Mat(n))."""
	base = queer_base(qn)
	size = _require_matrix(base, "queertrace")
	if base.origin[:1] != ("mat",):
		raise AlgebraInputError(f"queertrace is defined on q(n), not on q({base.name})")
	coeffs = [Fraction(0)] * qn.dim
	for i in range(size):
		coeffs[base.dim + i * size + i] = Fraction(1)
	return TraceFunctional(qn, coeffs, 1)


def lift_odd_supertrace(t, qa=None):
	"""
	tau(x + Pi(y)) := t(y) for a trace t on A^L with A purely even.

	The result is odd and vanishes on the supercommutant of q(A).
	"""
	base = t.algebra.carrier
	if base.is_super:
		raise PreconditionError(f"lift_odd_supertrace needs a purely even algebra, got {base.name}")
	if t.algebra.kind != LIE:
		raise PreconditionError("lift_odd_supertrace lifts traces of A^L")
	assert_vanishes(t, "trace to lift")
	if qa is None:
		qa = lie_queerify(base)
	elif queer_base(qa) is not base:
		raise AlgebraInputError(f"{qa.name} is not q({base.name})")
	coeffs = [Fraction(0)] * base.dim + list(t.coeffs)
	return TraceFunctional(qa, coeffs, 1)


def _product_functional(t1, t2, signed):
	a1, a2 = t1.algebra.carrier, t2.algebra.carrier
	product = tensor_product(a1, a2, signed=signed)
	kind = LIESUPER if LIESUPER in (t1.algebra.kind, t2.algebra.kind) else LIE
	lie = superliefy(product) if kind == LIESUPER else liefy(product)
	coeffs = [c1 * c2 for c1 in t1.coeffs for c2 in t2.coeffs]
	return TraceFunctional(lie, coeffs, (t1.parity + t2.parity) % 2)


def tensor_trace(t1, t2, signed=None):
	"""
	(t1 (x) t2)(a1 (x) a2) = t1(a1) t2(a2) on A1 (x) A2.

	``signed`` defaults to the Koszul convention exactly when both factors are Lie superalgebras.
	Raises TraceVanishingError if the product functional fails on the chosen convention.
	"""
	if signed is None:
		signed = t1.algebra.kind == LIESUPER and t2.algebra.kind == LIESUPER
	return assert_vanishes(_product_functional(t1, t2, signed), "tensor trace")


def tensor_convention_report(t1, t2):
	"""Evaluate the product functional under both tensor conventions and report which pass."""
	result = {}
	for signed in (True, False):
		product = _product_functional(t1, t2, signed)
		failures = vanishing_failures(product)
		result["signed" if signed else "unsigned"] = {
			"pass": not failures,
			"failures": len(failures),
		}
	return result

