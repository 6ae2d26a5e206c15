# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Structural comparisons of commutants.

Case 1: traces on A^L versus even supertraces on q(A), A purely even.
Case 2: the commutants of A^L and A^S for a Z/2-graded A.
Case 3: the four bigraded components of the supercommutant of q(A), A super.
"""

from queertrace.algebra import linalg
from queertrace.algebra.table import basis_product
from queertrace.exceptions import PreconditionError
from queertrace.logger import logger
from queertrace.queerify.bracket import liefy, superliefy
from queertrace.queerify.queer import BIGRADES, lie_queerify
from queertrace.traces.functional import bracket_vectors, commutant_parts, trace_space

log = logger("traces")


def _check(name, passed, asserted=True):
	return {"name": name, "pass": bool(passed), "asserted": asserted}


def _finish(report):
	report["passed"] = all(c["pass"] for c in report["checks"] if c["asserted"])
	return report


def case1_deficit(algebra):
	"""Number of traces on A^L against the number of even supertraces on q(A). Reported only."""
	if algebra.is_super:
		raise PreconditionError("Case 1 compares purely even algebras")
	traces = trace_space(liefy(algebra))
	queer = trace_space(lie_queerify(algebra))
	return {
		"algebra": algebra.name,
		"traces": traces.even_dim,
		"evenSupertracesOnQ": queer.even_dim,
		"oddSupertracesOnQ": queer.odd_dim,
		"deficit": traces.even_dim - queer.even_dim,
	}


def case2_report(algebra):
	"""Compare the commutants g' of A^L and s' of A^S, split by parity."""
	d = algebra.dim
	g_even, g_odd = commutant_parts(liefy(algebra))
	s_even, s_odd = commutant_parts(superliefy(algebra))

	# (g_0)': commutators of even basis elements
	even = algebra.even_indices()
	g0_prime = linalg.row_space(
		[(basis_product(algebra, i, j) - basis_product(algebra, j, i)).vector() for i in even for j in even],
		d,
	)

	report = {
		"algebra": algebra.name,
		"dims": {
			"g'_0": len(g_even),
			"g'_1": len(g_odd),
			"s'_0": len(s_even),
			"s'_1": len(s_odd),
			"(g_0)'": len(g0_prime),
		},
		"checks": [
			_check("odd_parts_equal", linalg.spans_equal(g_odd, s_odd, d)),
			_check("g0_commutant_in_g'_0", linalg.span_includes(g_even, g0_prime, d)),
			_check("g0_commutant_in_s'_0", linalg.span_includes(s_even, g0_prime, d)),
			_check("even_parts_equal", linalg.spans_equal(g_even, s_even, d), asserted=False),
		],
	}
	return _finish(report)


def bigraded_commutant(qa):
	"""Row-reduced span of the supercommutant of q(A) in each bigrade."""
	grades = qa.bigrade
	parts = {g: [] for g in BIGRADES}
	for _, vector in bracket_vectors(qa):
		support = {grades[k] for k, c in enumerate(vector) if c}
		# brackets of basis elements are bihomogeneous
		(grade,) = support
		parts[grade].append(vector)
	return {g: linalg.row_space(vectors, qa.dim) for g, vectors in parts.items()}


def case3_report(algebra):
	"""Check the Case-3 description of the supercommutant of q(A) component by component."""
	if not algebra.is_super:
		raise PreconditionError(f"Case 3 needs a superalgebra, got purely even {algebra.name}")
	d = algebra.dim
	qa = lie_queerify(algebra)
	u = bigraded_commutant(qa)

	even, odd = algebra.even_indices(), algebra.odd_indices()

	def embed(vector, shift):
		out = [0] * (2 * d)
		for i, c in enumerate(vector):
			out[i + shift] = c
		return out

	# (A_0)^2 + (A_1)^2 inside the unshifted copy
	squares = [
		embed(basis_product(algebra, i, j).vector(), 0)
		for block in (even, odd)
		for i in block
		for j in block
	]
	# Pi(A_0 A_1), with A_0 A_1 = span{xa, ax}
	mixed = [
		embed(basis_product(algebra, i, j).vector(), d)
		for x in even
		for a in odd
		for i, j in ((x, a), (a, x))
	]
	g_even, g_odd = commutant_parts(liefy(algebra))
	g_odd_embedded = [embed(v, 0) for v in g_odd]

	n = 2 * d
	checks = [
		_check("u00_is_squares", linalg.spans_equal(u[(0, 0)], squares, n)),
		_check("u10_is_pi_of_mixed", linalg.spans_equal(u[(1, 0)], mixed, n)),
		_check("u01_is_odd_commutant", linalg.spans_equal(u[(0, 1)], g_odd_embedded, n)),
	]
	if algebra.unit is not None:
		full_even = [embed(algebra.basis_element(i).vector(), 0) for i in even]
		pi_odd = [embed(algebra.basis_element(i).vector(), d) for i in odd]
		checks.append(_check("unital_u00_is_g0", linalg.spans_equal(u[(0, 0)], full_even, n)))
		checks.append(_check("unital_u10_is_pi_g1", linalg.spans_equal(u[(1, 0)], pi_odd, n)))

	space = trace_space(qa)
	report = {
		"algebra": algebra.name,
		"dims": {f"u{a}{b}": len(u[(a, b)]) for a, b in BIGRADES},
		"traceSpace": {"evenDim": space.even_dim, "oddDim": space.odd_dim},
		"checks": checks,
	}
	log.info("case 3 report for %s: %s", algebra.name, report["dims"])
	return _finish(report)
