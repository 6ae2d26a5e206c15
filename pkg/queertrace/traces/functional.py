# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Commutants and trace spaces of bracket algebras.

A (super)trace is a linear functional killing every bracket of basis elements. The bracket of two
homogeneous basis elements is homogeneous, so the commutant is parity-homogeneous and the
solution space splits into even functionals (supported on even basis elements) and odd ones.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from queertrace.algebra import linalg
from queertrace.algebra.scalar import format_scalar
from queertrace.algebra.table import Element
from queertrace.exceptions import AlgebraMismatchError, TraceVanishingError
from queertrace.logger import logger

log = logger("traces")


@dataclass(frozen=True, eq=False)
class TraceFunctional:
	algebra: object
	coeffs: tuple
	parity: int

	def __post_init__(self):
		coeffs = tuple(Fraction(c) for c in self.coeffs)
		if len(coeffs) != self.algebra.dim:
			raise AlgebraMismatchError(f"Functional has {len(coeffs)} coefficients, {self.algebra.name} needs {self.algebra.dim}")
		object.__setattr__(self, "coeffs", coeffs)

	def __call__(self, u):
		if not isinstance(u, Element) or u.algebra is not self.algebra.carrier:
			raise AlgebraMismatchError(f"Element does not belong to {self.algebra.name}")
		return sum((self.coeffs[i] * c for i, c in u.coeffs.items()), Fraction(0))

	def __eq__(self, other):
		if not isinstance(other, TraceFunctional):
			return NotImplemented
		return self.algebra is other.algebra and self.coeffs == other.coeffs

	__hash__ = None

	def is_zero(self):
		return not any(self.coeffs)

	def to_dict(self):
		basis = self.algebra.basis
		return {
			"parity": self.parity,
			"coeffs": {basis[i]: format_scalar(c) for i, c in enumerate(self.coeffs) if c},
		}


@dataclass
class TraceSpaceReport:
	even_dim: int
	odd_dim: int
	basis: list
	commutant_dim: int
	checks: list = field(default_factory=list)

	@property
	def dims(self):
		return (self.even_dim, self.odd_dim)

	def to_dict(self):
		return {
			"evenDim": self.even_dim,
			"oddDim": self.odd_dim,
			"commutantDim": self.commutant_dim,
			"functionals": [t.to_dict() for t in self.basis],
			"checks": list(self.checks),
		}


def bracket_vectors(lie):
	"""Coordinate vectors of [e_i, e_j] over all basis pairs, with their parities."""
	vectors = []
	for i in range(lie.dim):
		for j in range(lie.dim):
			b = lie.bracket_basis(i, j)
			if b:
				vectors.append(((lie.parity[i] + lie.parity[j]) % 2, b.vector()))
	return vectors


def commutant_basis(lie):
	"""Row-reduced basis of span{[e_i, e_j]}."""
	return linalg.row_space([v for _, v in bracket_vectors(lie)], lie.dim)


def commutant_parts(lie):
	"""(even part, odd part) of the commutant as row-reduced bases."""
	vectors = bracket_vectors(lie)
	even = linalg.row_space([v for p, v in vectors if p == 0], lie.dim)
	odd = linalg.row_space([v for p, v in vectors if p == 1], lie.dim)
	return even, odd


def vanishing_failures(functional, lie=None):
	"""Basis pairs (i, j) with t([e_i, e_j]) != 0."""
	lie = lie or functional.algebra
	failures = []
	for i in range(lie.dim):
		for j in range(lie.dim):
			if functional(lie.bracket_basis(i, j)):
				failures.append((i, j))
	return failures


def assert_vanishes(functional, title="trace"):
	failures = vanishing_failures(functional)
	if failures:
		i, j = failures[0]
		basis = functional.algebra.basis
		raise TraceVanishingError(
			f"{title} does not vanish on [{basis[i]}, {basis[j]}] in {functional.algebra.name}",
			{"failures": len(failures)},
		)
	return functional


def trace_space(lie):
	"""Solve t([e_i, e_j]) = 0 separately on the even and odd coordinate blocks."""
	commutant = commutant_basis(lie)
	functionals = []
	dims = {}
	for parity in (0, 1):
		block = [i for i, p in enumerate(lie.parity) if p == parity]
		rows = [[row[i] for i in block] for row in commutant]
		solutions = linalg.nullspace(rows, len(block))
		dims[parity] = len(solutions)
		for sol in solutions:
			coeffs = [Fraction(0)] * lie.dim
			for i, c in zip(block, sol):
				coeffs[i] = c
			functionals.append(TraceFunctional(lie, coeffs, parity))

	checks = [
		{"name": "dimension_count", "pass": dims[0] + dims[1] == lie.dim - len(commutant)},
		{"name": "vanishing", "pass": all(not vanishing_failures(t) for t in functionals)},
	]
	log.info("trace space of %s: even=%s odd=%s", lie.name, dims[0], dims[1])
	return TraceSpaceReport(dims[0], dims[1], functionals, len(commutant), checks)
