# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Bracket algebras: Lie algebras and Lie superalgebras given by bracket structure constants.

Elements of a BracketAlgebra are Elements of its ``carrier`` table; when the bracket came from
an associative table (liefy, superliefy) the carrier is that table itself.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from queertrace.algebra.scalar import sign, to_scalar
from queertrace.algebra.table import AlgebraTable, Element, basis_product
from queertrace.exceptions import AlgebraInputError, AlgebraMismatchError, InhomogeneousElementError

LIE = "lie"
LIESUPER = "liesuper"


@dataclass(frozen=True, eq=False)
class BracketAlgebra:
	carrier: AlgebraTable
	bracket: tuple
	kind: str
	base: AlgebraTable | None = None
	_brackets: dict = field(default=None, init=False, repr=False)

	def __post_init__(self):
		if self.kind not in (LIE, LIESUPER):
			raise AlgebraInputError(f"Unknown bracket kind {self.kind!r}")
		dim = self.carrier.dim
		table = {}
		for entry in self.bracket:
			i, j, k, c = entry
			i, j, k, c = int(i), int(j), int(k), to_scalar(c)
			if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
				raise AlgebraInputError(f"Bracket entry {entry!r} out of range")
			if c:
				slot = table.setdefault((i, j), {})
				slot[k] = slot.get(k, Fraction(0)) + c
		for key in [key for key, row in table.items() if not any(row.values())]:
			del table[key]
		entries = tuple(
			(i, j, k, c) for (i, j), row in sorted(table.items()) for k, c in sorted(row.items()) if c
		)
		object.__setattr__(self, "bracket", entries)
		object.__setattr__(self, "_brackets", table)

	@property
	def name(self):
		prefix = "lie" if self.kind == LIE else "liesuper"
		return f"{prefix}({self.carrier.name})"

	@property
	def dim(self):
		return self.carrier.dim

	@property
	def basis(self):
		return self.carrier.basis

	@property
	def parity(self):
		return self.carrier.parity

	@property
	def bigrade(self):
		return self.carrier.bigrade

	@property
	def is_super(self):
		return self.kind == LIESUPER

	def bracket_basis(self, i, j):
		"""[e_i, e_j] as an Element of the carrier."""
		return Element(self.carrier, {k: c for k, c in self._brackets.get((i, j), {}).items() if c})

	def basis_element(self, label):
		return self.carrier.basis_element(label)

	def basis_elements(self):
		return self.carrier.basis_elements()

	def __repr__(self):
		return f"<BracketAlgebra {self.name}>"


def _bracket_table(algebra, graded):
	entries = []
	for i in range(algebra.dim):
		for j in range(algebra.dim):
			ij = basis_product(algebra, i, j)
			ji = basis_product(algebra, j, i)
			s = sign(algebra.parity[i] * algebra.parity[j]) if graded else 1
			for k, c in (ij - ji.scale(s)).coeffs.items():
				entries.append((i, j, k, c))
	return tuple(entries)


def liefy(algebra):
	"""A^L: same space, bracket the commutator ab - ba. Any grading is carried along."""
	return BracketAlgebra(carrier=algebra, bracket=_bracket_table(algebra, graded=False), kind=LIE)


def superliefy(algebra):
	"""A^S: same space, bracket the supercommutator ab - (-1)^{p(a)p(b)} ba."""
	return BracketAlgebra(carrier=algebra, bracket=_bracket_table(algebra, graded=True), kind=LIESUPER)


def bracket_elements(lie, u, v):
	"""Bilinear extension of the bracket table."""
	for w in (u, v):
		if not isinstance(w, Element) or w.algebra is not lie.carrier:
			raise AlgebraMismatchError(f"Operand does not belong to {lie.name}")
	out = {}
	for i, a in u.coeffs.items():
		for j, b in v.coeffs.items():
			for k, c in lie._brackets.get((i, j), {}).items():
				out[k] = out.get(k, Fraction(0)) + a * b * c
	return Element(lie.carrier, out)


def _graded_sign(lie, *exponents):
	if not lie.is_super:
		return 1
	return sign(sum(exponents))


def check_super_antisymmetry(lie):
	"""Basis pairs where [e_i, e_j] + (-1)^{p_i p_j} [e_j, e_i] != 0."""
	p = lie.parity
	failures = []
	for i in range(lie.dim):
		for j in range(i, lie.dim):
			s = _graded_sign(lie, p[i] * p[j])
			if lie.bracket_basis(i, j) + lie.bracket_basis(j, i).scale(s):
				failures.append((i, j))
	return failures


def check_super_jacobi(lie):
	"""
	Basis triples breaking the (super) Jacobi identity

		(-1)^{p_i p_k} [e_i, [e_j, e_k]] + cyclic = 0.
	"""
	p = lie.parity
	basis = lie.basis_elements()
	failures = []
	for i in range(lie.dim):
		for j in range(lie.dim):
			for k in range(lie.dim):
				total = (
					bracket_elements(lie, basis[i], lie.bracket_basis(j, k)).scale(_graded_sign(lie, p[i] * p[k]))
					+ bracket_elements(lie, basis[j], lie.bracket_basis(k, i)).scale(_graded_sign(lie, p[j] * p[i]))
					+ bracket_elements(lie, basis[k], lie.bracket_basis(i, j)).scale(_graded_sign(lie, p[k] * p[j]))
				)
				if total:
					failures.append((i, j, k))
	return failures


def check_bracket_homogeneity(lie):
	"""Basis pairs whose bracket leaves the (bi)grade sum of the operands."""
	grades = lie.bigrade if lie.bigrade is not None else [(0, p) for p in lie.parity]
	failures = []
	for (i, j), row in lie._brackets.items():
		expected = ((grades[i][0] + grades[j][0]) % 2, (grades[i][1] + grades[j][1]) % 2)
		if any(grades[k] != expected for k, c in row.items() if c):
			failures.append((i, j))
	return failures


def require_homogeneous(u):
	p = u.parity()
	if p is None:
		raise InhomogeneousElementError("Operation needs a parity-homogeneous element")
	return p
