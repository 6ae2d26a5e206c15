# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Finite-dimensional associative (super)algebras given by structure constants, and their elements.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from queertrace.algebra.scalar import format_scalar, sign, to_scalar
from queertrace.exceptions import (
	AlgebraInputError,
	AlgebraMismatchError,
	InhomogeneousElementError,
	PreconditionError,
)


@dataclass(frozen=True, eq=False)
class AlgebraTable:
	"""
	An associative (super)algebra.

	``mul`` holds sparse entries ``(i, j, k, c)``: e_i * e_j contains c * e_k. Duplicate
	``(i, j, k)`` entries are summed. ``origin`` records how the table was built, e.g.
	``("mat", n)``, so that block-matrix views can be recovered. Tables compare by identity.
	"""

	name: str
	basis: tuple
	parity: tuple
	mul: tuple
	bigrade: tuple | None = None
	unit: dict | None = None
	origin: tuple = ()
	_products: dict = field(default=None, init=False, repr=False)
	_index: dict = field(default=None, init=False, repr=False)

	def __post_init__(self):
		basis = tuple(str(b) for b in self.basis)
		dim = len(basis)
		if dim == 0:
			raise AlgebraInputError(f"Algebra {self.name!r} has an empty basis")
		if len(set(basis)) != dim:
			raise AlgebraInputError(f"Algebra {self.name!r} has duplicate basis labels")
		parity = tuple(int(p) for p in self.parity)
		if len(parity) != dim or any(p not in (0, 1) for p in parity):
			raise AlgebraInputError(f"Algebra {self.name!r}: parity must list one 0|1 per basis label")

		bigrade = None
		if self.bigrade is not None:
			bigrade = tuple((int(a), int(b)) for a, b in self.bigrade)
			if len(bigrade) != dim or any(a not in (0, 1) or b not in (0, 1) for a, b in bigrade):
				raise AlgebraInputError(f"Algebra {self.name!r}: bigrade must list one pair per basis label")

		products = {}
		for entry in self.mul:
			try:
				i, j, k, c = entry
			except (TypeError, ValueError):
				raise AlgebraInputError(f"Algebra {self.name!r}: malformed mul entry {entry!r}")
			i, j, k, c = int(i), int(j), int(k), to_scalar(c)
			if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
				raise AlgebraInputError(f"Algebra {self.name!r}: mul entry {entry!r} out of range")
			if not c:
				continue
			slot = products.setdefault((i, j), {})
			slot[k] = slot.get(k, Fraction(0)) + c
			if not slot[k]:
				del slot[k]
				if not slot:
					del products[(i, j)]

		for (i, j), row in products.items():
			for k in row:
				if parity[k] != (parity[i] + parity[j]) % 2:
					raise AlgebraInputError(
						f"Algebra {self.name!r}: product {basis[i]}*{basis[j]} -> {basis[k]} breaks parity"
					)

		mul = tuple((i, j, k, c) for (i, j), row in sorted(products.items()) for k, c in sorted(row.items()))
		unit = None
		if self.unit is not None:
			unit = {}
			for key, c in dict(self.unit).items():
				idx = basis.index(key) if isinstance(key, str) and key in basis else key
				if not isinstance(idx, int) or not 0 <= idx < dim:
					raise AlgebraInputError(f"Algebra {self.name!r}: unknown unit label {key!r}")
				c = to_scalar(c)
				if c:
					unit[idx] = c

		object.__setattr__(self, "basis", basis)
		object.__setattr__(self, "parity", parity)
		object.__setattr__(self, "bigrade", bigrade)
		object.__setattr__(self, "mul", mul)
		object.__setattr__(self, "unit", unit)
		object.__setattr__(self, "origin", tuple(self.origin))
		object.__setattr__(self, "_products", products)
		object.__setattr__(self, "_index", {b: n for n, b in enumerate(basis)})

	@property
	def dim(self):
		return len(self.basis)

	@property
	def superdim(self):
		odd = sum(self.parity)
		return (self.dim - odd, odd)

	@property
	def is_super(self):
		return any(self.parity)

	def index(self, label):
		if isinstance(label, int):
			if not 0 <= label < self.dim:
				raise AlgebraInputError(f"Basis index {label} out of range for {self.name}")
			return label
		try:
			return self._index[label]
		except KeyError:
			raise AlgebraInputError(f"Unknown basis label {label!r} in {self.name}")

	def product(self, i, j):
		"""Structure constants of e_i * e_j as a dict k -> c (do not mutate)."""
		return self._products.get((i, j), {})

	def nonzero_products(self):
		"""Iterate ((i, j), {k: c}) over the nonzero basis products."""
		return self._products.items()

	def element(self, coeffs=None):
		coeffs = coeffs or {}
		return Element(self, {self.index(k): to_scalar(v) for k, v in coeffs.items()})

	def basis_element(self, label):
		return Element(self, {self.index(label): Fraction(1)})

	def basis_elements(self):
		return [Element(self, {i: Fraction(1)}) for i in range(self.dim)]

	def zero(self):
		return Element(self, {})

	def one(self):
		if self.unit is None:
			raise PreconditionError(f"Algebra {self.name} has no unit")
		return Element(self, dict(self.unit))

	def even_indices(self):
		return [i for i, p in enumerate(self.parity) if p == 0]

	def odd_indices(self):
		return [i for i, p in enumerate(self.parity) if p == 1]

	def __repr__(self):
		even, odd = self.superdim
		return f"<AlgebraTable {self.name} dim={even}|{odd}>"


@dataclass(frozen=True, eq=False)
class Element:
	algebra: AlgebraTable
	coeffs: dict

	def __post_init__(self):
		clean = {}
		for i, c in self.coeffs.items():
			if not 0 <= i < self.algebra.dim:
				raise AlgebraInputError(f"Index {i} out of range for {self.algebra.name}")
			c = Fraction(c)
			if c:
				clean[i] = c
		object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

	def __eq__(self, other):
		if not isinstance(other, Element):
			return NotImplemented
		return self.algebra is other.algebra and self.coeffs == other.coeffs

	__hash__ = None

	def __bool__(self):
		return bool(self.coeffs)

	def _check(self, other):
		if not isinstance(other, Element):
			raise AlgebraMismatchError(f"Expected an Element, got {type(other).__name__}")
		if other.algebra is not self.algebra:
			raise AlgebraMismatchError(
				f"Elements live over different algebras: {self.algebra.name} and {other.algebra.name}"
			)

	def __add__(self, other):
		self._check(other)
		out = dict(self.coeffs)
		for i, c in other.coeffs.items():
			out[i] = out.get(i, Fraction(0)) + c
		return Element(self.algebra, out)

	def __neg__(self):
		return Element(self.algebra, {i: -c for i, c in self.coeffs.items()})

	def __sub__(self, other):
		return self + (-other)

	def scale(self, factor):
		factor = to_scalar(factor)
		return Element(self.algebra, {i: factor * c for i, c in self.coeffs.items()})

	def __mul__(self, other):
		if isinstance(other, Element):
			return mul_elements(self, other)
		return self.scale(other)

	def __rmul__(self, other):
		return self.scale(other)

	def coefficient(self, label):
		return self.coeffs.get(self.algebra.index(label), Fraction(0))

	def parity(self):
		"""Parity of a homogeneous element (0 for zero); None when inhomogeneous."""
		parities = {self.algebra.parity[i] for i in self.coeffs}
		if len(parities) > 1:
			return None
		return parities.pop() if parities else 0

	def vector(self):
		vec = [Fraction(0)] * self.algebra.dim
		for i, c in self.coeffs.items():
			vec[i] = c
		return vec

	def to_dict(self):
		return {self.algebra.basis[i]: format_scalar(c) for i, c in self.coeffs.items()}

	def __repr__(self):
		return f"Element({self.algebra.name}, {format_element(self)})"


def element_from_vector(algebra, vector):
	return Element(algebra, {i: c for i, c in enumerate(vector) if c})


def format_element(u):
	if not u.coeffs:
		return "0"
	parts = []
	for i, c in u.coeffs.items():
		label = u.algebra.basis[i]
		if c == 1:
			text = label
		elif c == -1:
			text = f"-{label}"
		else:
			text = f"{format_scalar(c)}*{label}"
		parts.append(text)
	return " + ".join(parts).replace("+ -", "- ")


def mul_elements(u, v):
	"""Bilinear extension of the structure constants."""
	u._check(v)
	algebra = u.algebra
	out = {}
	for i, a in u.coeffs.items():
		for j, b in v.coeffs.items():
			for k, c in algebra.product(i, j).items():
				out[k] = out.get(k, Fraction(0)) + a * b * c
	return Element(algebra, out)


def bracket(u, v, kind="plain"):
	"""Commutator uv - vu, or the supercommutator uv - (-1)^{p(u)p(v)} vu for ``kind="super"``."""
	u._check(v)
	if kind == "plain":
		return mul_elements(u, v) - mul_elements(v, u)
	if kind != "super":
		raise AlgebraInputError(f"Unknown bracket kind {kind!r}")
	pu, pv = u.parity(), v.parity()
	if pu is None or pv is None:
		raise InhomogeneousElementError("Supercommutator needs parity-homogeneous operands")
	return mul_elements(u, v) - mul_elements(v, u).scale(sign(pu * pv))


def basis_product(algebra, i, j):
	return Element(algebra, dict(algebra.product(i, j)))


def check_associativity(algebra):
	"""Basis triples (i, j, k) where (e_i e_j) e_k != e_i (e_j e_k). Empty means associative."""
	failures = []
	basis = algebra.basis_elements()
	for i, a in enumerate(basis):
		for j, b in enumerate(basis):
			ab = basis_product(algebra, i, j)
			for k, c in enumerate(basis):
				if mul_elements(ab, c) != mul_elements(a, basis_product(algebra, j, k)):
					failures.append((i, j, k))
	return failures


def check_parity(algebra):
	"""Structure-constant entries that violate parity(k) = parity(i) + parity(j)."""
	p = algebra.parity
	return [(i, j, k) for i, j, k, _ in algebra.mul if p[k] != (p[i] + p[j]) % 2]


def check_unit(algebra):
	"""Basis indices i where unit * e_i or e_i * unit differs from e_i. Empty when there is no unit."""
	if algebra.unit is None:
		return []
	one = algebra.one()
	failures = []
	for i, e in enumerate(algebra.basis_elements()):
		if mul_elements(one, e) != e or mul_elements(e, one) != e:
			failures.append(i)
	return failures
