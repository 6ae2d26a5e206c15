# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Standard algebras: matrices, matrix superalgebras, Clifford algebras, tensor products.
"""

from dataclasses import dataclass
from fractions import Fraction

from queertrace.algebra import linalg
from queertrace.algebra.scalar import sign, to_scalar
from queertrace.algebra.table import AlgebraTable, Element, bracket, mul_elements
from queertrace.exceptions import AlgebraInputError


def _require_int(value, what):
	if isinstance(value, bool) or not isinstance(value, int):
		raise AlgebraInputError(f"{what} must be an integer, got {value!r}")
	return value


def matrix_label(i, j, size):
	"""Label of the matrix unit E_{ij}, 1-based."""
	if size < 10:
		return f"E{i}{j}"
	return f"E{i}_{j}"


def matrix_index(i, j, size):
	"""Basis index of E_{ij} (1-based i, j) in a matrix (super)algebra of the given size."""
	return (i - 1) * size + (j - 1)


def _matrix_table(name, size, parity_of, origin):
	basis, parity, mul = [], [], []
	for i in range(1, size + 1):
		for j in range(1, size + 1):
			basis.append(matrix_label(i, j, size))
			parity.append(parity_of(i, j))
	for i in range(1, size + 1):
		for j in range(1, size + 1):
			for l in range(1, size + 1):
				# E_ij E_jl = E_il
				mul.append((matrix_index(i, j, size), matrix_index(j, l, size), matrix_index(i, l, size), 1))
	unit = {matrix_index(i, i, size): 1 for i in range(1, size + 1)}
	return AlgebraTable(name=name, basis=basis, parity=parity, mul=mul, unit=unit, origin=origin)


def build_matrix_algebra(n):
	"""Mat(n): basis E_ij, all even."""
	n = _require_int(n, "Matrix size")
	if n < 1:
		raise AlgebraInputError("Matrix algebra needs n >= 1")
	return _matrix_table(f"Mat({n})", n, lambda i, j: 0, ("mat", n))


def build_matrix_superalgebra(m, n):
	"""Mat(m|n): E_ij is even iff i and j sit on the same side of the m|n split."""
	m = _require_int(m, "Even rank")
	n = _require_int(n, "Odd rank")
	if m < 0 or n < 0 or m + n < 1:
		raise AlgebraInputError("Matrix superalgebra needs m, n >= 0 and m + n >= 1")

	def parity_of(i, j):
		return int((i > m) != (j > m))

	return _matrix_table(f"Mat({m}|{n})", m + n, parity_of, ("matsuper", m, n))


def matrix_size(algebra):
	"""Side length of a matrix (super)algebra, or None for other tables."""
	origin = algebra.origin
	if origin and origin[0] == "mat":
		return origin[1]
	if origin and origin[0] == "matsuper":
		return origin[1] + origin[2]
	return None


def element_from_matrix(algebra, rows):
	size = matrix_size(algebra)
	if size is None:
		raise AlgebraInputError(f"{algebra.name} is not a matrix algebra")
	if len(rows) != size or any(len(r) != size for r in rows):
		raise AlgebraInputError(f"Expected a {size}x{size} matrix for {algebra.name}")
	coeffs = {}
	for i, row in enumerate(rows):
		for j, c in enumerate(row):
			c = to_scalar(c)
			if c:
				coeffs[i * size + j] = c
	return Element(algebra, coeffs)


def element_to_matrix(u):
	size = matrix_size(u.algebra)
	if size is None:
		raise AlgebraInputError(f"{u.algebra.name} is not a matrix algebra")
	rows = [[Fraction(0)] * size for _ in range(size)]
	for idx, c in u.coeffs.items():
		rows[idx // size][idx % size] = c
	return rows


def matrix_trace(u):
	rows = element_to_matrix(u)
	return sum((rows[i][i] for i in range(len(rows))), Fraction(0))


# Clifford algebras


def _mask_indices(mask):
	return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _monomial_label(mask):
	if not mask:
		return "1"
	return "".join(f"t{i + 1}" for i in _mask_indices(mask))


def clifford_monomial_product(a, b, squares):
	"""theta_A * theta_B for bitmask monomials: (sign, mask). Generator i squares to squares[i]."""
	swaps = 0
	for j in _mask_indices(b):
		swaps += bin(a >> (j + 1)).count("1")
	coeff = sign(swaps)
	for i in _mask_indices(a & b):
		coeff *= squares[i]
	return coeff, a ^ b


def build_clifford(k, squares=None):
	"""
	Clifford superalgebra on k generators with theta_i theta_j + theta_j theta_i = 2 q_i delta_ij.

	``squares`` lists q_i in {+1, -1} (default all +1). The basis is the 2^k ordered monomials,
	shortest first; a monomial's parity is its length mod 2.
	"""
	k = _require_int(k, "Number of Clifford generators")
	if k < 1 or k % 2:
		raise AlgebraInputError("Clifford algebras are built on an even, positive number of generators")
	squares = tuple(int(q) for q in squares) if squares is not None else (1,) * k
	if len(squares) != k or any(q not in (1, -1) for q in squares):
		raise AlgebraInputError("Clifford squares must list +1 or -1 for every generator")

	masks = sorted(range(2**k), key=lambda m: (bin(m).count("1"), _mask_indices(m)))
	position = {mask: n for n, mask in enumerate(masks)}
	mul = []
	for a in masks:
		for b in masks:
			coeff, c = clifford_monomial_product(a, b, squares)
			mul.append((position[a], position[b], position[c], coeff))

	name = f"Cl({k})" if all(q == 1 for q in squares) else f"Cl({k};{','.join(map(str, squares))})"
	return AlgebraTable(
		name=name,
		basis=[_monomial_label(m) for m in masks],
		parity=[bin(m).count("1") % 2 for m in masks],
		mul=mul,
		unit={position[0]: 1},
		origin=("clifford", k, squares, tuple(masks)),
	)


def clifford_generator(algebra, i):
	"""theta_i (1-based) in a Clifford table."""
	masks = algebra.origin[3]
	return algebra.basis_element(masks.index(1 << (i - 1)))


@dataclass(frozen=True)
class CliffordIso:
	"""Generator images of the split Clifford algebra inside Mat(2^{n-1}|2^{n-1})."""

	clifford: AlgebraTable
	target: AlgebraTable
	images: tuple
	squares: tuple

	def image(self, mask):
		"""Image of a Clifford monomial given as a bitmask."""
		out = self.target.one()
		for i in _mask_indices(mask):
			out = mul_elements(out, self.images[i])
		return out

	def relation_failures(self):
		"""Pairs (i, j), 1-based, where the images break theta_i theta_j + theta_j theta_i = 2 q_i delta_ij."""
		one = self.target.one()
		failures = []
		for i, a in enumerate(self.images):
			for j, b in enumerate(self.images):
				expected = one.scale(2 * self.squares[i]) if i == j else self.target.zero()
				if bracket(a, b, "super") != expected or a.parity() != 1:
					failures.append((i + 1, j + 1))
		return failures

	def rank(self):
		masks = self.clifford.origin[3]
		return linalg.rank([self.image(m).vector() for m in masks], self.target.dim)

	def is_bijective(self):
		return self.clifford.dim == self.target.dim and self.rank() == self.target.dim


def _fock_operators(n):
	"""Annihilators a_1..a_n on the 2^n Fock states (Jordan-Wigner signs), even states first."""
	states = sorted(range(2**n), key=lambda s: (bin(s).count("1") % 2, s))
	row_of = {s: r for r, s in enumerate(states)}
	annihilators = []
	for mode in range(n):
		entries = {}
		for s in states:
			if s >> mode & 1:
				target = s ^ (1 << mode)
				entries[(row_of[target], row_of[s])] = sign(bin(s & ((1 << mode) - 1)).count("1"))
		annihilators.append(entries)
	return annihilators


def clifford_matrix_iso(k):
	"""
	Realize the split Clifford algebra on k = 2n generators as Mat(2^{n-1}|2^{n-1}).

	theta_{2i-1} = a_i + a_i^dagger and theta_{2i} = a_i - a_i^dagger, so the squares alternate
	+1, -1. For k = 2 this gives theta_1 = E12 + E21 and theta_2 = E12 - E21.
	"""
	k = _require_int(k, "Number of Clifford generators")
	if k < 2 or k % 2:
		raise AlgebraInputError("clifford_matrix_iso needs an even k >= 2")
	n = k // 2
	half = 2 ** (n - 1)
	target = build_matrix_superalgebra(half, half)
	size = 2 * half
	images = []
	for entries in _fock_operators(n):
		plus, minus = {}, {}
		for (r, c), v in entries.items():
			# a contributes at (r, c); its adjoint at (c, r)
			plus[r * size + c] = plus.get(r * size + c, 0) + v
			plus[c * size + r] = plus.get(c * size + r, 0) + v
			minus[r * size + c] = minus.get(r * size + c, 0) + v
			minus[c * size + r] = minus.get(c * size + r, 0) - v
		images.append(Element(target, plus))
		images.append(Element(target, minus))
	squares = tuple(1 if i % 2 == 0 else -1 for i in range(k))
	return CliffordIso(clifford=build_clifford(k, squares), target=target, images=tuple(images), squares=squares)


# Tensor products and relabeling


def tensor_product(a, b, signed=False):
	"""
	A (x) B with basis pairs (index i * dim B + j).

	The signed variant multiplies by the Koszul sign (-1)^{p(b)p(c)} in (a(x)b)(c(x)d).
	"""
	dim_b = b.dim
	basis = [f"{x}⊗{y}" for x in a.basis for y in b.basis]
	parity = [(pa + pb) % 2 for pa in a.parity for pb in b.parity]
	mul = []
	for (i1, i2), row_a in a.nonzero_products():
		for (j1, j2), row_b in b.nonzero_products():
			# (e_i1 (x) f_j1)(e_i2 (x) f_j2)
			koszul = sign(b.parity[j1] * a.parity[i2]) if signed else 1
			for k1, c1 in row_a.items():
				for k2, c2 in row_b.items():
					mul.append((i1 * dim_b + j1, i2 * dim_b + j2, k1 * dim_b + k2, koszul * c1 * c2))
	unit = None
	if a.unit is not None and b.unit is not None:
		unit = {i * dim_b + j: ci * cj for i, ci in a.unit.items() for j, cj in b.unit.items()}
	kind = "signed" if signed else "unsigned"
	return AlgebraTable(
		name=f"{a.name}⊗{b.name}",
		basis=basis,
		parity=parity,
		mul=mul,
		unit=unit,
		origin=("tensor", a, b, kind),
	)


def tensor_element(algebra, u, v):
	"""u (x) v inside a table built by tensor_product."""
	a, b = algebra.origin[1], algebra.origin[2]
	if u.algebra is not a or v.algebra is not b:
		raise AlgebraInputError(f"Factors do not match {algebra.name}")
	return Element(algebra, {i * b.dim + j: ci * cj for i, ci in u.coeffs.items() for j, cj in v.coeffs.items()})


def relabel_basis(algebra, order):
	"""Isomorphic table whose i-th basis element is the old element ``order[i]``."""
	order = list(order)
	if sorted(order) != list(range(algebra.dim)):
		raise AlgebraInputError("relabel_basis needs a permutation of the basis indices")
	new_of = {old: new for new, old in enumerate(order)}
	return AlgebraTable(
		name=f"{algebra.name}'",
		basis=[algebra.basis[old] for old in order],
		parity=[algebra.parity[old] for old in order],
		mul=[(new_of[i], new_of[j], new_of[k], c) for i, j, k, c in algebra.mul],
		bigrade=[algebra.bigrade[old] for old in order] if algebra.bigrade else None,
		unit={new_of[i]: c for i, c in algebra.unit.items()} if algebra.unit else None,
		origin=("relabel", algebra, tuple(order)),
	)


def build_zero_algebra(even, odd):
	"""Superalgebra of dimension even|odd with identically zero multiplication."""
	if even < 0 or odd < 0 or even + odd < 1:
		raise AlgebraInputError("Zero algebra needs a positive dimension")
	basis = [f"u{i + 1}" for i in range(even)] + [f"v{i + 1}" for i in range(odd)]
	return AlgebraTable(
		name=f"Zero({even}|{odd})",
		basis=basis,
		parity=[0] * even + [1] * odd,
		mul=[],
		origin=("zero", even, odd),
	)


def build_diagonal_algebra(n):
	"""Diagonal n x n matrices, a commutative algebra with n independent traces."""
	if n < 1:
		raise AlgebraInputError("Diagonal algebra needs n >= 1")
	return AlgebraTable(
		name=f"Diag({n})",
		basis=[f"E{i}{i}" if n < 10 else f"E{i}_{i}" for i in range(1, n + 1)],
		parity=[0] * n,
		mul=[(i, i, i, 1) for i in range(n)],
		unit={i: 1 for i in range(n)},
		origin=("diag", n),
	)
