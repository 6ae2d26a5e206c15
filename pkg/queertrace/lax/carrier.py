# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Matrix carriers for Lax flows and Poisson brackets.

``gl`` is gl(n); ``glsuper`` is gl(m|n) restricted to block-diagonal states; a ``q`` state is a pair
(X, Y) in q(n) realized as the block matrix [[X, Y], [Y, X]], closed under the matrix product because
(X1, Y1)(X2, Y2) = (X1 X2 + Y1 Y2, X1 Y2 + Y1 X2). States are numpy arrays, float64 or object
arrays of Fractions for exact evaluation.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from queertrace.algebra import linalg
from queertrace.algebra.constructors import element_to_matrix, matrix_size
from queertrace.algebra.table import Element
from queertrace.exceptions import AlgebraInputError, AlgebraMismatchError
from queertrace.queerify.bracket import BracketAlgebra
from queertrace.queerify.queer import QPair, element_to_qpair, queer_base

GL = "gl"
GLSUPER = "glsuper"
Q = "q"

TRACE = "trace"
SUPERTRACE = "supertrace"
QTRACE = "qtrace"

FUNCTIONALS = {
	GL: (TRACE, SUPERTRACE),
	GLSUPER: (TRACE, SUPERTRACE),
	Q: (QTRACE, TRACE),
}


@dataclass(frozen=True)
class LaxCarrier:
	kind: str
	n: int
	m: int = 0

	def __post_init__(self):
		if self.kind not in FUNCTIONALS:
			raise AlgebraInputError(f"Unknown carrier kind {self.kind!r}; use gl, glsuper or q")
		if self.n < 1 or self.m < 0:
			raise AlgebraInputError("Carrier sizes must be positive")
		if self.kind == GLSUPER and self.m < 1:
			raise AlgebraInputError("gl(m|n) needs m >= 1")

	@property
	def size(self):
		"""Side length of the matrices representing states."""
		if self.kind == GLSUPER:
			return self.m + self.n
		if self.kind == Q:
			return 2 * self.n
		return self.n

	@property
	def name(self):
		if self.kind == GLSUPER:
			return f"gl({self.m}|{self.n})"
		return f"{self.kind}({self.n})"

	@classmethod
	def from_algebra(cls, algebra):
		"""gl(n) for Mat(n), gl(m|n) for Mat(m|n), q(n) for lie_queerify(Mat(n))."""
		if isinstance(algebra, BracketAlgebra):
			carrier = algebra.carrier
			if carrier.origin[:1] == ("queer",):
				base = queer_base(algebra)
				if base.origin[:1] == ("mat",):
					return cls(Q, base.origin[1])
			algebra = carrier
		origin = algebra.origin
		if origin[:1] == ("mat",):
			return cls(GL, origin[1])
		if origin[:1] == ("matsuper",):
			return cls(GLSUPER, origin[2], origin[1])
		raise AlgebraInputError(f"No Lax carrier for {algebra.name}")

	def to_array(self, value, exact=False):
		"""A numpy state from an Element, QPair or nested rows."""
		if isinstance(value, Element) and self.kind == Q:
			value = element_to_qpair(value)
		if isinstance(value, QPair):
			if self.kind != Q:
				raise AlgebraMismatchError(f"{self.name} does not hold queer pairs")
			x, y = np.array(element_to_matrix(value.X), dtype=object), np.array(element_to_matrix(value.Y), dtype=object)
			rows = np.block([[x, y], [y, x]])
		elif isinstance(value, Element):
			if matrix_size(value.algebra) != self.size:
				raise AlgebraMismatchError(f"{value.algebra.name} does not match {self.name}")
			rows = np.array(element_to_matrix(value), dtype=object)
		else:
			rows = np.asarray(value, dtype=object if exact else float)
		if rows.shape != (self.size, self.size):
			raise AlgebraMismatchError(f"{self.name} states are {self.size}x{self.size}, got {rows.shape}")
		return rows if exact else rows.astype(float)

	def blocks(self, state):
		"""(X, Y) for q(n) states."""
		n = self.n
		return state[:n, :n], state[:n, n:]

	def even_part(self, state):
		"""Projection onto the even subspace."""
		if self.kind == GL:
			return state
		out = np.zeros_like(state)
		if self.kind == GLSUPER:
			m = self.m
			out[:m, :m] = state[:m, :m]
			out[m:, m:] = state[m:, m:]
			return out
		x, _ = self.blocks(state)
		out[: self.n, : self.n] = x
		out[self.n :, self.n :] = x
		return out

	def contains(self, state, tol=1e-12):
		"""Does ``state`` have the carrier's block shape?"""
		if self.kind != Q:
			return True
		n = self.n
		x, y = self.blocks(state)
		return bool(np.all(np.abs(state[n:, n:] - x) <= tol) and np.all(np.abs(state[n:, :n] - y) <= tol))

	def functional(self, name, state):
		"""trace, supertrace or qtrace of a state."""
		if name not in FUNCTIONALS[self.kind]:
			raise AlgebraMismatchError(f"{name} is not defined on {self.name}")
		if name == QTRACE:
			_, y = self.blocks(state)
			return np.trace(y)
		if name == SUPERTRACE and self.kind == GLSUPER:
			m = self.m
			return np.trace(state[:m, :m]) - np.trace(state[m:, m:])
		return np.trace(state)

	def pairing(self, u, v, functional=None):
		"""b(u, v) = functional(uv); the default functional is the first one the carrier lists."""
		return self.functional(functional or FUNCTIONALS[self.kind][0], u @ v)

	def basis(self):
		"""(matrix, parity) pairs spanning the carrier, exact entries."""
		out = []
		size = self.size
		if self.kind == Q:
			n = self.n
			for parity, (dr, dc) in ((0, (0, 0)), (1, (0, n))):
				for i in range(n):
					for j in range(n):
						e = np.full((size, size), Fraction(0), dtype=object)
						e[i + dr, j + dc] = Fraction(1)
						e[i + n - dr, j + n - dc] = Fraction(1)
						out.append((e, parity))
			return out
		for i in range(size):
			for j in range(size):
				e = np.full((size, size), Fraction(0), dtype=object)
				e[i, j] = Fraction(1)
				parity = 0 if self.kind == GL else int((i < self.m) != (j < self.m))
				out.append((e, parity))
		return out

	def gram(self, functional=None):
		"""Exact Gram matrix of the pairing on ``basis()`` together with the basis parities."""
		basis = self.basis()
		rows = [[Fraction(self.pairing(a, b, functional)) for b, _ in basis] for a, _ in basis]
		return rows, [p for _, p in basis]

	def random_state(self, seed, scale=1.0):
		"""A seeded float state in the carrier: block-diagonal for gl(m|n), a full pair (X, Y) for q(n)."""
		rng = np.random.default_rng(seed)
		if self.kind == Q:
			x = rng.standard_normal((self.n, self.n)) * scale
			y = rng.standard_normal((self.n, self.n)) * scale
			return np.block([[x, y], [y, x]])
		state = rng.standard_normal((self.size, self.size)) * scale
		return self.even_part(state) if self.kind == GLSUPER else state

	def random_rational_state(self, rng, bound=3, denominators=3):
		"""An exact state with entries p/q, |p| <= bound, 1 <= q <= denominators."""
		def draw(shape):
			nums = rng.integers(-bound, bound + 1, size=shape)
			dens = rng.integers(1, denominators + 1, size=shape)
			out = np.empty(shape, dtype=object)
			for idx in np.ndindex(shape):
				out[idx] = Fraction(int(nums[idx]), int(dens[idx]))
			return out

		if self.kind == Q:
			x, y = draw((self.n, self.n)), draw((self.n, self.n))
			return np.block([[x, y], [y, x]])
		state = draw((self.size, self.size))
		return self.even_part(state) if self.kind == GLSUPER else state


def gram_rank(rows, indices):
	"""Exact rank of the Gram block on ``indices``."""
	block = [[rows[i][j] for j in indices] for i in indices]
	return linalg.rank(block, len(indices))
