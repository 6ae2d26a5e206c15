# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Queerification.

Q(A) = A + Pi(A) with Pi(x)Pi(y) = xy, x Pi(y) = Pi(xy), Pi(x) y = Pi(xy). The basis of Q(A) lists
A first and then the Pi-copies in the same order, so the bigrade of Q(A) is a static split of
the index range. Pi is taken linear on scalars.
"""

from collections import Counter
from dataclasses import dataclass

from queertrace.algebra.constructors import build_matrix_superalgebra, element_to_matrix, matrix_size
from queertrace.algebra.table import AlgebraTable, Element
from queertrace.exceptions import AlgebraInputError, AlgebraMismatchError, PreconditionError
from queertrace.queerify.bracket import BracketAlgebra, superliefy

BIGRADES = ((0, 0), (0, 1), (1, 0), (1, 1))


def pi_label(label):
	return f"Π({label})"


def assoc_queerify(algebra):
	"""Q(A). Parity of Pi(e) is p(e)+1; the bigrade is (0, p) on A and (1, p+1) on Pi(A)."""
	d = algebra.dim
	basis = list(algebra.basis) + [pi_label(b) for b in algebra.basis]
	parity = list(algebra.parity) + [(p + 1) % 2 for p in algebra.parity]
	bigrade = [(0, p) for p in algebra.parity] + [(1, (p + 1) % 2) for p in algebra.parity]
	mul = []
	for i, j, k, c in algebra.mul:
		mul.append((i, j, k, c))
		mul.append((i, j + d, k + d, c))
		mul.append((i + d, j, k + d, c))
		mul.append((i + d, j + d, k, c))
	return AlgebraTable(
		name=f"Q({algebra.name})",
		basis=basis,
		parity=parity,
		mul=mul,
		bigrade=bigrade,
		unit=dict(algebra.unit) if algebra.unit else None,
		origin=("queer", algebra),
	)


def lie_queerify(algebra):
	"""q(A) = (Q(A))^S, remembering A as ``base``."""
	lie = superliefy(assoc_queerify(algebra))
	return BracketAlgebra(carrier=lie.carrier, bracket=lie.bracket, kind=lie.kind, base=algebra)


def queer_base(qa):
	"""The algebra A of q(A) or Q(A)."""
	carrier = qa.carrier if isinstance(qa, BracketAlgebra) else qa
	origin = carrier.origin
	if not origin or origin[0] != "queer":
		raise AlgebraInputError(f"{carrier.name} is not a queerification")
	return origin[1]


@dataclass(frozen=True)
class QPair:
	"""The pair (X, Y) standing for X + Pi(Y)."""

	X: Element
	Y: Element

	def __post_init__(self):
		if self.X.algebra is not self.Y.algebra:
			raise AlgebraMismatchError("QPair components must live over the same algebra")

	@property
	def algebra(self):
		return self.X.algebra

	def to_dict(self):
		return {"X": self.X.to_dict(), "Y": self.Y.to_dict()}


def qpair_to_element(qa, pair):
	base = queer_base(qa)
	if pair.algebra is not base:
		raise AlgebraMismatchError(f"Pair does not live over {base.name}")
	carrier = qa.carrier if isinstance(qa, BracketAlgebra) else qa
	d = base.dim
	coeffs = dict(pair.X.coeffs)
	coeffs.update({i + d: c for i, c in pair.Y.coeffs.items()})
	return Element(carrier, coeffs)


def element_to_qpair(u):
	base = queer_base(u.algebra)
	d = base.dim
	x = {i: c for i, c in u.coeffs.items() if i < d}
	y = {i - d: c for i, c in u.coeffs.items() if i >= d}
	return QPair(Element(base, x), Element(base, y))


def qpair_to_matrix(pair, n, target=None):
	"""
	The block matrix [[X, Y], [Y, X]] in Mat(n|n).

	Pass ``target`` to land in an existing Mat(n|n) table (needed to compare images).
	"""
	base = pair.algebra
	if base.origin[:1] != ("mat",) or matrix_size(base) != n:
		raise AlgebraInputError(f"qpair_to_matrix needs pairs over Mat({n}), got {base.name}")
	if target is None:
		target = build_matrix_superalgebra(n, n)
	elif target.origin != ("matsuper", n, n):
		raise AlgebraInputError(f"Target must be Mat({n}|{n})")
	x, y = element_to_matrix(pair.X), element_to_matrix(pair.Y)
	size = 2 * n
	coeffs = {}
	for r in range(n):
		for c in range(n):
			for dr, dc, block in ((0, 0, x), (n, n, x), (0, n, y), (n, 0, y)):
				if block[r][c]:
					coeffs[(r + dr) * size + (c + dc)] = block[r][c]
	return Element(target, coeffs)


def bigrading(qa):
	"""Z/2 x Z/2 label of every basis element of q(A), plus the component dimensions."""
	carrier = qa.carrier if isinstance(qa, BracketAlgebra) else qa
	if carrier.bigrade is None:
		raise PreconditionError(f"{carrier.name} carries no bigrade; build it with lie_queerify")
	counts = Counter(carrier.bigrade)
	return list(carrier.bigrade), {g: counts.get(g, 0) for g in BIGRADES}


def pi_component(qa, grade):
	"""Basis indices of q(A) in the given bigrade."""
	labels, _ = bigrading(qa)
	return [i for i, g in enumerate(labels) if g == tuple(grade)]
