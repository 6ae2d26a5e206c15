# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Exact linear algebra over QQ.

Vectors are dense lists of Fractions. Row reduction is delegated to sympy's ``DomainMatrix``
over ``QQ``; results come back as Fractions so callers never see domain elements.
"""

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def to_qq(value):
	value = Fraction(value)
	return QQ(value.numerator, value.denominator)


def from_qq(value):
	return Fraction(int(value.numerator), int(value.denominator))


def _domain_matrix(rows, ncols):
	data = [[to_qq(c) for c in row] for row in rows]
	return DomainMatrix(data, (len(data), ncols), QQ)


def rref(rows, ncols):
	"""Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
	rows = [list(r) for r in rows if any(r)]
	if not rows or ncols == 0:
		return [], ()
	reduced, pivots = _domain_matrix(rows, ncols).rref()
	out = [[from_qq(c) for c in row] for row in reduced.to_list()[: len(pivots)]]
	return out, tuple(pivots)


def row_space(vectors, ncols):
	return rref(vectors, ncols)[0]


def rank(vectors, ncols):
	return len(rref(vectors, ncols)[1])


def normalize(vector):
	"""Scale so that the first nonzero coefficient is 1."""
	for c in vector:
		if c:
			return [x / c for x in vector]
	return list(vector)


def nullspace(rows, ncols):
	"""Basis of {v : row . v = 0 for every row}, each vector normalized."""
	reduced, pivots = rref(rows, ncols)
	free = [c for c in range(ncols) if c not in pivots]
	basis = []
	for f in free:
		v = [Fraction(0)] * ncols
		v[f] = Fraction(1)
		for r, p in enumerate(pivots):
			v[p] = -reduced[r][f]
		basis.append(normalize(v))
	return basis


def span_contains(basis, vector, ncols):
	if not any(vector):
		return True
	return rank(list(basis) + [vector], ncols) == rank(basis, ncols)


def span_includes(big, small, ncols):
	"""True when span(small) is a subspace of span(big)."""
	r = rank(big, ncols)
	return rank(list(big) + list(small), ncols) == r


def spans_equal(u, v, ncols):
	return span_includes(u, v, ncols) and span_includes(v, u, ncols)


def solve(columns, target, nrows):
	"""
	Solve sum_j y_j * columns[j] = target exactly.

	Returns one solution (free variables set to 0) or None when target is outside the span.
	"""
	ncols = len(columns)
	augmented = [[columns[j][i] for j in range(ncols)] + [target[i]] for i in range(nrows)]
	reduced, pivots = rref(augmented, ncols + 1)
	if ncols in pivots:
		return None
	y = [Fraction(0)] * ncols
	for r, p in enumerate(pivots):
		y[p] = reduced[r][ncols]
	return y


def dot(u, v):
	return sum((a * b for a, b in zip(u, v)), Fraction(0))
