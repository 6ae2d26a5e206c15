# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Bounded-box evidence for supertraces on q(Psi) and q(Psi_1).

Monomials x^e D^k (and xi x^e D^k) with |e|, |k| <= radius are bracketed pairwise inside the
queerification, every bracket is materialized exactly down to order -(2 radius + 1), and the
functionals supported on the touched coordinates that kill all of them are counted by parity.
The counts are evidence for the conjectured uniqueness of the odd supertrace, never a proof.
"""

from fractions import Fraction

from queertrace.algebra import linalg
from queertrace.exceptions import PreconditionError
from queertrace.logger import logger
from queertrace.psido.laurent import LaurentPoly
from queertrace.psido.operator import PsiOp, psi_mul
from queertrace.psido.super import SuperFunction, SuperPsiOp, spsi_mul

log = logger("psido")

EVEN_BLOCK = "A"
PI_BLOCK = "Pi"


def _psi_monomials(radius, floor):
	out = []
	for k in range(-radius, radius + 1):
		for e in range(-radius, radius + 1):
			out.append((PsiOp({k: LaurentPoly.monomial(e)}, floor), 0))
	return out


def _spsi_monomials(radius, floor):
	out = []
	for k in range(-radius, radius + 1):
		for e in range(-radius, radius + 1):
			g = LaurentPoly.monomial(e)
			out.append((SuperPsiOp({k: SuperFunction(g, LaurentPoly())}, floor), k % 2))
			out.append((SuperPsiOp({k: SuperFunction(LaurentPoly(), g)}, floor), (k + 1) % 2))
	return out


def _psi_coordinates(op):
	for k, f in op.terms.items():
		for e, c in f.coeffs.items():
			yield (k, e, 0), c, 0


def _spsi_coordinates(op):
	for k, f in op.terms.items():
		for e, c in f.even.coeffs.items():
			yield (k, e, 0), c, k % 2
		for e, c in f.odd.coeffs.items():
			yield (k, e, 1), c, (k + 1) % 2


def _queer_brackets(monomials, mul, coordinates, floor):
	"""
	Supercommutators in Q(A): every product of u, v in {M, Pi M} is the plain product MN, landing
	in Pi(A) when exactly one factor is shifted.
	"""
	rows = []
	for m, pm in monomials:
		for n, pn in monomials:
			mn = mul(m, n, floor)
			nm = mul(n, m, floor)
			for shift_m in (0, 1):
				for shift_n in (0, 1):
					pu, pv = (pm + shift_m) % 2, (pn + shift_n) % 2
					value = mn - nm.scale((-1) ** (pu * pv))
					if not value:
						continue
					block = PI_BLOCK if shift_m != shift_n else EVEN_BLOCK
					rows.append({(block, key): (c, parity) for key, c, parity in coordinates(value)})
	return rows


def _count(rows, witnesses):
	keys = {}
	for row in rows:
		for key, (_, parity) in row.items():
			block = key[0]
			keys[key] = (parity + (1 if block == PI_BLOCK else 0)) % 2
	for key, parity in witnesses:
		keys.setdefault(key, parity)
	ordered = sorted(keys, key=lambda key: (key[0], key[1]))
	position = {key: n for n, key in enumerate(ordered)}

	counts = {}
	solutions = {}
	for parity in (0, 1):
		block = [key for key in ordered if keys[key] == parity]
		local = {key: n for n, key in enumerate(block)}
		vectors = []
		for row in rows:
			vec = [Fraction(0)] * len(block)
			for key, (c, _) in row.items():
				if key in local:
					vec[local[key]] = c
			if any(vec):
				vectors.append(vec)
		null = linalg.nullspace(vectors, len(block)) if block else []
		counts[parity] = len(null)
		solutions[parity] = (block, null)
	return counts, solutions, position


def _contains(solutions, parity, key):
	"""Is the coordinate functional at ``key`` a solution?"""
	block, null = solutions[parity]
	if key not in block:
		return False
	target = [Fraction(1) if k == key else Fraction(0) for k in block]
	return linalg.span_contains(null, target, len(block))


def truncated_trace_table(radius=1):
	"""
	Rows for q(Psi) and q(Psi_1): (algebra, radius, monomials, brackets, coordinates, evenCount,
	oddCount, liftedWitness).

	The lifted witness is the odd functional Pi(y) -> coefficient of x^-1 D^-1 (q(Psi)) or of
	xi x^-1 D^-1 (q(Psi_1)) in y; whether it survives is recorded, not asserted.
	"""
	if radius < 1:
		raise PreconditionError("truncated_trace_table needs radius >= 1")
	floor = -(2 * radius + 1)
	setups = [
		("q(Psi)", _psi_monomials(radius, floor), psi_mul, _psi_coordinates, (PI_BLOCK, (-1, -1, 0))),
		("q(Psi_1)", _spsi_monomials(radius, floor), spsi_mul, _spsi_coordinates, (PI_BLOCK, (-1, -1, 1))),
	]
	table = []
	for name, monomials, mul, coordinates, witness in setups:
		rows = _queer_brackets(monomials, mul, coordinates, floor)
		# both witnesses sit in Pi(A): the lifted functional is odd
		counts, solutions, position = _count(rows, [(witness, 1)])
		table.append(
			{
				"algebra": name,
				"radius": radius,
				"monomials": len(monomials),
				"brackets": len(rows),
				"coordinates": len(position),
				"evenCount": counts[0],
				"oddCount": counts[1],
				"liftedWitness": _contains(solutions, 1, witness),
			}
		)
		log.info("%s radius %s: even=%s odd=%s", name, radius, counts[0], counts[1])
	return table
