# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Conversion layer between JSON documents and in-memory algebra objects.

Documents use the on-disk format: 0-based indices, scalars as "p/q" strings, basis labels as keys.
"""

from queertrace.algebra.scalar import format_scalar, to_scalar
from queertrace.algebra.table import AlgebraTable, Element
from queertrace.exceptions import AlgebraInputError
from queertrace.queerify.bracket import LIE, LIESUPER, BracketAlgebra
from queertrace.queerify.queer import QPair

_PORTABLE_ORIGINS = ("mat", "matsuper", "zero", "diag")


def _require(doc, key, kind, where):
	if key not in doc:
		raise AlgebraInputError(f"{where}: missing {key!r}")
	value = doc[key]
	if not isinstance(value, kind):
		raise AlgebraInputError(f"{where}: {key!r} must be a {kind.__name__}")
	return value


def _entries(rows, where):
	out = []
	for row in rows:
		if not isinstance(row, list) or len(row) != 4:
			raise AlgebraInputError(f"{where}: table entries are [i, j, k, \"p/q\"], got {row!r}")
		i, j, k, c = row
		if not all(isinstance(n, int) and not isinstance(n, bool) for n in (i, j, k)):
			raise AlgebraInputError(f"{where}: indices must be integers in {row!r}")
		out.append((i, j, k, to_scalar(c)))
	return out


def _origin_fits(origin, dim):
	"""Keep a recorded constructor only when it is portable and matches the basis size."""
	if not origin or origin[0] not in _PORTABLE_ORIGINS:
		return False
	sizes = origin[1:]
	if not all(isinstance(n, int) and not isinstance(n, bool) and n >= 0 for n in sizes):
		return False
	expected = {
		"mat": lambda n: n * n,
		"matsuper": lambda m, n: (m + n) ** 2,
		"zero": lambda e, o: e + o,
		"diag": lambda n: n,
	}[origin[0]]
	try:
		return expected(*sizes) == dim
	except TypeError:
		return False


def algebra_from_dict(doc, where="algebra"):
	"""An AlgebraTable from a parsed algebra document."""
	if not isinstance(doc, dict):
		raise AlgebraInputError(f"{where}: expected a JSON object")
	name = doc.get("name", where)
	basis = _require(doc, "basis", list, where)
	parity = _require(doc, "parity", list, where)
	mul = _entries(_require(doc, "mul", list, where), where)
	unit = doc.get("unit")
	if unit is not None and not isinstance(unit, dict):
		raise AlgebraInputError(f"{where}: unit must map labels to scalars")
	origin = tuple(doc.get("origin") or ())
	if not _origin_fits(origin, len(basis)):
		origin = ()
	return AlgebraTable(
		name=str(name),
		basis=basis,
		parity=parity,
		mul=mul,
		bigrade=doc.get("bigrade"),
		unit=unit,
		origin=tuple(origin),
	)


def algebra_to_dict(algebra):
	doc = {
		"name": algebra.name,
		"basis": list(algebra.basis),
		"parity": list(algebra.parity),
		"mul": [[i, j, k, format_scalar(c)] for i, j, k, c in algebra.mul],
	}
	if algebra.bigrade is not None:
		doc["bigrade"] = [list(g) for g in algebra.bigrade]
	if algebra.unit:
		doc["unit"] = {algebra.basis[i]: format_scalar(c) for i, c in algebra.unit.items()}
	if algebra.origin[:1] and algebra.origin[0] in _PORTABLE_ORIGINS:
		doc["origin"] = list(algebra.origin)
	return doc


def bracket_algebra_to_dict(lie):
	"""Like an algebra document, with ``kind`` and ``bracket`` in place of ``mul``."""
	doc = algebra_to_dict(lie.carrier)
	del doc["mul"]
	doc["kind"] = lie.kind
	doc["bracket"] = [[i, j, k, format_scalar(c)] for i, j, k, c in lie.bracket]
	return doc


def bracket_algebra_from_dict(doc, where="bracket algebra"):
	"""A BracketAlgebra whose carrier has no multiplication table."""
	if not isinstance(doc, dict):
		raise AlgebraInputError(f"{where}: expected a JSON object")
	kind = doc.get("kind")
	if kind not in (LIE, LIESUPER):
		raise AlgebraInputError(f"{where}: kind must be {LIE!r} or {LIESUPER!r}")
	carrier = algebra_from_dict({**doc, "mul": [], "unit": None}, where)
	bracket = _entries(_require(doc, "bracket", list, where), where)
	return BracketAlgebra(carrier=carrier, bracket=tuple(bracket), kind=kind)


def element_to_dict(u):
	return u.to_dict()


def element_from_dict(algebra, doc):
	"""{"label": "p/q"} over ``algebra``."""
	if not isinstance(doc, dict):
		raise AlgebraInputError("An element is a JSON object mapping basis labels to scalars")
	return Element(algebra, {algebra.index(label): to_scalar(c) for label, c in doc.items()})


def qpair_to_dict(pair):
	return pair.to_dict()


def qpair_from_dict(algebra, doc):
	if not isinstance(doc, dict) or set(doc) != {"X", "Y"}:
		raise AlgebraInputError('A queer pair is {"X": element, "Y": element}')
	return QPair(element_from_dict(algebra, doc["X"]), element_from_dict(algebra, doc["Y"]))
