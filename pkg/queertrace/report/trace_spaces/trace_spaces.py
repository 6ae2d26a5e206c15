# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

from queertrace.algebra.constructors import build_clifford, build_matrix_algebra, build_matrix_superalgebra
from queertrace.queerify.bracket import liefy, superliefy
from queertrace.queerify.queer import lie_queerify
from queertrace.traces.functional import trace_space


def execute(filters=None):
	columns = get_columns()
	data = get_data(filters or {})
	return columns, data


def get_columns():
	return [
		{"fieldname": "algebra", "label": "Algebra", "fieldtype": "Data", "width": 18},
		{"fieldname": "bracket", "label": "Bracket", "fieldtype": "Data", "width": 9},
		{"fieldname": "dim", "label": "Dim", "fieldtype": "Int", "width": 5},
		{"fieldname": "commutant_dim", "label": "Commutant", "fieldtype": "Int", "width": 10},
		{"fieldname": "even_dim", "label": "Even", "fieldtype": "Int", "width": 5},
		{"fieldname": "odd_dim", "label": "Odd", "fieldtype": "Int", "width": 5},
		{"fieldname": "expected", "label": "Expected", "fieldtype": "Data", "width": 9},
		{"fieldname": "passed", "label": "Passed", "fieldtype": "Check", "width": 7},
	]


def get_cases(max_n=3):
	"""(label, bracket algebra, expected dims) for every row of the table."""
	cases = []
	for n in range(1, max_n + 1):
		cases.append((f"Mat({n})", liefy(build_matrix_algebra(n)), (1, 0)))
	for m, n in ((1, 1), (2, 1)):
		cases.append((f"Mat({m}|{n})", superliefy(build_matrix_superalgebra(m, n)), (1, 0)))
	for n in range(1, max_n + 1):
		cases.append((f"q({n})", lie_queerify(build_matrix_algebra(n)), (0, 1)))
	for n in (1, 2):
		clifford = build_clifford(2 * n)
		cases.append((f"Q({clifford.name})", lie_queerify(clifford), (0, 1)))
	return cases


def get_data(filters):
	data = []
	for label, lie, expected in get_cases(int(filters.get("max_n", 3))):
		report = trace_space(lie)
		data.append(
			{
				"algebra": label,
				"bracket": lie.kind,
				"dim": lie.dim,
				"commutant_dim": report.commutant_dim,
				"even_dim": report.even_dim,
				"odd_dim": report.odd_dim,
				"expected": f"({expected[0]},{expected[1]})",
				"passed": report.dims == expected,
			}
		)
	return data
