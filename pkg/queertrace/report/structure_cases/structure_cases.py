# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

from queertrace.algebra.constructors import build_clifford, build_matrix_superalgebra
from queertrace.traces.cases import case2_report, case3_report


def execute(filters=None):
	columns = get_columns()
	data = get_data(filters or {})
	return columns, data


def get_columns():
	return [
		{"fieldname": "case", "label": "Case", "fieldtype": "Int", "width": 5},
		{"fieldname": "algebra", "label": "Algebra", "fieldtype": "Data", "width": 10},
		{"fieldname": "check", "label": "Check", "fieldtype": "Data", "width": 24},
		{"fieldname": "asserted", "label": "Asserted", "fieldtype": "Check", "width": 9},
		{"fieldname": "passed", "label": "Passed", "fieldtype": "Check", "width": 7},
	]


def get_algebras(case):
	algebras = [build_matrix_superalgebra(1, 1), build_matrix_superalgebra(2, 1), build_clifford(2)]
	if case == 3:
		algebras.append(build_clifford(4))
	return algebras


def get_data(filters):
	cases = [int(filters["case"])] if filters.get("case") else [2, 3]
	data = []
	for case in cases:
		build = case2_report if case == 2 else case3_report
		for algebra in get_algebras(case):
			report = build(algebra)
			for check in report["checks"]:
				data.append(
					{
						"case": case,
						"algebra": algebra.name,
						"check": check["name"],
						"asserted": check["asserted"],
						"passed": check["pass"],
					}
				)
	return data
