# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""Bounded-degree evidence for the uniqueness conjectures. Nothing here is asserted."""

from queertrace.psido.evidence import truncated_trace_table
from queertrace.weyl.supertrace import weight_zero_trace_evidence


def execute(filters=None):
	columns = get_columns()
	data = get_data(filters or {})
	return columns, data


def get_columns():
	return [
		{"fieldname": "algebra", "label": "Algebra", "fieldtype": "Data", "width": 10},
		{"fieldname": "bound", "label": "Bound", "fieldtype": "Data", "width": 10},
		{"fieldname": "monomials", "label": "Monomials", "fieldtype": "Int", "width": 10},
		{"fieldname": "brackets", "label": "Brackets", "fieldtype": "Int", "width": 9},
		{"fieldname": "even_count", "label": "Even", "fieldtype": "Int", "width": 5},
		{"fieldname": "odd_count", "label": "Odd", "fieldtype": "Int", "width": 5},
		{"fieldname": "witness", "label": "Witness survives", "fieldtype": "Check", "width": 17},
	]


def get_data(filters):
	k = int(filters.get("k", 6))
	radius = int(filters.get("radius", 1))
	weyl = weight_zero_trace_evidence(k)
	data = [
		{
			"algebra": "W_1",
			"bound": f"k={k}",
			"monomials": weyl["monomials"],
			"brackets": weyl["brackets"],
			# T is even
			"even_count": weyl["traceDim"],
			"odd_count": 0,
			"witness": weyl["containsT"],
		}
	]
	for row in truncated_trace_table(radius):
		data.append(
			{
				"algebra": row["algebra"],
				"bound": f"r={radius}",
				"monomials": row["monomials"],
				"brackets": row["brackets"],
				"even_count": row["evenCount"],
				"odd_count": row["oddCount"],
				"witness": row["liftedWitness"],
			}
		)
	return data
