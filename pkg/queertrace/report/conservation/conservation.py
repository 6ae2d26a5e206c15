# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

from queertrace.config import conf
from queertrace.lax.carrier import GL, GLSUPER, Q, QTRACE, SUPERTRACE, TRACE, LaxCarrier
from queertrace.lax.flow import PRule, conservation_report, lax_flow


def execute(filters=None):
	columns = get_columns()
	data = get_data(filters or {})
	return columns, data


def get_columns():
	return [
		{"fieldname": "carrier", "label": "Carrier", "fieldtype": "Data", "width": 10},
		{"fieldname": "functional", "label": "Functional", "fieldtype": "Data", "width": 11},
		{"fieldname": "k", "label": "k", "fieldtype": "Int", "width": 3},
		{"fieldname": "initial", "label": "Initial", "fieldtype": "Float", "width": 24},
		{"fieldname": "drift", "label": "Max drift", "fieldtype": "Float", "width": 24},
		{"fieldname": "h", "label": "h", "fieldtype": "Float", "width": 8},
	]


def get_flows():
	return [
		(LaxCarrier(GL, 3), TRACE),
		(LaxCarrier(GLSUPER, 2, 1), SUPERTRACE),
		(LaxCarrier(Q, 2), QTRACE),
	]


def get_data(filters):
	seed = int(filters.get("seed", conf.get("default_seed", 42)))
	h = float(filters.get("h", conf.get("lax_h", 1e-3)))
	t_end = float(filters.get("t_end", conf.get("lax_t_end", 1.0)))
	k_max = int(filters.get("k_max", conf.get("lax_k_max", 3)))
	data = []
	for carrier, functional in get_flows():
		trajectory = lax_flow(carrier, carrier.random_state(seed), PRule(), h, t_end)
		report = conservation_report(trajectory, functional, range(1, k_max + 1))
		for k in report.ks:
			data.append(
				{
					"carrier": carrier.name,
					"functional": functional,
					"k": k,
					"initial": report.initial[k],
					"drift": report.drifts[k],
					"h": h,
				}
			)
	return data
