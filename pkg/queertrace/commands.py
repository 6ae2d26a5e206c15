# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
The ``queertrace`` command.

Reports go to stdout (text tables or ``--json``), logs and errors to stderr. Exit status: 0 when
every check passes, 1 when a mathematical property check fails, 2 on bad input.
"""

import argparse
import importlib
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from queertrace import __version__, hooks
from queertrace.algebra.constructors import (
	build_clifford,
	build_matrix_algebra,
	build_matrix_superalgebra,
	tensor_product,
)
from queertrace.algebra.scalar import format_scalar
from queertrace.algebra.table import AlgebraTable, check_associativity, check_parity, check_unit
from queertrace.config import conf
from queertrace.exceptions import AlgebraInputError, QueertraceError
from queertrace.integrations.files.loader import dump_algebra, load_algebra, write_algebra
from queertrace.lax.carrier import FUNCTIONALS, GL, GLSUPER, Q, LaxCarrier
from queertrace.lax.flow import SKEW, ZERO, PRule, conservation_report, lax_flow
from queertrace.lax.poisson import involution_check
from queertrace.logger import log_error, set_level
from queertrace.parsing.parser import PSIDO, SUPERPSIDO, WEYL, parse_operator_expression
from queertrace.parsing.printer import format_laurent, format_superfunction, format_value
from queertrace.psido.operator import adler_trace, psi_mul, psi_res
from queertrace.psido.super import mr_supertrace, spsi_mul, spsi_res
from queertrace.queerify.bracket import BracketAlgebra, liefy, superliefy
from queertrace.queerify.queer import assoc_queerify, lie_queerify
from queertrace.repro import run_all
from queertrace.traces.cases import case1_deficit, case2_report, case3_report
from queertrace.traces.functional import trace_space
from queertrace.weyl.membership import commutant_membership
from queertrace.weyl.supertrace import supertrace_property_suite, weyl_supertrace_T


@dataclass
class CommandResult:
	data: object
	text: str
	passed: bool = True


def _json_default(value):
	if isinstance(value, Fraction):
		return format_scalar(value)
	if isinstance(value, np.ndarray):
		return value.tolist()
	if isinstance(value, np.generic):
		return value.item()
	return str(value)


def to_json(data):
	return json.dumps(data, indent=1, default=_json_default, ensure_ascii=False)


def _cell(value, fieldtype):
	if fieldtype == "Check":
		return "yes" if value else "no"
	if fieldtype == "Float":
		return f"{value:.17g}"
	if isinstance(value, Fraction):
		return format_scalar(value)
	return str(value)


def render_table(columns, data):
	"""Fixed-width text table; each column is padded to its declared width."""
	widths = [max(c["width"], len(c["label"])) for c in columns]
	lines = ["  ".join(c["label"].ljust(w) for c, w in zip(columns, widths)).rstrip()]
	lines.append("  ".join("-" * w for w in widths))
	for row in data:
		cells = [_cell(row.get(c["fieldname"]), c["fieldtype"]) for c in columns]
		lines.append("  ".join(text.ljust(w) for text, w in zip(cells, widths)).rstrip())
	return "\n".join(lines)


def _suite_text(title, report):
	status = "passed" if report["passed"] else "FAILED"
	lines = [f"{title}: {status}"]
	counterexample = report.get("counterexample")
	if counterexample:
		lines.append("counterexample: " + to_json(counterexample))
	return "\n".join(lines)


# algebra


def _build(args):
	if args.kind == "mat":
		return build_matrix_algebra(args.n)
	if args.kind == "matsuper":
		return build_matrix_superalgebra(args.m, args.n)
	if args.kind == "clifford":
		squares = [1 if i % 2 == 0 else -1 for i in range(args.n)] if args.split else None
		return build_clifford(args.n, squares)
	if len(args.algebra or []) != 2:
		raise AlgebraInputError("A tensor product needs two --algebra files")
	a, b = (_table(name) for name in args.algebra)
	return tensor_product(a, b, signed=args.signed)


def _table(name):
	algebra = load_algebra(name)
	if not isinstance(algebra, AlgebraTable):
		raise AlgebraInputError(f"{name} holds a bracket algebra; an associative table is needed here")
	return algebra


def _emit_algebra(algebra, out):
	if out:
		path = write_algebra(algebra, out)
		return CommandResult({"algebra": algebra.name, "path": str(path)}, f"wrote {algebra.name} to {path}")
	doc = dump_algebra(algebra)
	return CommandResult(doc, to_json(doc))


def cmd_algebra_build(args):
	return _emit_algebra(_build(args), args.out)


def cmd_algebra_show(args):
	algebra = load_algebra(args.algebra[0])
	if isinstance(algebra, BracketAlgebra):
		table = algebra.carrier
		kind = algebra.kind
	else:
		table = algebra
		kind = "associative"
	checks = {
		"associativity": len(check_associativity(table)),
		"parity": len(check_parity(table)),
		"unit": len(check_unit(table)),
	}
	even, odd = table.superdim
	data = {
		"name": algebra.name,
		"kind": kind,
		"dim": table.dim,
		"superdim": [even, odd],
		"basis": [{"label": b, "parity": p} for b, p in zip(table.basis, table.parity)],
		"unital": table.unit is not None,
		"failures": checks,
	}
	lines = [
		f"{algebra.name} ({kind}), dim {table.dim} = {even}|{odd}, unital: {'yes' if table.unit is not None else 'no'}",
		"basis: " + " ".join(f"{b}[{p}]" for b, p in zip(table.basis, table.parity)),
	]
	lines += [f"{name} failures: {count}" for name, count in checks.items()]
	return CommandResult(data, "\n".join(lines), passed=not any(checks.values()))


def cmd_queerify(args):
	table = _table(args.algebra[0])
	return _emit_algebra(lie_queerify(table) if args.lie else assoc_queerify(table), args.out)


# traces


def _bracket_algebra(name, bracket):
	algebra = load_algebra(name)
	if isinstance(algebra, BracketAlgebra):
		return algebra
	if bracket == "super":
		return superliefy(algebra)
	if bracket == "queer":
		return lie_queerify(algebra)
	return liefy(algebra)


def cmd_traces_count(args):
	report = trace_space(_bracket_algebra(args.algebra[0], args.bracket))
	dims = {"evenDim": report.even_dim, "oddDim": report.odd_dim}
	if args.json:
		return CommandResult(report.to_dict(), "")
	return CommandResult(dims, json.dumps(dims, separators=(",", ":")))


def cmd_traces_report(args):
	table = _table(args.algebra[0])
	if args.case == 1:
		report = case1_deficit(table)
		text = "\n".join(f"{k}: {v}" for k, v in report.items())
		return CommandResult(report, text)
	report = case2_report(table) if args.case == 2 else case3_report(table)
	columns = [
		{"fieldname": "name", "label": "Check", "fieldtype": "Data", "width": 24},
		{"fieldname": "asserted", "label": "Asserted", "fieldtype": "Check", "width": 9},
		{"fieldname": "pass", "label": "Passed", "fieldtype": "Check", "width": 7},
	]
	dims = ", ".join(f"{k}={v}" for k, v in report["dims"].items())
	text = f"Case {args.case} on {report['algebra']}: {dims}\n" + render_table(columns, report["checks"])
	return CommandResult(report, text, report["passed"])


# weyl


def cmd_weyl_trace(args):
	op = parse_operator_expression(args.expr, WEYL, nvars=args.n)
	value = weyl_supertrace_T(op)
	return CommandResult({"expr": format_value(op), "T": format_scalar(value)}, format_scalar(value))


def cmd_weyl_verify(args):
	trials = args.trials if args.trials is not None else int(conf.get("default_trials", 500))
	report = supertrace_property_suite(args.n or 1, args.degree, trials, args.seed)
	return CommandResult(report, _suite_text(f"T(PQ) = (-1)^(p(P)p(Q)) T(QP) on W_{report['nvars']}", report), report["passed"])


def cmd_weyl_commutant(args):
	op = parse_operator_expression(args.expr, WEYL, nvars=1)
	result = commutant_membership(op, args.degree_cap, allow_scalar=args.with_scalar)
	data = result.to_dict()
	if result.success:
		parts = [f"[{a}, {b}]" for a, b in data["pairs"]]
		if result.scalar:
			parts.insert(0, f"{data['scalar']}*1")
		text = f"{format_value(op)} = " + (" + ".join(parts) or "0")
	else:
		text = f"not in the supercommutant up to degree {result.degree_cap}; T = {data['certificate']}"
	return CommandResult(data, text)


# psido


def _dialect(args):
	return SUPERPSIDO if args.super else PSIDO


def _parse_psi(args, text):
	return parse_operator_expression(text, _dialect(args), floor=args.floor)


def cmd_psido_mul(args):
	p, q = _parse_psi(args, args.expr), _parse_psi(args, args.expr2)
	product = (spsi_mul if args.super else psi_mul)(p, q, args.floor)
	text = format_value(product)
	return CommandResult({"product": text, "floor": product.floor, "exact": product.exact}, text)


def cmd_psido_res(args):
	op = _parse_psi(args, args.expr)
	text = format_superfunction(spsi_res(op)) if args.super else format_laurent(psi_res(op))
	return CommandResult({"res": text}, text)


def cmd_psido_trace(args):
	op = _parse_psi(args, args.expr)
	value = mr_supertrace(op) if args.super else adler_trace(op)
	text = format_scalar(value)
	return CommandResult({"trace": text, "functional": "mr" if args.super else "adler"}, text)


# lax


def _carrier(args):
	if args.algebra:
		return LaxCarrier.from_algebra(load_algebra(args.algebra[0]))
	if args.kind == GLSUPER:
		return LaxCarrier(GLSUPER, args.n, args.m)
	return LaxCarrier(args.kind, args.n)


def cmd_lax_run(args):
	carrier = _carrier(args)
	functional = args.functional or FUNCTIONALS[carrier.kind][0]
	rule = PRule(args.rule, coefficient=args.coefficient, power=args.power) if args.rule == SKEW else PRule(args.rule)
	trajectory = lax_flow(carrier, carrier.random_state(args.seed), rule, args.h, args.t_end)
	k_max = args.k_max if args.k_max is not None else int(conf.get("lax_k_max", 3))
	report = conservation_report(trajectory, functional, range(1, k_max + 1))
	if args.out:
		report.write_csv(args.out)
	data = {"carrier": carrier.name, "seed": args.seed, "rule": rule.to_dict(), **report.to_dict()}
	columns = [
		{"fieldname": "k", "label": "k", "fieldtype": "Int", "width": 3},
		{"fieldname": "initial", "label": "Initial", "fieldtype": "Float", "width": 24},
		{"fieldname": "drift", "label": "Max drift", "fieldtype": "Float", "width": 24},
	]
	rows = [{"k": k, "initial": report.initial[k], "drift": report.drifts[k]} for k in report.ks]
	header = f"{functional}(L^k) on {carrier.name}, h={report.h:.17g}, tEnd={report.t_end:.17g}"
	return CommandResult(data, header + "\n" + render_table(columns, rows))


def cmd_poisson_check(args):
	carrier = _carrier(args)
	samples = args.trials if args.trials is not None else 100
	report = involution_check(args.j, args.k, samples, args.seed, carrier)
	title = f"{{powTrace({args.j}), powTrace({args.k})}} on {carrier.name}"
	text = _suite_text(title, report) + f"\ncontrol nonzero at {report['control']['nonzeroSamples']} of {samples} samples"
	return CommandResult(report, text, report["passed"])


# repro and reports


def cmd_repro_all(args):
	summary = run_all(args.seed, args.trials, args.only)
	columns = [
		{"fieldname": "suite", "label": "Suite", "fieldtype": "Data", "width": 20},
		{"fieldname": "passed", "label": "Passed", "fieldtype": "Check", "width": 7},
		{"fieldname": "error", "label": "Error", "fieldtype": "Data", "width": 0},
	]
	rows = [
		{"suite": r["suite"], "passed": r["passed"], "error": r["error"]["message"] if r.get("error") else ""}
		for r in summary["results"]
	]
	lines = [render_table(columns, rows)]
	for r in summary["results"]:
		if not r["passed"] and r.get("counterexample"):
			lines.append(f"{r['suite']} counterexample: " + to_json(r["counterexample"]))
	return CommandResult(summary, "\n".join(lines), summary["passed"])


def _filters(pairs):
	filters = {}
	for pair in pairs or []:
		key, sep, value = pair.partition("=")
		if not sep:
			raise AlgebraInputError(f"Filters are key=value, got {pair!r}")
		filters[key] = value
	return filters


def cmd_report(args):
	if args.name not in hooks.reports:
		raise AlgebraInputError(f"Unknown report {args.name!r}; choose from {', '.join(hooks.reports)}")
	module = importlib.import_module(f"queertrace.report.{args.name}.{args.name}")
	filters = _filters(args.filter)
	if args.seed is not None:
		filters.setdefault("seed", args.seed)
	columns, data = module.execute(filters)
	passed = all(row.get("passed", True) for row in data)
	return CommandResult({"columns": columns, "data": data}, render_table(columns, data), passed)


# parser


def _common():
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument("--json", action="store_true", help="Emit JSON instead of text")
	common.add_argument("--verbose", action="store_true", help="Log progress to stderr")
	common.add_argument("--seed", type=int, default=int(conf.get("default_seed", 42)))
	common.add_argument("--trials", type=int, default=None)
	return common


def _add(subparsers, name, handler, common, **kwargs):
	parser = subparsers.add_parser(name, parents=[common], **kwargs)
	parser.set_defaults(handler=handler)
	return parser


def get_parser():
	common = _common()
	parser = argparse.ArgumentParser(prog="queertrace", description=hooks.app_description)
	parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
	commands = parser.add_subparsers(dest="command", required=True)

	algebra = commands.add_parser("algebra", help="Build and inspect algebra files").add_subparsers(
		dest="action", required=True
	)
	build = _add(algebra, "build", cmd_algebra_build, common)
	build.add_argument("--kind", choices=("mat", "matsuper", "clifford", "tensor"), required=True)
	build.add_argument("--n", type=int, default=1)
	build.add_argument("--m", type=int, default=1)
	build.add_argument("--split", action="store_true", help="Clifford squares alternate +1, -1")
	build.add_argument("--signed", action="store_true", help="Koszul-signed tensor product")
	build.add_argument("--algebra", action="append")
	build.add_argument("--out")
	show = _add(algebra, "show", cmd_algebra_show, common)
	show.add_argument("--algebra", action="append", required=True)

	queer = _add(commands, "queerify", cmd_queerify, common, help="Q(A), or q(A) with --lie")
	queer.add_argument("--algebra", action="append", required=True)
	queer.add_argument("--lie", action="store_true")
	queer.add_argument("--out")

	traces = commands.add_parser("traces", help="Trace spaces and commutant structure").add_subparsers(
		dest="action", required=True
	)
	count = _add(traces, "count", cmd_traces_count, common)
	count.add_argument("--algebra", action="append", required=True)
	count.add_argument("--bracket", choices=("plain", "super", "queer"), default="plain")
	case = _add(traces, "report", cmd_traces_report, common)
	case.add_argument("--algebra", action="append", required=True)
	case.add_argument("--case", type=int, choices=(1, 2, 3), required=True)

	weyl = commands.add_parser("weyl", help="The Weyl superalgebra W_n").add_subparsers(dest="action", required=True)
	trace = _add(weyl, "trace", cmd_weyl_trace, common)
	trace.add_argument("--n", type=int, default=None)
	trace.add_argument("--expr", required=True)
	verify = _add(weyl, "verify", cmd_weyl_verify, common)
	verify.add_argument("--n", type=int, default=1)
	verify.add_argument("--degree", type=int, default=6)
	commutant = _add(weyl, "commutant", cmd_weyl_commutant, common)
	commutant.add_argument("--expr", required=True)
	commutant.add_argument("--degree-cap", type=int, default=None)
	commutant.add_argument("--with-scalar", action="store_true", help="Allow a multiple of 1: P = s*1 + sum [A, B]")

	psido = commands.add_parser("psido", help="Pseudo-differential operators").add_subparsers(
		dest="action", required=True
	)
	for name, handler in (("mul", cmd_psido_mul), ("res", cmd_psido_res), ("trace", cmd_psido_trace)):
		sub = _add(psido, name, handler, common)
		sub.add_argument("--expr", required=True)
		if name == "mul":
			sub.add_argument("--expr2", required=True)
		sub.add_argument("--super", action="store_true", help="N=1 extended operators")
		sub.add_argument("--floor", type=int, default=None)

	lax = commands.add_parser("lax", help="Lax flows").add_subparsers(dest="action", required=True)
	run = _add(lax, "run", cmd_lax_run, common)
	poisson = commands.add_parser("poisson", help="Lie-Poisson brackets").add_subparsers(dest="action", required=True)
	check = _add(poisson, "check", cmd_poisson_check, common)
	for sub in (run, check):
		sub.add_argument("--kind", choices=(GL, GLSUPER, Q), default=GL)
		sub.add_argument("--n", type=int, default=3)
		sub.add_argument("--m", type=int, default=1)
		sub.add_argument("--algebra", action="append")
	run.add_argument("--h", type=float, default=None)
	run.add_argument("--t-end", type=float, default=None)
	run.add_argument("--k-max", type=int, default=None)
	run.add_argument("--functional", choices=("trace", "qtrace", "supertrace"), default=None)
	run.add_argument("--rule", choices=(SKEW, ZERO), default=SKEW)
	run.add_argument("--coefficient", type=float, default=1.0)
	run.add_argument("--power", type=int, default=1)
	run.add_argument("--out", help="CSV time series")
	check.add_argument("--j", type=int, default=2)
	check.add_argument("--k", type=int, default=3)

	repro = commands.add_parser("repro", help="Reproduction suites").add_subparsers(dest="action", required=True)
	everything = _add(repro, "all", cmd_repro_all, common)
	everything.add_argument("--only", nargs="*", default=None, help="Suite names to run")

	report = _add(commands, "report", cmd_report, common, help="Run a report table")
	report.add_argument("name", choices=hooks.reports)
	report.add_argument("--filter", action="append", help="key=value")

	return parser


def main(argv=None):
	parser = get_parser()
	args = parser.parse_args(argv)
	if args.verbose:
		set_level("INFO")
	try:
		result = args.handler(args)
	except QueertraceError as e:
		log_error(e.message, title=" ".join(filter(None, (args.command, getattr(args, "action", None)))))
		if args.json:
			print(to_json(e.to_dict()), file=sys.stderr)
		else:
			print(f"error: {e.message}", file=sys.stderr)
		return e.exit_code
	print(to_json(result.data) if args.json else result.text)
	return 0 if result.passed else 1


if __name__ == "__main__":
	sys.exit(main())
