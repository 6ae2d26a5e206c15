# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Reproduction driver.

Every suite registered in ``hooks.repro_suites`` is a callable ``suite(seed, trials) -> dict`` with
at least a ``passed`` key. ``run_all`` runs them in registration order:

1. lebedev_values       T(1) and the Case-1 value family
2. weyl_symmetry        T(PQ) = (-1)^{p(P)p(Q)} T(QP) on W_1 and W_2
3. weyl_decomposition   W_1 = K1 + [W_1, W_1]
4. trace_counts         trace-space dimensions of the matrix, queer and Clifford families
5. structure_cases      Case-2 and Case-3 commutant identities
6. adler_vanishing      the Adler trace on commutators
7. super_calculus       N=1 products and the calibrated supertrace
8. lax_conservation     isospectral drift and integrator order
9. involution           {tr L^2, tr L^3} = 0 and the gradient oracle
10. tensor_facts        tensor traces and no-trace propagation
11. truncated_evidence  bounded-box counts, reported without assertion
"""

import importlib
import time
from fractions import Fraction

import numpy as np

from queertrace import hooks
from queertrace.algebra.constructors import build_clifford, build_matrix_algebra, build_matrix_superalgebra
from queertrace.config import conf
from queertrace.exceptions import QueertraceError
from queertrace.lax.carrier import GL, Q, QTRACE, TRACE, LaxCarrier
from queertrace.lax.flow import PRule, conservation_report, lax_flow, measure_order
from queertrace.lax.poisson import PowTrace, gradient_check, gradient_convergence, involution_check
from queertrace.logger import log_error, logger
from queertrace.psido.operator import adler_vanishing_suite
from queertrace.psido.super import (
	SuperFunction,
	SuperPsiOp,
	calibrate,
	mr_vanishing_suite,
	spsi_associativity_suite,
	spsi_mul,
)
from queertrace.queerify.bracket import liefy, superliefy
from queertrace.report.trace_spaces import trace_spaces as trace_spaces_report
from queertrace.report.truncated_evidence import truncated_evidence as evidence_report
from queertrace.traces.cases import case2_report, case3_report
from queertrace.traces.named import matrix_trace_functional, supertrace_functional, tensor_convention_report, tensor_trace
from queertrace.traces.propagation import no_trace_propagation_check
from queertrace.weyl.membership import commutant_membership
from queertrace.weyl.operator import WeylAlgebra, WeylOp
from queertrace.weyl.supertrace import (
	case2_family_check,
	lebedev_case1_values,
	supertrace_property_suite,
	weyl_supertrace_T,
)

log = logger("repro")

LAX_DRIFT_TOLERANCE = 1e-8
ORDER_RATIO_RANGE = (12.0, 20.0)
GRADIENT_RATIO_RANGE = (3.5, 4.5)


class SuiteStats:
	"""Track suite outcomes across a run."""

	def __init__(self):
		self.run = 0
		self.passed = 0
		self.failed = 0
		self.errors = 0

	def record(self, result):
		self.run += 1
		if result.get("error"):
			self.errors += 1
		elif result["passed"]:
			self.passed += 1
		else:
			self.failed += 1

	def to_dict(self):
		return {
			"suites_run": self.run,
			"suites_passed": self.passed,
			"suites_failed": self.failed,
			"errors": self.errors,
		}


def _trials(trials, default):
	return default if trials is None else int(trials)


def lebedev_values(seed=None, trials=None):
	rows = lebedev_case1_values(8)
	t_one = weyl_supertrace_T(WeylOp.constant(1))
	return {
		"T(1)": str(t_one),
		"rows": [{k: str(v) if isinstance(v, Fraction) else v for k, v in row.items()} for row in rows],
		"passed": t_one == Fraction(1, 2) and all(row["passed"] for row in rows),
	}


def weyl_symmetry(seed=42, trials=None):
	trials = _trials(trials, 500)
	runs = [supertrace_property_suite(nvars, 6, trials, seed) for nvars in (1, 2)]
	family = case2_family_check(seed=seed)
	return {
		"runs": runs,
		"case2Family": family,
		"passed": all(r["passed"] for r in runs) and family["passed"],
	}


def weyl_decomposition(seed=None, trials=None):
	rows = []
	for a in range(4):
		p = WeylOp.monomial((a,), (a,))
		result = commutant_membership(p, allow_scalar=True)
		expected = 2 * weyl_supertrace_T(p)
		rows.append({"P": repr(p), "scalar": str(result.scalar), "passed": result.success and result.scalar == expected})
	one = commutant_membership(WeylOp.constant(1))
	certified = not one.success and one.certificate == Fraction(1, 2)
	return {
		"rows": rows,
		"oneCertificate": None if one.certificate is None else str(one.certificate),
		"passed": certified and all(r["passed"] for r in rows),
	}


def trace_counts(seed=None, trials=None):
	_, data = trace_spaces_report.execute()
	return {"rows": data, "passed": all(row["passed"] for row in data)}


def structure_cases(seed=None, trials=None):
	algebras = [build_matrix_superalgebra(1, 1), build_matrix_superalgebra(2, 1), build_clifford(2)]
	reports = [case2_report(a) for a in algebras]
	reports += [case3_report(a) for a in algebras + [build_clifford(4)]]
	return {"reports": reports, "passed": all(r["passed"] for r in reports)}


def adler_vanishing(seed=42, trials=None):
	return adler_vanishing_suite(_trials(trials, 500), seed)


def super_calculus(seed=42, trials=None):
	floor = -8
	d_dinv = spsi_mul(SuperPsiOp.D(1, floor), SuperPsiOp.D(-1, floor), floor)
	inverse_ok = d_dinv.terms == {0: SuperFunction(Fraction(1))}
	associativity = spsi_associativity_suite(_trials(trials, 200), seed)
	calibration = calibrate(seed=seed)
	vanishing = mr_vanishing_suite(_trials(trials, 500), seed)
	return {
		"inverse": inverse_ok,
		"associativity": associativity,
		"calibration": calibration.to_dict(),
		"vanishing": vanishing,
		"passed": inverse_ok and associativity["passed"] and vanishing["passed"],
	}


def lax_conservation(seed=42, trials=None):
	h, t_end = 1e-3, 1.0
	flows = []
	for carrier, functional in ((LaxCarrier(GL, 3), TRACE), (LaxCarrier(Q, 2), QTRACE)):
		trajectory = lax_flow(carrier, carrier.random_state(seed), PRule(), h, t_end)
		report = conservation_report(trajectory, functional, [1, 2, 3])
		flows.append({"carrier": carrier.name, **report.to_dict(), "passed": report.max_drift() < LAX_DRIFT_TOLERANCE})
	gl3 = LaxCarrier(GL, 3)
	order = measure_order(gl3, gl3.random_state(seed))
	low, high = ORDER_RATIO_RANGE
	order["passed"] = low <= order["ratio"] <= high
	return {"flows": flows, "order": order, "passed": all(f["passed"] for f in flows) and order["passed"]}


def involution(seed=42, trials=None):
	check = involution_check(2, 3, samples=_trials(trials, 100), seed=seed)
	X = np.random.default_rng(seed).standard_normal((3, 3))
	convergence = gradient_convergence(PowTrace(3), X)
	quadratic = gradient_check(PowTrace(2), X)
	low, high = GRADIENT_RATIO_RANGE
	gradient_ok = low <= convergence["ratio"] <= high and quadratic < 1e-8
	return {
		"involution": check,
		"gradient": {**convergence, "quadraticError": quadratic},
		"passed": check["passed"] and gradient_ok,
	}


def tensor_facts(seed=None, trials=None):
	t2, t3 = (matrix_trace_functional(liefy(build_matrix_algebra(n))) for n in (2, 3))
	s = supertrace_functional(superliefy(build_matrix_superalgebra(1, 1)))
	plain = tensor_trace(t2, t3)
	signed = tensor_trace(s, s)
	propagation = no_trace_propagation_check(WeylAlgebra(1), build_matrix_algebra(2))
	return {
		"plain": plain.algebra.name,
		"signed": signed.algebra.name,
		"conventions": tensor_convention_report(s, s),
		"propagation": propagation,
		"passed": propagation["passed"],
	}


def truncated_evidence(seed=None, trials=None):
	_, data = evidence_report.execute()
	# evidence only
	return {"rows": data, "passed": True}


def resolve_suite(path):
	"""Import ``module.attr`` from a dotted hook path."""
	module_name, _, attr = path.rpartition(".")
	module = importlib.import_module(module_name)
	return getattr(module, attr)


def suite_name(path):
	return path.rpartition(".")[2]


def run_suite(path, seed=None, trials=None):
	"""Run one suite; input and property errors become failed results rather than aborting the run."""
	seed = int(conf.get("default_seed", 42) if seed is None else seed)
	name = suite_name(path)
	start = time.perf_counter()
	try:
		result = resolve_suite(path)(seed, trials)
	except QueertraceError as e:
		log_error(e.message, title=f"repro {name}")
		result = {"passed": False, "error": e.to_dict()}
	# timings stay out of the report
	log.info("suite %s: passed=%s in %.2fs", name, result["passed"], time.perf_counter() - start)
	return {"suite": name, **result}


def run_all(seed=None, trials=None, only=None):
	"""Run the registered suites in order; ``only`` restricts to the named ones."""
	stats = SuiteStats()
	results = []
	for path in hooks.repro_suites:
		if only and suite_name(path) not in only:
			continue
		result = run_suite(path, seed, trials)
		stats.record(result)
		results.append(result)
	return {"results": results, "stats": stats.to_dict(), "passed": stats.run == stats.passed}
