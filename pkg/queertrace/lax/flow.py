# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Fixed-step RK4 for the Lax equation dL/dt = [L, P(L)] and drift of trace invariants.

Each RK4 increment is a combination of commutators, so tr(L) (and qtr(L) on q(n)) is kept to
roundoff; higher powers drift at the integrator's order.
"""

from dataclasses import dataclass, field

import numpy as np

from queertrace.config import conf
from queertrace.exceptions import AlgebraInputError, LaxBlowUpError, PreconditionError
from queertrace.lax.carrier import LaxCarrier
from queertrace.logger import logger

log = logger("lax")

ZERO = "zero"
FIXED = "fixed"
SKEW = "skew"


@dataclass(frozen=True, eq=False)
class PRule:
	"""
	P(L) for the Lax equation.

	``zero``: P = 0. ``fixed``: P = ``matrix`` (a user matrix). ``skew``: P = c * skew(E(L)^power),
	the isospectral default, where E projects onto the even part and skew(M) = (M - M^T) / 2.
	"""

	kind: str = SKEW
	matrix: object = None
	coefficient: float = 1.0
	power: int = 1

	def __post_init__(self):
		if self.kind not in (ZERO, FIXED, SKEW):
			raise AlgebraInputError(f"Unknown P rule {self.kind!r}")
		if self.kind == FIXED and self.matrix is None:
			raise AlgebraInputError("A fixed P rule needs a matrix")
		if self.power < 1:
			raise AlgebraInputError("P rule power must be >= 1")

	def __call__(self, carrier, state):
		if self.kind == ZERO:
			return np.zeros_like(state)
		if self.kind == FIXED:
			return np.asarray(self.matrix, dtype=float)
		even = carrier.even_part(state)
		m = np.linalg.matrix_power(even, self.power)
		return self.coefficient * (m - m.T) / 2

	def to_dict(self):
		data = {"kind": self.kind}
		if self.kind == FIXED:
			data["matrix"] = np.asarray(self.matrix, dtype=float).tolist()
		if self.kind == SKEW:
			data.update(coefficient=self.coefficient, power=self.power)
		return data


@dataclass
class LaxState:
	carrier: LaxCarrier
	L: np.ndarray
	t: float


@dataclass
class Trajectory:
	carrier: LaxCarrier
	rule: PRule
	h: float
	times: np.ndarray
	states: np.ndarray

	def __len__(self):
		return len(self.times)

	def state(self, i):
		return LaxState(self.carrier, self.states[i], float(self.times[i]))

	@property
	def t_end(self):
		return float(self.times[-1])


def _rhs(carrier, rule, state):
	p = rule(carrier, state)
	return state @ p - p @ state


def lax_flow(carrier, L0, rule=None, h=None, t_end=None):
	"""Integrate dL/dt = [L, P(L)] from ``L0`` with classical RK4."""
	h = float(conf.get("lax_h", 1e-3) if h is None else h)
	t_end = float(conf.get("lax_t_end", 1.0) if t_end is None else t_end)
	if h <= 0:
		raise PreconditionError(f"Step size must be positive, got {h}")
	if t_end < 0:
		raise PreconditionError(f"tEnd must be nonnegative, got {t_end}")
	rule = rule or PRule()
	state = carrier.to_array(L0)
	if rule.kind == FIXED and np.asarray(rule.matrix).shape != state.shape:
		raise AlgebraInputError(f"P must be {state.shape[0]}x{state.shape[1]}")

	steps = int(round(t_end / h))
	states = np.empty((steps + 1,) + state.shape)
	states[0] = state
	for step in range(1, steps + 1):
		k1 = _rhs(carrier, rule, state)
		k2 = _rhs(carrier, rule, state + h / 2 * k1)
		k3 = _rhs(carrier, rule, state + h / 2 * k2)
		k4 = _rhs(carrier, rule, state + h * k3)
		state = state + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
		if not np.all(np.isfinite(state)):
			log.warning("Lax flow on %s blew up at step %s", carrier.name, step)
			raise LaxBlowUpError(f"Non-finite state at step {step}", step=step, time=step * h)
		states[step] = state
	times = np.arange(steps + 1) * h
	log.info("Lax flow on %s: %s steps of h=%s", carrier.name, steps, h)
	return Trajectory(carrier, rule, h, times, states)


@dataclass
class ConservationReport:
	functional: str
	h: float
	t_end: float
	ks: list
	initial: dict = field(default_factory=dict)
	drifts: dict = field(default_factory=dict)
	times: np.ndarray = None
	values: np.ndarray = None

	def max_drift(self):
		return max(self.drifts.values(), default=0.0)

	def to_dict(self):
		return {
			"h": self.h,
			"tEnd": self.t_end,
			"functional": self.functional,
			"initial": {str(k): v for k, v in self.initial.items()},
			"drifts": {str(k): v for k, v in self.drifts.items()},
		}

	def write_csv(self, path):
		"""Time series t, value(k) for every k, 17 significant digits."""
		header = ",".join(["t"] + [f"k={k}" for k in self.ks])
		table = np.column_stack([self.times, self.values])
		np.savetxt(path, table, delimiter=",", header=header, comments="", fmt="%.17g")


def conservation_report(trajectory, functional="trace", ks=None):
	"""functional(L^k) along the trajectory with the max absolute drift from t = 0."""
	carrier = trajectory.carrier
	if ks is None:
		ks = list(range(1, int(conf.get("lax_k_max", 3)) + 1))
	ks = [int(k) for k in ks]
	if any(k < 1 for k in ks):
		raise PreconditionError("Powers must be >= 1")
	values = np.empty((len(trajectory), len(ks)))
	for i, state in enumerate(trajectory.states):
		power = np.eye(state.shape[0])
		top = 0
		for col, k in sorted(enumerate(ks), key=lambda item: item[1]):
			while top < k:
				power = power @ state
				top += 1
			values[i, col] = carrier.functional(functional, power)
	initial = {k: float(values[0, col]) for col, k in enumerate(ks)}
	drifts = {k: float(np.max(np.abs(values[:, col] - values[0, col]))) for col, k in enumerate(ks)}
	return ConservationReport(functional, trajectory.h, trajectory.t_end, ks, initial, drifts, trajectory.times, values)


def measure_order(carrier, L0, rule=None, functional="trace", k=3, h=0.02, t_end=1.0):
	"""drift(h) / drift(h/2) for functional(L^k); about 16 for RK4."""
	coarse = conservation_report(lax_flow(carrier, L0, rule, h, t_end), functional, [k]).drifts[k]
	fine = conservation_report(lax_flow(carrier, L0, rule, h / 2, t_end), functional, [k]).drifts[k]
	ratio = coarse / fine if fine else float("inf")
	return {"functional": functional, "k": k, "h": h, "drift": coarse, "driftHalf": fine, "ratio": ratio}
