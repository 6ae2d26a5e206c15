# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Lie-Poisson bracket {f, g}(X) = b(X, [grad f(X), grad g(X)]) with g* identified with g through the
invariant form b(u, v) = functional(uv).

States may be float arrays or object arrays of Fractions; exact inputs give exact brackets.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from queertrace.config import conf
from queertrace.exceptions import DegenerateFormError, PreconditionError
from queertrace.lax.carrier import GL, LaxCarrier, gram_rank
from queertrace.logger import logger

log = logger("lax")


def _identity_like(X):
	if X.dtype == object:
		out = np.full(X.shape, Fraction(0), dtype=object)
		for i in range(X.shape[0]):
			out[i, i] = Fraction(1)
		return out
	return np.eye(X.shape[0])


def _matrix_power(X, k):
	out = _identity_like(X)
	for _ in range(k):
		out = out @ X
	return out


@dataclass(frozen=True)
class PowTrace:
	"""f(X) = b(X^k): the trace of X^k under the carrier's form."""

	k: int

	def __post_init__(self):
		if self.k < 1:
			raise PreconditionError("powTrace needs k >= 1")

	def value(self, carrier, X, functional=None):
		return carrier.pairing(_matrix_power(X, self.k - 1), X, functional)

	def gradient(self, X):
		return self.k * _matrix_power(X, self.k - 1)

	def __str__(self):
		return f"powTrace({self.k})"


@dataclass(frozen=True, eq=False)
class Linear:
	"""f(X) = b(M, X)."""

	M: np.ndarray
	label: str = "M"

	def value(self, carrier, X, functional=None):
		return carrier.pairing(self.M, X, functional)

	def gradient(self, X):
		return self.M

	def __str__(self):
		return f"linear({self.label})"


def form_is_nondegenerate(carrier, functional=None):
	"""
	The form can identify g* with g when its Gram matrix has full rank and its restriction to
	the even subspace does too. The odd form qtr(uv) on q(n) pairs even with odd only and fails.
	"""
	rows, parities = carrier.gram(functional)
	everything = list(range(len(rows)))
	even = [i for i, p in enumerate(parities) if p == 0]
	return gram_rank(rows, everything) == len(everything) and gram_rank(rows, even) == len(even)


def require_nondegenerate(carrier, functional=None):
	if not form_is_nondegenerate(carrier, functional):
		name = functional or "default"
		raise DegenerateFormError(
			f"The {name} form on {carrier.name} is degenerate; pick another identification of g* with g"
		)


def poisson_bracket(f, g, X, carrier=None, functional=None, check_form=True):
	"""b(X, [grad f(X), grad g(X)])."""
	carrier = carrier or LaxCarrier(GL, X.shape[0])
	if check_form:
		require_nondegenerate(carrier, functional)
	a, b = f.gradient(X), g.gradient(X)
	return carrier.pairing(X, a @ b - b @ a, functional)


def gradient_check(f, X, h=1e-4, carrier=None, functional=None):
	"""Max relative error of b(grad f(X), E) against central differences over basis directions E."""
	if h <= 0:
		raise PreconditionError("gradient_check needs h > 0")
	carrier = carrier or LaxCarrier(GL, X.shape[0])
	X = np.asarray(X, dtype=float)
	grad = np.asarray(f.gradient(X), dtype=float)
	worst = 0.0
	for E, _ in carrier.basis():
		E = E.astype(float)
		fd = (f.value(carrier, X + h * E, functional) - f.value(carrier, X - h * E, functional)) / (2 * h)
		exact = carrier.pairing(grad, E, functional)
		worst = max(worst, abs(fd - exact) / max(1.0, abs(exact)))
	return float(worst)


def gradient_convergence(f, X, h=1e-2, carrier=None):
	"""error(h) / error(h/2); about 4 for central differences."""
	coarse = gradient_check(f, X, h, carrier)
	fine = gradient_check(f, X, h / 2, carrier)
	return {"h": h, "error": coarse, "errorHalf": fine, "ratio": coarse / fine if fine else float("inf")}


def involution_check(j, k, samples=100, seed=None, carrier=None):
	"""
	{powTrace(j), powTrace(k)}(X) at seeded rational X, exact.

	The control pair {linear(M), linear(N)}(X) = b(X, [M, N]) must be nonzero somewhere, showing the
	harness can see a nonzero bracket.
	"""
	if samples < 1:
		raise PreconditionError("involution_check needs samples >= 1")
	seed = int(conf.get("default_seed", 42) if seed is None else seed)
	carrier = carrier or LaxCarrier(GL, 3)
	require_nondegenerate(carrier)
	f, g = PowTrace(j), PowTrace(k)
	nonzero = []
	control_hits = 0
	for sample in range(samples):
		rng = np.random.default_rng([seed, sample])
		X = carrier.random_rational_state(rng)
		M = Linear(carrier.random_rational_state(rng), "M")
		N = Linear(carrier.random_rational_state(rng), "N")
		value = poisson_bracket(f, g, X, carrier, check_form=False)
		if value:
			nonzero.append({"sample": sample, "value": str(value)})
		if poisson_bracket(M, N, X, carrier, check_form=False):
			control_hits += 1
	report = {
		"pair": [str(f), str(g)],
		"carrier": carrier.name,
		"samples": samples,
		"seed": seed,
		"allZero": not nonzero,
		"counterexample": nonzero[0] if nonzero else None,
		"control": {"pair": ["linear(M)", "linear(N)"], "nonzeroSamples": control_hits},
	}
	report["passed"] = report["allZero"] and control_hits > 0
	log.info("involution %s: passed=%s control=%s", report["pair"], report["passed"], control_hits)
	return report
