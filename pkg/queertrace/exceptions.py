# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Error hierarchy.

Every error carries a human readable ``message`` and optional ``details``. The CLI maps
``exit_code`` to the process exit status: 2 for bad input, 1 for a failed mathematical check.
"""


class QueertraceError(Exception):
	"""Base exception for queertrace."""

	exit_code = 2

	def __init__(self, message, details=None):
		self.message = message
		self.details = details
		super().__init__(self.message)

	def to_dict(self):
		data = {"error": type(self).__name__, "message": self.message}
		if self.details is not None:
			data["details"] = self.details
		return data


# Input errors

class ConfigError(QueertraceError):
	"""Site configuration could not be read."""


class AlgebraInputError(QueertraceError):
	"""Invalid algebra table, constructor argument or algebra file."""


class AlgebraMismatchError(QueertraceError):
	"""Operands live over different algebras (or different numbers of variables)."""


class InhomogeneousElementError(QueertraceError):
	"""A graded operation received an element that is not parity-homogeneous."""


class ExpressionSyntaxError(QueertraceError):
	"""Operator expression could not be parsed."""

	def __init__(self, message, position=None, expected=None):
		self.position = position
		self.expected = expected
		super().__init__(message, {"position": position, "expected": expected})


class UnsupportedFunctionError(QueertraceError):
	"""weyl_apply received a function outside the rational family."""


class TruncationError(QueertraceError):
	"""The requested truncation floor cannot deliver the requested coefficient."""


class PreconditionError(QueertraceError):
	"""An operation precondition does not hold for the given input."""


class DegenerateFormError(QueertraceError):
	"""The invariant form used to identify g* with g is degenerate."""


# Property failures

class PropertyCheckError(QueertraceError):
	"""A verification suite found a counterexample."""

	exit_code = 1


class TraceVanishingError(PropertyCheckError):
	"""A functional does not vanish on the (super)commutant."""


class CalibrationError(PropertyCheckError):
	"""No unique supertrace convention survived the vanishing suite."""


class LaxBlowUpError(PropertyCheckError):
	"""The Lax integrator produced non-finite values."""

	def __init__(self, message, step=None, time=None):
		self.step = step
		self.time = time
		super().__init__(message, {"step": step, "t": time})
