# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Recursive-descent parser for operator expressions.

	expr    := term (('+' | '-') term)*
	term    := ['+' | '-'] factor (['*'] factor)*
	factor  := primary ['^' ['-'] number]
	primary := number ['/' number] | atom | '(' expr ')'

Atoms are ``x``/``d`` with an optional variable index in the weyl dialect, ``x``/``D`` in the psido
dialect and ``x``/``D``/``xi`` in the superpsido dialect. Values are built with the algebra's own
product, so the result is already normal ordered.
"""

from fractions import Fraction

from queertrace.exceptions import ExpressionSyntaxError
from queertrace.parsing.lexer import ATOM, END, NUMBER, OP, tokenize
from queertrace.psido.laurent import LaurentPoly
from queertrace.psido.operator import PsiOp, default_floor, psi_mul
from queertrace.psido.super import SuperFunction, SuperPsiOp, spsi_mul
from queertrace.weyl.operator import WeylOp, weyl_mul

WEYL = "weyl"
PSIDO = "psido"
SUPERPSIDO = "superpsido"
DIALECTS = (WEYL, PSIDO, SUPERPSIDO)


class WeylDialect:
	atoms = ("x", "d")

	def __init__(self, nvars):
		self.nvars = nvars

	def constant(self, c):
		return WeylOp.constant(c, self.nvars)

	def atom(self, token, exponent):
		if exponent < 0:
			raise ExpressionSyntaxError(
				f"Negative exponent on {token.text} at position {token.pos}", token.pos, "nonnegative integer"
			)
		index = 1 if token.index is None else token.index
		if not 1 <= index <= self.nvars:
			raise ExpressionSyntaxError(
				f"Variable index {index} is outside 1..{self.nvars}", token.pos, f"index in 1..{self.nvars}"
			)
		exps = [0] * self.nvars
		exps[index - 1] = exponent
		zeros = (0,) * self.nvars
		if token.text.startswith("x"):
			return WeylOp.monomial(tuple(exps), zeros)
		return WeylOp.monomial(zeros, tuple(exps))

	def mul(self, a, b):
		return weyl_mul(a, b)


class PsidoDialect:
	atoms = ("x", "D")

	def __init__(self, floor):
		self.floor = floor

	def constant(self, c):
		return PsiOp.function(LaurentPoly.constant(c), self.floor)

	def atom(self, token, exponent):
		if token.index is not None:
			raise ExpressionSyntaxError(f"{token.text} takes no variable index", token.pos, "x or D")
		if token.text == "x":
			return PsiOp.function(LaurentPoly.monomial(exponent), self.floor)
		return PsiOp.D(exponent, self.floor)

	def mul(self, a, b):
		return psi_mul(a, b, self.floor)


class SuperPsidoDialect(PsidoDialect):
	atoms = ("x", "D", "xi")

	def constant(self, c):
		return SuperPsiOp.function(SuperFunction(LaurentPoly.constant(c)), self.floor)

	def atom(self, token, exponent):
		if token.index is not None:
			raise ExpressionSyntaxError(f"{token.text} takes no variable index", token.pos, "x, D or xi")
		if token.text == "xi":
			if exponent < 0:
				raise ExpressionSyntaxError("xi has no inverse", token.pos, "nonnegative integer")
			if exponent == 0:
				return self.constant(1)
			# xi^2 = 0
			odd = LaurentPoly.constant(1) if exponent == 1 else LaurentPoly()
			return SuperPsiOp.function(SuperFunction(LaurentPoly(), odd), self.floor)
		if token.text == "x":
			return SuperPsiOp.function(SuperFunction(LaurentPoly.monomial(exponent)), self.floor)
		return SuperPsiOp.D(exponent, self.floor)

	def mul(self, a, b):
		return spsi_mul(a, b, self.floor)


class Parser:
	def __init__(self, text, dialect):
		self.text = text
		self.tokens = tokenize(text)
		self.position = 0
		self.dialect = dialect

	@property
	def current(self):
		return self.tokens[self.position]

	def advance(self):
		token = self.current
		if token.kind != END:
			self.position += 1
		return token

	def error(self, expected):
		token = self.current
		raise ExpressionSyntaxError(
			f"Expected {expected} at position {token.pos}, got {token}", token.pos, expected
		)

	def accept(self, text):
		if self.current.kind == OP and self.current.text == text:
			return self.advance()
		return None

	def expect(self, text):
		if not self.accept(text):
			self.error(repr(text))

	def parse(self):
		value = self.expr()
		if self.current.kind != END:
			self.error("operator or end of input")
		return value

	def expr(self):
		value = self.term()
		while True:
			if self.accept("+"):
				value = value + self.term()
			elif self.accept("-"):
				value = value - self.term()
			else:
				return value

	def _starts_factor(self):
		token = self.current
		return token.kind in (NUMBER, ATOM) or (token.kind == OP and token.text == "(")

	def term(self):
		negative = False
		if self.accept("-"):
			negative = True
		else:
			self.accept("+")
		value = self.factor()
		while True:
			if self.accept("*"):
				value = self.dialect.mul(value, self.factor())
			elif self._starts_factor():
				value = self.dialect.mul(value, self.factor())
			else:
				break
		return -value if negative else value

	def exponent(self):
		negative = bool(self.accept("-"))
		if self.current.kind != NUMBER:
			self.error("integer exponent")
		value = int(self.advance().text)
		return -value if negative else value

	def factor(self):
		token = self.current
		if token.kind == ATOM:
			self.advance()
			if token.text not in self.dialect.atoms:
				raise ExpressionSyntaxError(
					f"{token.text} is not an atom of this dialect", token.pos, " or ".join(self.dialect.atoms)
				)
			exponent = self.exponent() if self.accept("^") else 1
			return self.dialect.atom(token, exponent)

		if token.kind == NUMBER:
			self.advance()
			value = Fraction(int(token.text))
			if self.accept("/"):
				if self.current.kind != NUMBER:
					self.error("denominator")
				den = self.advance()
				if int(den.text) == 0:
					raise ExpressionSyntaxError("Zero denominator", den.pos, "nonzero integer")
				value /= int(den.text)
			if self.accept("^"):
				n = self.exponent()
				if not value and n < 0:
					raise ExpressionSyntaxError("Zero has no negative powers", token.pos, "nonzero base")
				value = value ** n
			return self.dialect.constant(value)

		if self.accept("("):
			value = self.expr()
			self.expect(")")
			if self.accept("^"):
				start = self.current.pos
				n = self.exponent()
				if n < 0:
					raise ExpressionSyntaxError("Only atoms take negative exponents", start, "nonnegative integer")
				result = self.dialect.constant(1)
				for _ in range(n):
					result = self.dialect.mul(result, value)
				return result
			return value

		self.error("number, atom or '('")


def _infer_nvars(tokens):
	indices = [t.index for t in tokens if t.kind == ATOM and t.index is not None]
	return max(indices, default=1)


def parse_operator_expression(text, dialect=WEYL, nvars=None, floor=None):
	"""Parse ``text`` into a WeylOp, PsiOp or SuperPsiOp."""
	if dialect == WEYL:
		if nvars is None:
			nvars = _infer_nvars(tokenize(text))
		handler = WeylDialect(nvars)
	elif dialect == PSIDO:
		handler = PsidoDialect(default_floor() if floor is None else floor)
	elif dialect == SUPERPSIDO:
		handler = SuperPsidoDialect(default_floor() if floor is None else floor)
	else:
		raise ExpressionSyntaxError(f"Unknown dialect {dialect!r}", 0, " | ".join(DIALECTS))
	return Parser(text, handler).parse()
