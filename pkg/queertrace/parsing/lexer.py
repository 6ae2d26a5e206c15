# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""Tokenizer shared by the weyl, psido and superpsido expression dialects."""

import re
from typing import NamedTuple

from queertrace.exceptions import ExpressionSyntaxError

NUMBER = "number"
ATOM = "atom"
OP = "op"
END = "end"

_TOKEN = re.compile(
	r"\s*(?:(?P<number>\d+)|(?P<atom>xi|x|d|D)(?P<index>\d+)?|(?P<op>[-+*/^()]))"
)


class Token(NamedTuple):
	kind: str
	text: str
	pos: int
	index: int | None = None

	def __str__(self):
		return self.text if self.kind != END else "end of input"


def tokenize(text):
	"""Split ``text`` into tokens, ending with an END token at ``len(text)``."""
	if not isinstance(text, str):
		raise ExpressionSyntaxError("Expression must be a string", 0, "expression")
	tokens = []
	pos = 0
	while pos < len(text):
		if text[pos:].strip() == "":
			break
		match = _TOKEN.match(text, pos)
		if not match:
			start = len(text) - len(text[pos:].lstrip())
			raise ExpressionSyntaxError(
				f"Unexpected character {text[start]!r} at position {start}",
				start,
				"number, x, d, D, xi, operator or parenthesis",
			)
		kind = match.lastgroup if match.lastgroup != "index" else ATOM
		start = match.start(kind)
		index = int(match.group("index")) if kind == ATOM and match.group("index") else None
		tokens.append(Token(kind, match.group(kind), start, index))
		pos = match.end()
	tokens.append(Token(END, "", len(text)))
	return tokens
