# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""
Reading and writing algebra files.

A bare file name listed in ``hooks.fixtures`` resolves to the copy shipped in
``queertrace/fixtures`` when no such file exists in the working directory.
"""

import json
from pathlib import Path

from queertrace import hooks
from queertrace.exceptions import AlgebraInputError
from queertrace.integrations.files.transform import (
	algebra_from_dict,
	algebra_to_dict,
	bracket_algebra_from_dict,
	bracket_algebra_to_dict,
)
from queertrace.logger import logger
from queertrace.queerify.bracket import BracketAlgebra

log = logger("files")

FIXTURES_DIR = Path(__file__).resolve().parents[2] / "fixtures"


def resolve_path(name):
	path = Path(name)
	if path.is_file():
		return path
	if path.name == str(name) and path.name in hooks.fixtures:
		return FIXTURES_DIR / path.name
	raise AlgebraInputError(f"Algebra file not found: {name}")


def read_document(name):
	path = resolve_path(name)
	try:
		with open(path, encoding="utf-8") as fh:
			return json.load(fh), path
	except json.JSONDecodeError as e:
		raise AlgebraInputError(f"{path} is not valid JSON: {e}")


def load_algebra(name):
	"""An AlgebraTable, or a BracketAlgebra when the document carries a ``kind``."""
	doc, path = read_document(name)
	if isinstance(doc, dict) and "kind" in doc:
		algebra = bracket_algebra_from_dict(doc, str(path))
	else:
		algebra = algebra_from_dict(doc, str(path))
	log.info("loaded %s from %s", algebra.name, path)
	return algebra


def dump_algebra(algebra):
	if isinstance(algebra, BracketAlgebra):
		return bracket_algebra_to_dict(algebra)
	return algebra_to_dict(algebra)


def write_algebra(algebra, path):
	with open(path, "w", encoding="utf-8") as fh:
		json.dump(dump_algebra(algebra), fh, indent=1, ensure_ascii=False)
		fh.write("\n")
	return Path(path)
