# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

import json

import pytest

from queertrace.algebra.constructors import build_clifford, build_matrix_algebra
from queertrace.exceptions import AlgebraInputError
from queertrace.integrations.files.loader import dump_algebra, load_algebra, resolve_path, write_algebra
from queertrace.integrations.files.transform import (
	algebra_from_dict,
	element_from_dict,
	qpair_from_dict,
	qpair_to_dict,
)
from queertrace.queerify.bracket import LIESUPER, BracketAlgebra, superliefy
from queertrace.queerify.queer import QPair
from queertrace.traces.functional import trace_space


def test_shipped_fixtures_load_by_name():
	mat2 = load_algebra("mat2.json")
	assert mat2.name == "Mat(2)"
	assert mat2.origin == ("mat", 2)
	assert load_algebra("mat1_1.json").superdim == (2, 2)
	assert not load_algebra("zero2_2.json").mul


def test_missing_file():
	with pytest.raises(AlgebraInputError):
		resolve_path("no-such-algebra.json")


def test_invalid_json(tmp_path):
	path = tmp_path / "broken.json"
	path.write_text("{\"basis\": [")
	with pytest.raises(AlgebraInputError):
		load_algebra(str(path))


@pytest.mark.parametrize(
	"doc",
	[
		[],
		{"parity": [0], "mul": []},
		{"basis": ["a"], "parity": [2], "mul": []},
		{"basis": ["a"], "parity": [0], "mul": [[0, 0, 0]]},
		{"basis": ["a"], "parity": [0], "mul": [[0, 0, 3, "1"]]},
		{"basis": ["a", "b"], "parity": [0, 1], "mul": [[0, 0, 1, "1"]]},
		{"basis": ["a"], "parity": [0], "mul": [[0, 0, 0, "1/0"]]},
	],
)
def test_malformed_documents(doc):
	with pytest.raises(AlgebraInputError):
		algebra_from_dict(doc)


def test_algebra_file_round_trip(tmp_path):
	algebra = build_clifford(2)
	path = write_algebra(algebra, tmp_path / "cl2.json")
	again = load_algebra(str(path))
	assert dump_algebra(again) == dump_algebra(algebra)
	assert again.unit == algebra.unit


def test_bracket_algebra_file_round_trip(tmp_path):
	lie = superliefy(load_algebra("mat1_1.json"))
	path = write_algebra(lie, tmp_path / "gl11.json")
	doc = json.loads(path.read_text())
	assert doc["kind"] == LIESUPER
	assert "mul" not in doc
	again = load_algebra(str(path))
	assert isinstance(again, BracketAlgebra)
	assert trace_space(again).dims == trace_space(lie).dims == (1, 0)


def test_origin_that_does_not_fit_is_dropped():
	doc = {"basis": ["a"], "parity": [0], "mul": [[0, 0, 0, "1"]], "origin": ["mat", 3]}
	assert algebra_from_dict(doc).origin == ()


def test_elements_and_pairs():
	mat2 = build_matrix_algebra(2)
	u = element_from_dict(mat2, {"E12": "1/2", "E21": "-3"})
	assert u.to_dict() == {"E12": "1/2", "E21": "-3"}
	pair = QPair(u, mat2.basis_element("E11"))
	assert qpair_to_dict(qpair_from_dict(mat2, qpair_to_dict(pair))) == qpair_to_dict(pair)
	with pytest.raises(AlgebraInputError):
		element_from_dict(mat2, {"E33": "1"})
	with pytest.raises(AlgebraInputError):
		qpair_from_dict(mat2, {"X": {}})
