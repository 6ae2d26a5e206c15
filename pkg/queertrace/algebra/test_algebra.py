# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from queertrace.algebra import linalg
from queertrace.algebra.constructors import (
	build_clifford,
	build_matrix_algebra,
	build_matrix_superalgebra,
	clifford_generator,
	clifford_matrix_iso,
	relabel_basis,
	tensor_element,
	tensor_product,
)
from queertrace.algebra.scalar import format_scalar, to_scalar
from queertrace.algebra.table import (
	AlgebraTable,
	bracket,
	check_associativity,
	check_parity,
	check_unit,
	mul_elements,
)
from queertrace.exceptions import (
	AlgebraInputError,
	AlgebraMismatchError,
	InhomogeneousElementError,
)


def test_scalar_parsing():
	assert to_scalar("3/6") == Fraction(1, 2)
	assert to_scalar("-4") == Fraction(-4)
	assert format_scalar(Fraction(-2, 4)) == "-1/2"
	assert format_scalar(Fraction(6, 3)) == "2"
	with pytest.raises(AlgebraInputError):
		to_scalar(0.5)
	with pytest.raises(AlgebraInputError):
		to_scalar("1/0")


@settings(deadline=None, max_examples=200)
@given(st.fractions(), st.fractions())
def test_scalar_sums_stay_reduced(a, b):
	total = a + b
	assert total.denominator > 0
	assert to_scalar(format_scalar(total)) == total


def test_mat1_is_the_ground_field():
	mat1 = build_matrix_algebra(1)
	e = mat1.basis_element(0)
	assert mat1.dim == 1
	assert mul_elements(e, e) == e
	assert mat1.one() == e


def test_matrix_units_multiply():
	mat2 = build_matrix_algebra(2)
	e12, e21 = mat2.basis_element("E12"), mat2.basis_element("E21")
	assert mul_elements(e12, e21) == mat2.basis_element("E11")
	assert mul_elements(e21, e12) == mat2.basis_element("E22")
	assert check_associativity(mat2) == []
	assert check_unit(mat2) == []


def test_unit_action():
	mat2 = build_matrix_algebra(2)
	v = mat2.basis_element("E12").scale(Fraction(7, 3))
	assert mat2.one() * v == v


def test_zero_size_is_rejected():
	with pytest.raises(AlgebraInputError):
		build_matrix_algebra(0)
	with pytest.raises(AlgebraInputError):
		build_matrix_superalgebra(0, 0)


@pytest.mark.parametrize("size", [True, 2.0, "2"])
def test_sizes_must_be_plain_integers(size):
	with pytest.raises(AlgebraInputError, match="must be an integer"):
		build_matrix_algebra(size)
	with pytest.raises(AlgebraInputError, match="must be an integer"):
		build_matrix_superalgebra(1, size)
	with pytest.raises(AlgebraInputError, match="must be an integer"):
		build_clifford(size)


def test_matrix_superalgebra_parity():
	a = build_matrix_superalgebra(1, 1)
	assert [a.parity[a.index(lbl)] for lbl in ("E11", "E22", "E12", "E21")] == [0, 0, 1, 1]
	assert mul_elements(a.basis_element("E12"), a.basis_element("E21")) == a.basis_element("E11")

	b = build_matrix_superalgebra(2, 1)
	assert b.dim == 9
	assert b.superdim == (5, 4)
	assert check_parity(b) == []


def test_bracket_plain_and_super():
	mat2 = build_matrix_algebra(2)
	got = bracket(mat2.basis_element("E12"), mat2.basis_element("E21"), "plain")
	assert got == mat2.element({"E11": 1, "E22": -1})

	a = build_matrix_superalgebra(1, 1)
	e12, e21 = a.basis_element("E12"), a.basis_element("E21")
	assert bracket(e12, e21, "super") == a.element({"E11": 1, "E22": 1})
	assert not bracket(e12, e12, "super")


def test_super_bracket_rejects_inhomogeneous():
	a = build_matrix_superalgebra(1, 1)
	mixed = a.element({"E11": 1, "E12": 1})
	with pytest.raises(InhomogeneousElementError):
		bracket(mixed, a.basis_element("E12"), "super")


def test_mismatched_algebras():
	with pytest.raises(AlgebraMismatchError):
		mul_elements(build_matrix_algebra(2).basis_element(0), build_matrix_algebra(2).basis_element(0))


def test_super_bracket_identities_on_gl11():
	a = build_matrix_superalgebra(1, 1)
	basis = a.basis_elements()
	for u in basis:
		for v in basis:
			sym = bracket(u, v, "super") + bracket(v, u, "super").scale((-1) ** (u.parity() * v.parity()))
			assert not sym
			for w in basis:
				pu, pv, pw = u.parity(), v.parity(), w.parity()
				total = (
					bracket(u, bracket(v, w, "super"), "super").scale((-1) ** (pu * pw))
					+ bracket(v, bracket(w, u, "super"), "super").scale((-1) ** (pv * pu))
					+ bracket(w, bracket(u, v, "super"), "super").scale((-1) ** (pw * pv))
				)
				assert not total


def test_clifford_relations():
	cl2 = build_clifford(2)
	t1, t2 = clifford_generator(cl2, 1), clifford_generator(cl2, 2)
	assert cl2.dim == 4
	assert mul_elements(t1, t1) == cl2.one()
	assert mul_elements(t1, t2) == -mul_elements(t2, t1)

	cl4 = build_clifford(4)
	assert cl4.superdim == (8, 8)
	assert check_associativity(cl4) == []


def test_clifford_rejects_odd_rank():
	with pytest.raises(AlgebraInputError):
		build_clifford(3)


def test_clifford_matrix_iso_k2():
	iso = clifford_matrix_iso(2)
	target = iso.target
	assert iso.images[0] == target.element({"E12": 1, "E21": 1})
	assert iso.images[1] == target.element({"E12": 1, "E21": -1})
	assert iso.relation_failures() == []
	assert iso.rank() == 4
	assert iso.is_bijective()


def test_clifford_matrix_iso_k4():
	iso = clifford_matrix_iso(4)
	assert iso.target.name == "Mat(2|2)"
	assert iso.relation_failures() == []
	assert iso.is_bijective()


def test_tensor_product_of_matrix_algebras():
	t = tensor_product(build_matrix_algebra(2), build_matrix_algebra(3))
	assert t.dim == 36
	assert check_unit(t) == []
	assert check_associativity(t) == []


def test_tensor_with_mat1_is_a_relabeling():
	a = build_matrix_superalgebra(1, 1)
	t = tensor_product(a, build_matrix_algebra(1))
	assert t.parity == a.parity
	assert [(i, j, k, c) for i, j, k, c in t.mul] == list(a.mul)


def test_signed_tensor_koszul_sign():
	a = build_matrix_superalgebra(1, 1)
	t = tensor_product(a, a, signed=True)
	e12, one = a.basis_element("E12"), a.one()
	left = tensor_element(t, e12, one)
	right = tensor_element(t, one, e12)
	assert mul_elements(left, right) == -mul_elements(right, left)
	assert mul_elements(left, right)
	assert check_associativity(t) == []


def test_relabel_basis_is_an_isomorphism():
	a = build_matrix_superalgebra(1, 1)
	order = [3, 1, 2, 0]
	b = relabel_basis(a, order)
	assert b.basis == ("E22", "E12", "E21", "E11")
	assert check_associativity(b) == []
	assert check_unit(b) == []


def test_table_validation():
	with pytest.raises(AlgebraInputError):
		AlgebraTable(name="bad", basis=[], parity=[], mul=[])
	with pytest.raises(AlgebraInputError):
		AlgebraTable(name="bad", basis=["a", "b"], parity=[0, 1], mul=[(1, 1, 1, 1)])
	with pytest.raises(AlgebraInputError):
		AlgebraTable(name="bad", basis=["a"], parity=[0], mul=[(0, 0, 3, 1)])


def test_nonassociative_table_is_reported():
	# a*a = b, a*b = a, b*a = 0
	t = AlgebraTable(name="skew", basis=["a", "b"], parity=[0, 0], mul=[(0, 0, 1, 1), (0, 1, 0, 1)])
	assert (0, 0, 0) in check_associativity(t)


def test_linalg_nullspace_and_solve():
	rows = [[1, 1, 0], [0, 1, 1]]
	rows = [[Fraction(c) for c in r] for r in rows]
	null = linalg.nullspace(rows, 3)
	assert null == [[Fraction(1), Fraction(-1), Fraction(1)]]
	cols = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(1)]]
	assert linalg.solve(cols, [Fraction(3), Fraction(2)], 2) == [Fraction(1), Fraction(2)]
	assert linalg.solve([[Fraction(1), Fraction(1)]], [Fraction(1), Fraction(2)], 2) is None
