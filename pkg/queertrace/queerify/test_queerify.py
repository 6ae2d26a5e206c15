# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

import pytest

from queertrace.algebra.constructors import (
	build_diagonal_algebra,
	build_matrix_algebra,
	build_matrix_superalgebra,
	relabel_basis,
)
from queertrace.algebra.table import bracket, check_associativity
from queertrace.exceptions import AlgebraInputError
from queertrace.queerify.bracket import (
	bracket_elements,
	check_bracket_homogeneity,
	check_super_antisymmetry,
	check_super_jacobi,
	liefy,
	superliefy,
)
from queertrace.queerify.queer import (
	QPair,
	assoc_queerify,
	bigrading,
	element_to_qpair,
	lie_queerify,
	qpair_to_element,
	qpair_to_matrix,
)


def test_liefy_gl2():
	gl2 = liefy(build_matrix_algebra(2))
	e11, e12 = gl2.basis_element("E11"), gl2.basis_element("E12")
	assert bracket_elements(gl2, e11, e12) == e12
	assert check_super_jacobi(gl2) == []
	assert check_super_antisymmetry(gl2) == []


def test_liefy_commutative_is_abelian():
	lie = liefy(build_diagonal_algebra(3))
	assert lie.bracket == ()


def test_superliefy_gl11():
	gl11 = superliefy(build_matrix_superalgebra(1, 1))
	e12, e21 = gl11.basis_element("E12"), gl11.basis_element("E21")
	assert bracket_elements(gl11, e12, e21) == gl11.carrier.element({"E11": 1, "E22": 1})
	assert check_super_jacobi(gl11) == []
	assert check_super_antisymmetry(gl11) == []


def test_superliefy_agrees_with_liefy_on_even_part():
	a = build_matrix_superalgebra(2, 1)
	lie, sup = liefy(a), superliefy(a)
	even = a.even_indices()
	for i in even:
		for j in even:
			assert lie.bracket_basis(i, j).coeffs == sup.bracket_basis(i, j).coeffs


def test_assoc_queerify_shapes():
	q1 = assoc_queerify(build_matrix_algebra(1))
	assert q1.superdim == (1, 1)
	pi1 = q1.basis_element(1)
	assert pi1 * pi1 == q1.one()

	q2 = assoc_queerify(build_matrix_algebra(2))
	assert q2.superdim == (4, 4)
	assert check_associativity(q2) == []


def test_lie_queerify_is_superliefied_queerification():
	for a in (build_matrix_algebra(2), build_matrix_superalgebra(1, 1)):
		q = lie_queerify(a)
		direct = superliefy(assoc_queerify(a))
		assert q.bracket == direct.bracket
		assert check_super_jacobi(q) == []


def test_queer_bracket_families():
	mat1 = build_matrix_algebra(1)
	q = lie_queerify(mat1)
	one = mat1.one()
	zero = mat1.zero()
	pi_one = qpair_to_element(q, QPair(zero, one))
	assert element_to_qpair(bracket_elements(q, pi_one, pi_one)) == QPair(one.scale(2), zero)


def test_even_odd_bracket_gives_pi_of_commutator():
	mat2 = build_matrix_algebra(2)
	q = lie_queerify(mat2)
	x = mat2.element({"E11": 1, "E12": 2})
	y = mat2.element({"E21": 1, "E22": -1})
	u = qpair_to_element(q, QPair(x, mat2.zero()))
	v = qpair_to_element(q, QPair(mat2.zero(), y))
	got = element_to_qpair(bracket_elements(q, u, v))
	assert got == QPair(mat2.zero(), bracket(x, y, "plain"))


def test_pi_unit_bracket_doubles():
	mat2 = build_matrix_algebra(2)
	q = lie_queerify(mat2)
	pi_unit = qpair_to_element(q, QPair(mat2.zero(), mat2.one()))
	for x in mat2.basis_elements():
		pi_x = qpair_to_element(q, QPair(mat2.zero(), x))
		assert element_to_qpair(bracket_elements(q, pi_unit, pi_x)) == QPair(x.scale(2), mat2.zero())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_qpair_to_matrix_is_a_bracket_homomorphism(n):
	mat = build_matrix_algebra(n)
	q = lie_queerify(mat)
	target = build_matrix_superalgebra(n, n)
	images = [qpair_to_matrix(element_to_qpair(u), n, target) for u in q.basis_elements()]
	for i, u in enumerate(q.basis_elements()):
		for j, v in enumerate(q.basis_elements()):
			lhs = qpair_to_matrix(element_to_qpair(bracket_elements(q, u, v)), n, target)
			assert lhs == bracket(images[i], images[j], "super")


def test_qpair_to_matrix_basics():
	mat2 = build_matrix_algebra(2)
	target = build_matrix_superalgebra(2, 2)
	assert qpair_to_matrix(QPair(mat2.one(), mat2.zero()), 2, target) == target.one()
	odd = qpair_to_matrix(QPair(mat2.zero(), mat2.basis_element("E12")), 2, target)
	assert odd.parity() == 1
	with pytest.raises(AlgebraInputError):
		qpair_to_matrix(QPair(mat2.one(), mat2.zero()), 3)


def test_bigrading_components():
	_, dims = bigrading(lie_queerify(build_matrix_superalgebra(1, 1)))
	assert dims == {(0, 0): 2, (0, 1): 2, (1, 0): 2, (1, 1): 2}

	_, dims = bigrading(lie_queerify(build_matrix_algebra(2)))
	assert dims == {(0, 0): 4, (0, 1): 0, (1, 0): 0, (1, 1): 4}

	assert check_bracket_homogeneity(lie_queerify(build_matrix_superalgebra(2, 1))) == []


def test_relabeling_induces_queer_isomorphism():
	a = build_matrix_superalgebra(1, 1)
	order = [2, 0, 3, 1]
	b = relabel_basis(a, order)
	qa, qb = lie_queerify(a), lie_queerify(b)
	d = a.dim
	# basis index of q(b) -> basis index of q(a)
	to_a = order + [old + d for old in order]
	from_a = {old: new for new, old in enumerate(to_a)}
	for i in range(qb.dim):
		for j in range(qb.dim):
			image = qa.bracket_basis(to_a[i], to_a[j])
			mapped = {from_a[k]: c for k, c in image.coeffs.items()}
			assert qb.bracket_basis(i, j).coeffs == dict(sorted(mapped.items()))
