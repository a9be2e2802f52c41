from fractions import Fraction

import pytest

from lssa.linalg import Matrix
from lssa.superlie import (MixedParityInput, SuperMatrix, WeightMN, check_super_jacobi,
                           is_automorphism, make_algebra, neg_st_matrix, rho, supercommutator,
                           supertrace, supertranspose, weight_pairing)


@pytest.mark.parametrize("kind,m,n", [("gl", 1, 1), ("gl", 2, 1), ("sl", 2, 1), ("sl", 3, 2), ("sl", 2, 2)])
def test_dimensions(kind, m, n):
    alg = make_algebra(kind, m, n)
    N = m + n
    even = m * m + n * n - (1 if kind == "sl" else 0)
    assert alg.superdim == (even, 2 * m * n)
    assert alg.dim == N * N - (1 if kind == "sl" else 0)


def test_sl21_basis():
    alg = make_algebra("sl", 2, 1)
    assert alg.labels == ("x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4")
    E = lambda i, j: SuperMatrix.unit(2, 1, i, j)
    assert alg.elements[0] == E(1, 2) and alg.elements[1] == E(2, 1)
    assert alg.elements[2] == E(1, 1) - E(2, 2)
    assert alg.elements[3] == E(1, 1) + E(2, 2) + E(3, 3).scale(2)
    assert alg.elements[4:] == (E(3, 1), E(3, 2), E(1, 3), E(2, 3))


def test_sl21_brackets():
    alg = make_algebra("sl", 2, 1)
    i = alg.index
    # [h, x1] = 2 x1, [y3, y1] = E11 + E33, [z, y3] = y3
    assert alg.bracket(i("x3"), i("x1")) == {i("x1"): 2}
    y3y1 = alg.element(alg.bracket_vectors(*[[1 if k == j else 0 for k in range(8)]
                                              for j in (i("y3"), i("y1"))]))
    assert y3y1 == SuperMatrix.unit(2, 1, 1, 1) + SuperMatrix.unit(2, 1, 3, 3)
    assert alg.bracket(i("x4"), i("y3")) == {i("y3"): -1}
    assert alg.bracket(i("x4"), i("y1")) == {i("y1"): 1}


@pytest.mark.parametrize("kind,m,n", [("sl", 2, 1), ("gl", 2, 1), ("sl", 2, 2)])
def test_super_jacobi_on_basis(kind, m, n):
    assert check_super_jacobi(make_algebra(kind, m, n))


def test_super_jacobi_detects_a_corrupted_structure_constant():
    alg = make_algebra("sl", 2, 1)
    key = (alg.index("y3"), alg.index("y1"))
    saved = alg.structure[key]
    try:
        alg.structure[key] = {l: 2 * v for l, v in saved.items()}
        assert not check_super_jacobi(alg)
    finally:
        alg.structure[key] = saved


def test_supertrace_and_supertranspose():
    x = SuperMatrix.from_rows(2, 1, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert supertrace(x) == 1 + 5 - 9
    st = supertranspose(x)
    assert st == SuperMatrix.from_rows(2, 1, [[1, 4, 7], [2, 5, 8], [-3, -6, 9]])
    # st has order 4 on odd parts
    assert supertranspose(supertranspose(st)) != x
    assert supertranspose(supertranspose(supertranspose(st))) == x


def test_mixed_parity_rejected():
    x = SuperMatrix.unit(2, 1, 1, 2) + SuperMatrix.unit(2, 1, 1, 3)
    with pytest.raises(MixedParityInput):
        supercommutator(x, x)


@pytest.mark.parametrize("kind,m,n", [("sl", 2, 1), ("gl", 2, 1), ("sl", 3, 1)])
def test_negst_is_an_automorphism(kind, m, n):
    alg = make_algebra(kind, m, n)
    assert is_automorphism(alg, neg_st_matrix(alg))
    bad = Matrix.identity(alg.dim).scale(2)
    assert not is_automorphism(alg, bad)


def test_weights():
    # sl(2|1): rho_0 = (eps1 - eps2)/2, rho_1 = (eps1 + eps2)/2 - delta1
    r = rho(2, 1)
    assert r.eps == (0, -1) and r.delta == (1,)
    a = WeightMN.basis(2, 1, "eps", 0) - WeightMN.basis(2, 1, "delta", 0)
    assert weight_pairing(a, a) == 0
    assert weight_pairing(WeightMN.basis(2, 1, "delta", 0), WeightMN.basis(2, 1, "delta", 0)) == -1
    # on sl(2|1) the supertrace relation gives delta_1 = eps1 + eps2
    d = WeightMN.basis(2, 1, "delta", 0)
    assert d.same(WeightMN((1, 1), (0,)))


def test_unit_index_and_grading():
    alg = make_algebra("sl", 3, 2)
    assert alg.labels[alg.unit_index(1, 4)] == "E_1_4"
    assert alg.z_degree(alg.unit_index(1, 4)) == 1
    assert alg.z_degree(alg.unit_index(4, 1)) == -1
    assert alg.z_degree(alg.unit_index(1, 2)) == 0
    assert len(alg.raising_odd_indices()) == len(alg.lowering_odd_indices()) == 6
