from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from lssa.linalg import (Inconsistent, Matrix, NotInvertible, exp_nilpotent, inverse, kernel,
                         max_rank_over_affine_family, rank, rref, solve)
from lssa.scalars import parameters

from strategies import small_fractions


@st.composite
def matrices(draw, max_dim=6, density=0.5):
    r, c = draw(st.integers(1, max_dim)), draw(st.integers(1, max_dim))
    cell = st.one_of(st.just(Fraction(0)), small_fractions) if density < 1 else small_fractions
    return Matrix.from_rows([[draw(cell) for _ in range(c)] for _ in range(r)])


def to_sympy(m):
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(str(m[i, j])))


@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == to_sympy(m).rank()


@given(matrices())
def test_kernel_is_a_basis_of_the_null_space(m):
    ker = kernel(m)
    assert len(ker) == m.cols - rank(m)
    for v in ker:
        assert not any(m.apply(v))
    if ker:
        assert rank(Matrix.from_columns(ker, rows=m.cols)) == len(ker)


@given(matrices())
def test_rref_pivots(m):
    r, piv = rref(m)
    assert len(piv) == rank(m)
    for row, col in enumerate(piv):
        assert r[row, col] == 1
        assert all(r[other, col] == 0 for other in range(r.rows) if other != row)


@given(matrices(), st.data())
def test_solve_consistent_systems(m, data):
    x = [data.draw(small_fractions) for _ in range(m.cols)]
    b = m.apply(x)
    sol = solve(m, b)
    assert m.apply(sol) == b


def test_solve_inconsistent():
    m = Matrix.from_rows([[1, 1], [2, 2]])
    with pytest.raises(Inconsistent):
        solve(m, [1, 3])


@given(st.integers(1, 5), st.data())
def test_inverse(n, data):
    m = data.draw(matrices(max_dim=n).filter(lambda a: a.rows == a.cols))
    if rank(m) < m.rows:
        with pytest.raises(NotInvertible):
            inverse(m)
        return
    assert inverse(m) @ m == Matrix.identity(m.rows)


def test_symbolic_entries():
    k, = parameters("k")
    m = Matrix.from_rows([[k, 1], [1, k]])
    assert rank(m) == 2
    assert rank(m.map(lambda v: v.substitute({"k": 1}) if hasattr(v, "substitute") else v)) == 1
    assert inverse(m) @ m == Matrix.identity(2)


def test_generic_rank_of_affine_family():
    # a * [[1,0],[0,0]] + b * [[0,0],[0,1]] has generic rank 2, though each term has rank 1
    fam = [Matrix.zeros(2, 2), Matrix.from_rows([[1, 0], [0, 0]]), Matrix.from_rows([[0, 0], [0, 1]])]
    assert max_rank_over_affine_family(fam) == 2
    # columns forced proportional: rank never exceeds 1
    fam = [Matrix.zeros(2, 2), Matrix.from_rows([[1, 2], [0, 0]]), Matrix.from_rows([[0, 0], [1, 2]])]
    assert max_rank_over_affine_family(fam) == 1


def test_exp_nilpotent():
    n = Matrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    e = exp_nilpotent(n)
    assert e == Matrix.from_rows([[1, 1, Fraction(1, 2)], [0, 1, 1], [0, 0, 1]])
    assert exp_nilpotent(n.scale(-1)) @ e == Matrix.identity(3)
    with pytest.raises(ValueError):
        exp_nilpotent(Matrix.identity(2))


def test_matrix_algebra_basics():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b) == Matrix.from_rows([[2, 1], [4, 3]])
    assert a - a == Matrix.zeros(2, 2)
    assert a.submatrix([1], [0, 1]) == Matrix.from_rows([[3, 4]])
