from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from asymcover.linalg import (
    GF, QQ, Field, Mat, Subspace, rref, kernel_basis, left_kernel, solve, solve_left,
    inverse, determinant, subspace_sum, subspace_intersect, subspace_contains, DimensionError,
)

F5 = GF(5)


def M(f, rows):
    return Mat.from_rows(f, rows)


# --- fields -----------------------------------------------------------------

def test_field_coercion():
    assert F5(7) == 2
    assert F5("1/2") == 3
    assert QQ("3/6") == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        F5(Fraction(1, 5))
    with pytest.raises(ValueError):
        Field(6)


# --- rref -------------------------------------------------------------------

def test_rref_identity():
    R, r, piv = rref(Mat.identity(QQ, 2))
    assert R == Mat.identity(QQ, 2) and r == 2 and piv == [0, 1]


def test_rref_zero():
    R, r, _ = rref(Mat.zero(QQ, 3, 3))
    assert R.is_zero() and r == 0


def test_rref_rank_one():
    R, r, _ = rref(M(QQ, [[1, 2], [2, 4]]))
    assert R == M(QQ, [[1, 2], [0, 0]])
    assert r == 1
    assert determinant(M(QQ, [[1, 2], [2, 4]])) == 0


# --- kernels and solving ----------------------------------------------------

def test_kernel_identity_is_zero():
    assert kernel_basis(Mat.identity(QQ, 3)).dim == 0


def test_kernel_of_zero_is_full():
    assert kernel_basis(Mat.zero(QQ, 2, 3)) == Subspace.full(QQ, 3)


def test_kernel_gf5_row():
    k = kernel_basis(M(F5, [[1, 1]]))
    assert k == Subspace.span(F5, 2, [(1, 4)])


def test_left_kernel():
    m = M(QQ, [[1, 2], [2, 4], [0, 1]])
    k = left_kernel(m)
    assert k.dim == 1
    for v in k.basis:
        assert not any(m.vecmul(v))


def test_solve_identity():
    rhs = M(QQ, [[1, 2], [3, 4]])
    assert solve(Mat.identity(QQ, 2), rhs) == rhs


def test_solve_inconsistent():
    assert solve(Mat.zero(QQ, 2, 2), M(QQ, [[1], [0]])) is None


def test_solve_gf5():
    assert solve(M(F5, [[2]]), M(F5, [[1]])) == M(F5, [[3]])


def test_solve_left_and_inverse():
    m = M(QQ, [[1, 1], [0, 2]])
    inv = inverse(m)
    assert inv @ m == Mat.identity(QQ, 2)
    x = solve_left(m, M(QQ, [[1, 3]]))
    assert x @ m == M(QQ, [[1, 3]])
    assert inverse(M(QQ, [[1, 2], [2, 4]])) is None


def test_solve_shape_mismatch():
    with pytest.raises(DimensionError):
        solve(Mat.identity(QQ, 2), Mat.identity(QQ, 3))


# --- subspace lattice -------------------------------------------------------

def test_lattice_trivial():
    a = Subspace.span(QQ, 3, [(1, 2, 0), (0, 1, 1)])
    assert subspace_sum(a, Subspace.zero(QQ, 3)) == a
    assert subspace_intersect(a, Subspace.full(QQ, 3)) == a


def test_coordinate_axes_meet_in_zero():
    e1 = Subspace.coordinate(QQ, 2, [0])
    e2 = Subspace.coordinate(QQ, 2, [1])
    assert subspace_intersect(e1, e2).dim == 0


def test_sum_of_diagonals_is_full():
    a = Subspace.span(QQ, 2, [(1, 1)])
    b = Subspace.span(QQ, 2, [(1, -1)])
    assert subspace_sum(a, b) == Subspace.full(QQ, 2)


def test_ambient_mismatch():
    with pytest.raises(DimensionError):
        subspace_sum(Subspace.zero(QQ, 2), Subspace.zero(QQ, 3))


def test_canonical_basis_makes_equality_literal():
    a = Subspace.span(QQ, 3, [(1, 1, 0), (0, 1, 1)])
    b = Subspace.span(QQ, 3, [(1, 2, 1), (2, 1, -1)])
    assert a == b
    assert subspace_contains(a, Subspace.span(QQ, 3, [(1, 0, -1)]))


# --- properties -------------------------------------------------------------

fields = st.sampled_from([QQ, GF(2), GF(3), GF(5), GF(7)])


@st.composite
def matrices(draw, max_dim=4):
    f = draw(fields)
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    vals = st.integers(-3, 3)
    rows = [[draw(vals) for _ in range(c)] for _ in range(r)]
    return M(f, rows)


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_rref_idempotent_and_rank_preserving(m):
    R, r, _ = rref(m)
    R2, r2, _ = rref(R)
    assert R2 == R and r2 == r == m.rank()


@given(matrices(), st.data())
@settings(max_examples=80, deadline=None)
def test_modularity(m, data):
    f = m.field
    n = m.ncols
    vals = st.integers(-2, 2)
    rows = data.draw(st.lists(st.lists(vals, min_size=n, max_size=n), max_size=4))
    a = Subspace.span(f, n, m.rows)
    b = Subspace.span(f, n, [tuple(f(x) for x in r) for r in rows])
    assert subspace_sum(a, b).dim + subspace_intersect(a, b).dim == a.dim + b.dim
    assert subspace_contains(subspace_sum(a, b), a)
    assert subspace_contains(a, subspace_intersect(a, b))


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 3), st.integers(1, 3), st.data())
@settings(max_examples=60, deadline=None)
def test_kernel_matches_enumeration(p, r, c, data):
    f = GF(p)
    rows = [[data.draw(st.integers(0, p - 1)) for _ in range(c)] for _ in range(r)]
    m = M(f, rows)
    k = kernel_basis(m)
    brute = [v for v in product(range(p), repeat=c)
             if all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in rows)]
    assert len(brute) == p ** k.dim
    assert all(k.contains_vector(v) for v in brute)
