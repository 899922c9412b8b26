import pytest
from hypothesis import given, settings, strategies as st

from asymcover.algebra import (
    Algebra, AlgebraError, Bimodule, verify_algebra, multiply, opposite, direct_product,
    trivial_extension, triangular_matrix_ring, corner, quotient_by_ideal, ideal_power,
    regular_module, check_isomorphism, isomorphism_from_generators, is_two_sided_ideal,
    module_axiom_witness,
)
from asymcover.corpus import field_algebra, matrix_algebra, truncated_polynomial, kk_algebra
from asymcover.cover import build_cover
from asymcover.linalg import GF, QQ, Mat, Subspace
from asymcover.representations import radical_of_algebra

F5 = GF(5)


def upper_triangular(f):
    # basis E11, E12, E22
    products = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}}
    return Algebra.from_products(f, 3, products, (1, 0, 1), basis_names=("E11", "E12", "E22"))


# --- verify_algebra ---------------------------------------------------------

def test_field_is_an_algebra():
    assert verify_algebra(field_algebra(F5))


def test_zero_unit_fails():
    a = Algebra.from_products(F5, 1, {(0, 0): {0: 1}}, (0,))
    r = verify_algebra(a)
    assert not r and r.witness == ("unit", 0)


def test_matrix_units_over_q():
    assert verify_algebra(matrix_algebra(QQ, 2))


def test_broken_associativity_gives_triple():
    # k[x]/(x^3) with x * x^2 = x: (x x) x = 0 but x (x x) = x
    products = {(i, j): {i + j: 1} for i in range(3) for j in range(3) if i + j < 3}
    products[(1, 2)] = {1: 1}
    r = verify_algebra(Algebra.from_products(F5, 3, products, (1, 0, 0)))
    assert not r
    i, j, l = r.witness
    assert {i, j, l} <= {1, 2}


# --- multiply ---------------------------------------------------------------

def test_multiply_unit():
    a = truncated_polynomial(F5, 3)
    x = a.element((2, 3, 4))
    assert multiply(a.one(), x) == x == multiply(x, a.one())


def test_trivial_extension_products():
    t = trivial_extension(field_algebra(F5))
    one0, zero1 = t.element((1, 0)), t.element((0, 1))
    assert (zero1 * zero1).is_zero()
    assert one0 * zero1 == zero1


def test_multiply_rejects_mixed_algebras():
    a, b = field_algebra(F5), field_algebra(F5)
    with pytest.raises(AlgebraError):
        multiply(a.one(), b.one())


# --- opposite ---------------------------------------------------------------

def test_opposite_is_involution(corpus):
    for e in corpus:
        assert opposite(opposite(e.algebra)).same_tensor(e.algebra), e.name


def test_opposite_of_commutative():
    a = truncated_polynomial(QQ, 2)
    assert opposite(a).same_tensor(a)


def test_opposite_upper_triangular_is_lower():
    u = upper_triangular(QQ)
    o = opposite(u)
    assert verify_algebra(o)
    assert radical_of_algebra(o).dim == radical_of_algebra(u).dim == 1
    # lower triangular on E11, E21, E22 via transpose: E11->E11, E12->E21, E22->E22
    products = {(0, 0): {0: 1}, (1, 0): {1: 1}, (2, 1): {1: 1}, (2, 2): {2: 1}}
    lower = Algebra.from_products(QQ, 3, products, (1, 0, 1))
    assert check_isomorphism(o, lower, Mat.identity(QQ, 3))


# --- direct product ---------------------------------------------------------

def test_product_of_one_factor():
    a = field_algebra(F5)
    assert direct_product([a]) is a


def test_gf5_squared():
    p = direct_product([field_algebra(F5), field_algebra(F5)])
    assert p.dim == 2
    assert p.is_idempotent(p.basis_vec(0)) and p.is_idempotent(p.basis_vec(1))
    assert not any(p.mul(p.basis_vec(0), p.basis_vec(1)))


def test_product_of_trivial_extensions():
    t = trivial_extension(field_algebra(F5))
    p = direct_product([t, t])
    assert p.dim == 4 and p.radical.dim == 2
    assert radical_of_algebra(p) == p.radical


def test_product_mixed_fields():
    with pytest.raises(AlgebraError):
        direct_product([field_algebra(F5), field_algebra(QQ)])


# --- trivial extension ------------------------------------------------------

def test_trivial_extension_of_field():
    t = trivial_extension(field_algebra(F5))
    assert t.dim == 2 and t.natural_ideal.dim == 1
    q, proj = quotient_by_ideal(t, t.natural_ideal)
    assert check_isomorphism(q, field_algebra(F5), Mat.identity(F5, 1))


@pytest.mark.parametrize("a", [field_algebra(F5), matrix_algebra(F5), truncated_polynomial(QQ, 3),
                               kk_algebra(1, F5)], ids=["k", "M2", "QQ[x]/x3", "KK1"])
def test_trivial_extension_invariants(a):
    t = trivial_extension(a)
    assert verify_algebra(t)
    nat = t.natural_ideal
    assert is_two_sided_ideal(t, nat) is None
    assert ideal_power(t, nat, 2).dim == 0
    q, proj = quotient_by_ideal(t, nat)
    # the canonical section identifies the quotient with a on the nose
    assert q.same_tensor(a)


def test_trivial_extension_of_k_is_dual_numbers():
    t = trivial_extension(field_algebra(F5))
    d = truncated_polynomial(F5, 2)
    phi = isomorphism_from_generators(t, d, [t.basis_vec(1)], [d.basis_vec(1)])
    assert phi is not None and check_isomorphism(t, d, phi)


def test_trivial_extension_radical_tag():
    t = trivial_extension(truncated_polynomial(F5, 2))
    assert t.radical.dim == 1 + 2
    assert radical_of_algebra(t) == t.radical


# --- triangular rings -------------------------------------------------------

def test_triangular_with_zero_bimodule_is_product():
    a, b = truncated_polynomial(F5, 2), field_algebra(F5)
    tri = triangular_matrix_ring(a, b, Bimodule.zero(b, a))
    assert verify_algebra(tri)
    assert tri.same_tensor(direct_product([a, b]))


def test_triangular_rejects_bad_bimodule():
    a, b = field_algebra(F5), field_algebra(F5)
    one = Mat.identity(F5, 1)
    zero = Mat.zero(F5, 1, 1)
    # unit of b acting by zero breaks the left unit axiom
    m = Bimodule(b, a, 1, (zero,), (one,))
    with pytest.raises(AlgebraError):
        triangular_matrix_ring(a, b, m)


def test_upper_triangular_as_triangular_ring():
    k = field_algebra(QQ)
    one = Mat.identity(QQ, 1)
    tri = triangular_matrix_ring(k, k, Bimodule(k, k, 1, (one,), (one,)))
    assert tri.dim == 3 and verify_algebra(tri)
    assert radical_of_algebra(tri).dim == 1


# --- corners and quotients --------------------------------------------------

def test_corner_by_unit():
    a = truncated_polynomial(F5, 3)
    c, incl = corner(a, a.unit)
    assert c.same_tensor(a)


def test_corner_of_matrix_unit():
    m = matrix_algebra(F5)
    c, incl = corner(m, m.basis_vec(0))
    assert c.dim == 1 and verify_algebra(c)


def test_corner_of_cover_of_k():
    k = field_algebra(F5)
    cov = build_cover(k)
    c, incl = corner(cov.tilde, cov.e)
    assert cov.tilde.dim == 4 and c.dim == 1
    assert check_isomorphism(c, k, Mat.identity(F5, 1))


def test_corner_rejects_non_idempotent():
    a = truncated_polynomial(F5, 2)
    with pytest.raises(AlgebraError):
        corner(a, (0, 1))


def test_quotient_by_zero():
    a = truncated_polynomial(F5, 3)
    q, proj = quotient_by_ideal(a, Subspace.zero(F5, 3))
    assert q.same_tensor(a)


def test_quotient_rejects_one_sided():
    u = upper_triangular(QQ)
    # span{E11} is not an ideal
    with pytest.raises(AlgebraError):
        quotient_by_ideal(u, Subspace.coordinate(QQ, 3, [0]))


# --- ideal powers -----------------------------------------------------------

def test_ideal_power_one():
    a = truncated_polynomial(F5, 3)
    j = a.radical
    assert ideal_power(a, j, 1) == j


def test_natural_ideal_squares_to_zero():
    t = trivial_extension(field_algebra(F5))
    assert ideal_power(t, t.natural_ideal, 2).dim == 0


def test_kk1_radical_fourth_power():
    a = kk_algebra(1, F5)
    j = radical_of_algebra(a)
    assert ideal_power(a, j, 3).dim > 0 or ideal_power(a, j, 2).dim > 0
    assert ideal_power(a, j, 4).dim == 0


@given(st.integers(2, 6), st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=25, deadline=None)
def test_ideal_power_additive(n, m, k):
    a = truncated_polynomial(F5, n)
    j = a.radical
    lhs = ideal_power(a, j, m + k)
    rhs = a.elementwise_products(ideal_power(a, j, m), ideal_power(a, j, k))
    assert lhs == rhs
    assert lhs.dim == max(n - (m + k), 0)


# --- regular module ---------------------------------------------------------

def test_regular_module_basics(corpus):
    for e in corpus:
        a = e.algebra
        reg = regular_module(a)
        assert reg.dim == a.dim
        assert reg.act(a.unit) == Mat.identity(a.field, a.dim)
        assert module_axiom_witness(a, reg.action, reg.dim) is None


def test_regular_action_of_natural_generator_squares_to_zero():
    t = trivial_extension(field_algebra(F5))
    R = regular_module(t).action[1]
    assert not R.is_zero() and (R @ R).is_zero()
