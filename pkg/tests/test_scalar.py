from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from olc.scalar import (
    G,
    I,
    Poly,
    as_scalar,
    falling_factorial_poly,
    parse_scalar,
    pochhammer,
    poly_mul,
    poly_scale_arg,
    qint,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(G, fractions, fractions)
polys = st.lists(fractions, max_size=6).map(Poly)


def test_parse_forms():
    assert parse_scalar("3") == G(3)
    assert parse_scalar("-2/4") == G(Fraction(-1, 2))
    assert parse_scalar("1/2+3/4i") == G(Fraction(1, 2), Fraction(3, 4))
    assert parse_scalar("-i") == G(0, -1)
    assert parse_scalar("i") == I


@pytest.mark.parametrize("bad", ["", "1.5", "1/0", "x", "1//2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_lowest_terms_and_json():
    z = G("-6/4")
    assert z.re == Fraction(-3, 2)
    assert z.to_json() == {"re": "-3/2", "im": "0/1"}
    assert G("2/4+6/8i").to_json() == {"re": "1/2", "im": "3/4"}


def test_i_squared():
    assert I * I == -1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        G(1) / 0


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a


@given(gaussians)
def test_conjugate_norm_is_real(z):
    assert (z * z.conjugate()).is_real


def test_poly_mul_examples():
    x = Poly.x()
    assert poly_mul(x - 1, x + 1) == Poly([-1, 0, 1])
    p = Poly([2, 0, 5])
    assert poly_mul(p, Poly([1])) == p
    a = G("1/3")
    assert (x - a) * (x - a) == Poly(["1/9", "-2/3", 1])


def test_zero_poly_degree():
    assert Poly().degree == -1
    assert Poly([0, 0]).degree == -1


def test_scale_arg_examples():
    assert poly_scale_arg(Poly.monomial(2), 2) == Poly([0, 0, 4])
    p = Poly([3, -1, 7])
    assert poly_scale_arg(p, 1) == p
    assert poly_scale_arg(Poly([-1, 1]), "1/2") == Poly([-1, "1/2"])


def test_falling_factorial_examples():
    assert falling_factorial_poly(0) == Poly([1])
    assert falling_factorial_poly(1) == Poly.x()
    assert falling_factorial_poly(3) == Poly([0, 2, -3, 1])


@given(polys, polys, fractions)
def test_mul_is_pointwise(p, q, t):
    assert (p * q)(t) == p(t) * q(t)


@given(polys, polys)
def test_mul_degree(p, q):
    if p and q:
        assert (p * q).degree == p.degree + q.degree


@given(polys, fractions, fractions)
def test_scale_arg_is_substitution(p, lam, t):
    assert poly_scale_arg(p, lam)(t) == p(lam * t)


@given(st.integers(0, 8), st.integers(0, 10))
def test_falling_factorial_values(n0, t):
    expected = 1
    for i in range(n0):
        expected *= t - i
    assert falling_factorial_poly(n0)(t) == expected


def test_qint_and_pochhammer():
    assert qint(3, "1/2") == G("7/4")
    assert qint(4, 1) == 4
    assert pochhammer(2, 3) == 24
    assert pochhammer("1/2", 2) == G("3/4")
    assert pochhammer(5, 0) == 1


def test_as_scalar_rejects_float():
    with pytest.raises(TypeError):
        as_scalar(0.5)
