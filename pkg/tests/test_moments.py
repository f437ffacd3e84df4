from types import MappingProxyType

import pytest
from hypothesis import given, settings, strategies as st

from olc.combi import NotAvailable
from olc.families import FAMILY_PARAMS, FamilySpec, make_family, norm_zeta, recurrence_coeffs
from olc.moments import (
    apply,
    functional,
    hankel_determinant,
    moment,
    moment_combinatorial,
    orthogonality_defect,
    stirling2,
)
from olc.scalar import G, Poly
from olc.suites import MOMENT_FAMILIES, family_points

X = Poly.x()


def test_examples():
    a = G("3/7")
    ch = make_family("charlier", a=a)
    assert moment(ch, 2) == a + a * a
    y = G("2/5")
    ql = make_family("q-laguerre", y=y, q="1/3")
    assert moment(ql, 2) == y * y + y
    for name in FAMILY_PARAMS:
        if name != "birth-death":
            assert moment(family_points(name)[0], 0) == 1


def test_apply_examples():
    a = G(2)
    ch = make_family("charlier", a=a)
    assert apply(ch, Poly([1])) == 1
    assert apply(ch, X - a) == 0
    assert apply(make_family("hermite"), X * X) == 1


def test_combinatorial_examples():
    assert moment_combinatorial(make_family("charlier", a=1), 3) == 5
    beta, c = G("3/2"), G("1/3")
    assert moment_combinatorial(make_family("meixner", beta=beta, c=c), 1) == beta * c / (1 - c)
    c = G("5/4")
    assert moment_combinatorial(make_family("q-charlier", a=2, b=3, c=c, q="1/2"), 1) == c


def test_hermite_moments_are_double_factorials():
    f = make_family("hermite")
    assert [moment(f, n) for n in range(9)] == [1, 0, 1, 0, 3, 0, 15, 0, 105]


def test_laguerre_moments():
    # mu_n = (alpha + 1)_n
    al = G("1/2")
    f = make_family("laguerre", alpha=al)
    expected, acc = [], G(1)
    for n in range(7):
        expected.append(acc)
        acc = acc * (al + 1 + n)
    assert [moment(f, n) for n in range(7)] == expected


def test_bell_numbers():
    f = make_family("charlier", a=1)
    assert [moment(f, n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


def test_stirling_row():
    assert [stirling2(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1]


@pytest.mark.parametrize("name", MOMENT_FAMILIES)
def test_moment_matches_enumeration(name):
    for f in family_points(name):
        for n in range(7):
            assert moment(f, n) == moment_combinatorial(f, n), (f.label(), n)


def test_combinatorial_not_available():
    with pytest.raises(NotAvailable):
        moment_combinatorial(make_family("hermite"), 2)


def test_combinatorial_cap():
    with pytest.raises(ValueError):
        moment_combinatorial(make_family("charlier", a=1), 11)


@pytest.mark.parametrize("name", [n for n in FAMILY_PARAMS if n != "birth-death"])
def test_orthogonality(name):
    f = family_points(name)[-1]
    for m in range(7):
        for n in range(7):
            lhs, rhs = orthogonality_defect(f, m, n)
            assert lhs == rhs, (f.label(), m, n)


def _perturbed(f: FamilySpec, k: int) -> FamilySpec:
    def coeffs(n):
        a, b, c = recurrence_coeffs(f, n)
        return (a, b + 17, c * 3) if n >= k else (a, b, c)

    return FamilySpec("perturbed", MappingProxyType({}), coeffs)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["charlier", "laguerre", "q-laguerre", "meixner"]), st.integers(1, 6))
def test_moment_uses_only_low_coefficients(name, n):
    f = family_points(name)[0]
    # mu_n reads b_0..b_{n-1} and lambda_1..lambda_{n-1}; change everything from n on
    g = _perturbed(f, n)
    assert moment(g, n) == moment(f, n)


def test_hankel_positive():
    for f in [make_family("charlier", a="1/2"), make_family("laguerre", alpha=1), make_family("hermite")]:
        for order in range(1, 5):
            assert hankel_determinant(f, order).real_value() > 0


def test_hankel_matches_norms():
    f = make_family("laguerre", alpha="1/3")
    for order in range(1, 5):
        prod = G(1)
        for k in range(order):
            prod = prod * norm_zeta(f, k)
        assert hankel_determinant(f, order) == prod


def test_functional_memo_is_monotone():
    f = make_family("charlier", a=1)
    L = functional(f)
    first = [L.moment(n) for n in range(5)]
    L.moment(9)
    assert [L.moment(n) for n in range(5)] == first


def test_meixner_moment_factor():
    beta, c = G(2), G("1/2")
    f = make_family("meixner", beta=beta, c=c)
    # mu_2 = sum over S_2 of c^wex beta^cyc / (1 - c)^2 = (c^2 beta^2 + c beta) / (1 - c)^2
    assert moment(f, 2) == (c * c * beta * beta + c * beta) / (1 - c) ** 2
