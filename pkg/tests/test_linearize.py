import itertools

import pytest
from hypothesis import given, settings, strategies as st

from olc.combi import CapExceeded, NotAvailable
from olc.families import FamilyInvalid, make_family, norm_zeta
from olc.linearize import (
    MultiIndex,
    birth_death_printed_boundary,
    check_boundary,
    check_difference_system,
    combinatorial_value,
    connection_coefficients,
    connection_recombine,
    fundamental_check,
    generalized_combinatorial,
    generalized_moment_product,
    linearization,
    mixed_combinatorial,
    mixed_linearization,
    pos_formula,
    pos_meix_formula,
    pos_meix_series_coefficient,
)
from olc.scalar import G, Poly, falling_factorial_poly
from olc.suites import LINEARIZATION_FAMILIES, family_points, multi_indices

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=6)


def test_multi_index_shifts():
    idx = MultiIndex.of(2, 0, 1)
    assert idx.plus(2).entries == (2, 1, 1)
    assert idx.minus(1).entries == (1, 0, 1)
    with pytest.raises(ValueError):
        idx.minus(2)
    assert idx.total == 3 and idx.m == 3


@pytest.mark.parametrize("alpha", ["0", "1/2", "3"])
def test_laguerre_two_two(alpha):
    al = G(alpha)
    f = make_family("laguerre", alpha=al)
    assert linearization(f, (2, 2)) == 2 * (al + 1) * (al + 2)


def test_value_examples():
    q = G("2/7")
    assert linearization(make_family("q-hermite", q=q), (2, 2)) == 1 + q
    a = G("5/3")
    assert linearization(make_family("q-charlier", a=a, b=2, c="1/4", q=q), (1, 1)) == a
    for name in LINEARIZATION_FAMILIES:
        assert linearization(family_points(name)[0], (0, 0, 0)) == 1


def test_combinatorial_examples():
    al, lam = G("1/3"), G("5/2")
    f = make_family("laguerre", alpha=al)
    assert combinatorial_value(f, MultiIndex((1, 1), (lam, G(1)))) == (al + 1) * lam
    beta, c = G("3/2"), G("2/5")
    m = make_family("meixner", beta=beta, c=c)
    assert combinatorial_value(m, (2, 2)) == 2 * beta**2 * c**2 + 2 * beta * c**2
    d, eta = G("1/2"), G("3/4")
    mp = make_family("meixner-pollaczek", delta=d, eta=eta)
    assert combinatorial_value(mp, (1, 1)) == (d * d + 1) * eta


def test_generalized_examples():
    lag0 = make_family("laguerre", alpha=0)
    assert generalized_moment_product(lag0, 1, "monomial", (1, 1)) == 3
    al = G("2/5")
    f = make_family("laguerre", alpha=al)
    assert generalized_moment_product(f, 1, "monomial", (1,)) == al + 1
    a = G("7/3")
    assert generalized_moment_product(make_family("charlier", a=a), 1, "falling", (0,)) == a


@pytest.mark.parametrize("name", ["laguerre", "meixner", "charlier"])
def test_generalized_matches_extended_class(name):
    f = family_points(name)[1]
    for n0 in range(3):
        for e in multi_indices(2, 4):
            lhs = generalized_moment_product(f, n0, None, e)
            assert lhs == generalized_combinatorial(f, n0, e), (f.label(), n0, e)


def test_mixed_examples():
    al = G("1/2")
    fa = make_family("laguerre", alpha=al)
    assert mixed_linearization(fa, fa, 0, (1,), (1,)) == al + 1
    fb = make_family("laguerre", alpha=-al)
    # an empty second index is written (0,), since p_0 = 1
    assert mixed_linearization(fa, fb, 1, (1,), (0,)) == al + 1
    one, zero = make_family("laguerre", alpha=1), make_family("laguerre", alpha=0)
    assert mixed_linearization(one, zero, 0, (1,), (1,)).real_value() >= 0


def test_mixed_matches_injection_sum():
    fa, fb = make_family("laguerre", alpha=2), make_family("laguerre", alpha=1)
    for m0, mi, ni in itertools.product(range(3), range(3), range(3)):
        lhs = mixed_linearization(fa, fb, m0, (mi,), (ni,))
        assert lhs == mixed_combinatorial(fa, fb, m0, (mi,), (ni,))


def test_mixed_rejects_bad_pairs():
    with pytest.raises(ValueError):
        mixed_linearization(make_family("laguerre", alpha=0), make_family("hermite"), 0, (1,), (1,))
    with pytest.raises(ValueError):
        mixed_combinatorial(make_family("laguerre", alpha="1/2"), make_family("laguerre", alpha=0), 0, (1,), (1,))


@pytest.mark.parametrize("name", LINEARIZATION_FAMILIES)
def test_fundamental_identity_small(name):
    for f in family_points(name):
        for e in multi_indices(3, 5):
            r = fundamental_check(f, e)
            assert r.passed, (r.check, r.lhs, r.rhs)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["hermite", "laguerre"]), st.lists(st.integers(0, 2), min_size=2, max_size=3), st.lists(rationals, min_size=3, max_size=3))
def test_fundamental_identity_scaled(name, entries, lams):
    f = family_points(name)[0]
    scal = tuple(G(x) for x in lams[: len(entries) - 1]) + (G(1),)
    r = fundamental_check(f, MultiIndex(tuple(entries), scal))
    assert r.passed, (r.check, r.lhs, r.rhs)


def test_meixner_uses_inverse_c():
    f = make_family("meixner", beta=2, c="1/3")
    r = fundamental_check(f, (1, 1))
    assert r.passed
    assert r.rhs == combinatorial_value(f, (1, 1), params={"beta": G(2), "c": G(3)})
    assert r.rhs != combinatorial_value(f, (1, 1))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(LINEARIZATION_FAMILIES), st.permutations([0, 1, 2]), st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_symmetric_under_box_permutation(name, perm, entries):
    f = family_points(name)[-1]
    permuted = tuple(entries[i] for i in perm)
    assert linearization(f, tuple(entries)) == linearization(f, permuted)


def test_difference_system_hermite_example():
    f = make_family("hermite")
    r = check_difference_system(f, (2, 1), 1, 2)
    assert r.passed and r.lhs == -2


def test_difference_system_q_laguerre_example():
    f = make_family("q-laguerre", y="1/2", q="1/3")
    assert check_difference_system(f, (2, 2), 1, 2).passed


@pytest.mark.parametrize("name", LINEARIZATION_FAMILIES)
def test_difference_system_all_pairs(name):
    f = family_points(name)[0]
    for e in multi_indices(3, 5, 2):
        for j, k in itertools.permutations(range(1, len(e) + 1), 2):
            assert check_difference_system(f, e, j, k).passed, (e, j, k)


def test_difference_system_rejects_same_position():
    with pytest.raises(ValueError):
        check_difference_system(make_family("hermite"), (1, 1), 1, 1)


def test_boundary_examples():
    ch = make_family("charlier", a="3/2")
    assert linearization(ch, (1, 0)) == 0
    al = G("1/2")
    lag = make_family("laguerre", alpha=al)
    assert linearization(lag, (1, 1)) == norm_zeta(lag, 1) == al + 1
    assert linearization(make_family("hermite"), (1, 0, 0, 2)) == 0


@pytest.mark.parametrize("name", LINEARIZATION_FAMILIES + ("al-salam-chihara",))
def test_boundary_all_families(name):
    f = family_points(name)[0]
    for m, lams in ((2, None), (3, ["1/2", 2])):
        assert check_boundary(f, m, lams).passed


@pytest.mark.parametrize("b,d", [("1,1", "0,1"), ("2", "0,1"), ("3/2,2", "1/2,1")])
def test_birth_death_boundary(b, d):
    f = make_family("birth-death", b=b, d=d)
    lam = G("1/2")
    assert check_boundary(f, 2, [lam]).passed
    got = linearization(f, MultiIndex((1, 0), (lam, G(1))))
    rb = G(b.split(",")[0])
    rd0 = G(d.split(",")[0])
    # the general boundary keeps the (1 - lambda) factor; the short form drops it
    assert got == (1 + rd0 / rb) * (1 - lam)
    assert got != birth_death_printed_boundary(rb, rd0, 0, lam, 0)
    assert linearization(f, MultiIndex((1, 0), (G(0), G(1)))) == birth_death_printed_boundary(rb, rd0, 0, 0, 0)


def test_connection_examples():
    beta, c = G("3/2"), G("1/3")
    f = make_family("meixner", beta=beta, c=c)
    assert connection_coefficients(f, 0) == [1]
    assert connection_coefficients(f, 1) == [c / (1 - c) * beta, -c / (1 - c)]
    assert connection_recombine(f, 1) == Poly.x()


def test_connection_degenerate_c():
    with pytest.raises(FamilyInvalid):
        connection_coefficients(make_family("meixner", beta=1, c=1), 2)


@pytest.mark.parametrize("n", range(7))
def test_connection_recombines_to_falling_factorial(n):
    f = make_family("meixner", beta=1, c="1/2")
    assert connection_recombine(f, n) == falling_factorial_poly(n)


def test_connection_is_not_monomial_from_degree_two():
    f = make_family("meixner", beta=1, c="1/2")
    assert connection_recombine(f, 2) != Poly.monomial(2)


def test_pos_spot_value():
    assert pos_formula(1, 1, 1) == 3


def test_pos_meix_series_matches_functional():
    for c in ("1/2", "1/3"):
        f = make_family("meixner", beta=1, c=c)
        for m, n, s in itertools.product(range(3), repeat=3):
            val = generalized_moment_product(f, s, "falling", (m, n))
            assert val == pos_meix_series_coefficient(m, n, s, c)


def test_pos_meix_printed_formula_differs():
    f = make_family("meixner", beta=1, c="1/2")
    val = generalized_moment_product(f, 1, "falling", (0, 1))
    assert val != pos_meix_formula(0, 1, 1, "1/2")


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        linearization(make_family("hermite"), (13, 13))


def test_scaled_sum_unavailable_for_charlier():
    with pytest.raises(NotAvailable):
        combinatorial_value(make_family("charlier", a=1), MultiIndex((1, 1), (G(2), G(1))))
