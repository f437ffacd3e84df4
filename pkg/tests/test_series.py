import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from olc.families import make_family
from olc.linearize import generalized_moment_product, linearization
from olc.scalar import G
from olc.series import (
    GF_IDS,
    NotInvertible,
    SquareMatrix,
    TruncatedSeries,
    delta_closed_form,
    delta_matrix,
    det_identities,
    exponents,
    gf_check,
    gf_series,
    lemma_closed_form,
    lemma_det,
    macmahon_check,
    macmahon_permutation_side,
    random_matrix,
    series_arith,
)

small = st.fractions(min_value=-2, max_value=2, max_denominator=5)


def t_series(cap, coeffs):
    return TruncatedSeries(1, cap, {(k,): c for k, c in enumerate(coeffs)})


def test_inverse_geometric():
    s = series_arith("inverse", t_series(3, [1, -1]))
    assert [s[(k,)] for k in range(4)] == [1, 1, 1, 1]


def test_pow_minus_two():
    s = series_arith("pow", t_series(4, [1, -1]), -2)
    assert s[(2,)] == 3


def test_mul_respects_cap():
    s = series_arith("mul", t_series(1, [1, 1]), t_series(1, [1, 1]))
    assert s == t_series(1, [1, 2])


def test_not_invertible():
    with pytest.raises(NotInvertible):
        t_series(3, [0, 1]).inverse()
    with pytest.raises(ValueError):
        t_series(3, [2, 1]).pow("1/2")


def test_exponents_count():
    # compositions of degree <= 4 in 3 variables: C(7, 3)
    assert len(list(exponents(3, 4))) == 35


@settings(max_examples=30, deadline=None)
@given(st.lists(small, min_size=1, max_size=4), st.sampled_from(["1/2", "-1/3", "3", "-2", "5/4"]))
def test_pow_roundtrip(tail, r):
    s = t_series(4, [1] + tail)
    r = G(r)
    assert s.pow(r).pow(r.reciprocal()) == s


@settings(max_examples=30, deadline=None)
@given(st.lists(small, min_size=1, max_size=5))
def test_inverse_is_inverse(coeffs):
    if not coeffs[0]:
        coeffs[0] = Fraction(1)
    s = t_series(4, coeffs)
    assert s * s.inverse() == TruncatedSeries.constant(1, 4)


def test_log_exp_roundtrip():
    x = TruncatedSeries.variable(2, 5, 0)
    y = TruncatedSeries.variable(2, 5, 1)
    s = 1 + x * G("1/2") - y * x + y * y * 3
    assert s.log().exp() == s


def test_macmahon_swap():
    A = SquareMatrix(((G(0), G(1)), (G(1), G(0))))
    beta = G("2/7")
    rep = macmahon_check(A, beta, 4)
    assert rep.passed
    assert macmahon_permutation_side(A, beta, (1, 1)) == beta


def test_macmahon_zero_matrix():
    A = SquareMatrix(((G(0),) * 2,) * 2)
    for e in exponents(2, 4):
        assert macmahon_permutation_side(A, 3, e) == (1 if e == (0, 0) else 0)
    assert macmahon_check(A, 3, 4).passed


def _classical_coefficient(A, n):
    """[x^n] prod_i (sum_j a_ij x_j)^(n_i), the classical master theorem."""
    m, cap = A.size, sum(n)
    xs = [TruncatedSeries.variable(m, cap, j) for j in range(m)]
    out = TruncatedSeries.constant(m, cap)
    for i in range(m):
        row = sum((xs[j] * A.entries[i][j] for j in range(m)), TruncatedSeries(m, cap))
        for _ in range(n[i]):
            out = out * row
    return out[tuple(n)]


@pytest.mark.parametrize("seed", range(5))
def test_macmahon_beta_one_matches_classical(seed):
    A = random_matrix(random.Random(seed), 2)
    rep = macmahon_check(A, 1, 4)
    assert rep.passed
    for item, e in zip(rep.items, exponents(2, 4)):
        assert item.lhs == _classical_coefficient(A, e)


@pytest.mark.parametrize("beta", ["1", "2", "1/2", "-1/3"])
def test_macmahon_random_three_by_three(beta):
    rng = random.Random(7)
    for _ in range(3):
        assert macmahon_check(random_matrix(rng, 3), G(beta), 4).passed


def test_macmahon_size_limit():
    A = SquareMatrix(tuple(tuple(G(0) for _ in range(4)) for _ in range(4)))
    with pytest.raises(ValueError):
        macmahon_check(A, 1)


def test_lemma_small_example():
    # x = (0, 0), a = 1, b = 2: the 2x2 determinant is -ab = -2
    assert lemma_det([0, 0], 1, 2) == -2
    assert lemma_closed_form([0, 0], 1, 2) == -2


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=1, max_size=4), small, small)
def test_lemma_both_branches(xs, a, b):
    assert lemma_det(xs, a, b) == lemma_closed_form(xs, a, b)
    assert lemma_det(xs, a, a) == lemma_closed_form(xs, a, a)


def test_lemma_limit_with_coinciding_variable():
    assert lemma_det([1, 3], 1, 1) == lemma_closed_form([1, 3], 1, 1)


def test_delta_two_by_two():
    x0, x1, c = G("1/3"), G("-2"), G("3/5")
    assert delta_matrix(x0, [x1], c).det() == 1 - x0 * (1 + c * x1)
    assert delta_closed_form(x0, [x1], c) == 1 - x0 * (1 + c * x1)


def test_simplification_m_two():
    t1, t2 = G("1/4"), G("2/3")
    lhs = (1 + t1) * (1 + t2) * (1 - t1 / (1 + t1) - t2 / (1 + t2))
    assert lhs == 1 - t1 * t2


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("c", ["1/3", "1", "-2"])
def test_det_identities(m, c):
    assert det_identities(m, G(c), samples=3).passed


def test_gf_spot_values():
    al = G("1/2")
    s = gf_series("eqgFgLN", {"alpha": al}, 1, 2)
    assert s[(1, 1)] == al + 1
    a = G("3/2")
    assert gf_series("charlier-exp", {"a": a}, 1, 2)[(1, 0)] == a
    assert gf_series("hermite-exp", {}, 2, 2)[(1, 1)] == 1


def test_gf_values_come_from_functionals():
    al = G("1/2")
    assert generalized_moment_product(make_family("laguerre", alpha=al), 1, "monomial", (1,)) == al + 1
    assert linearization(make_family("hermite"), (1, 1)) == 1


@pytest.mark.parametrize(
    "gf_id,params",
    [
        ("eqgFgLN", {"alpha": "0"}),
        ("eqgFgLN", {"alpha": "1/2"}),
        ("eqgfMnumbers", {"beta": "1", "c": "1/2"}),
        ("eqGFW", {"alpha": "3/2", "beta": "1/2"}),
        ("eqgfMnumbers2", {"alpha": "2", "beta": "0", "c": "1/3"}),
        ("hermite-exp", {}),
        ("charlier-exp", {"a": "2/3"}),
    ],
)
def test_gf_check(gf_id, params):
    assert gf_id in GF_IDS
    rep = gf_check(gf_id, {k: G(v) for k, v in params.items()}, m=2, cap=4)
    assert rep.passed, (rep.detail, rep.lhs, rep.rhs)


def test_gf_mixed_rejects_fractional_gap():
    with pytest.raises(ValueError):
        gf_check("eqGFW", {"alpha": G("1/2"), "beta": G(0)})


def test_gf_limits():
    with pytest.raises(ValueError):
        gf_check("eqgFgLN", {"alpha": G(0)}, m=4)
    with pytest.raises(ValueError):
        gf_check("eqgFgLN", {"alpha": G(0)}, cap=6)
