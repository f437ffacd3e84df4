"""Truncated multivariate power series and the generating-function checks built on them.

Everything is exact: coefficients are Gaussian rationals, and a rational
power is computed as exp(r * log(s)) with both series cut at the cap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial, prod
from typing import Callable, Iterator, Mapping, Sequence

from .families import make_family
from .linearize import Report, generalized_moment_product, linearization, mixed_linearization
from .scalar import ONE, ZERO, GaussianRational, Scalarish, as_scalar

__all__ = [
    "NotInvertible",
    "TruncatedSeries",
    "SquareMatrix",
    "series_arith",
    "exponents",
    "elementary",
    "macmahon_check",
    "macmahon_permutation_side",
    "random_matrix",
    "lemma_det",
    "lemma_closed_form",
    "delta_matrix",
    "delta_closed_form",
    "det_identities",
    "gf_series",
    "gf_check",
    "GF_IDS",
]

Exp = tuple[int, ...]


class NotInvertible(ZeroDivisionError):
    pass


def exponents(num_vars: int, cap: int) -> Iterator[Exp]:
    """All exponent vectors with total degree at most ``cap``, by degree."""
    for d in range(cap + 1):
        for e in _compositions(d, num_vars):
            yield e


def _compositions(d: int, k: int) -> Iterator[Exp]:
    if k == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, k - 1):
            yield (first,) + rest


class TruncatedSeries:
    """Power series in ``num_vars`` variables with terms of total degree <= cap."""

    __slots__ = ("num_vars", "cap", "terms")

    def __init__(self, num_vars: int, cap: int, terms: Mapping[Exp, Scalarish] | None = None):
        self.num_vars = num_vars
        self.cap = cap
        self.terms: dict[Exp, GaussianRational] = {}
        for e, c in (terms or {}).items():
            if len(e) != num_vars:
                raise ValueError("exponent length differs from the number of variables")
            c = as_scalar(c)
            if c and sum(e) <= cap:
                self.terms[tuple(e)] = c

    # -- constructors --

    @classmethod
    def constant(cls, num_vars: int, cap: int, c: Scalarish = 1) -> "TruncatedSeries":
        return cls(num_vars, cap, {(0,) * num_vars: c})

    @classmethod
    def variable(cls, num_vars: int, cap: int, i: int, coeff: Scalarish = 1) -> "TruncatedSeries":
        e = [0] * num_vars
        e[i] = 1
        return cls(num_vars, cap, {tuple(e): coeff})

    def _new(self, terms) -> "TruncatedSeries":
        out = TruncatedSeries(self.num_vars, self.cap)
        out.terms = {e: c for e, c in terms.items() if c}
        return out

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if (other.num_vars, other.cap) != (self.num_vars, self.cap):
                raise ValueError("series shapes differ")
            return other
        return TruncatedSeries.constant(self.num_vars, self.cap, as_scalar(other))

    # -- ring operations --

    def __add__(self, other):
        o = self._lift(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, ZERO) + c
        return self._new(t)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = as_scalar(other)
            return self._new({e: v * c for e, v in self.terms.items()})
        o = self._lift(other)
        t: dict[Exp, GaussianRational] = {}
        cap = self.cap
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in o.terms.items():
                if d1 + sum(e2) > cap:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, ZERO) + c1 * c2
        return self._new(t)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = self._lift(other)
        return self.terms == other.terms

    def __getitem__(self, e: Exp) -> GaussianRational:
        return self.terms.get(tuple(e), ZERO)

    @property
    def constant_term(self) -> GaussianRational:
        return self[(0,) * self.num_vars]

    def __repr__(self):
        body = " + ".join(f"{c}*x^{e}" for e, c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0])))
        return f"TruncatedSeries({self.num_vars}, cap={self.cap}: {body or '0'})"

    # -- analytic operations, all finite --

    def _without_constant(self) -> "TruncatedSeries":
        return self - self.constant_term

    def _compose(self, coeffs: Callable[[int], GaussianRational]) -> "TruncatedSeries":
        """sum_k coeffs(k) u^k for this series u with zero constant term."""
        if self.constant_term:
            raise ValueError("composition needs a zero constant term")
        out = TruncatedSeries.constant(self.num_vars, self.cap, coeffs(0))
        power = TruncatedSeries.constant(self.num_vars, self.cap)
        for k in range(1, self.cap + 1):
            power = power * self
            if not power.terms:
                break
            out = out + power * coeffs(k)
        return out

    def inverse(self) -> "TruncatedSeries":
        c0 = self.constant_term
        if not c0:
            raise NotInvertible("constant term is zero")
        u = self * c0.reciprocal() - 1
        return u._compose(lambda k: as_scalar((-1) ** k)) * c0.reciprocal()

    def log(self) -> "TruncatedSeries":
        if self.constant_term != 1:
            raise ValueError("log needs constant term 1")
        u = self - 1
        return u._compose(lambda k: as_scalar(Fraction((-1) ** (k + 1), k)) if k else ZERO)

    def exp(self) -> "TruncatedSeries":
        if self.constant_term:
            raise ValueError("exp needs a zero constant term")
        return self._compose(lambda k: as_scalar(Fraction(1, factorial(k))))

    def pow(self, r: Scalarish) -> "TruncatedSeries":
        r = as_scalar(r)
        if r.is_real and r.re.denominator == 1:
            k = int(r.re)
            base = self if k >= 0 else self.inverse()
            out = TruncatedSeries.constant(self.num_vars, self.cap)
            for _ in range(abs(k)):
                out = out * base
            return out
        if self.constant_term != 1:
            raise ValueError("a non-integer power needs constant term 1")
        return (self.log() * r).exp()


def series_arith(op: str, *args):
    """Dispatch used by the CLI: mul(a, b), inverse(a), pow(a, r)."""
    if op == "mul":
        a, b = args
        return a * b
    if op == "inverse":
        (a,) = args
        return a.inverse()
    if op == "pow":
        a, r = args
        return a.pow(r)
    raise ValueError(f"unknown operation {op!r}")


def elementary(xs: Sequence[TruncatedSeries], k: int) -> TruncatedSeries:
    """e_k of the given series."""
    out = TruncatedSeries.constant(xs[0].num_vars, xs[0].cap, 1 if k == 0 else 0)
    if k == 0:
        return out
    for combo in combinations(xs, k):
        term = combo[0]
        for x in combo[1:]:
            term = term * x
        out = out + term
    return out


# -- matrices and determinants ---------------------------------------------------------

@dataclass(frozen=True)
class SquareMatrix:
    entries: tuple[tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix is not square")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    def det(self, one=ONE):
        """Leibniz expansion; entries may be scalars or series."""
        n = self.size
        total = None
        for p in permutations(range(n)):
            sign = -1 if _parity(p) else 1
            term = one
            for i in range(n):
                term = term * self.entries[i][p[i]]
            term = term * sign
            total = term if total is None else total + term
        return total if total is not None else one


def _parity(p: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv & 1


def random_matrix(rng: random.Random, m: int, max_den: int = 5) -> SquareMatrix:
    """Entries p/q in [-2, 2] with 1 <= q <= max_den."""
    def entry():
        q = rng.randint(1, max_den)
        return GaussianRational(Fraction(rng.randint(-2 * q, 2 * q), q))

    return SquareMatrix(tuple(tuple(entry() for _ in range(m)) for _ in range(m)))


# -- MacMahon ------------------------------------------------------------------------------

def _v_matrix(A: SquareMatrix, cap: int) -> TruncatedSeries:
    m = A.size
    xs = [TruncatedSeries.variable(m, cap, i) for i in range(m)]
    one = TruncatedSeries.constant(m, cap)
    rows = tuple(
        tuple((one if i == j else one * 0) - xs[i] * A.entries[i][j] for j in range(m)) for i in range(m)
    )
    return SquareMatrix(rows).det(one)


def macmahon_permutation_side(A: SquareMatrix, beta: Scalarish, n: Sequence[int]) -> GaussianRational:
    """(1/prod n_j!) sum over permutations of the boxed set of beta^cyc prod a_{chi(j), chi(pi(j))}."""
    beta = as_scalar(beta)
    chi = [b for b, s in enumerate(n) for _ in range(s)]
    N = len(chi)
    total = ZERO
    for p in permutations(range(N)):
        w = ONE
        for j in range(N):
            w = w * A.entries[chi[j]][chi[p[j]]]
            if not w:
                break
        if not w:
            continue
        total = total + w * beta ** _cycles(p)
    return total / prod(factorial(s) for s in n)


def _cycles(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    c = 0
    for i in range(len(p)):
        if not seen[i]:
            c += 1
            while not seen[i]:
                seen[i] = True
                i = p[i]
    return c


def macmahon_check(A: SquareMatrix, beta: Scalarish, cap: int = 4) -> Report:
    """Coefficients of det(I - XA)^(-beta) against the weighted permutation sums."""
    if A.size > 3 or cap > 5:
        raise ValueError("macmahon_check is sized for m <= 3 and cap <= 5")
    beta = as_scalar(beta)
    lhs_series = _v_matrix(A, cap).pow(-beta)
    items = []
    for e in exponents(A.size, cap):
        lhs = lhs_series[e]
        rhs = macmahon_permutation_side(A, beta, e)
        items.append(Report(f"macmahon {e}", lhs == rhs, lhs, rhs))
    return _summary(f"macmahon m={A.size} beta={beta} cap={cap}", items)


def _summary(name: str, items: list[Report]) -> Report:
    bad = next((r for r in items if not r.passed), None)
    return Report(
        name,
        bad is None,
        bad.lhs if bad else None,
        bad.rhs if bad else None,
        detail=bad.check if bad else f"{len(items)} coefficients",
        items=items,
    )


# -- determinant identities ---------------------------------------------------------------

def lemma_det(xs: Sequence[Scalarish], a: Scalarish, b: Scalarish) -> GaussianRational:
    """Determinant with diagonal xs, a above and b below the diagonal."""
    n = len(xs)
    a, b = as_scalar(a), as_scalar(b)
    rows = tuple(tuple(as_scalar(xs[i]) if i == j else (a if j > i else b) for j in range(n)) for i in range(n))
    return SquareMatrix(rows).det()


def lemma_closed_form(xs: Sequence[Scalarish], a: Scalarish, b: Scalarish) -> GaussianRational:
    """(a phi(b) - b phi(a)) / (a - b), phi(t) = prod (x_j - t).

    For a = b the limit phi(a) + a sum_j prod_{i != j} (x_i - a) is used;
    it is the stated limit with the fractions cleared, so no x_j = a breaks it.
    """
    xs = [as_scalar(x) for x in xs]
    a, b = as_scalar(a), as_scalar(b)

    def phi(t):
        return prod((x - t for x in xs), start=ONE)

    if a != b:
        return (a * phi(b) - b * phi(a)) / (a - b)
    rest = ZERO
    for j in range(len(xs)):
        rest = rest + prod((xs[i] - a for i in range(len(xs)) if i != j), start=ONE)
    return phi(a) + a * rest


def delta_matrix(x0: Scalarish, xs: Sequence[Scalarish], c: Scalarish) -> SquareMatrix:
    """The (m+1)-square matrix: -x_i left of and -c x_i right of the diagonal, last row -x0."""
    c, x0 = as_scalar(c), as_scalar(x0)
    xs = [as_scalar(x) for x in xs]
    m = len(xs)
    rows = []
    for i in range(m):
        rows.append(tuple(ONE if j == i else (-xs[i] if j < i else -c * xs[i]) for j in range(m + 1)))
    rows.append(tuple(-x0 for _ in range(m)) + (1 - x0,))
    return SquareMatrix(tuple(rows))


def _e(xs: Sequence[GaussianRational], k: int) -> GaussianRational:
    return sum((prod(c, start=ONE) for c in combinations(xs, k)), start=ZERO)


def delta_closed_form(x0: Scalarish, xs: Sequence[Scalarish], c: Scalarish) -> GaussianRational:
    """1 - sum_{k>=2} (c + ... + c^(k-1)) e_k - x0 prod (1 + c x_j)."""
    c, x0 = as_scalar(c), as_scalar(x0)
    xs = [as_scalar(x) for x in xs]
    out = ONE
    for k in range(2, len(xs) + 1):
        out = out - sum((c**i for i in range(1, k)), start=ZERO) * _e(xs, k)
    return out - x0 * prod((1 + c * x for x in xs), start=ONE)


def _simp_lhs(ts):
    return prod((1 + t for t in ts), start=ONE) * (1 - sum((t / (1 + t) for t in ts), start=ZERO))


def _simp_rhs(ts):
    return 1 - sum(((k - 1) * _e(ts, k) for k in range(2, len(ts) + 1)), start=ZERO)


def det_identities(m: int, c: Scalarish, samples: int = 5, *, seed: int = 0) -> Report:
    """Bordered-determinant lemma (both branches), Delta_{m+1}, and the e_k simplification."""
    if not 1 <= m <= 5:
        raise ValueError("m must be between 1 and 5")
    c = as_scalar(c)
    rng = random.Random(seed)

    def q():
        d = rng.randint(1, 5)
        return as_scalar(Fraction(rng.randint(-3 * d, 3 * d), d))

    items = []
    for s in range(samples):
        xs = [q() for _ in range(m)]
        a, b = q(), q()
        if a == b:
            b = b + 1
        lhs, rhs = lemma_det(xs, a, b), lemma_closed_form(xs, a, b)
        items.append(Report(f"lemma a!=b sample {s}", lhs == rhs, lhs, rhs))
        lhs, rhs = lemma_det(xs, a, a), lemma_closed_form(xs, a, a)
        items.append(Report(f"lemma a=b sample {s}", lhs == rhs, lhs, rhs))
        x0 = q()
        lhs, rhs = delta_matrix(x0, xs, c).det(), delta_closed_form(x0, xs, c)
        items.append(Report(f"delta sample {s}", lhs == rhs, lhs, rhs))
        if c != 1:
            mid = (c * prod((1 + x for x in xs), start=ONE)
                   - prod((1 + c * x for x in xs), start=ONE) * (1 - (1 - c) * x0)) / (c - 1)
            items.append(Report(f"delta via lemma sample {s}", lhs == mid, lhs, mid))
        ts = [t if t != -1 else t + 2 for t in xs]
        lhs, rhs = _simp_lhs(ts), _simp_rhs(ts)
        items.append(Report(f"e_k simplification sample {s}", lhs == rhs, lhs, rhs))
    return _summary(f"determinant identities m={m} c={c}", items)


# -- generating functions -------------------------------------------------------------------

GF_IDS = ("eqgFgLN", "eqgfMnumbers", "eqGFW", "eqgfMnumbers2", "hermite-exp", "charlier-exp")


def _p(params: Mapping[str, Scalarish], key: str, default=None) -> GaussianRational:
    if key not in params:
        if default is None:
            raise ValueError(f"parameter {key!r} is required")
        return as_scalar(default)
    return as_scalar(params[key])


def _gap(alpha: GaussianRational, beta: GaussianRational) -> int:
    d = alpha - beta
    if d.im or d.re.denominator != 1 or d.re < 0:
        raise ValueError("alpha - beta must be a nonnegative integer")
    return int(d.re)


def gf_series(gf_id: str, params: Mapping[str, Scalarish], m: int, cap: int, *, j: int | None = None) -> TruncatedSeries:
    """Closed-form right side as a series in x0, x1..xm (hermite-exp: x1..xm only).

    For the mixed identities the first ``j`` variables carry the alpha
    polynomials and the remaining m - j the beta ones.
    """
    if gf_id == "hermite-exp":
        xs = [TruncatedSeries.variable(m, cap, i) for i in range(m)]
        return elementary(xs, 2).exp()
    V = m + 1
    x0 = TruncatedSeries.variable(V, cap, 0)
    xs = [TruncatedSeries.variable(V, cap, i) for i in range(1, V)]
    one = TruncatedSeries.constant(V, cap)

    def prod_series(fs):
        out = one
        for f in fs:
            out = out * f
        return out

    if gf_id == "charlier-exp":
        a = _p(params, "a")
        inner = x0 + x0 * elementary(xs, 1)
        for k in range(2, m + 1):
            inner = inner + (x0 + 1) * elementary(xs, k)
        return (inner * a).exp()
    if gf_id in ("eqgFgLN", "eqGFW"):
        base = one - x0 * prod_series(1 + x for x in xs)
        for k in range(2, m + 1):
            base = base - elementary(xs, k) * (k - 1)
        alpha = _p(params, "alpha")
        out = base.pow(-alpha - 1)
        if gf_id == "eqGFW":
            jj = _split(j, m)
            out = out * prod_series(1 + x for x in xs[jj:]).pow(_gap(alpha, _p(params, "beta")))
        return out
    if gf_id in ("eqgfMnumbers", "eqgfMnumbers2"):
        c = _p(params, "c")
        ic = c.reciprocal()
        base = one - x0 * prod_series(1 + x * ic for x in xs)
        for k in range(2, m + 1):
            coeff = (1 - c ** (1 - k)) / (c * (1 - ic))
            base = base - elementary(xs, k) * coeff
        if gf_id == "eqgfMnumbers":
            return base.pow(-_p(params, "beta"))
        alpha = _p(params, "alpha")
        jj = _split(j, m)
        gap = _gap(alpha, _p(params, "beta"))
        return base.pow(-alpha) * prod_series(1 + x for x in xs[jj:]).pow(gap)
    raise ValueError(f"unknown generating function {gf_id!r}")


def _split(j: int | None, m: int) -> int:
    jj = m // 2 if j is None else j
    if not 1 <= jj < m:
        raise ValueError("the mixed identities need 1 <= j < m")
    return jj


def _functional_side(gf_id: str, params: Mapping[str, Scalarish], e: Exp, j: int | None, m: int) -> GaussianRational:
    if gf_id == "hermite-exp":
        return linearization(make_family("hermite"), e)
    n0, ns = e[0], tuple(e[1:])
    if gf_id == "eqgFgLN":
        return generalized_moment_product(make_family("laguerre", alpha=_p(params, "alpha")), n0, "monomial", ns)
    if gf_id == "eqgfMnumbers":
        f = make_family("meixner", beta=_p(params, "beta"), c=_p(params, "c"))
        return generalized_moment_product(f, n0, "falling", ns)
    if gf_id == "charlier-exp":
        return generalized_moment_product(make_family("charlier", a=_p(params, "a")), n0, "falling", ns)
    jj = _split(j, m)
    if gf_id == "eqGFW":
        fA = make_family("laguerre", alpha=_p(params, "alpha"))
        fB = make_family("laguerre", alpha=_p(params, "beta"))
    else:
        fA = make_family("meixner", beta=_p(params, "alpha"), c=_p(params, "c"))
        fB = make_family("meixner", beta=_p(params, "beta"), c=_p(params, "c"))
    return mixed_linearization(fA, fB, n0, ns[:jj], ns[jj:])


def gf_check(gf_id: str, params: Mapping[str, Scalarish], m: int = 2, cap: int = 4, *, j: int | None = None) -> Report:
    """Every coefficient of the closed form against functional values over factorials."""
    if m > 3 or cap > 5:
        raise ValueError("gf_check is sized for at most 3 x-variables and cap <= 5")
    if gf_id not in GF_IDS:
        raise ValueError(f"unknown generating function {gf_id!r}")
    if gf_id in ("eqGFW", "eqgfMnumbers2"):
        _gap(_p(params, "alpha"), _p(params, "beta"))
    s = gf_series(gf_id, params, m, cap, j=j)
    items = []
    for e in exponents(s.num_vars, cap):
        lhs = s[e] * prod(factorial(k) for k in e)
        rhs = _functional_side(gf_id, params, e, j, m)
        items.append(Report(f"{gf_id} {e}", lhs == rhs, lhs, rhs))
    shown = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
    return _summary(f"gf {gf_id} [{shown}] m={m} cap={cap}", items)
