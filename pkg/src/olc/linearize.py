"""Linearization values through the moment functional, and their checks.

For a family p_n and scalings lambda_j the basic quantity is

    I(n_1, ..., n_m) = L(p_{n_1}(lambda_1 x) ... p_{n_m}(lambda_m x)).

The combinatorial side of each family comes from :mod:`olc.combi`; the
functional side never enumerates anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb, factorial
from typing import Sequence
from weakref import WeakKeyDictionary

from . import combi
from .combi import NotAvailable
from .families import FamilyInvalid, FamilySpec, make_family, polynomial, recurrence_coeffs
from .moments import apply
from .scalar import ONE, ZERO, GaussianRational, Poly, Scalarish, as_scalar, falling_factorial_poly, pochhammer, poly_product

__all__ = [
    "MultiIndex",
    "Report",
    "linearization",
    "prefactor_adjust",
    "combinatorial_family",
    "combinatorial_value",
    "fundamental_check",
    "generalized_moment_product",
    "generalized_combinatorial",
    "mixed_linearization",
    "mixed_combinatorial",
    "check_difference_system",
    "check_boundary",
    "birth_death_printed_boundary",
    "connection_coefficients",
    "connection_recombine",
    "pos_formula",
    "pos_meix_formula",
    "pos_meix_series_coefficient",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 24  # total degree accepted by the functional side


@dataclass(frozen=True)
class MultiIndex:
    entries: tuple[int, ...]
    scalings: tuple[GaussianRational, ...] = ()

    def __post_init__(self):
        e = tuple(int(x) for x in self.entries)
        if not e:
            raise ValueError("a multi-index needs at least one entry")
        if any(x < 0 for x in e):
            raise ValueError("multi-index entries must be nonnegative")
        s = tuple(as_scalar(x) for x in self.scalings) or (ONE,) * len(e)
        if len(s) != len(e):
            raise ValueError("one scaling per entry is required")
        object.__setattr__(self, "entries", e)
        object.__setattr__(self, "scalings", s)

    @classmethod
    def of(cls, *entries: int, scalings: Sequence[Scalarish] = ()) -> "MultiIndex":
        return cls(tuple(entries), tuple(scalings))

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def shifted(self, j: int, delta: int) -> "MultiIndex":
        """Entry j (1-based) moved by delta; negative results are rejected."""
        e = list(self.entries)
        e[j - 1] += delta
        if e[j - 1] < 0:
            raise ValueError(f"entry {j} would become negative")
        return MultiIndex(tuple(e), self.scalings)

    def plus(self, j: int) -> "MultiIndex":
        return self.shifted(j, 1)

    def minus(self, j: int) -> "MultiIndex":
        return self.shifted(j, -1)

    @property
    def unit_scalings(self) -> bool:
        return all(x == 1 for x in self.scalings)

    def __str__(self):
        s = ",".join(map(str, self.entries))
        if not self.unit_scalings:
            s += " | " + ",".join(map(str, self.scalings))
        return f"({s})"


@dataclass
class Report:
    """Outcome of one identity check."""

    check: str
    passed: bool
    lhs: GaussianRational | None = None
    rhs: GaussianRational | None = None
    detail: str = ""
    items: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"check": self.check, "pass": self.passed}
        out["lhs"] = self.lhs.to_json() if isinstance(self.lhs, GaussianRational) else None
        out["rhs"] = self.rhs.to_json() if isinstance(self.rhs, GaussianRational) else None
        if self.detail:
            out["detail"] = self.detail
        return out


def _as_index(idx) -> MultiIndex:
    if isinstance(idx, MultiIndex):
        return idx
    return MultiIndex(tuple(idx))


def _product_poly(f: FamilySpec, idx: MultiIndex) -> Poly:
    return poly_product([polynomial(f, n).scale_arg(lam) for n, lam in zip(idx.entries, idx.scalings)])


_values: "WeakKeyDictionary[FamilySpec, dict]" = WeakKeyDictionary()


def linearization(f: FamilySpec, idx, *, cap: int = DEFAULT_CAP) -> GaussianRational:
    idx = _as_index(idx)
    if idx.total > cap:
        raise combi.CapExceeded(f"total degree {idx.total} exceeds the cap {cap}")
    memo = _values.setdefault(f, {})
    v = memo.get(idx)
    if v is None:
        v = memo[idx] = apply(f, _product_poly(f, idx))
    return v


# -- prefactors -------------------------------------------------------------------

def prefactor_adjust(f: FamilySpec, value: GaussianRational, idx) -> GaussianRational:
    """Map a functional value onto the family's combinatorial quantity."""
    idx = _as_index(idx)
    if f.prefactor_rule == "identity":
        return value
    if f.prefactor_rule == "sign-inverse-c":
        return value * (-1) ** idx.total
    raise ValueError(f"unknown prefactor rule {f.prefactor_rule!r}")


def combinatorial_family(f: FamilySpec) -> dict[str, GaussianRational]:
    """Parameters at which the combinatorial sum matches ``prefactor_adjust``."""
    params = dict(f.params)
    if f.prefactor_rule == "sign-inverse-c":
        params["c"] = params["c"].reciprocal()
    return params


def combinatorial_value(f: FamilySpec, idx, *, params=None, cap: int | None = None) -> GaussianRational:
    """Weighted enumeration at the family's own parameters (or ``params``)."""
    idx = _as_index(idx)
    p = dict(f.params) if params is None else params
    rule = combi.family_weight(f.name, p, idx.m, idx.scalings)
    return combi.weighted_sum(combi.BoxedGroundSet(idx.entries), rule, cap=cap)


def fundamental_check(f: FamilySpec, idx, *, cap: int | None = None) -> Report:
    """Prefactor-adjusted functional value against the combinatorial sum."""
    idx = _as_index(idx)
    lhs = prefactor_adjust(f, linearization(f, idx), idx)
    rhs = combinatorial_value(f, idx, params=combinatorial_family(f), cap=cap)
    return Report(f"linearization {f.label()} {idx}", lhs == rhs, lhs, rhs)


# -- generalized quantities ---------------------------------------------------------

def _x_factor(n0: int, mode: str) -> Poly:
    if mode == "monomial":
        return Poly.monomial(n0)
    if mode in ("falling", "falling-factorial"):
        return falling_factorial_poly(n0)
    if mode == "none":
        if n0:
            raise ValueError("x_mode 'none' needs x_power 0")
        return Poly((1,))
    raise ValueError(f"unknown x_mode {mode!r}")


def _meixner_factor(f: FamilySpec, n0: int, total: int) -> GaussianRational:
    c = f.params["c"]
    return (-1) ** total * c ** (-n0) * (1 - c) ** n0


def generalized_moment_product(f: FamilySpec, n0: int, mode: str | None, idx) -> GaussianRational:
    """L(x-factor * prod p_{n_j}(lambda_j x)) with the definitions' prefactors.

    Meixner picks up (-1)^(sum n_j) c^(-n0) (1-c)^n0; the mass factor
    (1-c)^beta is absorbed by mu_0 = 1.  Other families use the value as is.
    ``mode`` defaults to the family's natural factor: falling factorials for
    the discrete families, monomials otherwise.
    """
    idx = _as_index(idx)
    if mode is None:
        mode = "falling" if f.name in ("meixner", "charlier") else "monomial"
    val = apply(f, _x_factor(n0, mode) * _product_poly(f, idx))
    if f.name == "meixner":
        val = val * _meixner_factor(f, n0, idx.total)
    return val


def generalized_combinatorial(f: FamilySpec, n0: int, idx, *, cap: int | None = None) -> GaussianRational:
    """Sum over the extended object class with a free box of size n0."""
    idx = _as_index(idx)
    if not idx.unit_scalings:
        raise NotAvailable("extended classes are defined for unit scalings only")
    p = f.params
    if f.name == "laguerre":
        return combi.starred_weighted_sum(n0, idx.entries, {"cyc": p["alpha"] + 1}, cap=cap)
    if f.name == "meixner":
        return combi.starred_weighted_sum(n0, idx.entries, {"cyc": p["beta"], "exc_b": p["c"].reciprocal()}, cap=cap)
    if f.name == "charlier":
        return combi.charlier_starred_sum(n0, idx.entries, p["a"], cap=cap)
    raise NotAvailable(f"no extended combinatorial class for {f.name}")


def _pair_compatible(fA: FamilySpec, fB: FamilySpec) -> str:
    if fA.name != fB.name or fA.name not in ("laguerre", "meixner"):
        raise ValueError("mixed linearization needs two laguerre or two meixner families")
    if fA.name == "meixner" and fA.params["c"] != fB.params["c"]:
        raise ValueError("meixner pair must share c")
    return fA.name


def mixed_linearization(fA: FamilySpec, fB: FamilySpec, m: int, idxA, idxB) -> GaussianRational:
    """W (laguerre pair) or Y (meixner pair): polynomials of both families under fA's functional."""
    name = _pair_compatible(fA, fB)
    idxA, idxB = _as_index(idxA), _as_index(idxB)
    mode = "falling" if name == "meixner" else "monomial"
    poly = _x_factor(m, mode) * _product_poly(fA, idxA) * _product_poly(fB, idxB)
    val = apply(fA, poly)
    if name == "meixner":
        val = val * _meixner_factor(fA, m, idxA.total + idxB.total)
    return val


def _shift(fA: FamilySpec, fB: FamilySpec) -> int:
    key = "alpha" if fA.name == "laguerre" else "beta"
    d = fA.params[key] - fB.params[key]
    if d.im or d.re.denominator != 1 or d.re < 0:
        raise ValueError("the parameter difference must be a nonnegative integer")
    return int(d.re)


def mixed_combinatorial(fA: FamilySpec, fB: FamilySpec, m: int, idxA, idxB, *, cap: int | None = None) -> GaussianRational:
    """Sum over tuples (pi, f_1, ..., f_k) with injections into [N], N the parameter gap."""
    name = _pair_compatible(fA, fB)
    N = _shift(fA, fB)
    idxA, idxB = _as_index(idxA), _as_index(idxB)
    if name == "laguerre":
        bases = {"cyc": fA.params["alpha"] + 1}
    else:
        bases = {"cyc": fA.params["beta"], "exc_b": fA.params["c"].reciprocal()}
    return combi.starred_injection_sum(m, idxA.entries, idxB.entries, N, bases, cap=cap)


# -- difference systems and boundary values ---------------------------------------------

def check_difference_system(f: FamilySpec, idx, j: int, k: int) -> Report:
    """Both sides of the symmetric difference system for the pair (j, k).

    With v_j = A_{n_j} lambda_j:

        I_j^+/v_j - I_k^+/v_k = (B_{n_j}/v_j - B_{n_k}/v_k) I - C_{n_j}/v_j I_j^- + C_{n_k}/v_k I_k^-

    A minus-shift of a zero entry multiplies p_{-1} = 0 and is dropped.
    """
    idx = _as_index(idx)
    if j == k or not (1 <= j <= idx.m and 1 <= k <= idx.m):
        raise ValueError("need two distinct valid positions")
    name = f"difference system {f.label()} {idx} j={j} k={k}"
    terms = {}
    for pos in (j, k):
        n = idx.entries[pos - 1]
        a, b, c = recurrence_coeffs(f, n)
        v = a * idx.scalings[pos - 1]
        if not v:
            return Report(name, False, detail=f"v_{pos} vanishes; division impossible")
        minus = linearization(f, idx.minus(pos)) if n else ZERO
        terms[pos] = (v, b, c, linearization(f, idx.plus(pos)), minus)
    base = linearization(f, idx)
    vj, bj, cj, pj, mj = terms[j]
    vk, bk, ck, pk, mk = terms[k]
    lhs = pj / vj - pk / vk
    rhs = (bj / vj - bk / vk) * base - cj / vj * mj + ck / vk * mk
    return Report(name, lhs == rhs, lhs, rhs)


def check_boundary(f: FamilySpec, m: int, lambdas: Sequence[Scalarish] | None = None, *, grid: int = 3) -> Report:
    """Boundary values that pin the difference system down.

    Checks, for 1 <= j < m and n in {0, 1},
    I_j^+(0,...,0,n) = lambda_j C_1 A_0/A_1 [n=1] + B_0 (1 - lambda_j) [n=0],
    then I(0,...,0) = 1 and I(n) = 0 when n_1 + ... + n_{m-1} < n_m over a
    small grid of entries.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    lam = [as_scalar(x) for x in (lambdas or [1] * (m - 1))]
    if len(lam) == m:
        lam = lam[:-1]
    if len(lam) != m - 1:
        raise ValueError("give lambda_1 .. lambda_{m-1}")
    scal = tuple(lam) + (ONE,)
    a0, b0, _ = recurrence_coeffs(f, 0)
    a1, _, c1 = recurrence_coeffs(f, 1)
    items: list[Report] = []
    for j in range(1, m):
        for n in (0, 1):
            e = [0] * m
            e[j - 1] = 1
            e[-1] = n
            idx = MultiIndex(tuple(e), scal)
            got = linearization(f, idx)
            lj = scal[j - 1]
            want = lj * c1 * a0 / a1 if n == 1 else b0 * (1 - lj)
            items.append(Report(f"boundary I_{j}^+(0,..,0,{n})", got == want, got, want))
    zero = linearization(f, MultiIndex((0,) * m, scal))
    items.append(Report("boundary I(0,..,0) = 1", zero == 1, zero, ONE))
    for e in product(range(grid + 1), repeat=m):
        if sum(e[:-1]) < e[-1]:
            got = linearization(f, MultiIndex(e, scal))
            items.append(Report(f"boundary I{e} = 0", got == 0, got, ZERO))
    ok = all(r.passed for r in items)
    bad = next((r for r in items if not r.passed), None)
    return Report(
        f"boundary {f.label()} m={m}",
        ok,
        bad.lhs if bad else None,
        bad.rhs if bad else None,
        detail=bad.check if bad else "",
        items=items,
    )


def birth_death_printed_boundary(b0: Scalarish, d0: Scalarish, d1: Scalarish, lam: Scalarish, n: int) -> GaussianRational:
    """Right side of the birth-death boundary value exactly as commonly printed.

    It omits the factor (1 - lambda_j) on the n = 0 term, so it agrees with
    the general boundary value only at lambda_j = 0.
    """
    b0, d0, d1, lam = (as_scalar(v) for v in (b0, d0, d1, lam))
    return lam * d1 / b0 if n == 1 else 1 + d0 / b0


# -- closed forms --------------------------------------------------------------------

def connection_coefficients(f: FamilySpec, n: int) -> list[GaussianRational]:
    """c^n (1-c)^(-n) binom(n,k) (beta+k)_{n-k} (-1)^k for k = 0..n (Meixner)."""
    if f.name != "meixner":
        raise ValueError("connection coefficients are implemented for meixner only")
    if n > 10:
        raise ValueError("n must be at most 10")
    beta, c = f.params["beta"], f.params["c"]
    if c == 1:
        raise FamilyInvalid("c = 1 is degenerate")
    lead = c**n / (1 - c) ** n
    return [lead * comb(n, k) * pochhammer(beta + k, n - k) * (-1) ** k for k in range(n + 1)]


def connection_recombine(f: FamilySpec, n: int) -> Poly:
    """Sum of the connection coefficients times the family polynomials p_k."""
    co = connection_coefficients(f, n)
    out = Poly()
    for k, ck in enumerate(co):
        out = out + polynomial(f, k) * ck
    return out


def pos_formula(m: int, n: int, s: int) -> int:
    """m! n! s! sum_j C(m,j) C(s,n+j-m) C(s+m-j,m)."""
    total = 0
    for j in range(m + 1):
        t = n + j - m
        if 0 <= t <= s:
            total += comb(m, j) * comb(s, t) * comb(s + m - j, m)
    return factorial(m) * factorial(n) * factorial(s) * total


def pos_meix_formula(m: int, n: int, s: int, c: Scalarish) -> GaussianRational:
    """m! n! s! sum_j C(m,j) C(s,n+j-m) C(s+m-j,m) c^(n-2m+j)."""
    c = as_scalar(c)
    total = ZERO
    for j in range(m + 1):
        t = n + j - m
        if 0 <= t <= s:
            total = total + comb(m, j) * comb(s, t) * comb(s + m - j, m) * c ** (n - 2 * m + j)
    return total * (factorial(m) * factorial(n) * factorial(s))


def pos_meix_series_coefficient(m: int, n: int, s: int, c: Scalarish) -> GaussianRational:
    """m! n! s! [x1^m x2^n x0^s] (x2/c + x0/c)^m (x1 + x0/c)^n (x1 + x2 + x0)^s.

    This is the MacMahon coefficient for B^(1)(m, n, s) with the box of
    x0 last in box order, where moves to a later box carry 1/c.
    """
    c = as_scalar(c)
    ic = c.reciprocal()
    total = ZERO
    # (x2/c + x0/c)^m: choose i copies of x2; (x1 + x0/c)^n: choose u copies of x1.
    for i in range(m + 1):
        for u in range(n + 1):
            a1 = m - u  # x1 still needed from the last factor
            a2 = n - i
            a0 = s - a1 - a2
            if a1 < 0 or a2 < 0 or a0 < 0:
                continue
            coef = comb(m, i) * comb(n, u) * factorial(s) // (factorial(a1) * factorial(a2) * factorial(a0))
            total = total + ic ** m * ic ** (n - u) * coef
    return total * (factorial(m) * factorial(n) * factorial(s))
