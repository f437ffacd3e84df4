"""Orthogonal polynomial families given by three-term recurrences.

A family is stored as a coefficient generator ``n -> (A_n, B_n, C_n)`` for

    p_{n+1}(x) = (A_n x + B_n) p_n(x) - C_n p_{n-1}(x),   p_0 = 1, p_{-1} = 0.

Everything downstream (moments, linearization values) is derived from these
coefficients, so no square roots or measure densities ever appear.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from types import MappingProxyType
from typing import Callable, Mapping

from .scalar import G, ONE, ZERO, GaussianRational, Poly, as_scalar, pochhammer, poly_scale_arg, qint

__all__ = [
    "FamilyInvalid",
    "FamilySpec",
    "BirthDeathSpec",
    "FAMILY_PARAMS",
    "PREFACTOR_RULES",
    "make_family",
    "recurrence_coeffs",
    "norm_zeta",
    "polynomial",
    "from_birth_death",
    "polynomial_rate",
    "multiplication_expand",
    "classical_laguerre",
    "physicist_hermite",
]

Coeffs = tuple[GaussianRational, GaussianRational, GaussianRational]


class FamilyInvalid(ValueError):
    """Raised when parameters make a recurrence coefficient unusable."""


@dataclass(frozen=True, eq=False)
class FamilySpec:
    name: str
    params: Mapping[str, GaussianRational]
    coeff_fn: Callable[[int], Coeffs] = field(repr=False)
    prefactor_rule: str = "identity"
    max_degree_validated: int = 40
    # append-only memo of p_0, p_1, ...
    _polys: list = field(default_factory=list, repr=False, compare=False)
    _coeffs: dict = field(default_factory=dict, repr=False, compare=False)

    def __getitem__(self, key: str) -> GaussianRational:
        return self.params[key]

    def label(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}({inner})"


def recurrence_coeffs(f: FamilySpec, n: int) -> Coeffs:
    """(A_n, B_n, C_n) for the family; checks A_n != 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > f.max_degree_validated:
        raise FamilyInvalid(f"{f.name}: degree {n} beyond validated range {f.max_degree_validated}")
    hit = f._coeffs.get(n)
    if hit is not None:
        return hit
    try:
        a, b, c = (as_scalar(v) for v in f.coeff_fn(n))
    except ZeroDivisionError:
        raise FamilyInvalid(f"{f.label()}: zero denominator in recurrence coefficients at n={n}") from None
    if not a:
        raise FamilyInvalid(f"{f.label()}: A_{n} vanishes")
    f._coeffs[n] = (a, b, c)
    return a, b, c


def norm_zeta(f: FamilySpec, n: int) -> GaussianRational:
    """zeta_n = (A_0/A_n) C_1 ... C_n, the squared norm of p_n."""
    a0 = recurrence_coeffs(f, 0)[0]
    an = recurrence_coeffs(f, n)[0]
    out = a0 / an
    for k in range(1, n + 1):
        out = out * recurrence_coeffs(f, k)[2]
    return out


def polynomial(f: FamilySpec, n: int) -> Poly:
    memo = f._polys
    if not memo:
        memo.append(Poly((1,)))
    while len(memo) <= n:
        k = len(memo) - 1
        a, b, c = recurrence_coeffs(f, k)
        nxt = Poly((b, a)) * memo[k]
        if k > 0:
            nxt = nxt - memo[k - 1] * c
        memo.append(nxt)
    return memo[n]


# -- registry ---------------------------------------------------------------

def _hermite(p):
    return lambda n: (ONE, ZERO, G(n))


def _charlier(p):
    a = p["a"]
    return lambda n: (ONE, -(a + n), a * n)


def _laguerre(p):
    al = p["alpha"]
    return lambda n: (ONE, -(al + 2 * n + 1), (al + n) * n)


def _meixner(p):
    beta, c = p["beta"], p["c"]
    if not c:
        raise FamilyInvalid("meixner: c must be nonzero")
    ic = c.reciprocal()
    return lambda n: (1 - ic, beta + n + ic * n, (beta + n - 1) * n * ic)


def _meixner_pollaczek(p):
    # The diagonal coefficient is (2n + eta) delta; see the decisions ledger.
    delta, eta = p["delta"], p["eta"]
    return lambda n: (ONE, -(eta + 2 * n) * delta, (eta + n - 1) * (1 + delta * delta) * n)


def _q_hermite(p):
    q = p["q"]
    return lambda n: (ONE, ZERO, qint(n, q))


def _q_charlier(p):
    a, b, c, q = p["a"], p["b"], p["c"], p["q"]
    return lambda n: (ONE, -(c + b * qint(n, q)), a * qint(n, q))


def _q_laguerre(p):
    y, q = p["y"], p["q"]
    return lambda n: (ONE, -(y * qint(n + 1, q) + qint(n, q)), y * qint(n, q) ** 2)


def _al_salam_chihara(p):
    t1, t2, q = p["t1"], p["t2"], p["q"]

    def coeffs(n):
        c = ZERO if n == 0 else (1 - q**n) * (1 - t1 * t2 * q ** (n - 1))
        return G(2), -(t1 + t2) * q**n, c

    return coeffs


_BUILDERS = {
    "hermite": _hermite,
    "charlier": _charlier,
    "laguerre": _laguerre,
    "meixner": _meixner,
    "meixner-pollaczek": _meixner_pollaczek,
    "q-hermite": _q_hermite,
    "q-charlier": _q_charlier,
    "q-laguerre": _q_laguerre,
    "al-salam-chihara": _al_salam_chihara,
}

FAMILY_PARAMS: Mapping[str, tuple[str, ...]] = MappingProxyType(
    {
        "hermite": (),
        "charlier": ("a",),
        "laguerre": ("alpha",),
        "meixner": ("beta", "c"),
        "meixner-pollaczek": ("delta", "eta"),
        "q-hermite": ("q",),
        "q-charlier": ("a", "b", "c", "q"),
        "q-laguerre": ("y", "q"),
        "al-salam-chihara": ("t1", "t2", "q"),
        "birth-death": ("b", "d"),
    }
)

# How a functional value maps onto the matching combinatorial sum.
#   identity        : equal as is
#   sign-inverse-c  : multiply by (-1)^(sum n_j); the sum is taken with c -> 1/c
PREFACTOR_RULES: Mapping[str, str] = MappingProxyType(
    {
        "hermite": "identity",
        "charlier": "identity",
        "laguerre": "identity",
        "meixner": "sign-inverse-c",
        "meixner-pollaczek": "identity",
        "q-hermite": "identity",
        "q-charlier": "identity",
        "q-laguerre": "identity",
        "al-salam-chihara": "identity",
        "birth-death": "identity",
    }
)


def make_family(name: str, **params) -> FamilySpec:
    """Build a registered family from keyword parameters.

    Birth-death rates are given as coefficient lists in ``n`` (lowest
    degree first), e.g. ``b=[1, 1]`` for b_n = 1 + n.
    """
    if name not in FAMILY_PARAMS:
        raise KeyError(f"unknown family {name!r}; known: {', '.join(FAMILY_PARAMS)}")
    expected = set(FAMILY_PARAMS[name])
    missing = expected - set(params)
    extra = set(params) - expected
    if missing or extra:
        raise TypeError(
            f"{name} takes parameters {sorted(expected)}"
            + (f"; missing {sorted(missing)}" if missing else "")
            + (f"; unexpected {sorted(extra)}" if extra else "")
        )
    if name == "birth-death":
        return from_birth_death(
            BirthDeathSpec(polynomial_rate(params["b"]), polynomial_rate(params["d"])),
            b_coeffs=params["b"],
            d_coeffs=params["d"],
        )
    ps = {k: as_scalar(params[k]) for k in FAMILY_PARAMS[name]}
    return FamilySpec(name, MappingProxyType(ps), _BUILDERS[name](ps), PREFACTOR_RULES[name])


# -- birth and death processes ---------------------------------------------

@dataclass(frozen=True)
class BirthDeathSpec:
    b_fn: Callable[[int], GaussianRational]
    d_fn: Callable[[int], GaussianRational]


def polynomial_rate(coeffs) -> Callable[[int], GaussianRational]:
    """Rate rule n -> c0 + c1 n + c2 n^2 + ..."""
    if isinstance(coeffs, str):
        coeffs = coeffs.split(",")
    if not isinstance(coeffs, (list, tuple)):
        coeffs = [coeffs]
    p = Poly(as_scalar(c) for c in coeffs)
    return lambda n: p(n)


def from_birth_death(bd: BirthDeathSpec, *, b_coeffs=None, d_coeffs=None) -> FamilySpec:
    """Rewrite -x Q_n = b_n Q_{n+1} + d_n Q_{n-1} - (b_n + d_n) Q_n.

    C_0 is reported as d_0/b_0.  It multiplies Q_{-1} = 0, so it never
    affects the polynomials.
    """

    def coeffs(n):
        b, d = as_scalar(bd.b_fn(n)), as_scalar(bd.d_fn(n))
        if not b:
            raise FamilyInvalid(f"birth-death: birth rate b_{n} vanishes")
        return -b.reciprocal(), (b + d) / b, d / b

    params = {}
    if b_coeffs is not None:
        params["b"] = _rate_label(b_coeffs)
        params["d"] = _rate_label(d_coeffs)
    return FamilySpec("birth-death", MappingProxyType(params), coeffs, PREFACTOR_RULES["birth-death"])


def _rate_label(coeffs) -> str:
    if isinstance(coeffs, str):
        return coeffs
    if not isinstance(coeffs, (list, tuple)):
        coeffs = [coeffs]
    return ",".join(str(as_scalar(c)) for c in coeffs)


# -- classical normalizations used by the multiplication formulas ----------

def classical_laguerre(alpha) -> FamilySpec:
    """L_n^(alpha) with (n+1) L_{n+1} = (2n+alpha+1-x) L_n - (n+alpha) L_{n-1}."""
    al = as_scalar(alpha)

    def coeffs(n):
        return -ONE / (n + 1), (al + 2 * n + 1) / (n + 1), (al + n) / (n + 1)

    return FamilySpec("laguerre-classical", MappingProxyType({"alpha": al}), coeffs)


def physicist_hermite() -> FamilySpec:
    """H_n with H_{n+1} = 2x H_n - 2n H_{n-1}."""
    return FamilySpec("hermite-physicist", MappingProxyType({}), lambda n: (G(2), ZERO, G(2 * n)))


def multiplication_expand(family: str, params: Mapping, c, n: int) -> list[GaussianRational]:
    """Coefficients of P_n(c x) in the basis P_0(x), ..., P_n(x).

    ``laguerre`` uses the classical L_n^(alpha); ``hermite`` uses the
    physicists' H_n.  The result is checked against direct substitution.
    """
    c = as_scalar(c)
    out = [ZERO] * (n + 1)
    if family == "laguerre":
        al = as_scalar(params["alpha"])
        fam = classical_laguerre(al)
        lead = pochhammer(al + 1, n)
        for k in range(n + 1):
            out[k] = lead * c**k * (1 - c) ** (n - k) / (factorial(n - k) * pochhammer(al + 1, k))
    elif family == "hermite":
        fam = physicist_hermite()
        for k in range(n // 2 + 1):
            coef = G(factorial(n) * (-1) ** k) / (factorial(k) * factorial(n - 2 * k))
            out[n - 2 * k] = coef * (1 - c * c) ** k * c ** (n - 2 * k)
    else:
        raise KeyError(f"no multiplication formula for {family!r}")
    recombined = Poly()
    for k, coef in enumerate(out):
        recombined = recombined + polynomial(fam, k) * coef
    if recombined != poly_scale_arg(polynomial(fam, n), c):
        raise AssertionError(f"multiplication formula mismatch for {family} n={n}")
    return out
