"""The normalized moment functional and the combinatorial moment formulas."""

from __future__ import annotations

import weakref

from . import combi
from .combi import NotAvailable
from .families import FamilySpec, polynomial, recurrence_coeffs
from .scalar import ONE, ZERO, GaussianRational, I, Poly

__all__ = [
    "MomentFunctional",
    "NotAvailable",
    "functional",
    "moment",
    "apply",
    "moment_combinatorial",
    "stirling2",
    "hankel_determinant",
    "orthogonality_defect",
]


class MomentFunctional:
    """L with L(x^n) = mu_n and mu_0 = 1.

    Moments come from weighted Motzkin paths: a level step at height h has
    weight b_h, a down step leaving height h has weight lambda_h, where
    b_n = -B_n/A_n and lambda_n = C_n/(A_{n-1} A_n) are the monic
    recurrence coefficients.  The memo only ever grows.
    """

    def __init__(self, family: FamilySpec):
        self.family = family
        self._b: list[GaussianRational] = []
        self._lam: list[GaussianRational] = [ZERO]
        self._mu: list[GaussianRational] = [ONE]
        self._row: list[GaussianRational] = [ONE]  # weighted paths ending at each height

    def monic_b(self, n: int) -> GaussianRational:
        while len(self._b) <= n:
            k = len(self._b)
            a, b, _ = recurrence_coeffs(self.family, k)
            self._b.append(-b / a)
        return self._b[n]

    def monic_lambda(self, n: int) -> GaussianRational:
        if n == 0:
            return ZERO
        while len(self._lam) <= n:
            k = len(self._lam)
            a_prev = recurrence_coeffs(self.family, k - 1)[0]
            a, _, c = recurrence_coeffs(self.family, k)
            self._lam.append(c / (a_prev * a))
        return self._lam[n]

    def moment(self, n: int) -> GaussianRational:
        while len(self._mu) <= n:
            row = self._row
            new = [ZERO] * (len(row) + 1)
            for h, w in enumerate(row):
                if not w:
                    continue
                new[h + 1] = new[h + 1] + w
                new[h] = new[h] + w * self.monic_b(h)
                if h:
                    new[h - 1] = new[h - 1] + w * self.monic_lambda(h)
            self._row = new
            self._mu.append(new[0])
        return self._mu[n]

    def apply(self, p: Poly) -> GaussianRational:
        total = ZERO
        for k, c in enumerate(p.coeffs):
            if c:
                total = total + c * self.moment(k)
        return total

    __call__ = apply


_CACHE: "weakref.WeakKeyDictionary[FamilySpec, MomentFunctional]" = weakref.WeakKeyDictionary()


def functional(f: FamilySpec) -> MomentFunctional:
    """The shared functional of a family instance."""
    L = _CACHE.get(f)
    if L is None:
        L = _CACHE[f] = MomentFunctional(f)
    return L


def moment(L: MomentFunctional | FamilySpec, n: int) -> GaussianRational:
    if isinstance(L, FamilySpec):
        L = functional(L)
    return L.moment(n)


def apply(L: MomentFunctional | FamilySpec, p: Poly) -> GaussianRational:
    if isinstance(L, FamilySpec):
        L = functional(L)
    return L.apply(p)


def stirling2(n: int, k: int) -> int:
    row = [1]  # S(0, .)
    for m in range(1, n + 1):
        nxt = [0] * (m + 1)
        for j in range(1, m + 1):
            nxt[j] = (row[j] if j < len(row) else 0) * j + row[j - 1]
        row = nxt
    return row[k] if 0 <= k < len(row) else 0


def moment_combinatorial(f: FamilySpec, n: int, *, variant: str | None = None) -> GaussianRational:
    """The family's moment as an exhaustive weighted enumeration.

    ``variant`` selects the statistic where two readings exist:
    q-Laguerre accepts ``"wex"`` (default) or ``"exc"`` for the power of y;
    Meixner-Pollaczek accepts ``"fix"`` (default, fixed points weighted by
    delta) or ``"plain"`` (no fixed point weight).
    """
    if n > 10:
        raise ValueError("combinatorial moments are limited to n <= 10")
    p = f.params
    name = f.name
    if name == "charlier":
        a = p["a"]
        return sum((a**k * stirling2(n, k) for k in range(n + 1)), ZERO)
    if n == 0:
        return ONE
    if name == "meixner":
        beta, c = p["beta"], p["c"]
        hist = combi.permutation_histogram((n,), ("free",), "all")
        total = combi.evaluate(hist, {"wex": c, "cyc": beta})
        return total / (1 - c) ** n
    if name == "meixner-pollaczek":
        delta, eta = p["delta"], p["eta"]
        bases = {"drop": delta + I, "exc": delta - I, "cyc": eta}
        if (variant or "fix") == "fix":
            bases["fix"] = delta
        elif variant != "plain":
            raise ValueError(f"unknown variant {variant!r}")
        hist = combi.permutation_histogram((n,), ("free",), "all")
        return combi.evaluate(hist, bases)
    if name == "q-charlier":
        a, b, c, q = p["a"], p["b"], p["c"], p["q"]
        g = (1,) * n
        hist = combi.partition_histogram(g, ("free",) * n, "all")
        # singletons carry c alone; a counts the blocks with two or more elements
        return combi.evaluate(hist, {"nbl": a, "tr": b, "sg": c, "cr": q})
    if name == "q-laguerre":
        y, q = p["y"], p["q"]
        stat = variant or "wex"
        if stat not in ("wex", "exc"):
            raise ValueError(f"unknown variant {variant!r}")
        hist = combi.permutation_histogram((n,), ("free",), "all")
        return combi.evaluate(hist, {stat: y, "cr": q})
    raise NotAvailable(f"no combinatorial moment formula for {name}")


def hankel_determinant(L: MomentFunctional | FamilySpec, order: int) -> GaussianRational:
    """det(mu_{i+j}) for 0 <= i, j < order, by exact elimination."""
    if isinstance(L, FamilySpec):
        L = functional(L)
    m = [[L.moment(i + j) for j in range(order)] for i in range(order)]
    return _det(m)


def _det(m: list[list[GaussianRational]]) -> GaussianRational:
    m = [row[:] for row in m]
    n = len(m)
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].reciprocal()
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for cc in range(col, n):
                    m[r][cc] = m[r][cc] - factor * m[col][cc]
    return det


def orthogonality_defect(f: FamilySpec, m: int, n: int) -> tuple[GaussianRational, GaussianRational]:
    """(L(p_m p_n), expected) where expected is zeta_n when m == n, else 0."""
    from .families import norm_zeta

    lhs = apply(f, polynomial(f, m) * polynomial(f, n))
    rhs = norm_zeta(f, n) if m == n else ZERO
    return lhs, rhs

