"""Verification suites shared by the CLI and the acceptance tests.

A suite returns grouped reports; each group is one family at one parameter
point (or one identity), summarized by its first failure.  ``notes`` carry
informational comparisons that do not decide the verdict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable

from . import bijections as bj
from . import combi
from .families import FamilySpec, make_family, norm_zeta, polynomial, recurrence_coeffs
from .linearize import (
    MultiIndex,
    Report,
    birth_death_printed_boundary,
    check_boundary,
    check_difference_system,
    connection_coefficients,
    fundamental_check,
    generalized_moment_product,
    linearization,
    mixed_linearization,
    pos_formula,
    pos_meix_formula,
    pos_meix_series_coefficient,
)
from .moments import apply, moment, moment_combinatorial
from .scalar import ONE, ZERO, G, GaussianRational, Poly, falling_factorial_poly
from .series import det_identities, gf_check, macmahon_check, random_matrix

__all__ = [
    "SUITES",
    "SuiteResult",
    "PARAM_POINTS",
    "BIRTH_DEATH_RATES",
    "LINEARIZATION_FAMILIES",
    "family_points",
    "multi_indices",
    "run_suite",
    "criterion_linearization",
    "criterion_difference",
    "criterion_moments",
    "criterion_closed_forms",
    "criterion_series",
    "criterion_bijections",
    "criterion_symmetry",
    "criterion_positivity",
]

SUITES = ("linearization", "difference-system", "boundary", "moments", "bijections", "series", "positivity")

LINEARIZATION_FAMILIES = (
    "hermite", "charlier", "laguerre", "meixner", "meixner-pollaczek", "q-hermite", "q-charlier", "q-laguerre",
)

# Parameter points; the first three are the default sample set.
PARAM_POINTS: dict[str, list[dict[str, str]]] = {
    "hermite": [{}],
    "charlier": [{"a": "2/3"}, {"a": "3/2"}, {"a": "5"}, {"a": "1"}],
    "laguerre": [{"alpha": "0"}, {"alpha": "1/2"}, {"alpha": "3"}, {"alpha": "-1/3"}],
    "meixner": [{"beta": "1/2", "c": "1/3"}, {"beta": "2", "c": "1/2"}, {"beta": "3/2", "c": "2/5"}, {"beta": "1", "c": "3"}],
    "meixner-pollaczek": [
        {"delta": "1/2", "eta": "1"}, {"delta": "0", "eta": "3/2"}, {"delta": "2", "eta": "1/3"}, {"delta": "-1", "eta": "2"},
    ],
    "q-hermite": [{"q": "1/2"}, {"q": "1/3"}, {"q": "2"}, {"q": "-1/2"}],
    "q-charlier": [
        {"a": "1", "b": "1", "c": "1", "q": "1/2"},
        {"a": "2/3", "b": "1/2", "c": "3", "q": "1/3"},
        {"a": "3/2", "b": "2", "c": "1/2", "q": "2"},
        {"a": "1/2", "b": "1/3", "c": "-1", "q": "3/4"},
    ],
    "q-laguerre": [{"y": "1/2", "q": "1/3"}, {"y": "2", "q": "1/2"}, {"y": "1", "q": "3/2"}, {"y": "1/3", "q": "2"}],
    "al-salam-chihara": [
        {"t1": "1/2", "t2": "1/3", "q": "1/2"}, {"t1": "1/3", "t2": "2", "q": "1/3"}, {"t1": "1/4", "t2": "1/5", "q": "2/3"},
    ],
}

# (b_n, d_n) as coefficient lists in n
BIRTH_DEATH_RATES = [("1,1", "0,1"), ("2", "0,1"), ("3/2,2", "1/2,1")]

SCALINGS = (G("1/2"), G(2), G("-1/3"))


@dataclass
class SuiteResult:
    name: str
    reports: list[Report] = field(default_factory=list)
    notes: list[Report] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failures(self) -> list[Report]:
        return [r for r in self.reports if not r.passed]

    def add(self, name: str, items: Iterable[Report]) -> Report:
        items = list(items)
        bad = next((r for r in items if not r.passed), None)
        rep = Report(
            name,
            bad is None,
            bad.lhs if bad else None,
            bad.rhs if bad else None,
            detail=bad.check if bad else f"{len(items)} checks",
            items=items,
        )
        self.reports.append(rep)
        return rep

    def summary(self) -> str:
        bad = self.failures
        if not bad:
            return f"{len(self.reports)} groups passed"
        return f"{len(bad)}/{len(self.reports)} groups failed; first: {bad[0].check}: {bad[0].detail}"


def family_points(name: str, samples: int = 3) -> list[FamilySpec]:
    return [make_family(name, **p) for p in PARAM_POINTS[name][: max(1, samples)]]


def birth_death_families() -> list[FamilySpec]:
    return [make_family("birth-death", b=b, d=d) for b, d in BIRTH_DEATH_RATES]


def multi_indices(m_max: int, max_total: int, m_min: int = 1) -> list[tuple[int, ...]]:
    out = []
    for m in range(m_min, m_max + 1):
        for e in product(range(max_total + 1), repeat=m):
            if sum(e) <= max_total:
                out.append(e)
    return out


def _scalings(m: int) -> tuple[GaussianRational, ...]:
    return tuple(SCALINGS[i % len(SCALINGS)] for i in range(m - 1)) + (ONE,)


# -- criterion 1: fundamental identities -----------------------------------------------

def criterion_linearization(max_total: int = 8, m_max: int = 4, samples: int = 3, lambda_total: int = 6) -> SuiteResult:
    res = SuiteResult("linearization")
    for name in LINEARIZATION_FAMILIES:
        for f in family_points(name, samples):
            res.add(f"fundamental {f.label()}", (fundamental_check(f, e) for e in multi_indices(m_max, max_total)))
            if name in ("hermite", "laguerre"):
                idxs = [MultiIndex(e, _scalings(len(e))) for e in multi_indices(m_max, min(lambda_total, max_total), 2)]
                res.add(f"fundamental {f.label()} rational scalings", (fundamental_check(f, i) for i in idxs))
    return res


# -- criterion 2: difference systems and boundaries ------------------------------------------

def _difference_items(f: FamilySpec, max_total: int, m_max: int, scaled: bool) -> Iterable[Report]:
    for e in multi_indices(m_max, max_total, 2):
        idx = MultiIndex(e, _scalings(len(e)) if scaled else ())
        for j in range(1, idx.m + 1):
            for k in range(1, idx.m + 1):
                if j != k:
                    yield check_difference_system(f, idx, j, k)


def _all_difference_families(samples: int) -> list[FamilySpec]:
    fams = [f for name in LINEARIZATION_FAMILIES + ("al-salam-chihara",) for f in family_points(name, samples)]
    return fams + birth_death_families()


def criterion_difference(max_total: int = 8, m_max: int = 4, samples: int = 3) -> SuiteResult:
    res = SuiteResult("difference-system")
    for f in _all_difference_families(samples):
        res.add(f"difference system {f.label()}", _difference_items(f, max_total, m_max, False))
        res.add(f"difference system {f.label()} rational scalings", _difference_items(f, min(max_total, 6), m_max, True))
    return res


def criterion_boundary(samples: int = 3, grid: int = 3) -> SuiteResult:
    res = SuiteResult("boundary")
    for f in _all_difference_families(samples):
        for m, lam in ((2, ("1/2",)), (3, ("1/2", "2")), (3, ("1", "1"))):
            rep = check_boundary(f, m, lam, grid=grid)
            res.add(rep.check + f" lambda={','.join(lam)}", rep.items)
    for f, (b, d) in zip(birth_death_families(), BIRTH_DEATH_RATES):
        b0, d0, d1 = _rates(b, 0), _rates(d, 0), _rates(d, 1)
        items, general = [], []
        for lam in (G("1/2"), G(2), ONE):
            for n in (0, 1):
                got = linearization(f, MultiIndex((1, n), (lam, ONE)))
                printed = birth_death_printed_boundary(b0, d0, d1, lam, n)
                items.append(Report(f"printed birth-death boundary lambda={lam} n={n}", got == printed, got, printed))
                a0, b0c, _ = recurrence_coeffs(f, 0)
                a1, _, c1 = recurrence_coeffs(f, 1)
                want = lam * c1 * a0 / a1 if n == 1 else b0c * (1 - lam)
                general.append(Report(f"general boundary lambda={lam} n={n}", got == want, got, want))
        res.add(f"printed birth-death boundary {f.label()}", items)
        res.notes.append(SuiteResult("x").add(f"general boundary (with 1-lambda) {f.label()}", general))
    return res


def _rates(coeffs: str, n: int) -> GaussianRational:
    return Poly(G(c) for c in coeffs.split(","))(n)


# -- criterion 3: moments and orthogonality ------------------------------------------------

MOMENT_FAMILIES = ("charlier", "meixner", "meixner-pollaczek", "q-charlier", "q-laguerre")


def criterion_moments(n_max: int = 8, samples: int = 3) -> SuiteResult:
    res = SuiteResult("moments")
    for name in MOMENT_FAMILIES:
        for f in family_points(name, samples):
            items = []
            for n in range(n_max + 1):
                lhs, rhs = moment(f, n), moment_combinatorial(f, n)
                items.append(Report(f"moment {n}", lhs == rhs, lhs, rhs))
            res.add(f"moments {f.label()}", items)
    for f in _all_difference_families(samples):
        items = []
        for m in range(n_max + 1):
            for n in range(n_max + 1):
                lhs = apply(f, polynomial(f, m) * polynomial(f, n))
                rhs = norm_zeta(f, n) if m == n else ZERO
                items.append(Report(f"L(p_{m} p_{n})", lhs == rhs, lhs, rhs))
        res.add(f"orthogonality {f.label()}", items)
    return res


# -- criterion 4: closed forms ------------------------------------------------------------------

def criterion_closed_forms(pos_max: int = 4, meix_max: int = 3, conn_max: int = 6) -> SuiteResult:
    res = SuiteResult("closed-forms")
    lag0 = make_family("laguerre", alpha=0)
    items = []
    for m, n, s in product(range(pos_max + 1), repeat=3):
        fun = generalized_moment_product(lag0, s, "monomial", (m, n))
        closed = G(pos_formula(m, n, s))
        words = G(combi.starred_word_count((m, n, s), ("deranged", "deranged", "free")))
        items.append(Report(f"A(0)({m},{n},{s}) formula", fun == closed, fun, closed))
        items.append(Report(f"A(0)({m},{n},{s}) enumeration", fun == words, fun, words))
    spot = generalized_moment_product(lag0, 1, "monomial", (1, 1))
    items.append(Report("A(0)(1,1,1) = 3", spot == 3, spot, G(3)))
    res.add("pos closed form", items)

    for c in (G("1/2"), G("1/3")):
        f = make_family("meixner", beta=1, c=c)
        printed, series = [], []
        for m, n, s in product(range(meix_max + 1), repeat=3):
            val = generalized_moment_product(f, s, "falling", (m, n))
            want = pos_meix_formula(m, n, s, c)
            printed.append(Report(f"B(1)({m},{n},{s}) c={c}", val == want, val, want))
            coef = pos_meix_series_coefficient(m, n, s, c)
            series.append(Report(f"B(1)({m},{n},{s}) series c={c}", val == coef, val, coef))
        res.add(f"pos-meix printed formula c={c}", printed)
        res.notes.append(SuiteResult("x").add(f"pos-meix via the generating function c={c}", series))

    for beta, c in ((G("1/2"), G("1/3")), (G(2), G("1/2")), (G("3/2"), G("2/5"))):
        f = make_family("meixner", beta=beta, c=c)
        literal, falling = [], []
        for n in range(conn_max + 1):
            rec = Poly()
            for k, ck in enumerate(connection_coefficients(f, n)):
                rec = rec + polynomial(f, k) * ck
            literal.append(Report(f"x^{n}", rec == Poly.monomial(n), None, None, detail=str(rec)))
            falling.append(Report(f"x(x-1)...(x-{n}+1)", rec == falling_factorial_poly(n)))
        res.add(f"connection-meix reproduces x^n {f.label()}", literal)
        res.notes.append(SuiteResult("x").add(f"connection-meix reproduces the falling factorial {f.label()}", falling))
    return res


# -- criterion 5: generating functions and MacMahon ---------------------------------------------

def criterion_series(cap: int = 5, matrices: int = 20, seed: int = 2024) -> SuiteResult:
    res = SuiteResult("series")
    cap = min(cap, 5)
    half = G("1/2")
    gfs = [
        ("eqgFgLN", {"alpha": "0"}, 2, None),
        ("eqgFgLN", {"alpha": "1/2"}, 3, None),
        ("eqgfMnumbers", {"beta": "1", "c": "1/2"}, 2, None),
        ("eqgfMnumbers", {"beta": "1/2", "c": "1/3"}, 3, None),
        ("hermite-exp", {}, 3, None),
        ("charlier-exp", {"a": "2/3"}, 3, None),
    ]
    for d in range(3):
        gfs.append(("eqGFW", {"alpha": str(half + d), "beta": "1/2"}, 3, 1))
        gfs.append(("eqGFW", {"alpha": str(G(d)), "beta": "0"}, 2, 1))
        gfs.append(("eqgfMnumbers2", {"alpha": str(half + d), "beta": "1/2", "c": "1/3"}, 3, 2))
        gfs.append(("eqgfMnumbers2", {"alpha": str(G(1 + d)), "beta": "1", "c": "1/2"}, 2, 1))
    for gid, params, m, j in gfs:
        for cp in sorted({max(1, cap - 1), cap}):
            rep = gf_check(gid, params, m, cp, j=j)
            res.add(rep.check, rep.items)
    rng = random.Random(seed)
    for i in range(matrices):
        A = random_matrix(rng, 1 + i % 3)
        for beta in ("1", "2", "1/2", "-1/3"):
            rep = macmahon_check(A, G(beta), 4)
            res.add(f"macmahon matrix {i} " + rep.check, rep.items)
    for m in range(1, 6):
        for c in (G("1/3"), ONE, G(-2)):
            rep = det_identities(m, c, samples=4, seed=m)
            res.add(rep.check, rep.items)
    return res


# -- criterion 6: bijections -----------------------------------------------------------------------

FIGURE_PSI = ([[1, 4, 15], [2, 3], [5, 6], [7, 10, 13], [8], [9, 11], [12, 14]], 15)
FIGURE_PSI_IMAGE = {1: 15, 2: 3, 5: 6, 7: 14, 8: 8, 9: 11, 12: 13}
FIGURE_PHI = (
    ((1, 6), (2, 9), (3, 5), (4, 7), (5, 8), (7, 11), (10, 12), (12, 13)),
    ((1, 4), (3, 7), (6, 8), (8, 9), (4, 10), (9, 11), (2, 12), (5, 13)),
)
FIGURE_THETA = (
    ((2, 4), (3, 6), (8, 14), (11, 12), (1, 10), (5, 9), (7, 11), (4, 13)),
    ((2, 5), (4, 6), (8, 14), (11, 12), (1, 10), (5, 9), (7, 11), (3, 13)),
)
FIGURE_PSI_AB = (((1, 8), (2, 6), (4, 9)), {3, 5, 6, 7, 8, 10}, ((2, 9), (3, 7), (5, 10)), {1, 4, 6, 7, 8, 9})


def _diagram(n, arcs):
    return combi.DiagramObject("partition", n, tuple(sorted(arcs)))


def _phi_items(n_max: int) -> Iterable[Report]:
    for n in range(2, n_max + 1):
        for k in range(1, n):
            dom = list(bj.partitions_in("G", n, k))
            cod = {p.arcs for p in bj.partitions_in("F", n, k)}
            image, bad = set(), None
            for p in dom:
                q = bj.phi(n, k, p)
                image.add(q.arcs)
                shifted = {(a - k, b - k) for a, b in p.arcs if a > k}
                low = {(a, b) for a, b in q.arcs if b <= n - k}
                if (bj.crossings(q.arcs) != bj.crossings(p.arcs) or len(q.arcs) != len(p.arcs)
                        or shifted != low or q.arcs not in cod):
                    bad = p
                    break
                if bj.recompose(bj.decompose(p, "G", n, k)).arcs != p.arcs:
                    bad = p
                    break
            ok = bad is None and image == cod and len(dom) == len(cod)
            yield Report(f"phi n={n} k={k} ({len(dom)} partitions)", ok, detail="" if bad is None else str(bad))


def _theta_items(n_max: int, box_max: int) -> Iterable[Report]:
    for n1 in range(1, box_max):
        for n2 in range(1, box_max - n1 + 1):
            for n in range(n1 + n2, n_max + 1):
                dom = list(bj.partitions_in("H", n, (n1, n2)))
                cod = {p.arcs for p in bj.partitions_in("H", n, (n2, n1))}
                image, bad = set(), None
                N2 = n1 + n2
                for p in dom:
                    q = bj.theta(n1, n2, p, n)
                    image.add(q.arcs)
                    high = lambda arcs: {a for a in arcs if a[0] > N2}  # noqa: E731
                    if (bj.crossings(q.arcs) != bj.crossings(p.arcs) or len(q.arcs) != len(p.arcs)
                            or high(p.arcs) != high(q.arcs) or bj.theta(n2, n1, q, n).arcs != p.arcs
                            or bj.recompose(bj.decompose(p, "H", n, (n1, n2))).arcs != p.arcs):
                        bad = p
                        break
                ok = bad is None and image == cod
                yield Report(f"theta n={n} ({n1},{n2}) ({len(dom)} partitions)", ok, detail="" if bad is None else str(bad))


def _psi_items(n_max: int) -> Iterable[Report]:
    for n in range(1, n_max + 1):
        g = combi.BoxedGroundSet((1,) * n)
        bad, count = None, 0
        for p in combi.enumerate(g, "partition", "all", cap=max(n, 12)):
            count += 1
            pairing = bj.psi_pairing(p)
            mins = {b[0] for b in p.blocks()}
            maxs = {b[-1] for b in p.blocks()}
            if set(pairing) != mins or set(pairing.values()) != maxs:
                bad = p
                break
            if any(bj.depth(a, p.arcs) != bj.depth(b, p.arcs) for a, b in pairing.items()):
                bad = p
                break
        yield Report(f"psi depth n={n} ({count} partitions)", bad is None, detail="" if bad is None else str(bad))


def _figure_items() -> Iterable[Report]:
    blocks, n = FIGURE_PSI
    got = bj.psi_pairing(combi.DiagramObject.from_blocks(blocks, n, "partition"))
    yield Report("psi figure pairing", got == FIGURE_PSI_IMAGE, detail=str(got))
    src, dst = FIGURE_PHI
    g = bj.decompose(_diagram(13, src), "G", 13, 4)
    yield Report("phi figure O and sigma", sorted(g.marked) == [1, 2, 3, 5] and g.sigma == (3, 1, 4, 2))
    f = bj.decompose(_diagram(13, dst), "F", 13, 4)
    yield Report("phi figure C and sigma", sorted(f.marked) == [2, 4, 5, 9] and f.sigma == (3, 1, 4, 2))
    yield Report("phi figure image", bj.phi(13, 4, _diagram(13, src)).arcs == tuple(sorted(dst)))
    src, dst = FIGURE_THETA
    yield Report("theta figure image", bj.theta(3, 4, _diagram(14, src)).arcs == tuple(sorted(dst)))
    arcs, A, arcs2, A2 = FIGURE_PSI_AB
    got_arcs, got_A = bj.psi_ab(4, 6, arcs, A)
    yield Report("psi_(4,6) figure", got_arcs == tuple(sorted(arcs2)) and got_A == frozenset(A2))


def _symmetry_by_bijection(max_total: int) -> Iterable[Report]:
    """Phi and Theta carry P(n) onto the rotated and swapped classes."""
    for e in multi_indices(4, max_total, 2):
        if 0 in e:
            continue
        n = sum(e)
        g = combi.BoxedGroundSet(e)
        dom = list(combi.enumerate(g, "partition", "inhomogeneous"))
        rot = {p.arcs for p in combi.enumerate(combi.BoxedGroundSet(e[1:] + e[:1]), "partition", "inhomogeneous")}
        swp = {p.arcs for p in combi.enumerate(combi.BoxedGroundSet((e[1], e[0]) + e[2:]), "partition", "inhomogeneous")}
        img_phi = {bj.phi(n, e[0], p).arcs for p in dom}
        img_theta = {bj.theta(e[0], e[1], p, n).arcs for p in dom}
        yield Report(f"phi maps P{e} onto P{e[1:] + e[:1]}", img_phi == rot)
        yield Report(f"theta maps P{e} onto P{(e[1], e[0]) + e[2:]}", img_theta == swp)


def criterion_bijections(n_max: int = 9, theta_boxes: int = 6, psi_max: int = 10, sym_total: int = 7) -> SuiteResult:
    res = SuiteResult("bijections")
    res.add("figures", _figure_items())
    res.add("phi exhaustive", _phi_items(n_max))
    res.add("theta exhaustive", _theta_items(n_max, theta_boxes))
    res.add("psi depth", _psi_items(psi_max))
    res.add("symmetry through phi and theta", _symmetry_by_bijection(min(sym_total, n_max)))
    return res


# -- criterion 7: symmetry and special values --------------------------------------------------------

def criterion_symmetry(max_total: int = 8, samples: int = 3, special_max: int = 8) -> SuiteResult:
    res = SuiteResult("symmetry")
    for f in family_points("q-charlier", samples):
        items = []
        for e in multi_indices(4, max_total):
            if list(e) != sorted(e) or 0 in e:
                continue
            base = combi.weighted_sum(combi.BoxedGroundSet(e), combi.family_weight(f.name, f.params, len(e)))
            for p in sorted(set(permutations(e))):
                if p == e:
                    continue
                v = combi.weighted_sum(combi.BoxedGroundSet(p), combi.family_weight(f.name, f.params, len(p)))
                items.append(Report(f"F{p} = F{e}", v == base, v, base))
        res.add(f"q-charlier symmetry {f.label()}", items)
        items = []
        c = f.params["c"]
        for m in range(1, special_max + 1):
            lhs = combi.weighted_sum(combi.BoxedGroundSet((1,) * m), combi.family_weight(f.name, f.params, m))
            rhs = apply(f, _power(Poly((-c, ONE)), m))
            items.append(Report(f"F(1^{m}) = L((x-c)^{m})", lhs == rhs, lhs, rhs))
        res.add(f"q-charlier special values {f.label()}", items)
    res.add("q = 0 degenerations", _q_zero_items(max_total))
    return res


def _power(p: Poly, m: int) -> Poly:
    out = Poly((1,))
    for _ in range(m):
        out = out * p
    return out


def _q_zero_items(max_total: int) -> Iterable[Report]:
    qh = make_family("q-hermite", q=0)
    qc = make_family("q-charlier", a=1, b=1, c=1, q=0)
    ql = make_family("q-laguerre", y=1, q=0)
    for e in multi_indices(4, max_total):
        if 0 in e:
            continue
        mh = combi.matching_histogram(e)
        ph = combi.partition_histogram(e)
        dh = combi.permutation_histogram(e)
        for f, h, what in ((qh, mh, "matchings"), (qc, ph, "partitions"), (ql, dh, "derangements")):
            free = G(sum(cnt for key, cnt in h.counts.items() if key[h.names.index("cr")] == 0))
            got = linearization(f, e)
            yield Report(f"{f.name} q=0 {e} counts crossing-free {what}", got == free, got, free)


# -- criterion 8: positivity ---------------------------------------------------------------------------

def criterion_positivity(max_total: int = 5) -> SuiteResult:
    """Values must be positive wherever the object class is nonempty, and 0 where it is empty."""
    res = SuiteResult("positivity")
    for alpha in ("0", "1/2", "1"):
        f = make_family("laguerre", alpha=alpha)
        items = []
        for e in multi_indices(3, max_total):
            n0, ns = e[0], e[1:] or (0,)
            val = generalized_moment_product(f, n0, "monomial", ns)
            nonempty = combi.starred_word_count(tuple(ns) + (n0,), ("deranged",) * len(ns) + ("free",)) > 0
            items.append(_sign_report(f"A({alpha})({n0},{ns})", val, nonempty))
        res.add(f"A positivity alpha={alpha}", items)
    for alpha, beta in ((G(0), G(0)), (G("1/2"), G("-1/2")), (G(1), G(-1)), (G("-1/2"), G("-1/2")), (G(2), G(0))):
        gap = alpha - beta
        if gap.re > 2:
            continue
        fA, fB = make_family("laguerre", alpha=alpha), make_family("laguerre", alpha=beta)
        items = []
        for e in multi_indices(4, max_total, 3):
            m0, ms, ns = e[0], e[1:2], e[2:]
            val = mixed_linearization(fA, fB, m0, ms, ns)
            count = combi.starred_injection_sum(m0, ms, ns, int(gap.re), {"cyc": 1})
            items.append(_sign_report(f"W({m0};{ms};{ns})", val, bool(count)))
        res.add(f"W positivity alpha={alpha} beta={beta}", items)
    for alpha, beta, c in ((G(1), G(1), G("1/2")), (G("3/2"), G("1/2"), G("1/3")), (G(3), G(1), G("2/3"))):
        fA, fB = make_family("meixner", beta=alpha, c=c), make_family("meixner", beta=beta, c=c)
        items = []
        for e in multi_indices(4, max_total, 3):
            m0, ms, ns = e[0], e[1:2], e[2:]
            val = mixed_linearization(fA, fB, m0, ms, ns)
            count = combi.starred_injection_sum(m0, ms, ns, int((alpha - beta).re), {"cyc": 1})
            items.append(_sign_report(f"Y({m0};{ms};{ns})", val, bool(count)))
        res.add(f"Y positivity alpha={alpha} beta={beta} c={c}", items)
    return res


def _sign_report(name: str, val: GaussianRational, nonempty: bool) -> Report:
    if nonempty:
        ok = val.is_real and val.re > 0
        return Report(f"{name} > 0", ok, val, None)
    return Report(f"{name} = 0 (empty class)", val == 0, val, ZERO)


# -- dispatch ------------------------------------------------------------------------------------------

def run_suite(name: str, *, max_total: int | None = None, samples: int | None = None) -> list[SuiteResult]:
    """Run one CLI suite (or ``all``); ``max_total`` and ``samples`` shrink or grow the defaults."""
    s = 3 if samples is None else samples
    if name == "all":
        out = []
        for sub in SUITES:
            out.extend(run_suite(sub, max_total=max_total, samples=samples))
        return out
    t = max_total
    if name == "linearization":
        return [
            criterion_linearization(8 if t is None else t, samples=s),
            criterion_symmetry(8 if t is None else t, samples=s),
        ]
    if name == "difference-system":
        return [criterion_difference(8 if t is None else t, samples=s)]
    if name == "boundary":
        return [criterion_boundary(samples=s)]
    if name == "moments":
        return [criterion_moments(8 if t is None else t, samples=s)]
    if name == "bijections":
        n = 9 if t is None else t
        return [criterion_bijections(n, min(6, n), n + 1)]
    if name == "series":
        return [criterion_series(5 if t is None else t), criterion_closed_forms()]
    if name == "positivity":
        return [criterion_positivity(5 if t is None else t)]
    raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
