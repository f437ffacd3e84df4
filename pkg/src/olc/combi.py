"""Matchings, set partitions and permutations on boxed ground sets.

The ground set ``[n]`` is cut into consecutive boxes ``S_1, ..., S_m`` of
sizes ``n_1, ..., n_m``.  Each box has a role: ``"deranged"`` boxes obey the
inhomogeneity rule, ``"free"`` boxes do not.

Two layers are provided.  :func:`enumerate` streams every object with its
:class:`StatRecord`, in plain Python; it is the reference.  The histogram
functions run a fast kernel (compiled when available) that only returns
``{statistics: count}``; weighted sums are evaluated on those histograms.
"""

from __future__ import annotations

import builtins
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial, perm
from typing import Iterator, Mapping, Sequence

from .scalar import ONE, ZERO, GaussianRational, I, Scalarish, as_scalar

if os.environ.get("OLC_PURE_PYTHON") == "1":
    from . import _fallback as _k

    BACKEND = "python"
else:
    try:
        from . import _kernels as _k

        BACKEND = "compiled"
    except ImportError:  # extension not built
        from . import _fallback as _k

        BACKEND = "python"

__all__ = [
    "BACKEND",
    "CapExceeded",
    "NotAvailable",
    "BoxedGroundSet",
    "DiagramObject",
    "StatRecord",
    "Histogram",
    "WeightRule",
    "enumerate",
    "statistics",
    "enumeration_cap",
    "permutation_histogram",
    "partition_histogram",
    "matching_histogram",
    "histogram",
    "evaluate",
    "weighted_sum",
    "family_weight",
    "starred_weighted_sum",
    "starred_word_count",
    "charlier_starred_sum",
    "injection_cycle_sum",
    "starred_injection_sum",
]

KINDS = ("matching", "partition", "permutation")
FILTERS = ("inhomogeneous", "all")
ROLES = ("deranged", "free")
DEFAULT_CAPS = {"matching": 12, "partition": 12, "permutation": 9}


class CapExceeded(ValueError):
    """The requested enumeration is larger than the configured cap."""


class NotAvailable(LookupError):
    """No combinatorial formula is implemented for this request."""


def enumeration_cap(kind: str) -> int:
    """Ground-set size limit; ``OLC_MAX_TOTAL`` overrides the defaults."""
    env = os.environ.get("OLC_MAX_TOTAL")
    if env:
        return int(env)
    return DEFAULT_CAPS[kind]


def _check_cap(kind: str, n: int, cap: int | None) -> None:
    limit = enumeration_cap(kind) if cap is None else cap
    if n > limit:
        raise CapExceeded(f"{kind} enumeration on {n} elements exceeds the cap {limit}")


# -- ground sets and objects ------------------------------------------------

@dataclass(frozen=True)
class BoxedGroundSet:
    sizes: tuple[int, ...]
    roles: tuple[str, ...] = ()

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if any(s < 0 for s in sizes):
            raise ValueError("box sizes must be nonnegative")
        roles = tuple(self.roles) or ("deranged",) * len(sizes)
        if len(roles) != len(sizes):
            raise ValueError("one role per box is required")
        bad = set(roles) - set(ROLES)
        if bad:
            raise ValueError(f"unknown box roles {sorted(bad)}")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "roles", roles)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def box_of(self) -> tuple[int, ...]:
        """0-based box index of each 0-based element."""
        return tuple(j for j, s in builtins.enumerate(self.sizes) for _ in range(s))

    def boxes(self) -> list[tuple[int, ...]]:
        """The boxes as tuples of 1-based elements."""
        out, start = [], 1
        for s in self.sizes:
            out.append(tuple(range(start, start + s)))
            start += s
        return out

    def chi(self, e: int) -> int:
        """1-based box number of the 1-based element e."""
        return self.box_of[e - 1] + 1


@dataclass(frozen=True)
class DiagramObject:
    """A matching or partition (as arcs) or a permutation (as a value table).

    Partition arcs join successive elements of each block, so blocks and
    arcs determine each other once ``n`` is known.
    """

    kind: str
    n: int
    data: tuple

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]], n: int | None = None, kind: str = "partition"):
        blocks = [sorted(b) for b in blocks if b]
        if n is None:
            n = sum(len(b) for b in blocks)
        arcs = sorted(a for b in blocks for a in zip(b, b[1:]))
        return cls(kind, n, tuple(arcs))

    @classmethod
    def permutation(cls, sigma: Sequence[int]):
        return cls("permutation", len(sigma), tuple(sigma))

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        if self.kind == "permutation":
            raise TypeError("permutations are stored as value tables")
        return self.data

    def blocks(self) -> list[tuple[int, ...]]:
        """Blocks sorted by their minima."""
        nxt = dict(self.arcs)
        has_prev = {b for _, b in self.arcs}
        out = []
        for i in range(1, self.n + 1):
            if i in has_prev:
                continue
            blk = [i]
            while blk[-1] in nxt:
                blk.append(nxt[blk[-1]])
            out.append(tuple(blk))
        return out

    def __str__(self):
        if self.kind == "permutation":
            return " ".join(map(str, self.data))
        return "/".join("".join(map(str, b)) if self.n < 10 else ",".join(map(str, b)) for b in self.blocks())


@dataclass(frozen=True)
class StatRecord:
    cr: int = 0
    bl: int = 0
    sg: int = 0
    tr: int = 0
    cyc: int = 0
    exc: int = 0
    wex: int = 0
    drop: int = 0
    ninv: int = 0
    exc_b: int = 0
    drop_b: int = 0
    fix_per_box: tuple[int, ...] = ()
    hom_per_box: tuple[int, ...] = ()
    depth: Mapping[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in ("cr", "bl", "sg", "tr", "cyc", "exc", "wex", "drop", "ninv", "exc_b", "drop_b")}
        d["fix_per_box"] = list(self.fix_per_box)
        d["hom_per_box"] = list(self.hom_per_box)
        d["depth"] = {str(k): v for k, v in sorted(self.depth.items())}
        return d


# -- reference enumeration ----------------------------------------------------

def enumerate(
    g: BoxedGroundSet, kind: str, filter: str = "inhomogeneous", *, cap: int | None = None
) -> Iterator[DiagramObject]:
    """Every object of ``kind`` on ``g``, depth first, smallest element decides first.

    The inhomogeneous filter is applied while choosing, not afterwards.
    """
    kind = {"derangement": "permutation", "derangements": "permutation"}.get(kind, kind)
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}")
    _check_cap(kind, g.n, cap)
    inhom = filter == "inhomogeneous"
    if kind == "matching":
        return _matchings(g, inhom)
    if kind == "partition":
        return _partitions(g, inhom)
    return _permutations(g, inhom)


def _matchings(g, inhom):
    n, box = g.n, g.box_of
    if n % 2:
        return
    mate = [0] * (n + 1)

    def rec():
        i = next((k for k in range(1, n + 1) if not mate[k]), None)
        if i is None:
            yield DiagramObject("matching", n, tuple((a, mate[a]) for a in range(1, n + 1) if mate[a] > a))
            return
        for j in range(i + 1, n + 1):
            if mate[j] or (inhom and box[i - 1] == box[j - 1]):
                continue
            mate[i], mate[j] = j, i
            yield from rec()
            mate[i] = mate[j] = 0

    yield from rec()


def _partitions(g, inhom):
    n, box = g.n, g.box_of
    free = [r == "free" for r in g.roles]
    blocks: list[list[int]] = []

    def rec(i):
        if i > n:
            if inhom and any(len(b) == 1 and not free[box[b[0] - 1]] for b in blocks):
                return
            yield DiagramObject.from_blocks(blocks, n)
            return
        bi = box[i - 1]
        for b in blocks:
            if inhom and any(box[e - 1] == bi for e in b):
                continue
            b.append(i)
            yield from rec(i + 1)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(1)


def _permutations(g, inhom):
    n, box = g.n, g.box_of
    restricted = [inhom and r == "deranged" for r in g.roles]
    sigma = [0] * n
    used = [False] * (n + 1)

    def rec(i):
        if i == n:
            yield DiagramObject.permutation(sigma)
            return
        bi = box[i]
        for v in range(1, n + 1):
            if used[v] or (restricted[bi] and box[v - 1] == bi):
                continue
            used[v] = True
            sigma[i] = v
            yield from rec(i + 1)
            used[v] = False

    yield from rec(0)


def statistics(o: DiagramObject, g: BoxedGroundSet) -> StatRecord:
    if o.n != g.n:
        raise ValueError("object and ground set sizes differ")
    m = len(g.sizes)
    if o.kind == "permutation":
        return _perm_record(o.data, g, m)
    arcs = o.arcs
    cr = sum(1 for a, b in arcs for c, d in arcs if a < c < b < d)
    blocks = o.blocks()
    hom = [0] * m
    for a, b in arcs:
        if g.chi(a) == g.chi(b):
            hom[g.chi(a) - 1] += 1
    depth = {i: sum(1 for a, b in arcs if a < i < b) for i in range(1, o.n + 1)}
    return StatRecord(
        cr=cr,
        bl=len(blocks),
        sg=sum(1 for b in blocks if len(b) == 1),
        tr=sum(max(len(b) - 2, 0) for b in blocks),
        hom_per_box=tuple(hom),
        depth=depth,
    )


def _perm_record(sigma, g, m) -> StatRecord:
    n = len(sigma)
    s = (0,) + tuple(sigma)  # 1-based
    exc = sum(1 for i in range(1, n + 1) if s[i] > i)
    fix = sum(1 for i in range(1, n + 1) if s[i] == i)
    cr = 0
    for i in range(1, n + 1):
        cr += sum(1 for j in range(1, n + 1) if j < i <= s[j] < s[i])
        cr += sum(1 for j in range(1, n + 1) if j > i > s[j] > s[i])
    seen, cyc = set(), 0
    for i in range(1, n + 1):
        if i not in seen:
            cyc += 1
            while i not in seen:
                seen.add(i)
                i = s[i]
    per_box = [0] * m
    exc_b = drop_b = 0
    for i in range(1, n + 1):
        a, b = g.chi(i), g.chi(s[i])
        if b > a:
            exc_b += 1
        elif b < a:
            drop_b += 1
        else:
            per_box[a - 1] += 1
    return StatRecord(
        cr=cr,
        cyc=cyc,
        exc=exc,
        wex=exc + fix,
        drop=n - exc - fix,
        ninv=sum(1 for i, j in combinations(range(1, n + 1), 2) if s[i] < s[j]),
        exc_b=exc_b,
        drop_b=drop_b,
        fix_per_box=tuple(per_box),
    )


# -- kernel histograms ----------------------------------------------------------

@dataclass(frozen=True)
class Histogram:
    """Counts of objects by statistics vector; ``names`` labels the columns."""

    names: tuple[str, ...]
    counts: Mapping[tuple[int, ...], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def column(self, name: str) -> int:
        return self.names.index(name)

    def project(self, names: Sequence[str]) -> "Histogram":
        idx = [self.column(nm) for nm in names]
        out: dict = {}
        for key, cnt in self.counts.items():
            k = tuple(key[i] for i in idx)
            out[k] = out.get(k, 0) + cnt
        return Histogram(tuple(names), out)


def _normalize(kind, sizes, roles, filter):
    sizes = tuple(int(s) for s in sizes)
    roles = tuple(roles) if roles else ("deranged",) * len(sizes)
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}")
    if filter == "all":
        roles = ("free",) * len(sizes)
    return BoxedGroundSet(sizes, roles), filter


@lru_cache(maxsize=4096)
def _cached(kind: str, sizes: tuple, roles: tuple, filter: str) -> Histogram:
    g = BoxedGroundSet(sizes, roles)
    boxes = list(g.box_of)
    m = len(sizes)
    inhom = filter == "inhomogeneous"
    if kind == "permutation":
        raw = _k.perm_hist(boxes, [int(inhom and r == "deranged") for r in roles])
        names = ("cyc", "exc", "drop", "fix", "cr", "exc_b", "drop_b") + tuple(f"fix_{j}" for j in range(1, m + 1))
        counts = {}
        for key, cnt in raw.items():
            wex = key[1] + key[3]
            nfix = tuple(s - f for s, f in zip(sizes, key[7:]))
            counts[key + (wex,) + nfix] = cnt
        names += ("wex",) + tuple(f"nfix_{j}" for j in range(1, m + 1))
    elif kind == "partition":
        raw = _k.part_hist(boxes, [int(not inhom or r == "free") for r in roles], inhom)
        names = ("bl", "sg", "tr", "cr", "nbl")
        counts = {key + (key[0] - key[1],): cnt for key, cnt in raw.items()}
    elif kind == "matching":
        raw = _k.match_hist(boxes, m, inhom)
        names = ("cr",) + tuple(f"hom_{j}" for j in range(1, m + 1))
        names += tuple(f"free_{j}" for j in range(1, m + 1))
        counts = {key + tuple(s - 2 * h for s, h in zip(sizes, key[1:])): cnt for key, cnt in raw.items()}
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return Histogram(names, counts)


def histogram(
    kind: str, sizes: Sequence[int], roles: Sequence[str] = (), filter: str = "inhomogeneous", *, cap: int | None = None
) -> Histogram:
    """Statistics histogram of every object of ``kind`` (cached)."""
    g, filter = _normalize(kind, sizes, roles, filter)
    _check_cap(kind, g.n, cap)
    return _cached(kind, g.sizes, g.roles, filter)


def permutation_histogram(sizes, roles=(), filter="inhomogeneous", *, cap=None) -> Histogram:
    """Columns: cyc exc drop fix cr exc_b drop_b fix_j.. wex nfix_j..

    ``fix_j`` counts elements of box j sent into box j; ``nfix_j`` is the rest.
    """
    return histogram("permutation", sizes, roles, filter, cap=cap)


def partition_histogram(sizes, roles=(), filter="inhomogeneous", *, cap=None) -> Histogram:
    """Columns: bl sg tr cr nbl (nbl = blocks with at least two elements)."""
    return histogram("partition", sizes, roles, filter, cap=cap)


def matching_histogram(sizes, filter="inhomogeneous", *, cap=None) -> Histogram:
    """Columns: cr hom_j.. free_j.. (free_j = n_j - 2 hom_j)."""
    return histogram("matching", sizes, (), filter, cap=cap)


def evaluate(hist: Histogram, bases: Mapping[str, Scalarish]) -> GaussianRational:
    """Sum over the histogram of count times the product of base**statistic."""
    names = tuple(bases)
    hist = hist.project(names)  # fewer keys, same sum
    vals = [as_scalar(bases[k]) for k in names]
    real = all(v.is_real for v in vals)
    if real:
        vals = [v.re for v in vals]
    powers: list[dict] = [{} for _ in vals]
    total = Fraction(0) if real else ZERO
    for key, cnt in hist.counts.items():
        term = Fraction(cnt) if real else GaussianRational(cnt)
        for c, (base, e) in builtins.enumerate(zip(vals, key)):
            p = powers[c].get(e)
            if p is None:
                p = powers[c][e] = base**e
            term = term * p
            if not term:
                break
        total = total + term
    return GaussianRational(total) if real else total


# -- weight rules -----------------------------------------------------------------

@dataclass(frozen=True)
class WeightRule:
    """A weight as data: the object class plus one base per statistic."""

    kind: str
    filter: str
    bases: Mapping[str, GaussianRational]
    roles: tuple[str, ...] = ()


def weighted_sum(g: BoxedGroundSet, rule: WeightRule, *, cap: int | None = None) -> GaussianRational:
    roles = rule.roles or g.roles
    return evaluate(histogram(rule.kind, g.sizes, roles, rule.filter, cap=cap), rule.bases)


def family_weight(name: str, params: Mapping[str, Scalarish], m: int, lambdas: Sequence[Scalarish] | None = None) -> WeightRule:
    """Weight rule of a family's combinatorial linearization sum on m boxes.

    Scalings other than all ones are supported for Hermite and Laguerre only.
    """
    p = {k: as_scalar(v) for k, v in params.items()}
    lam = [as_scalar(x) for x in (lambdas or [1] * m)]
    unit = all(x == 1 for x in lam)
    if name == "hermite":
        if unit:
            return WeightRule("matching", "inhomogeneous", {})
        bases = {}
        for j, x in builtins.enumerate(lam, 1):
            bases[f"hom_{j}"] = x * x - 1
            bases[f"free_{j}"] = x
        return WeightRule("matching", "all", bases)
    if name == "laguerre":
        bases = {"cyc": p["alpha"] + 1}
        for j, x in builtins.enumerate(lam, 1):
            bases[f"fix_{j}"] = x - 1
            bases[f"nfix_{j}"] = x
        return WeightRule("permutation", "all", bases)
    if not unit:
        raise NotAvailable(f"no scaled combinatorial formula for {name}")
    if name == "q-hermite":
        return WeightRule("matching", "inhomogeneous", {"cr": p["q"]})
    if name == "charlier":
        return WeightRule("partition", "inhomogeneous", {"bl": p["a"]})
    if name == "q-charlier":
        return WeightRule("partition", "inhomogeneous", {"bl": p["a"], "tr": p["b"], "sg": p["c"], "cr": p["q"]})
    if name == "meixner":
        return WeightRule("permutation", "inhomogeneous", {"cyc": p["beta"], "exc": p["c"]})
    if name == "meixner-pollaczek":
        d = p["delta"]
        return WeightRule("permutation", "inhomogeneous", {"drop": d + I, "exc": d - I, "cyc": p["eta"]})
    if name == "q-laguerre":
        return WeightRule("permutation", "inhomogeneous", {"exc": p["y"], "cr": p["q"]})
    raise NotAvailable(f"no combinatorial linearization formula for {name}")


# -- extended classes -----------------------------------------------------------

def starred_weighted_sum(n0: int, sizes: Sequence[int], bases: Mapping[str, Scalarish], *, cap=None) -> GaussianRational:
    """Sum over permutations where boxes 1..m are deranged and a box of n0 is free.

    The free box is placed after the others, so box excedances count moves
    towards it as excedances.
    """
    sz = tuple(sizes) + (n0,)
    roles = ("deranged",) * len(sizes) + ("free",)
    return evaluate(histogram("permutation", sz, roles, "inhomogeneous", cap=cap), bases)


def starred_word_count(sizes: Sequence[int], roles: Sequence[str]) -> int:
    """Number of permutations with the given deranged boxes, via words.

    Each permutation is a word (the box of each image) together with an
    ordering inside each box, so the count is (#words) * prod(n_j!).  The
    words are listed one by one.
    """
    m = len(sizes)
    box = [j for j, s in builtins.enumerate(sizes) for _ in range(s)]
    left = list(sizes)
    words = 0

    def rec(i):
        nonlocal words
        if i == len(box):
            words += 1
            return
        for letter in range(m):
            if not left[letter] or (roles[box[i]] == "deranged" and letter == box[i]):
                continue
            left[letter] -= 1
            rec(i + 1)
            left[letter] += 1

    rec(0)
    mult = 1
    for s in sizes:
        mult *= factorial(s)
    return words * mult


def charlier_starred_sum(n0: int, sizes: Sequence[int], a: Scalarish, *, cap=None) -> GaussianRational:
    """Sum of a^bl over partitions whose blocks are inhomogeneous or singletons of a free box of n0."""
    sz = tuple(sizes) + (n0,)
    roles = ("deranged",) * len(sizes) + ("free",)
    return evaluate(histogram("partition", sz, roles, "inhomogeneous", cap=cap), {"bl": a})


def injection_cycle_sum(m: int, n: int, beta: Scalarish) -> GaussianRational:
    """Sum of beta^cyc over all injections A -> A u B with |A| = m, |B| = n."""
    beta = as_scalar(beta)
    total = ZERO
    for f in permutations(range(m + n), m):
        seen, cyc = set(), 0
        for start in range(m):
            if start in seen:
                continue
            path, x = [], start
            while x < m and x not in seen and x not in path:
                path.append(x)
                x = f[x]
            if x in path:
                cyc += 1
            seen.update(path)
        total = total + beta**cyc
    return total


def starred_injection_sum(
    m0: int, m_sizes: Sequence[int], n_sizes: Sequence[int], N: int, bases: Mapping[str, Scalarish], *, cap=None
) -> GaussianRational:
    """Sum over tuples (pi, f_1, ..., f_k) of the weight of pi.

    For each box of ``n_sizes`` a subset is kept for pi and the rest is sent
    injectively into [N]; pi ranges over permutations of the kept elements
    with the free box of m0 and deranged boxes.  Only the subset sizes
    matter for the weight, so subsets are counted by binomials.
    """
    total = ZERO
    k = len(n_sizes)

    def rec(r, kept, mult):
        nonlocal total
        if r == k:
            total = total + starred_weighted_sum(m0, tuple(m_sizes) + tuple(kept), bases, cap=cap) * mult
            return
        nr = n_sizes[r]
        for keep in range(nr + 1):
            gone = nr - keep
            if gone > N:
                continue
            rec(r + 1, kept + [keep], mult * comb(nr, keep) * perm(N, gone))

    rec(0, [], 1)
    return total
