"""Crossing- and block-preserving bijections between inhomogeneous partition classes.

Partitions are handled as sets of arcs (successive elements of a block) on
an explicit ground set.  Domains:

* ``^(k)P_n``       = P(k, 1, ..., 1): no singleton, no arc inside [1, k];
* ``P_n^(k)``       = P(1, ..., 1, k): no singleton, no arc inside [n-k+1, n];
* ``P_n^(n1,n2)``   = P(n1, n2, 1, ..., 1).

``phi`` maps the first onto the second and ``theta`` swaps the two leading
boxes; both keep the number of blocks and the number of crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .combi import BoxedGroundSet, DiagramObject, enumerate as enumerate_objects

__all__ = [
    "DomainError",
    "SingletonFound",
    "HomogeneousArc",
    "Decomposition",
    "MotzkinProfile",
    "motzkin_profile",
    "psi_pairing",
    "depth",
    "crossings",
    "ninv",
    "decompose",
    "recompose",
    "phi",
    "theta",
    "psi_ab",
    "domain",
]

Arc = tuple[int, int]


class DomainError(ValueError):
    """The partition is outside the map's domain."""


class SingletonFound(DomainError):
    pass


class HomogeneousArc(DomainError):
    pass


# -- small helpers on arc sets -----------------------------------------------------

def _arcs(pi) -> tuple[Arc, ...]:
    if isinstance(pi, DiagramObject):
        return pi.arcs
    return tuple(sorted(tuple(a) for a in pi))


def crossings(arcs: Iterable[Arc]) -> int:
    arcs = list(arcs)
    return sum(1 for a, b in arcs for c, d in arcs if a < c < b < d)


def depth(i: int, arcs: Iterable[Arc]) -> int:
    """Number of arcs (a, b) with a < i < b."""
    return sum(1 for a, b in arcs if a < i < b)


def ninv(sigma: Sequence[int]) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] < sigma[j])


def _mins(ground, arcs) -> set[int]:
    return set(ground) - {b for _, b in arcs}


def _maxs(ground, arcs) -> set[int]:
    return set(ground) - {a for a, _ in arcs}


def _sing(ground, arcs) -> set[int]:
    return _mins(ground, arcs) & _maxs(ground, arcs)


def _blocks(ground, arcs) -> int:
    return len(ground) - len(arcs)


# -- Motzkin paths and the pairing psi_pi ---------------------------------------------

@dataclass(frozen=True)
class MotzkinProfile:
    steps: tuple[str, ...]  # "NE", "E", "SE"
    heights: tuple[int, ...]  # height where each step starts


def motzkin_profile(pi, ground: Sequence[int] | None = None) -> MotzkinProfile:
    arcs = _arcs(pi)
    if ground is None:
        ground = range(1, (pi.n if isinstance(pi, DiagramObject) else max((b for _, b in arcs), default=0)) + 1)
    lo, hi = _mins(ground, arcs), _maxs(ground, arcs)
    steps, heights, h = [], [], 0
    for i in ground:
        heights.append(h)
        if i in lo and i not in hi:
            steps.append("NE")
            h += 1
        elif i in hi and i not in lo:
            steps.append("SE")
            h -= 1
        else:
            steps.append("E")
    if h != 0 or any(x < 0 for x in heights):
        raise AssertionError("not a Motzkin path")
    return MotzkinProfile(tuple(steps), tuple(heights))


def psi_pairing(pi, ground: Sequence[int] | None = None) -> dict[int, int]:
    """The bijection min(pi) -> max(pi) fixing singletons.

    An up step at height h is paired with the first down step to its right
    that starts at height h + 1; one scan with the latest open up step per
    height does this.
    """
    arcs = _arcs(pi)
    if ground is None:
        n = pi.n if isinstance(pi, DiagramObject) else max((b for _, b in arcs), default=0)
        ground = range(1, n + 1)
    prof = motzkin_profile(arcs, ground)
    out: dict[int, int] = {}
    open_at: dict[int, int] = {}
    for i, step, h in zip(ground, prof.steps, prof.heights):
        if step == "NE":
            open_at[h] = i
        elif step == "SE":
            out[open_at.pop(h - 1)] = i
        else:
            out[i] = i  # singleton, or a transient element (not in min or max)
    lo = _mins(ground, arcs)
    return {k: v for k, v in sorted(out.items()) if k in lo}


# -- decompositions --------------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    scheme: str
    n: int
    tau: tuple[Arc, ...]
    tau_ground: tuple[int, ...]
    marked: frozenset[int]
    sigma: tuple[int, ...]
    gamma: tuple[Arc, ...] = ()
    gamma_ground: tuple[int, ...] = ()
    gamma_marked: frozenset[int] = frozenset()
    n1: int = 0
    n2: int = 0


def domain(scheme: str, n: int, k: int | tuple[int, int]) -> BoxedGroundSet:
    """Ground set whose inhomogeneous partitions form the scheme's domain."""
    if scheme == "G":  # ^(k)P_n
        return BoxedGroundSet((k,) + (1,) * (n - k))
    if scheme == "F":  # P_n^(k)
        return BoxedGroundSet((1,) * (n - k) + (k,))
    if scheme == "H":
        n1, n2 = k
        return BoxedGroundSet((n1, n2) + (1,) * (n - n1 - n2))
    raise ValueError(f"unknown scheme {scheme!r}")


def _validate(arcs, n: int, zones: Sequence[tuple[int, int]]) -> None:
    ground = range(1, n + 1)
    for a, b in arcs:
        if not (1 <= a < b <= n):
            raise DomainError(f"arc {(a, b)} outside [1, {n}]")
    s = _sing(ground, arcs)
    if s:
        raise SingletonFound(f"singletons {sorted(s)}")
    for lo, hi in zones:
        for a, b in arcs:
            if lo <= a and b <= hi:
                raise HomogeneousArc(f"arc {(a, b)} inside [{lo}, {hi}]")


def decompose(pi, scheme: str, n: int, k) -> Decomposition:
    """F, G or H decomposition of ``pi``; ``k`` is an int, or (n1, n2) for H."""
    arcs = _arcs(pi)
    if scheme == "F":
        _validate(arcs, n, [(n - k + 1, n)])
        cut = n - k
        tau = tuple(a for a in arcs if a[1] <= cut)
        cross = sorted((a, b) for a, b in arcs if a <= cut < b)
        sigma = tuple(b - cut for _, b in cross)
        return Decomposition("F", n, tau, tuple(range(1, cut + 1)), frozenset(a for a, _ in cross), sigma)
    if scheme == "G":
        _validate(arcs, n, [(1, k)])
        tau = tuple((a - k, b - k) for a, b in arcs if a > k)
        cross = sorted(((b, a) for a, b in arcs if a <= k), key=lambda t: t[0])
        sigma = tuple(a for _, a in cross)
        return Decomposition("G", n, tau, tuple(range(1, n - k + 1)), frozenset(b - k for b, _ in cross), sigma)
    if scheme == "H":
        n1, n2 = k
        N2 = n1 + n2
        _validate(arcs, n, [(1, n1), (n1 + 1, N2)])
        tau = tuple(a for a in arcs if a[1] <= N2)
        gamma = tuple(a for a in arcs if a[0] > N2)
        cross = sorted((a, b) for a, b in arcs if a <= N2 < b)
        A = [a for a, _ in cross]
        B = sorted(b for _, b in cross)
        sigma = tuple(B.index(b) + 1 for _, b in cross)
        return Decomposition(
            "H", n, tau, tuple(range(1, N2 + 1)), frozenset(A), sigma,
            gamma, tuple(range(N2 + 1, n + 1)), frozenset(B), n1, n2,
        )
    raise ValueError(f"unknown scheme {scheme!r}")


def recompose(d: Decomposition) -> DiagramObject:
    """Inverse of :func:`decompose`."""
    marked = sorted(d.marked)
    if len(marked) != len(d.sigma):
        raise DomainError("marked set and permutation sizes differ")
    if d.scheme == "F":
        cut = len(d.tau_ground)
        arcs = list(d.tau) + [(c, cut + s) for c, s in zip(marked, d.sigma)]
    elif d.scheme == "G":
        k = d.n - len(d.tau_ground)
        arcs = [(a + k, b + k) for a, b in d.tau] + [(s, o + k) for o, s in zip(marked, d.sigma)]
    elif d.scheme == "H":
        B = sorted(d.gamma_marked)
        arcs = list(d.tau) + list(d.gamma) + [(a, B[s - 1]) for a, s in zip(marked, d.sigma)]
    else:
        raise ValueError(f"unknown scheme {d.scheme!r}")
    return DiagramObject("partition", d.n, tuple(sorted(arcs)))


# -- the maps ----------------------------------------------------------------------------

def phi(n: int, k: int, pi) -> DiagramObject:
    """^(k)P_n -> P_n^(k): decompose by G, move the marked minima to maxima, rebuild by F."""
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    g = decompose(pi, "G", n, k)
    pairing = psi_pairing(g.tau, g.tau_ground)
    closed = frozenset(pairing[o] for o in g.marked)
    f = Decomposition("F", n, g.tau, g.tau_ground, closed, g.sigma)
    return recompose(f)


def psi_ab(n1: int, n2: int, arcs: Iterable[Arc], A: Iterable[int]) -> tuple[tuple[Arc, ...], frozenset[int]]:
    """(pi, A) in R(n1, n2) -> (pi', A') in R(n2, n1).

    With arcs (i_r, j_rho(r)) of pi, i's and j's increasing, and bar x =
    n1 + n2 + 1 - x: the new left ends are the sorted bar j's, the new right
    ends the sorted bar i's, joined by the same rho.  A' is bar(sing pi)
    plus u_l for every j_l in A, where u is the sorted list of bar i's.
    """
    N2 = n1 + n2
    arcs = sorted(arcs)
    A = set(A)
    ground = range(1, N2 + 1)
    for a, b in arcs:
        if b <= n1 or a > n1:
            raise HomogeneousArc(f"arc {(a, b)} inside one side")
    if not _sing(ground, arcs) <= A <= _maxs(ground, arcs):
        raise DomainError("A must contain the singletons and consist of maxima")
    I = [a for a, _ in arcs]
    J = sorted(b for _, b in arcs)
    rho = [J.index(b) for _, b in arcs]
    bar = lambda x: N2 + 1 - x  # noqa: E731
    new_left = sorted(bar(j) for j in J)
    new_right = sorted(bar(i) for i in I)
    new_arcs = tuple(sorted((new_left[r], new_right[rho[r]]) for r in range(len(arcs))))
    A_new = {bar(s) for s in _sing(ground, arcs)}
    A_new |= {new_right[J.index(j)] for j in A if j in J}
    return new_arcs, frozenset(A_new)


def theta(n1: int, n2: int, pi, n: int | None = None) -> DiagramObject:
    """P_n^(n1,n2) -> P_n^(n2,n1), fixing every arc beyond n1 + n2."""
    if n is None:
        n = pi.n
    h = decompose(pi, "H", n, (n1, n2))
    tau2, A2 = psi_ab(n1, n2, h.tau, h.marked)
    out = Decomposition("H", n, tau2, h.tau_ground, A2, h.sigma, h.gamma, h.gamma_ground, h.gamma_marked, n2, n1)
    return recompose(out)


def partitions_in(scheme: str, n: int, k) -> Iterable[DiagramObject]:
    return enumerate_objects(domain(scheme, n, k), "partition", "inhomogeneous", cap=max(n, 12))
