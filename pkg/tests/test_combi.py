import itertools
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from olc import _fallback, combi
from olc.combi import (
    BoxedGroundSet,
    CapExceeded,
    DiagramObject,
    NotAvailable,
    WeightRule,
    family_weight,
    injection_cycle_sum,
    starred_word_count,
    statistics,
    weighted_sum,
)
from olc.scalar import G, pochhammer

try:
    from olc import _kernels
except ImportError:  # extension not built
    _kernels = None

box_sizes = st.lists(st.integers(0, 3), min_size=1, max_size=3).filter(lambda s: 0 < sum(s) <= 7)


def _brute_perms(sizes, deranged=True):
    g = BoxedGroundSet(tuple(sizes))
    n = g.n
    out = []
    for sigma in itertools.permutations(range(1, n + 1)):
        if deranged and any(g.chi(i) == g.chi(sigma[i - 1]) for i in range(1, n + 1)):
            continue
        out.append(sigma)
    return out


def _cycles(sigma):
    seen, c = set(), 0
    for s in range(1, len(sigma) + 1):
        if s not in seen:
            c += 1
            x = s
            while x not in seen:
                seen.add(x)
                x = sigma[x - 1]
    return c


def test_enumerate_examples():
    assert len(list(combi.enumerate(BoxedGroundSet((2, 2)), "matching"))) == 2
    assert len(list(combi.enumerate(BoxedGroundSet((2, 2)), "derangements"))) == 4
    parts = list(combi.enumerate(BoxedGroundSet((1, 1, 1)), "partition"))
    assert [p.blocks() for p in parts] == [[(1, 2, 3)]]


def test_figure_statistics():
    m = DiagramObject.from_blocks([[1, 4], [2, 6], [3, 7], [5, 8]], kind="matching")
    assert statistics(m, BoxedGroundSet((8,))).cr == 5
    pi = DiagramObject.from_blocks([[1, 4], [2, 3, 7], [5, 8], [6]])
    rec = statistics(pi, BoxedGroundSet((8,)))
    assert (rec.cr, rec.bl, rec.sg, rec.tr) == (2, 4, 1, 1)


def test_identity_permutation_statistics():
    rec = statistics(DiagramObject.permutation((1, 2, 3)), BoxedGroundSet((3,), ("free",)))
    assert (rec.exc, rec.wex, rec.cr, rec.cyc) == (0, 3, 0, 3)


@settings(max_examples=30, deadline=None)
@given(box_sizes)
def test_derangement_count_matches_brute_force(sizes):
    brute = _brute_perms(sizes)
    assert combi.histogram("permutation", sizes).total == len(brute)
    objs = list(combi.enumerate(BoxedGroundSet(tuple(sizes)), "permutation"))
    assert sorted(o.data for o in objs) == sorted(brute)


@settings(max_examples=30, deadline=None)
@given(box_sizes)
def test_cycle_histogram_matches_brute_force(sizes):
    hist = combi.histogram("permutation", sizes).project(["cyc"])
    brute = {}
    for sigma in _brute_perms(sizes):
        key = (_cycles(sigma),)
        brute[key] = brute.get(key, 0) + 1
    assert dict(hist.counts) == brute


def test_word_count_oracle():
    for sizes in [(2, 2), (1, 2, 3), (3, 3), (2, 1, 1, 2)]:
        roles = ("deranged",) * len(sizes)
        assert starred_word_count(sizes, roles) == combi.histogram("permutation", sizes).total


def test_counts_of_all_partitions_are_bell_numbers():
    for n, bell in enumerate([1, 1, 2, 5, 15, 52, 203, 877], start=0):
        if n:
            assert combi.histogram("partition", (n,), filter="all").total == bell


def test_weighted_examples():
    a, q = G("2/3"), G("1/5")
    rule = WeightRule("partition", "inhomogeneous", {"bl": a, "tr": 3, "sg": 7, "cr": q})
    assert weighted_sum(BoxedGroundSet((2, 2)), rule) == a * a * (1 + q)
    lam, al = G("3/4"), G("1/2")
    assert weighted_sum(BoxedGroundSet((1, 1)), family_weight("laguerre", {"alpha": al}, 2, [lam, 1])) == (al + 1) * lam
    y = G("2/7")
    rule = WeightRule("permutation", "inhomogeneous", {"exc": y, "cr": q})
    assert weighted_sum(BoxedGroundSet((2, 2)), rule) == y * y * (1 + q) ** 2
    rule = WeightRule("matching", "inhomogeneous", {"cr": q})
    assert weighted_sum(BoxedGroundSet((2, 2)), rule) == 1 + q


def test_scaled_weights_only_for_hermite_and_laguerre():
    with pytest.raises(NotAvailable):
        family_weight("charlier", {"a": 1}, 2, [2, 1])


@pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (2, 1), (3, 2), (2, 3), (4, 1)])
def test_foata_strehl(m, n):
    beta = G("-2/3")
    assert injection_cycle_sum(m, n, beta) == pochhammer(beta + n, m)


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        combi.histogram("permutation", (5, 5))


def test_env_cap_override():
    code = "from olc import combi; print(combi.enumeration_cap('permutation'))"
    env = dict(os.environ, OLC_MAX_TOTAL="11")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "11"


def test_homogeneous_filter_relaxed():
    everything = combi.histogram("permutation", (2, 2), filter="all").total
    assert everything == 24


# compiled kernels agree with the pure Python fallback

KERNEL_CASES = [(1,), (3,), (2, 2), (1, 2, 3), (3, 3), (2, 1, 1, 2), (4, 3), (1, 1, 1, 1, 1)]


@pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")
@pytest.mark.parametrize("sizes", KERNEL_CASES)
def test_kernels_agree_with_fallback(sizes):
    boxes = [j for j, s in enumerate(sizes) for _ in range(s)]
    m = len(sizes)
    for restricted in ([1] * m, [0] * m, [1] + [0] * (m - 1)):
        assert _kernels.perm_hist(boxes, restricted) == _fallback.perm_hist(boxes, restricted)
    for singleton_ok, distinct in (([0] * m, True), ([1] * m, False), ([0] * (m - 1) + [1], True)):
        assert _kernels.part_hist(boxes, singleton_ok, distinct) == _fallback.part_hist(boxes, singleton_ok, distinct)
    for inhom in (True, False):
        assert _kernels.match_hist(boxes, m, inhom) == _fallback.match_hist(boxes, m, inhom)


def test_backend_switch():
    code = "import olc; print(olc.BACKEND)"
    env = dict(os.environ, OLC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
