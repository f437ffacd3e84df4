"""Pure-Python enumeration kernels.

Same signatures and histogram keys as the compiled ``_kernels`` module; used
when the extension is not built or when ``OLC_PURE_PYTHON=1``.
"""

from __future__ import annotations

from collections import Counter


def _perm_stats(sigma: list[int], boxes: list[int], n_box: int) -> tuple:
    n = len(sigma)
    exc = drop = fix = exc_b = drop_b = 0
    per_box = [0] * n_box
    for i, si in enumerate(sigma):
        if si > i:
            exc += 1
        elif si < i:
            drop += 1
        else:
            fix += 1
        bi, bs = boxes[i], boxes[si]
        if bs > bi:
            exc_b += 1
        elif bs < bi:
            drop_b += 1
        else:
            per_box[bi] += 1
    seen = [False] * n
    cyc = 0
    for i in range(n):
        if not seen[i]:
            cyc += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = sigma[j]
    cr = 0
    for i in range(n):
        si = sigma[i]
        for j in range(n):
            sj = sigma[j]
            if j < i <= sj < si or j > i > sj > si:
                cr += 1
    return (cyc, exc, drop, fix, cr, exc_b, drop_b, *per_box)


def perm_hist(boxes: list[int], restricted: list[int]) -> dict:
    n = len(boxes)
    hist: Counter = Counter()
    sigma = [0] * n
    used = [False] * n

    def rec(i):
        if i == n:
            hist[_perm_stats(sigma, boxes, len(restricted))] += 1
            return
        bi = boxes[i]
        for v in range(n):
            if used[v] or (restricted[bi] and boxes[v] == bi):
                continue
            used[v] = True
            sigma[i] = v
            rec(i + 1)
            used[v] = False

    rec(0)
    return dict(hist)


def _crossings(arcs: list[tuple[int, int]]) -> int:
    return sum(1 for a, b in arcs for c, d in arcs if a < c < b < d)


def part_hist(boxes: list[int], singleton_ok: list[int], distinct_boxes: bool) -> dict:
    n = len(boxes)
    hist: Counter = Counter()
    blocks: list[list[int]] = []

    def rec(i):
        if i == n:
            sg = tr = 0
            arcs = []
            for blk in blocks:
                if len(blk) == 1:
                    if not singleton_ok[boxes[blk[0]]]:
                        return
                    sg += 1
                tr += max(len(blk) - 2, 0)
                arcs.extend(zip(blk, blk[1:]))
            hist[(len(blocks), sg, tr, _crossings(arcs))] += 1
            return
        bi = boxes[i]
        for blk in blocks:
            if distinct_boxes and any(boxes[e] == bi for e in blk):
                continue
            blk.append(i)
            rec(i + 1)
            blk.pop()
        blocks.append([i])
        rec(i + 1)
        blocks.pop()

    rec(0)
    return dict(hist)


def match_hist(boxes: list[int], n_boxes: int, inhomogeneous: bool) -> dict:
    n = len(boxes)
    hist: Counter = Counter()
    if n % 2:
        return {}
    mate = [-1] * n

    def rec():
        i = next((k for k in range(n) if mate[k] < 0), None)
        if i is None:
            hom = [0] * n_boxes
            arcs = []
            for a in range(n):
                b = mate[a]
                if b > a:
                    arcs.append((a, b))
                    if boxes[a] == boxes[b]:
                        hom[boxes[a]] += 1
            hist[(_crossings(arcs), *hom)] += 1
            return
        for j in range(i + 1, n):
            if mate[j] >= 0 or (inhomogeneous and boxes[i] == boxes[j]):
                continue
            mate[i], mate[j] = j, i
            rec()
            mate[i] = mate[j] = -1

    rec()
    return dict(hist)
