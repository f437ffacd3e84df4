# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Each kernel walks every object of one class on a boxed ground set and
returns a histogram ``{statistics tuple: count}``.  The pure-Python twin in
``_fallback.py`` has the same signatures and must return equal dicts.
"""

cdef enum:
    MAXN = 24

cdef int n_el, n_box
cdef int box_of[MAXN]
cdef int flag[MAXN]          # per box: restricted (perms) / singleton allowed (partitions)
cdef int distinct            # partitions: no two elements of one box share a block
cdef int sigma[MAXN]
cdef int used[MAXN]
cdef int seen[MAXN]
cdef int blk[MAXN]           # partitions: block index of each element
cdef int last[MAXN]          # partitions: current largest element of each block
cdef int size[MAXN]
cdef long long mask[MAXN]
cdef int mate[MAXN]
cdef int arc_a[MAXN]
cdef int arc_b[MAXN]
cdef dict hist


cdef void _load(list boxes, list flags) except *:
    global n_el, n_box
    n_el = len(boxes)
    if n_el > MAXN:
        raise ValueError(f"ground set of size {n_el} exceeds the kernel limit {MAXN}")
    n_box = len(flags)
    if n_box > 63:
        raise ValueError("too many boxes")
    cdef int i
    for i in range(n_el):
        box_of[i] = boxes[i]
    for i in range(n_box):
        flag[i] = flags[i]


cdef void _perm_leaf() except *:
    cdef int i, j, cyc = 0, exc = 0, drop = 0, fix = 0, cr = 0, exc_b = 0, drop_b = 0
    cdef int si, sj, bi, bs
    cdef list per_box = [0] * n_box
    for i in range(n_el):
        si = sigma[i]
        if si > i:
            exc += 1
        elif si < i:
            drop += 1
        else:
            fix += 1
        bi = box_of[i]
        bs = box_of[si]
        if bs > bi:
            exc_b += 1
        elif bs < bi:
            drop_b += 1
        else:
            per_box[bi] += 1
        seen[i] = 0
    for i in range(n_el):
        if not seen[i]:
            cyc += 1
            j = i
            while not seen[j]:
                seen[j] = 1
                j = sigma[j]
    for i in range(n_el):
        si = sigma[i]
        for j in range(n_el):
            sj = sigma[j]
            if j < i and i <= sj and sj < si:
                cr += 1
            elif j > i and i > sj and sj > si:
                cr += 1
    key = (cyc, exc, drop, fix, cr, exc_b, drop_b) + tuple(per_box)
    hist[key] = hist.get(key, 0) + 1


cdef void _perm_rec(int i) except *:
    cdef int v
    if i == n_el:
        _perm_leaf()
        return
    for v in range(n_el):
        if used[v]:
            continue
        if flag[box_of[i]] and box_of[v] == box_of[i]:
            continue
        used[v] = 1
        sigma[i] = v
        _perm_rec(i + 1)
        used[v] = 0


def perm_hist(list boxes, list restricted):
    """Permutations; restricted boxes must map entirely outside themselves.

    Key: (cyc, exc, drop, fix, cr, exc_b, drop_b, fix_box_0, ..., fix_box_{m-1}).
    """
    global hist
    _load(boxes, restricted)
    hist = {}
    cdef int i
    for i in range(n_el):
        used[i] = 0
    _perm_rec(0)
    out = hist
    hist = None
    return out


cdef void _part_leaf(int nb) except *:
    cdef int b, sg = 0, tr = 0, cr = 0, narcs = 0, i, j
    for b in range(nb):
        if size[b] == 1:
            sg += 1
        elif size[b] > 2:
            tr += size[b] - 2
    for i in range(n_el):
        if size[blk[i]] == 1 and not flag[box_of[i]]:
            return
    # arcs join successive elements of a block
    for b in range(nb):
        last[b] = -1
    for i in range(n_el):
        b = blk[i]
        if last[b] >= 0:
            arc_a[narcs] = last[b]
            arc_b[narcs] = i
            narcs += 1
        last[b] = i
    for i in range(narcs):
        for j in range(narcs):
            if arc_a[i] < arc_a[j] and arc_a[j] < arc_b[i] and arc_b[i] < arc_b[j]:
                cr += 1
    key = (nb, sg, tr, cr)
    hist[key] = hist.get(key, 0) + 1


cdef void _part_rec(int i, int nb) except *:
    cdef int b
    cdef long long bit
    if i == n_el:
        _part_leaf(nb)
        return
    bit = (<long long>1) << box_of[i]
    for b in range(nb):
        if distinct and (mask[b] & bit):
            continue
        blk[i] = b
        size[b] += 1
        mask[b] |= bit
        _part_rec(i + 1, nb)
        size[b] -= 1
        if not distinct:
            # recompute the mask, since several elements may share the bit
            _refresh_mask(b, i)
        else:
            mask[b] &= ~bit
    blk[i] = nb
    size[nb] = 1
    mask[nb] = bit
    _part_rec(i + 1, nb + 1)
    size[nb] = 0
    mask[nb] = 0


cdef void _refresh_mask(int b, int upto):
    cdef int k
    mask[b] = 0
    for k in range(upto):
        if blk[k] == b:
            mask[b] |= (<long long>1) << box_of[k]


def part_hist(list boxes, list singleton_ok, bint distinct_boxes):
    """Set partitions.  Key: (bl, sg, tr, cr)."""
    global hist, distinct
    _load(boxes, singleton_ok)
    distinct = 1 if distinct_boxes else 0
    hist = {}
    cdef int i
    for i in range(MAXN):
        size[i] = 0
        mask[i] = 0
    _part_rec(0, 0)
    out = hist
    hist = None
    return out


cdef void _match_leaf() except *:
    cdef int i, j, narcs = 0, cr = 0
    cdef list hom = [0] * n_box
    for i in range(n_el):
        j = mate[i]
        if j > i:
            arc_a[narcs] = i
            arc_b[narcs] = j
            narcs += 1
            if box_of[i] == box_of[j]:
                hom[box_of[i]] += 1
    for i in range(narcs):
        for j in range(narcs):
            if arc_a[i] < arc_a[j] and arc_a[j] < arc_b[i] and arc_b[i] < arc_b[j]:
                cr += 1
    key = (cr,) + tuple(hom)
    hist[key] = hist.get(key, 0) + 1


cdef void _match_rec() except *:
    cdef int i = 0, j
    while i < n_el and mate[i] >= 0:
        i += 1
    if i == n_el:
        _match_leaf()
        return
    for j in range(i + 1, n_el):
        if mate[j] >= 0:
            continue
        if distinct and box_of[i] == box_of[j]:
            continue
        mate[i] = j
        mate[j] = i
        _match_rec()
        mate[i] = -1
        mate[j] = -1


def match_hist(list boxes, int n_boxes, bint inhomogeneous):
    """Perfect matchings.  Key: (cr, hom_0, ..., hom_{m-1})."""
    global hist, distinct
    _load(boxes, [0] * n_boxes)
    distinct = 1 if inhomogeneous else 0
    hist = {}
    cdef int i
    for i in range(n_el):
        mate[i] = -1
    if n_el % 2 == 0:
        _match_rec()
    out = hist
    hist = None
    return out
