"""numba kernels for the exhaustive searches.

Graphs are int64 arrays of neighbour bitsets (n <= 62 here; the searches
never go beyond 11 vertices).
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, inline="always")
def _lowbit_index(low):
    i = 0
    while low > 1:
        low >>= 1
        i += 1
    return i


@njit(cache=True)
def violates(adj, deg, n, ell, cur, cand):
    """True iff two equal-degree vertices are joined by a simple path of ``ell`` edges.

    ``cur`` and ``cand`` are scratch arrays of length >= n.
    """
    for u in range(n):
        tgt = 0
        du = deg[u]
        for w in range(u + 1, n):
            if deg[w] == du:
                tgt |= np.int64(1) << w
        if tgt == 0:
            continue
        if ell == 1:
            if adj[u] & tgt:
                return True
            continue
        visited = np.int64(1) << u
        cur[0] = u
        cand[0] = adj[u]
        d = 0
        while d >= 0:
            if d == ell - 1:
                if adj[cur[d]] & ~visited & tgt:
                    return True
                visited &= ~(np.int64(1) << cur[d])
                d -= 1
                continue
            c = cand[d]
            if c == 0:
                visited &= ~(np.int64(1) << cur[d])
                d -= 1
                continue
            low = c & -c
            cand[d] = c ^ low
            v = _lowbit_index(low)
            visited |= low
            if (tgt & ~visited) == 0:
                visited ^= low
                continue
            d += 1
            cur[d] = v
            cand[d] = adj[v] & ~visited
    return False


@njit(cache=True)
def graph_violates(adj, n, ell):
    deg = np.zeros(n, np.int64)
    for v in range(n):
        deg[v] = _popcount(adj[v])
    cur = np.zeros(n + 1, np.int64)
    cand = np.zeros(n + 1, np.int64)
    return violates(adj, deg, n, ell, cur, cand)


@njit(cache=True)
def labeled_sweep(n, ells, best_init, cap):
    """Visit all labelled graphs on n vertices in Gray-code order.

    For each ell keeps the largest edge count of an avoider (starting from
    ``best_init``) and the edge-set codes of all labelled avoiders at that
    count.  Bit k of a code is the k-th pair of ``itertools.combinations``.
    """
    npairs = n * (n - 1) // 2
    pi = np.zeros(max(npairs, 1), np.int64)
    pj = np.zeros(max(npairs, 1), np.int64)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            pi[k] = i
            pj[k] = j
            k += 1
    nl = ells.shape[0]
    best = best_init.copy()
    wit = np.zeros((nl, cap), np.int64)
    cnt = np.zeros(nl, np.int64)
    overflow = np.zeros(nl, np.bool_)
    adj = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    cur = np.zeros(n + 1, np.int64)
    cand = np.zeros(n + 1, np.int64)
    code = np.int64(0)
    e = 0
    total = np.int64(1) << npairs
    for step in range(total):
        if step > 0:
            b = _lowbit_index(step & -step)
            i = pi[b]
            j = pj[b]
            bit = np.int64(1) << b
            adj[i] ^= np.int64(1) << j
            adj[j] ^= np.int64(1) << i
            if code & bit:
                e -= 1
                deg[i] -= 1
                deg[j] -= 1
            else:
                e += 1
                deg[i] += 1
                deg[j] += 1
            code ^= bit
        for li in range(nl):
            if e < best[li]:
                continue
            if violates(adj, deg, n, ells[li], cur, cand):
                continue
            if e > best[li]:
                best[li] = e
                cnt[li] = 0
                overflow[li] = False
            if cnt[li] < cap:
                wit[li, cnt[li]] = code
                cnt[li] += 1
            else:
                overflow[li] = True
    return best, wit, cnt, overflow


@njit(cache=True, inline="always")
def _vertex_invariant(adj, deg, v):
    nb = adj[v]
    s = 0
    tri = 0
    m = nb
    while m:
        low = m & -m
        w = _lowbit_index(low)
        s += deg[w]
        tri += _popcount(adj[w] & nb)
        m ^= low
    return s * 4096 + tri // 2


@njit(cache=True)
def expand(padj, pedges, npar, lo, hi, ell):
    """Children of every parent (rows of ``padj``) by one new vertex.

    A child survives if its edge count lies in [lo, hi), the new vertex has
    minimum degree and maximal vertex invariant among minimum-degree
    vertices, and (when ell > 0) it is an avoider for ``ell``.  Returns the
    parent index, neighbour mask of the new vertex and whether that vertex
    is the unique invariant maximiser, plus the number of children that
    passed the degree/invariant filter.
    """
    cap = 1024
    out_p = np.empty(cap, np.int64)
    out_s = np.empty(cap, np.int64)
    out_u = np.empty(cap, np.bool_)
    nout = 0
    examined = 0
    n = npar + 1
    child = np.zeros(n, np.int64)
    cdeg = np.zeros(n, np.int64)
    pdeg = np.zeros(npar, np.int64)
    free = np.zeros(npar, np.int64)
    cur = np.zeros(n + 1, np.int64)
    cand = np.zeros(n + 1, np.int64)
    newbit = np.int64(1) << npar
    for p in range(padj.shape[0]):
        e0 = pedges[p]
        mindeg = npar
        for v in range(npar):
            pdeg[v] = _popcount(padj[p, v])
            if pdeg[v] < mindeg:
                mindeg = pdeg[v]
        dmin = max(0, lo - e0)
        dmax = min(npar, hi - 1 - e0)
        for d in range(dmin, dmax + 1):
            if mindeg < d - 1:
                break
            forced = np.int64(0)
            nforced = 0
            k = 0
            for v in range(npar):
                if pdeg[v] == d - 1:
                    forced |= np.int64(1) << v
                    nforced += 1
                else:
                    free[k] = v
                    k += 1
            r = d - nforced
            if r < 0 or r > k:
                continue
            combo = (np.int64(1) << r) - 1
            limit = np.int64(1) << k
            while combo < limit:
                s = forced
                m = combo
                while m:
                    low = m & -m
                    s |= np.int64(1) << free[_lowbit_index(low)]
                    m ^= low
                for v in range(npar):
                    if (s >> v) & 1:
                        child[v] = padj[p, v] | newbit
                        cdeg[v] = pdeg[v] + 1
                    else:
                        child[v] = padj[p, v]
                        cdeg[v] = pdeg[v]
                child[npar] = s
                cdeg[npar] = d
                inv_new = _vertex_invariant(child, cdeg, npar)
                keep = True
                unique = True
                for v in range(npar):
                    if cdeg[v] == d:
                        iv = _vertex_invariant(child, cdeg, v)
                        if iv > inv_new:
                            keep = False
                            break
                        if iv == inv_new:
                            unique = False
                if keep:
                    examined += 1
                    if ell <= 0 or not violates(child, cdeg, n, ell, cur, cand):
                        if nout == cap:
                            cap *= 2
                            np_ = np.empty(cap, np.int64)
                            np_[:nout] = out_p[:nout]
                            out_p = np_
                            ns = np.empty(cap, np.int64)
                            ns[:nout] = out_s[:nout]
                            out_s = ns
                            nu = np.empty(cap, np.bool_)
                            nu[:nout] = out_u[:nout]
                            out_u = nu
                        out_p[nout] = p
                        out_s[nout] = s
                        out_u[nout] = unique
                        nout += 1
                if combo == 0:
                    break
                low = combo & -combo
                nxt = combo + low
                combo = nxt | (((nxt ^ combo) // low) >> 2)
    return out_p[:nout], out_s[:nout], out_u[:nout], examined
