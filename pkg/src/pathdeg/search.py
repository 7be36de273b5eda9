"""Exact computation of p_ell(n).

Two independent routes:

* ``p_labeled`` visits every labelled graph (n <= 8).
* ``p_canonical`` generates one graph per isomorphism class by canonical
  augmentation (add a vertex; keep the child iff the new vertex lies in the
  automorphism orbit of the child's canonical deletion vertex; parents offer
  one neighbour set per Aut(parent)-orbit).  The canonical deletion vertex
  always has minimum degree, so a child with e edges has a parent with at
  least e - floor(2e/n) edges, which lets every level carry an edge floor.
  Top-level edge counts are processed in descending single-edge bands and
  the sweep stops at the first band containing an avoider.  Avoidance is not
  monotone under edge changes, so no hereditary pruning is applied.
"""

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import _kernels as K
from .canon import canonical_form, canonical_labeling, orbit_reps
from .constructions import certificate
from .graph import Graph

log = logging.getLogger(__name__)

LABELED_MAX_N = 8
CANONICAL_MAX_N = 11
WITNESS_CAP = 100


class CostGuardError(ValueError):
    """Requested search exceeds the configured size limit."""


@dataclass
class SearchRecord:
    ell: int
    n: int
    p: int
    method: str
    witnesses: list[str]
    witness_count: int
    graphs_examined: int = 0
    elapsed: float = 0.0

    def key(self) -> tuple[int, int, str]:
        return self.ell, self.n, self.method

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "n": self.n,
            "p": self.p,
            "method": self.method,
            "witnesses": list(self.witnesses),
            "witness_count": self.witness_count,
            "stats": {"graphs_examined": self.graphs_examined, "elapsed": round(self.elapsed, 3)},
        }

    @classmethod
    def from_json(cls, d: dict) -> SearchRecord:
        stats = d.get("stats", {})
        return cls(
            ell=d["ell"],
            n=d["n"],
            p=d["p"],
            method=d["method"],
            witnesses=list(d["witnesses"]),
            witness_count=d["witness_count"],
            graphs_examined=stats.get("graphs_examined", 0),
            elapsed=stats.get("elapsed", 0.0),
        )

    def result_key(self) -> tuple:
        """Everything except run statistics."""
        return self.ell, self.n, self.p, tuple(self.witnesses), self.witness_count


def _check_ell(n: int, ell: int) -> None:
    if not 1 <= ell < n:
        raise ValueError(f"need 1 <= ell < n, got ell={ell}, n={n}")


def _lower_bound(ell: int, n: int) -> int:
    cert = certificate(ell, n)
    return cert.edges if cert.verified else 0


# ---------------------------------------------------------------------------
# labelled exhaustion


def _decode(n: int, code: int, pairs: Sequence[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, [p for k, p in enumerate(pairs) if code >> k & 1])


def p_labeled_many(n: int, ells: Sequence[int], cap: int = 1 << 16) -> dict[int, SearchRecord]:
    """One labelled sweep shared by several path lengths."""
    if n > LABELED_MAX_N:
        raise CostGuardError(f"labelled search refuses n={n} > {LABELED_MAX_N}")
    for ell in ells:
        _check_ell(n, ell)
    t0 = time.perf_counter()
    ells_arr = np.array(list(ells), np.int64)
    init = np.array([_lower_bound(ell, n) for ell in ells], np.int64)
    while True:
        best, wit, cnt, overflow = K.labeled_sweep(n, ells_arr, init, cap)
        if not overflow.any():
            break
        cap *= 4
        log.info("labelled witness buffer overflow, retrying with cap=%d", cap)
    sweep_time = time.perf_counter() - t0
    pairs = list(itertools.combinations(range(n), 2))
    out = {}
    for li, ell in enumerate(ells):
        t1 = time.perf_counter()
        forms = {canonical_form(_decode(n, int(c), pairs)).graph6 for c in wit[li, : cnt[li]]}
        ws = sorted(forms)
        out[ell] = SearchRecord(
            ell, n, int(best[li]), "labeled", ws[:WITNESS_CAP], len(ws),
            graphs_examined=1 << len(pairs),
            elapsed=sweep_time / len(ells) + time.perf_counter() - t1,
        )
    return out


def p_labeled(n: int, ell: int) -> SearchRecord:
    """Exact p_ell(n) by visiting all 2^(n(n-1)/2) labelled graphs."""
    return p_labeled_many(n, [ell])[ell]


# ---------------------------------------------------------------------------
# canonical augmentation


@dataclass
class _Level:
    """Isomorphism-class representatives on ``m`` vertices with e >= floor."""

    m: int
    floor: int
    adj: list[tuple[int, ...]] = field(default_factory=list)
    edges: list[int] = field(default_factory=list)
    gens: list[tuple[tuple[int, ...], ...]] = field(default_factory=list)
    _arr: np.ndarray | None = None

    def add(self, adj: tuple[int, ...], e: int, gens) -> None:
        self.adj.append(adj)
        self.edges.append(e)
        self.gens.append(gens)
        self._arr = None

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        if self._arr is None:
            self._arr = np.array(self.adj, np.int64).reshape(len(self.adj), self.m)
            self._earr = np.array(self.edges, np.int64)
        return self._arr, self._earr


def _parent_floor(child_floor: int, child_n: int) -> int:
    return max(0, child_floor - (2 * child_floor) // child_n)


def _floors(n: int, top: int) -> list[int]:
    fl = [0] * (n + 1)
    fl[n] = top
    for m in range(n - 1, 0, -1):
        fl[m] = _parent_floor(fl[m + 1], m + 1)
    return fl


def _subset_is_orbit_min(s: int, gens, npar: int) -> bool:
    if not gens:
        return True
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for g in gens:
            y = 0
            m = x
            while m:
                low = m & -m
                y |= 1 << g[low.bit_length() - 1]
                m ^= low
            if y < s:
                return False
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


def _child_adj(padj: Sequence[int], s: int) -> tuple[int, ...]:
    npar = len(padj)
    bit = 1 << npar
    return tuple(nb | bit if s >> v & 1 else nb for v, nb in enumerate(padj)) + (s,)


def _invariant(adj: Sequence[int], deg: Sequence[int], v: int) -> int:
    nb = adj[v]
    s = 0
    tri = 0
    m = nb
    while m:
        low = m & -m
        w = low.bit_length() - 1
        s += deg[w]
        tri += (adj[w] & nb).bit_count()
        m ^= low
    return s * 4096 + tri // 2


def _deletion_candidates(adj: Sequence[int]) -> list[int]:
    deg = [nb.bit_count() for nb in adj]
    d = min(deg)
    inv = {v: _invariant(adj, deg, v) for v in range(len(adj)) if deg[v] == d}
    top = max(inv.values())
    return [v for v, x in inv.items() if x == top]


def _accept(adj: tuple[int, ...], unique: bool, need_gens: bool):
    """Canonical-deletion test for a child whose new vertex is the last one.

    Returns (accepted, generators or None).
    """
    n = len(adj)
    new = n - 1
    if unique and not need_gens:
        return True, None
    res = canonical_labeling(adj, n)
    if unique:
        return True, res.generators
    cands = _deletion_candidates(adj)
    pos = res.position
    m = min(cands, key=lambda v: pos[v])
    reps = orbit_reps(n, res.generators)
    return reps[m] == reps[new], res.generators


def _expand_level(parent: _Level, lo: int, hi: int, ell: int, need_gens: bool, workers: int = 1):
    """Accepted children of ``parent`` with edge count in [lo, hi).

    Yields (adj, edges, gens-or-None); also returns the examined count via
    the final StopIteration-free list return.
    """
    if not parent.adj or lo >= hi:
        return [], 0
    padj, pe = parent.arrays()
    results = _run_kernel(padj, pe, parent.m, lo, hi, ell, workers)
    out = []
    examined = 0
    for out_p, out_s, out_u, ex in results:
        examined += ex
        for p, s, u in zip(out_p.tolist(), out_s.tolist(), out_u.tolist()):
            if not _subset_is_orbit_min(s, parent.gens[p], parent.m):
                continue
            cadj = _child_adj(parent.adj[p], s)
            ok, gens = _accept(cadj, u, need_gens)
            if ok:
                out.append((cadj, parent.edges[p] + s.bit_count(), gens))
    return out, examined


def _kernel_chunk(args):
    padj, pe, m, lo, hi, ell = args
    return K.expand(padj, pe, m, lo, hi, ell)


def _run_kernel(padj, pe, m, lo, hi, ell, workers):
    if workers <= 1 or len(padj) < 2 * workers:
        return [K.expand(padj, pe, m, lo, hi, ell)]
    bounds = np.linspace(0, len(padj), workers + 1).astype(int)
    chunks = [(padj[a:b], pe[a:b], m, lo, hi, ell) for a, b in zip(bounds, bounds[1:])]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_kernel_chunk, chunks))
    # re-offset parent indices
    fixed = []
    for (a, _), (out_p, out_s, out_u, ex) in zip(zip(bounds, bounds[1:]), parts):
        fixed.append((out_p + a, out_s, out_u, ex))
    return fixed


class _Generator:
    """Incrementally lowered level stack for canonical augmentation up to n."""

    def __init__(self, n: int):
        self.n = n
        self.levels: dict[int, _Level] = {1: _Level(1, 0)}
        self.levels[1].add((0,), 0, ())
        for m in range(2, n):
            self.levels[m] = _Level(m, m * (m - 1) // 2 + 1)

    def lower_to(self, top: int, workers: int = 1) -> None:
        """Make every intermediate level complete for the floors implied by ``top``."""
        fl = _floors(self.n, top)
        for m in range(2, self.n):
            lev = self.levels[m]
            new_floor = fl[m]
            if new_floor >= lev.floor:
                continue
            kids, _ = _expand_level(self.levels[m - 1], new_floor, lev.floor, 0, True, workers)
            for adj, e, gens in kids:
                lev.add(adj, e, gens)
            lev.floor = new_floor

    def top_band(self, lo: int, hi: int, ell: int, workers: int = 1):
        if self.n == 1:
            return ([((0,), 0, None)] if lo <= 0 < hi else []), 1
        self.lower_to(lo, workers)
        return _expand_level(self.levels[self.n - 1], lo, hi, ell, False, workers)


def enumerate_nonisomorphic(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of n-vertex graphs."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > CANONICAL_MAX_N:
        raise CostGuardError(f"enumeration refuses n={n} > {CANONICAL_MAX_N}")
    gen = _Generator(n)
    top = n * (n - 1) // 2
    for e in range(top, -1, -1):
        kids, _ = gen.top_band(e, e + 1, 0)
        for adj, _, _ in kids:
            yield Graph(n, adj)


def count_nonisomorphic(n: int) -> int:
    return sum(1 for _ in enumerate_nonisomorphic(n))


def p_canonical(n: int, ell: int, workers: int = 1) -> SearchRecord:
    """Exact p_ell(n) over isomorphism-class representatives (n <= 11)."""
    if n > CANONICAL_MAX_N:
        raise CostGuardError(f"canonical search refuses n={n} > {CANONICAL_MAX_N}")
    _check_ell(n, ell)
    t0 = time.perf_counter()
    gen = _Generator(n)
    examined = 0
    for e in range(n * (n - 1) // 2, -1, -1):
        kids, ex = gen.top_band(e, e + 1, ell, workers)
        examined += ex
        if kids:
            forms = sorted({canonical_form(Graph(n, adj)).graph6 for adj, _, _ in kids})
            if len(forms) != len(kids):
                raise AssertionError("canonical augmentation produced isomorphic duplicates")
            log.info("p_%d(%d) = %d (%d witnesses)", ell, n, e, len(forms))
            return SearchRecord(
                ell, n, e, "canonical", forms[:WITNESS_CAP], len(forms),
                graphs_examined=examined, elapsed=time.perf_counter() - t0,
            )
    raise AssertionError("no avoider found; the empty graph always avoids")
