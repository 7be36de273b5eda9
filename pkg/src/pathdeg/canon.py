"""Canonical labelling by individualisation-refinement.

The search tree is the usual one: refine to the coarsest equitable partition,
individualise each vertex of the first non-singleton cell, recurse.  The
canonical leaf is the one whose relabelled adjacency is lexicographically
largest.  Subtrees are pruned with automorphisms already discovered
(twin transpositions up front, then leaf coincidences), restricted to the
pointwise stabiliser of the current prefix, so pruning is always sound.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph

Perm = tuple[int, ...]


@dataclass(frozen=True)
class CanonResult:
    lab: tuple[int, ...]          # lab[i] = vertex placed at canonical position i
    cert: tuple[int, ...]         # relabelled adjacency rows, the comparison key
    generators: tuple[Perm, ...]  # automorphisms generating Aut(G)

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.lab)
        for i, v in enumerate(self.lab):
            pos[v] = i
        return pos

    def orbits(self) -> list[int]:
        """Orbit representative (smallest vertex) for every vertex."""
        return orbit_reps(len(self.lab), self.generators)


@dataclass(frozen=True)
class CanonicalForm:
    graph6: str
    relabeling: tuple[int, ...]   # old vertex -> canonical position

    def __str__(self) -> str:
        return self.graph6


def _mask(vs: Sequence[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _refine(adj: Sequence[int], cells: list[list[int]], queue: deque[int]) -> list[list[int]]:
    while queue:
        if len(cells) == len(adj):
            break
        w = queue.popleft()
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                groups.setdefault((adj[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            for key in sorted(groups):
                frag = groups[key]
                out.append(frag)
                queue.append(_mask(frag))
        cells = out
    return cells


def orbit_reps(n: int, gens: Sequence[Perm]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def _twin_generators(adj: Sequence[int], n: int, color: Sequence[int]) -> list[Perm]:
    gens = []
    for u in range(n):
        for v in range(u + 1, n):
            if color[u] != color[v]:
                continue
            keep = ~((1 << u) | (1 << v))
            if (adj[u] ^ adj[v]) & keep == 0:
                p = list(range(n))
                p[u], p[v] = v, u
                gens.append(tuple(p))
    return gens


class _Search:
    def __init__(self, adj: Sequence[int], n: int, gens: list[Perm]):
        self.adj = adj
        self.n = n
        self.gens = gens
        self.first_lab: list[int] | None = None
        self.first_cert: tuple[int, ...] | None = None
        self.first_path: tuple[int, ...] = ()
        self.best_lab: list[int] | None = None
        self.best_cert: tuple[int, ...] | None = None

    def _cert(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = []
        for v in lab:
            m = self.adj[v]
            r = 0
            while m:
                low = m & -m
                r |= 1 << pos[low.bit_length() - 1]
                m ^= low
            rows.append(r)
        return tuple(rows)

    def _leaf(self, cells: list[list[int]], prefix: tuple[int, ...]) -> int:
        lab = [c[0] for c in cells]
        cert = self._cert(lab)
        if self.first_cert is None:
            self.first_lab, self.first_cert, self.first_path = lab, cert, prefix
            self.best_lab, self.best_cert = lab, cert
            return len(prefix)
        if cert == self.first_cert:
            self._store(lab, self.first_lab)
            # the diverging child is an automorphic image of the first path
            common = 0
            for a, b in zip(prefix, self.first_path):
                if a != b:
                    break
                common += 1
            return common
        if cert > self.best_cert:
            self.best_lab, self.best_cert = lab, cert
        elif cert == self.best_cert:
            self._store(lab, self.best_lab)
        return len(prefix)

    def _store(self, lab: list[int], target: list[int]) -> None:
        g = [0] * self.n
        for a, b in zip(lab, target):
            g[a] = b
        perm = tuple(g)
        if perm != tuple(range(self.n)):
            self.gens.append(perm)

    def run(self, cells: list[list[int]], prefix: tuple[int, ...]) -> int:
        """Explore a node; returns the depth the caller should unwind to."""
        if len(cells) == self.n:
            return self._leaf(cells, prefix)
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = sorted(cells[t])
        depth = len(prefix)
        explored: list[int] = []
        seen_gens = -1
        reps: list[int] = []
        for v in target:
            if explored:
                if seen_gens != len(self.gens):
                    fixing = [g for g in self.gens if all(g[p] == p for p in prefix)]
                    reps = orbit_reps(self.n, fixing)
                    seen_gens = len(self.gens)
                rv = reps[v]
                if any(reps[w] == rv for w in explored):
                    continue
            child = cells[:t] + [[v], [u for u in cells[t] if u != v]] + cells[t + 1:]
            child = _refine(self.adj, child, deque([1 << v]))
            back = self.run(child, prefix + (v,))
            explored.append(v)
            if back < depth:
                return back
        return depth


def canonical_labeling(
    adj: Sequence[int], n: int, coloring: Sequence[int] | None = None
) -> CanonResult:
    """Canonical labelling of the graph with neighbour bitsets ``adj``.

    ``coloring`` optionally assigns a colour to every vertex; colour classes
    are ordered by colour value and never merged.
    """
    color = list(coloring) if coloring is not None else [0] * n
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(color[v], []).append(v)
    cells = [classes[c] for c in sorted(classes)]
    cells = _refine(adj, cells, deque(_mask(c) for c in cells))
    search = _Search(adj, n, _twin_generators(adj, n, color))
    search.run(cells, ())
    return CanonResult(tuple(search.best_lab), search.best_cert, tuple(search.gens))


def canonical_form(g: Graph) -> CanonicalForm:
    res = canonical_labeling(g.adj, g.n)
    pos = tuple(res.position)
    return CanonicalForm(g.relabel(pos).to_graph6(), pos)


def automorphism_orbits(g: Graph) -> list[int]:
    return canonical_labeling(g.adj, g.n).orbits()
