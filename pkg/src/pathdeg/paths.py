"""Fixed-length simple paths between equal-degree vertices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "ell": self.length}


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    witness: PathWitness

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.u, self.v

    def to_json(self) -> dict:
        return {
            "endpoints": [self.u, self.v],
            "vertices": list(self.witness.vertices),
            "ell": self.witness.length,
        }


@dataclass(frozen=True)
class WitnessCheck:
    ok: bool
    reason: str | None = None   # bad-length | missing-edge | repeated-vertex | degree-mismatch

    def __bool__(self) -> bool:
        return self.ok


def _distances_to(g: Graph, target: int) -> list[int]:
    inf = g.n + 1
    dist = [inf] * g.n
    dist[target] = 0
    frontier = 1 << target
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= g.adj[low.bit_length() - 1]
            m ^= low
        nxt &= ~seen
        seen |= nxt
        m = nxt
        while m:
            low = m & -m
            dist[low.bit_length() - 1] = d
            m ^= low
        frontier = nxt
    return dist


def _check_args(g: Graph, ell: int) -> None:
    if not 1 <= ell < g.n:
        raise ValueError(f"path length must satisfy 1 <= ell < n={g.n}, got {ell}")


def path_of_length(g: Graph, u: int, v: int, ell: int) -> PathWitness | None:
    """Lexicographically least simple u-v path with exactly ``ell`` edges."""
    _check_args(g, ell)
    if u == v:
        raise ValueError("endpoints must be distinct")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("endpoint out of range")
    dist = _distances_to(g, v)
    if dist[u] > ell:
        return None
    adj = g.adj
    path = [u]
    target_bit = 1 << v

    def extend(cur: int, visited: int, left: int) -> bool:
        if left == 1:
            if adj[cur] & target_bit:
                path.append(v)
                return True
            return False
        cand = adj[cur] & ~visited & ~target_bit
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if dist[w] > left - 1:
                continue
            path.append(w)
            if extend(w, visited | low, left - 1):
                return True
            path.pop()
        return False

    if extend(u, 1 << u, ell):
        return PathWitness(tuple(path))
    return None


def equal_degree_pairs(g: Graph) -> Iterator[tuple[int, int]]:
    degs = g.degrees()
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if degs[a] == degs[b]:
                yield a, b


def find_violation(g: Graph, ell: int) -> Violation | None:
    """First equal-degree pair (ascending) joined by a path of length ``ell``."""
    _check_args(g, ell)
    for a, b in equal_degree_pairs(g):
        w = path_of_length(g, a, b, ell)
        if w is not None:
            return Violation(a, b, w)
    return None


def is_avoider(g: Graph, ell: int) -> bool:
    return find_violation(g, ell) is None


def verify_witness(g: Graph, viol: Violation, ell: int) -> WitnessCheck:
    vs = viol.witness.vertices
    if len(vs) - 1 != ell or not vs:
        return WitnessCheck(False, "bad-length")
    if (vs[0], vs[-1]) != (viol.u, viol.v):
        return WitnessCheck(False, "bad-length")
    if any(not 0 <= x < g.n for x in vs):
        return WitnessCheck(False, "missing-edge")
    if len(set(vs)) != len(vs):
        return WitnessCheck(False, "repeated-vertex")
    if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
        return WitnessCheck(False, "missing-edge")
    if g.degree(viol.u) != g.degree(viol.v):
        return WitnessCheck(False, "degree-mismatch")
    return WitnessCheck(True)


def check_path(g: Graph, witness: PathWitness, ell: int) -> WitnessCheck:
    """Path validity without the equal-degree condition (used for lemma paths)."""
    vs = witness.vertices
    if len(vs) - 1 != ell:
        return WitnessCheck(False, "bad-length")
    if len(set(vs)) != len(vs):
        return WitnessCheck(False, "repeated-vertex")
    if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
        return WitnessCheck(False, "missing-edge")
    return WitnessCheck(True)
