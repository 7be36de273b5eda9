"""Lower-bound constructions: complete bipartite graphs and half graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import MAX_N, Graph
from .paths import find_violation


@dataclass(frozen=True)
class Certificate:
    ell: int
    n: int
    graph: Graph
    edges: int
    verified: bool
    construction: str
    published: bool = True

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "n": self.n,
            "graph6": self.graph.to_graph6(),
            "edges": self.edges,
            "verified": self.verified,
            "construction": self.construction,
            "published": self.published,
        }


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} on vertices ``0..a-1`` versus ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise ValueError("part sizes must be positive")
    if a + b > MAX_N:
        raise ValueError(f"K_{{{a},{b}}} exceeds {MAX_N} vertices")
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, (right,) * a + (left,) * b)


def half_graph(m: int) -> Graph:
    """u_1..u_m (vertices 0..m-1), v_1..v_m (m..2m-1), u_i v_j iff i <= j."""
    if m < 1:
        raise ValueError("half graph needs m >= 1")
    if 2 * m > MAX_N:
        raise ValueError(f"half graph on {2 * m} vertices exceeds {MAX_N}")
    return Graph.from_edges(2 * m, [(i, m + j) for i in range(m) for j in range(i, m)])


def with_isolated_vertex(g: Graph) -> Graph:
    return g.add_vertex(0)


def _build(ell: int, n: int) -> tuple[Graph, str, bool]:
    if ell % 2:
        m = n // 2
        if n % 2:
            if m == 0:
                return Graph.empty(1), "K_1", False
            return complete_bipartite(m, m + 1), f"K_{{{m},{m + 1}}}", True
        if m < 2:
            return Graph.empty(n), f"empty({n})", False
        return complete_bipartite(m - 1, m + 1), f"K_{{{m - 1},{m + 1}}}", True
    m = n // 2
    if n % 2 == 0:
        return half_graph(m), f"half_graph({m})", True
    if m == 0:
        return Graph.empty(1), "K_1", False
    return with_isolated_vertex(half_graph(m)), f"half_graph({m})+K_1", False


def certificate(ell: int, n: int) -> Certificate:
    """Best construction for (ell, n), re-checked by the avoidance checker."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must lie in [1, {MAX_N}]")
    if ell < 1:
        raise ValueError("ell must be positive")
    g, name, published = _build(ell, n)
    verified = True if ell >= n else find_violation(g, ell) is None
    return Certificate(ell, n, g, g.edge_count, verified, name, published)
