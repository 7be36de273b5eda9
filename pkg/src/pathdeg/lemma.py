"""Greedy construction of long xy-paths through a set of high-degree vertices.

Given B = (b_1..b_t) with deg >= D, D >= n/2 + k + 1 and endpoints x, y of
degree >= n - D + t + 4, the path alternates between the b's and common
neighbours ("connectors") of consecutive b's:

    a: x a1 b1 a2 b2 ... a_t b_t a_{t+1} y            (2t+2 edges)
    b: x a1 b1 b2 a3 ... a_t b_t a_{t+1} y            (2t+1 edges, b1b2 an edge)
    c: x a1 b1 a2 a2' b2 a3 ... b_t a_{t+1} y         (2t+3 edges, a2a2' an edge)

Connectors are picked lowest-index first: the two end connectors before
the interior ones, since the exclusion counts depend on that order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .graph import Graph, from_graph6
from .paths import PathWitness

CASES = ("a", "b", "c")


class ConstructionFailure(RuntimeError):
    """A connector set was empty; impossible on a valid instance."""

    def __init__(self, index: int, message: str):
        super().__init__(f"no connector available for a_{index}: {message}")
        self.index = index


@dataclass(frozen=True)
class LemmaInstance:
    g: Graph
    B: tuple[int, ...]
    x: int
    y: int
    D: int
    k: int
    case: str = "a"
    edge: tuple[int, int] | None = None                   # case b: edge inside B
    cross: tuple[int, int, int, int] | None = None        # case c: (i, j, a2, a2'), indices into B

    @property
    def t(self) -> int:
        return len(self.B)

    def to_json(self) -> dict:
        return {
            "graph6": self.g.to_graph6(),
            "B": list(self.B),
            "x": self.x,
            "y": self.y,
            "D": self.D,
            "k": self.k,
            "case": self.case,
            "edge": list(self.edge) if self.edge else None,
            "cross": list(self.cross) if self.cross else None,
        }

    @classmethod
    def from_json(cls, d: dict) -> LemmaInstance:
        return cls(
            from_graph6(d["graph6"]), tuple(d["B"]), d["x"], d["y"], d["D"], d["k"], d["case"],
            tuple(d["edge"]) if d.get("edge") else None,
            tuple(d["cross"]) if d.get("cross") else None,
        )


@dataclass(frozen=True)
class Validation:
    ok: bool
    reason: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class LemmaPath:
    witness: PathWitness
    b_order: tuple[int, ...]       # B after moving the special edge to positions 1, 2
    connectors: tuple[int, ...]    # a_1..a_{t+1} as used (a_2 absent in case b)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.witness.vertices),
            "ell": self.witness.length,
            "b_order": list(self.b_order),
            "connectors": list(self.connectors),
        }


def _fail(reason: str, detail: str) -> Validation:
    return Validation(False, reason, detail)


def validate_instance(inst: LemmaInstance) -> Validation:
    """Check the hypotheses in a fixed order; report the first failure."""
    g, B, t = inst.g, inst.B, inst.t
    n = g.n
    if inst.case not in CASES:
        return _fail("case", f"unknown case {inst.case!r}")
    if len(set(B)) != t or any(not 0 <= b < n for b in B):
        return _fail("B", "B must list distinct vertices of G")
    if not 2 <= t <= inst.k:
        return _fail("t-range", f"need 2 <= t <= k, got t={t}, k={inst.k}")
    for b in B:
        if g.degree(b) < inst.D:
            return _fail("b-degree", f"deg({b}) = {g.degree(b)} < D = {inst.D}")
    if Fraction(inst.D) < Fraction(n, 2) + inst.k + 1:
        return _fail("threshold", f"D = {inst.D} < n/2 + k + 1 = {Fraction(n, 2) + inst.k + 1}")
    if inst.x == inst.y or inst.x in B or inst.y in B or not (0 <= inst.x < n and 0 <= inst.y < n):
        return _fail("endpoints", "x, y must be distinct vertices outside B")
    floor = n - inst.D + t + 4
    for v in (inst.x, inst.y):
        if g.degree(v) < floor:
            return _fail("xy-degree", f"deg({v}) = {g.degree(v)} < n - D + t + 4 = {floor}")
    if inst.case == "b":
        if inst.edge is None:
            return _fail("case-b-edge", "case b needs an edge inside B")
        u, w = inst.edge
        if u == w or u not in B or w not in B or not g.has_edge(u, w):
            return _fail("case-b-edge", f"{inst.edge} is not an edge of G[B]")
    if inst.case == "c":
        if inst.cross is None:
            return _fail("case-c-edge", "case c needs a cross edge")
        i, j, a2, a2p = inst.cross
        if i == j or not (0 <= i < t and 0 <= j < t):
            return _fail("case-c-edge", "cross pair must be two distinct indices into B")
        if not (g.has_edge(a2, a2p) and g.has_edge(B[i], a2) and g.has_edge(B[j], a2p)):
            return _fail("case-c-edge", f"({a2}, {a2p}) is not an edge from N(b_{i}) to N(b_{j})")
        outside = set(B) | {inst.x, inst.y}
        if a2 in outside or a2p in outside:
            return _fail("case-c-overlap", "cross edge must avoid B and x, y")
    return Validation(True)


def find_special(inst: LemmaInstance) -> LemmaInstance:
    """Fill in the lexicographically first edge needed by case b or c."""
    g, B = inst.g, inst.B
    if inst.case == "b" and inst.edge is None:
        for p in range(len(B)):
            for q in range(p + 1, len(B)):
                if g.has_edge(B[p], B[q]):
                    return replace(inst, edge=(B[p], B[q]))
    if inst.case == "c" and inst.cross is None:
        outside = set(B) | {inst.x, inst.y}
        for i in range(len(B)):
            for j in range(len(B)):
                if i == j:
                    continue
                for a2 in g.neighbors(B[i]):
                    if a2 in outside:
                        continue
                    for a2p in g.neighbors(a2):
                        if a2p not in outside and g.has_edge(B[j], a2p):
                            return replace(inst, cross=(i, j, a2, a2p))
    return inst


def _pick(g: Graph, u: int, v: int, banned: int, index: int) -> int:
    common = g.adj[u] & g.adj[v] & ~banned
    if not common:
        raise ConstructionFailure(index, f"N({u}) & N({v}) exhausted")
    return (common & -common).bit_length() - 1


def build_path(inst: LemmaInstance) -> LemmaPath:
    """The xy-path promised for the instance's case (see module docstring)."""
    check = validate_instance(inst)
    if not check:
        raise ValueError(f"invalid lemma instance ({check.reason}): {check.detail}")
    g, x, y = inst.g, inst.x, inst.y
    B = list(inst.B)
    t = len(B)
    extra: list[int] = []
    if inst.case == "b":
        u, w = inst.edge
        B = [u, w] + [b for b in B if b not in (u, w)]
    elif inst.case == "c":
        i, j, a2, a2p = inst.cross
        bi, bj = B[i], B[j]
        B = [bi, bj] + [b for b in B if b not in (bi, bj)]
        extra = [a2, a2p]
    banned = 0
    for v in B + [x, y] + extra:
        banned |= 1 << v
    ext = [x] + B + [y]   # ext[i] = b_i with b_0 = x, b_{t+1} = y
    a: dict[int, int] = {}
    a[1] = _pick(g, ext[0], ext[1], banned, 1)
    banned |= 1 << a[1]
    a[t + 1] = _pick(g, ext[t], ext[t + 1], banned, t + 1)
    banned |= 1 << a[t + 1]
    first_interior = 2 if inst.case == "a" else 3
    for idx in range(first_interior, t + 1):
        a[idx] = _pick(g, ext[idx - 1], ext[idx], banned, idx)
        banned |= 1 << a[idx]
    path = [x, a[1], B[0]]
    if inst.case == "a":
        path += [a[2], B[1]]
    elif inst.case == "b":
        path += [B[1]]
    else:
        path += [extra[0], extra[1], B[1]]
    for idx in range(3, t + 1):
        path += [a[idx], B[idx - 1]]
    path += [a[t + 1], y]
    connectors = tuple(a[i] for i in sorted(a))
    return LemmaPath(PathWitness(tuple(path)), tuple(B), connectors)


def promised_length(inst: LemmaInstance) -> int:
    return {"a": 2 * inst.t + 2, "b": 2 * inst.t + 1, "c": 2 * inst.t + 3}[inst.case]
