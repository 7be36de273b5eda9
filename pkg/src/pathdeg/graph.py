"""Small dense graphs stored as per-vertex neighbour bitsets, plus graph6 I/O."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_N = 64


class Graph6Error(ValueError):
    """Raised for malformed graph6 input; ``offset`` is the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``w`` is set iff ``vw`` is an edge.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"vertex count must lie in [1, {MAX_N}], got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside range")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for w in _bits(nb):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    @property
    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            pv = perm[v]
            for w in _bits(self.adj[v]):
                adj[pv] |= 1 << perm[w]
        return Graph(self.n, tuple(adj))

    def add_vertex(self, mask: int) -> Graph:
        """Append vertex ``n`` adjacent to the vertices in ``mask``."""
        new = self.n
        adj = tuple(nb | (1 << new if mask >> v & 1 else 0) for v, nb in enumerate(self.adj))
        return Graph(self.n + 1, adj + (mask,))

    def to_graph6(self) -> str:
        return to_graph6(self)

    def __repr__(self) -> str:
        return f"Graph({self.to_graph6()!r}, n={self.n}, e={self.edge_count})"


def degree_sequence(g: Graph) -> list[tuple[int, int]]:
    """(vertex, degree) pairs in non-increasing degree order, ties by index."""
    degs = g.degrees()
    return sorted(((v, d) for v, d in enumerate(degs)), key=lambda p: (-p[1], p[0]))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    acc = 0
    k = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def from_graph6(s: str | bytes) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii", errors="replace")
    s = s.strip("\n")
    if s.startswith(">>graph6<<"):
        raise Graph6Error("graph6 header lines are not supported", 0)
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the printable range 63..126", pos)
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = 1
    else:
        if len(s) < 4:
            raise Graph6Error("truncated size header", len(s))
        if s[1] == "~":
            raise Graph6Error(f"vertex count exceeds {MAX_N}", 1)
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        body = 4
    if n == 0:
        raise Graph6Error("graphs with zero vertices are not supported", 0)
    if n > MAX_N:
        raise Graph6Error(f"vertex count {n} exceeds {MAX_N}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - body < nbytes:
        raise Graph6Error(f"truncated body: expected {nbytes} bytes", len(s))
    if len(s) - body > nbytes:
        raise Graph6Error("trailing bytes after graph body", body + nbytes)
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[body + idx // 6]) - 63
            if byte >> (5 - idx % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    pad = nbytes * 6 - nbits
    if pad and (ord(s[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits", len(s) - 1)
    return Graph(n, tuple(adj))
