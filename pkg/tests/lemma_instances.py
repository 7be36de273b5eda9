"""Random graphs planted to satisfy the long-path lemma's hypotheses."""

from __future__ import annotations

import random
from dataclasses import replace
from math import ceil

from pathdeg.graph import Graph
from pathdeg.lemma import LemmaInstance, find_special


def _raise_degree(adj: list[int], v: int, target: int, rng: random.Random, n: int, avoid: int = -1) -> None:
    while adj[v].bit_count() < target:
        free = [w for w in range(n) if w not in (v, avoid) and not adj[v] >> w & 1]
        w = rng.choice(free)
        adj[v] |= 1 << w
        adj[w] |= 1 << v


def random_instance(rng: random.Random, case: str) -> LemmaInstance:
    n = rng.randint(16, 32)
    k = rng.randint(2, n // 2 - 2)
    t = rng.randint(2, min(k, 6))
    D = rng.randint(ceil(n / 2 + k + 1), n - 1)
    verts = rng.sample(range(n), t + 2)
    B, (x, y) = tuple(verts[:t]), verts[t:]
    p = rng.uniform(0.0, 0.3)
    adj = [0] * n
    for u in range(n):
        for w in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << w
                adj[w] |= 1 << u
    if case == "b" and not any(adj[u] >> w & 1 for u in B for w in B):
        u, w = rng.sample(B, 2)
        adj[u] |= 1 << w
        adj[w] |= 1 << u
    for b in B:
        _raise_degree(adj, b, D, rng, n)
    floor = n - D + t + 4
    for v in (x, y):
        _raise_degree(adj, v, floor, rng, n)
    # equal endpoint degrees, so the path is a genuine violation
    hi = max(adj[x].bit_count(), adj[y].bit_count())
    _raise_degree(adj, x, hi, rng, n, avoid=y)
    _raise_degree(adj, y, hi, rng, n, avoid=x)
    inst = find_special(LemmaInstance(Graph(n, tuple(adj)), B, x, y, D, k, case))
    if case == "c" and inst.cross is None:
        outside = set(B) | {x, y}
        i, j = rng.sample(range(t), 2)
        left = [a for a in range(n) if adj[B[i]] >> a & 1 and a not in outside]
        right = [a for a in range(n) if adj[B[j]] >> a & 1 and a not in outside]
        a2, a2p = next((a, c) for a in left for c in right if a != c)
        adj[a2] |= 1 << a2p
        adj[a2p] |= 1 << a2
        inst = replace(inst, g=Graph(n, tuple(adj)), cross=(i, j, a2, a2p))
    if case == "c" and rng.random() < 0.5:
        inst = find_special(replace(inst, cross=None))
    return inst
