"""Exact p_ell(n) for even ell beside n^2/4, the explicit quarter bound and the half graph.

Writes one CSV per ell into the output directory (same columns as
``pathdeg table``).  Results are cached, so reruns are instant.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from pathdeg.cache import ResultCache
from pathdeg.search import p_canonical
from pathdeg.table import render, table_row


@dataclass
class Config:
    ells: list[int] = field(default_factory=lambda: [4, 6, 8])
    nmax: int = 10
    out: Path = Path("results")
    cache: Path = Path("results/pathdeg-cache.jsonl")


def main(cfg: Config) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    cache = ResultCache(cfg.cache)
    for ell in cfg.ells:
        rows = []
        for n in range(ell + 1, cfg.nmax + 1):
            rec = cache.get(ell, n, "canonical")
            if rec is None:
                rec = p_canonical(n, ell)
                cache.put(rec)
            rows.append(table_row(ell, n, rec))
        text = render(rows, "csv")
        (cfg.out / f"even_ell{ell}.csv").write_text(text)
        print(f"# ell = {ell}")
        print(text, end="")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ells", type=int, nargs="+", default=[4, 6, 8])
    ap.add_argument("--nmax", type=int, default=10)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    main(Config(args.ells, args.nmax, args.out, args.out / "pathdeg-cache.jsonl"))
