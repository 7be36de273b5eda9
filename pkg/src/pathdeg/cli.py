"""Command-line entry point.

Machine-readable payloads go to stdout; everything for humans goes to
stderr.  Exit codes: 0 ok, 2 usage, 3 cost guard, 10 violation found,
70 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .bounds import (
    HypothesisError,
    claim_X_check,
    edge_sum_bound,
    even_case1_bound,
    known_values,
    odd_case1_bound,
    structural_edge_bound,
)
from .cache import ResultCache, resolve_path
from .constructions import certificate, complete_bipartite, half_graph
from .graph import Graph6Error, from_graph6
from .lemma import ConstructionFailure, LemmaInstance, build_path, find_special, validate_instance
from .paths import find_violation
from .search import CostGuardError, SearchRecord, p_canonical, p_labeled
from .table import render, table_row

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_COST = 3
EXIT_VIOLATION = 10
EXIT_INTERNAL = 70

log = logging.getLogger("pathdeg")


class UsageError(Exception):
    pass


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _graph(s: str):
    try:
        return from_graph6(s)
    except Graph6Error as exc:
        raise UsageError(f"bad graph6 {s!r}: {exc}") from exc


def _ints(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {s!r}") from exc


def _search(args, ell: int, n: int, method: str) -> SearchRecord:
    cache = None if args.no_cache else ResultCache(resolve_path(args.cache))
    if cache is not None:
        hit = cache.get(ell, n, method)
        if hit is not None:
            log.info("cache hit for ell=%d n=%d method=%s", ell, n, method)
            return hit
    if method == "labeled":
        rec = p_labeled(n, ell)
    else:
        rec = p_canonical(n, ell, workers=args.threads)
    log.info("p_%d(%d) = %d via %s search in %.2fs", ell, n, rec.p, method, rec.elapsed)
    if cache is not None:
        cache.put(rec)
    return rec


def cmd_check(args) -> int:
    g = _graph(args.graph6)
    if not 1 <= args.ell < g.n:
        raise UsageError(f"--ell must satisfy 1 <= ell < n = {g.n}")
    viol = find_violation(g, args.ell)
    if viol is None:
        _emit({"graph6": args.graph6, "ell": args.ell, "result": "avoider", "edges": g.edge_count})
        return EXIT_OK
    _emit({"graph6": args.graph6, "ell": args.ell, "result": "violation", "edges": g.edge_count,
           "violation": viol.to_json()})
    return EXIT_VIOLATION


def cmd_pfn(args) -> int:
    if not 1 <= args.ell < args.n:
        raise UsageError("need 1 <= ell < n")
    rec = _search(args, args.ell, args.n, args.method)
    out = rec.to_json()
    if args.witnesses is not None:
        out["witnesses"] = out["witnesses"][: args.witnesses]
    _emit(out)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "complete-bipartite":
        a, b = args.params
        g = complete_bipartite(a, b)
        payload = {"construction": f"K_{{{a},{b}}}", "graph6": g.to_graph6(), "n": g.n, "edges": g.edge_count}
    elif args.kind == "half-graph":
        (m,) = args.params
        g = half_graph(m)
        payload = {"construction": f"half_graph({m})", "graph6": g.to_graph6(), "n": g.n, "edges": g.edge_count}
    else:
        ell, n = args.params
        cert = certificate(ell, n)
        g = cert.graph
        payload = cert.to_json()
    sys.stdout.write(g.to_graph6() + "\n")
    _emit(payload)
    return EXIT_OK


def _construct_args(args) -> None:
    want = {"complete-bipartite": 2, "half-graph": 1, "certificate": 2}[args.kind]
    if len(args.params) != want:
        raise UsageError(f"construct {args.kind} takes {want} integer argument(s)")


def cmd_lemma(args) -> int:
    g = _graph(args.graph)
    inst = LemmaInstance(
        g, tuple(_ints(args.b)), args.x, args.y, args.d, args.k, args.case,
        edge=tuple(_ints(args.edge)) if args.edge else None,
        cross=tuple(_ints(args.cross)) if args.cross else None,
    )
    inst = find_special(inst)
    check = validate_instance(inst)
    if not check:
        _emit({"valid": False, "reason": check.reason, "detail": check.detail})
        raise UsageError(f"invalid lemma instance: {check.reason} ({check.detail})")
    path = build_path(inst)
    out = {"valid": True, "case": inst.case, "instance": inst.to_json()}
    out.update(path.to_json())
    _emit(out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    p = args.params
    kind = args.kind
    try:
        if kind == "known":
            ell, n = (int(x) for x in _exact(p, 2))
            kv = known_values(ell, n)
            _emit({"name": "known", "inputs": {"ell": ell, "n": n},
                   "kind": kv.kind if kv else None, "value": kv.value if kv else None})
            return EXIT_OK
        if kind == "edge-sum":
            rep = edge_sum_bound(*(int(x) for x in _exact(p, 3)))
        elif kind == "even-case1":
            rep = even_case1_bound(*(int(x) for x in _exact(p, 2)))
        elif kind == "odd-case1":
            rep = odd_case1_bound(*(int(x) for x in _exact(p, 3)))
        elif kind == "claim-x":
            g6, d = _exact(p, 2)
            rep = claim_X_check(_graph(g6), int(d))
        else:
            g6, d = _exact(p, 2)
            rep = structural_edge_bound(_graph(g6), int(d))
    except HypothesisError as exc:
        raise UsageError(f"hypotheses not met: {exc}") from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(rep.to_json())
    return EXIT_OK


def _exact(params: list[str], count: int) -> list[str]:
    if len(params) != count:
        raise UsageError(f"expected {count} arguments, got {len(params)}")
    return params


def cmd_table(args) -> int:
    if args.nmin > args.nmax:
        raise UsageError("--nmin exceeds --nmax")
    rows = []
    for n in range(max(args.nmin, args.ell + 1), args.nmax + 1):
        rec = _search(args, args.ell, n, args.method)
        rows.append(table_row(args.ell, n, rec))
    sys.stdout.write(render(rows, args.out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathdeg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"pathdeg {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def search_opts(p):
        p.add_argument("--cache", help="JSON-lines cache file (default $PATHDEG_CACHE or ./pathdeg-cache.jsonl)")
        p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
        p.add_argument("--threads", type=int, default=1, help="worker processes for the canonical search")
        p.add_argument("--method", choices=["labeled", "canonical"], default="canonical")

    p = sub.add_parser("check", help="test a graph for an equal-degree path of length ell")
    p.add_argument("graph6")
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("pfn", help="exact p_ell(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--witnesses", type=int, help="list at most this many witnesses")
    search_opts(p)
    p.set_defaults(func=cmd_pfn)

    p = sub.add_parser("construct", help="build a lower-bound construction")
    p.add_argument("kind", choices=["complete-bipartite", "half-graph", "certificate"])
    p.add_argument("params", type=int, nargs="+")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("lemma", help="build a long xy-path through high-degree vertices")
    p.add_argument("--case", choices=["a", "b", "c"], required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--b", required=True, help="comma-separated vertices b_1..b_t")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--edge", help="case b: U,W edge inside B (default: first found)")
    p.add_argument("--cross", help="case c: I,J,A,A' (default: first found)")
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("bounds", help="evaluate an explicit bound")
    p.add_argument("kind", choices=["known", "edge-sum", "even-case1", "odd-case1", "claim-x", "structural"])
    p.add_argument("params", nargs="+")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="per-n comparison table")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--nmin", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out", choices=["csv", "json"], default="csv")
    search_opts(p)
    p.set_defaults(func=cmd_table)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if args.command == "construct":
        try:
            _construct_args(args)
        except UsageError as exc:
            parser.print_usage(sys.stderr)
            print(f"pathdeg: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"pathdeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CostGuardError as exc:
        print(f"pathdeg: refused: {exc}", file=sys.stderr)
        return EXIT_COST
    except (ConstructionFailure, AssertionError) as exc:
        print(f"pathdeg: internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"pathdeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
