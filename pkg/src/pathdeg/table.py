"""Per-n comparison rows: construction, known value, exact search, gap."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .bounds import even_case_bound, even_quarter_constants, known_values
from .constructions import certificate
from .graph import from_graph6
from .search import SearchRecord

COLUMNS = [
    "ell", "n", "certificate", "certificate_verified", "known_kind", "known_value", "exact",
    "witness_count", "gap", "known_matches", "quarter", "quarter_explicit", "exceeds_quarter",
    "exceeds_explicit", "proof_bound_holds",
]


def quarter_constant(k: int) -> Fraction:
    """C with e(G) <= n^2/4 + C n for every n >= 1 (even length 2k, k >= 3)."""
    c1, c0 = even_quarter_constants(k)
    return c1 + c0


def table_row(ell: int, n: int, record: SearchRecord) -> dict:
    cert = certificate(ell, n)
    known = known_values(ell, n)
    row = {
        "ell": ell,
        "n": n,
        "certificate": cert.edges,
        "certificate_verified": cert.verified,
        "known_kind": known.kind if known else "",
        "known_value": known.value if known else "",
        "exact": record.p,
        "witness_count": record.witness_count,
        "gap": record.p - cert.edges,
        "known_matches": "",
        "quarter": "",
        "quarter_explicit": "",
        "exceeds_quarter": "",
        "exceeds_explicit": "",
        "proof_bound_holds": "",
    }
    if known:
        row["known_matches"] = record.p == known.value if known.kind == "exact" else record.p >= known.value
    if ell % 2 == 0 and ell >= 6:
        k = ell // 2
        quarter = Fraction(n * n, 4)
        explicit = quarter + quarter_constant(k) * n
        row["quarter"] = _fmt(quarter)
        row["quarter_explicit"] = _fmt(explicit)
        row["exceeds_quarter"] = record.p > quarter
        row["exceeds_explicit"] = record.p > explicit
        row["proof_bound_holds"] = all(
            even_case_bound(from_graph6(w), k).holds for w in record.witnesses
        )
    return row


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"columns": COLUMNS, "rows": rows}, sort_keys=True, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({c: _cell(r[c]) for c in COLUMNS})
    return buf.getvalue()


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return v
