import random
from fractions import Fraction
from math import ceil, comb

import pytest
import sympy as sp

from pathdeg.bounds import (
    HypothesisError,
    bpartition,
    claim_X_check,
    edge_sum_bound,
    edge_sum_constants,
    even_case1_bound,
    even_case_bound,
    even_quarter_constants,
    interval_sum,
    known_values,
    odd_case1_bound,
    odd_case1_constants,
    structural_edge_bound,
)
from pathdeg.constructions import complete_bipartite, half_graph
from pathdeg.graph import Graph
from pathdeg.paths import find_violation
from pathdeg.search import enumerate_nonisomorphic

from bpart_instances import conforming_instance

C5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


def loop_sum(a, b):
    return sum(range(a, b + 1))


# --------------------------------------------------------------------- known values


@pytest.mark.parametrize(
    "ell, n, kind, value",
    [(3, 9, "exact", 20), (2, 6, "exact", 6), (6, 10, "lower_bound", 15), (3, 8, "exact", 15),
     (3, 5, "exact", 6), (4, 8, "lower_bound", 10)],
)
def test_known_values(ell, n, kind, value):
    kv = known_values(ell, n)
    assert (kv.kind, kv.value) == (kind, value)


@pytest.mark.parametrize("ell, n", [(3, 4), (3, 3), (1, 9), (5, 9), (2, 7), (4, 9)])
def test_known_values_absent(ell, n):
    assert known_values(ell, n) is None


def test_known_value_formulas():
    for m in range(2, 30):
        assert known_values(3, 2 * m + 1).value == m * m + m
        assert known_values(2, 2 * m).value == m * (m + 1) // 2
    for m in range(3, 30):
        assert known_values(3, 2 * m).value == m * m - 1


# --------------------------------------------------------------------- even case 1


def test_even_case1_example():
    rep = even_case1_bound(20, 3)
    assert rep.details["middle"] == 267 and rep.details["relaxed"] == 290 and rep.holds


def test_even_case1_degenerate():
    rep = even_case1_bound(6, 3)
    assert rep.details["middle"] == 1 * 6 + 5 * Fraction(6)


def test_even_case1_sweep():
    for k in range(1, 9):
        for n in range(2 * k, 201):
            rep = even_case1_bound(n, k)
            assert rep.holds
            assert rep.quantity == (k - 2) * n + (n - k + 2) * (Fraction(n, 2) + k)


def test_even_case1_two_e():
    assert even_case1_bound(20, 3, two_e=267).holds
    assert not even_case1_bound(20, 3, two_e=268).holds


def test_even_case1_guard():
    with pytest.raises(ValueError):
        even_case1_bound(5, 3)


# --------------------------------------------------------------------- edge sum


def three_term(n, k, d):
    lo = n - d + k + 3
    return (k - 1) * n + loop_sum(lo, d) + (n - (d - lo) + 1) * (n - d + k + 2)


def test_interval_sum():
    assert interval_sum(5, 4) == 0 == loop_sum(5, 4)
    assert all(interval_sum(a, b) == loop_sum(a, b) for a in range(-3, 12) for b in range(-3, 12))


def test_edge_sum_example():
    rep = edge_sum_bound(40, 3, 26)
    assert rep.details["three_term"] == rep.details["binomial"] == three_term(40, 3, 26)
    assert rep.details["identity_holds"] and rep.holds


def test_edge_sum_range_errors():
    with pytest.raises(ValueError):
        edge_sum_bound(40, 3, 23)
    with pytest.raises(ValueError):
        edge_sum_bound(40, 3, 41)


def test_edge_sum_sweep():
    count = 0
    for k in range(3, 7):
        c1, c0 = edge_sum_constants(k)
        for n in range(20, 121):
            for d in range(ceil(Fraction(n, 2) + k + 1), n + 1):
                rep = edge_sum_bound(n, k, d)
                assert rep.details["identity_holds"]
                assert rep.details["three_term"] == three_term(n, k, d)
                assert rep.quantity <= Fraction(n * n, 2) + c1 * n + c0
                assert rep.holds
                count += 1
    assert count > 10000


def _nonneg_beyond(poly, n, n0):
    """True when the polynomial in n is >= 0 for every real n >= n0."""
    poly = sp.Poly(sp.expand(poly), n)
    if poly.is_zero:
        return True
    if poly.degree() == 0:
        return poly.LC() >= 0
    if poly.LC() < 0 or poly.eval(n0) < 0:
        return False
    return all(r < n0 for r in sp.real_roots(poly))


def _convex_max_ok(expr, s, lo, hi, bound, n, n0):
    assert sp.Poly(sp.expand(expr), s).coeff_monomial(s**2) >= 0
    return all(_nonneg_beyond(bound - expr.subs(s, end), n, n0) for end in (lo, hi))


@pytest.mark.parametrize("k", range(1, 9))
def test_edge_sum_constant_symbolically(k):
    # with s = n - delta the binomial form is a convex quadratic in s, so its
    # maximum over s in [0, n/2 - k - 1] sits at an end of the interval
    n, s = sp.symbols("n s")
    d = n - s
    lo = n - d + k + 3
    binom = (k - 1) * n + (d + 1) * d / 2 - lo * (lo - 1) / 2 + (2 * n - 2 * d + k + 4) * (n - d + k + 2)
    closed = (k - 1) * n + (lo + d) * (d - lo + 1) / 2 + (n - (d - lo) + 1) * (n - d + k + 2)
    assert sp.expand(binom - closed) == 0
    c1, c0 = edge_sum_constants(k)
    bound = n**2 / 2 + sp.Rational(c1) * n + sp.Rational(c0)
    assert _convex_max_ok(binom, s, 0, n / 2 - k - 1, bound, n, 2 * k + 2)


@pytest.mark.parametrize("k", range(1, 9))
def test_odd_case1_constant_symbolically(k):
    n, s = sp.symbols("n s")
    d = n - s
    lo = n - d + k + 4
    c1, c0 = odd_case1_constants(k)
    bound = n**2 / 2 + sp.Rational(c1) * n + sp.Rational(c0)
    full = (k + 2) * n + (lo + d) * (d - lo + 1) / 2 + (n - (d - lo) + 1) * (n - d + k + 3)
    empty = (k + 2) * n + (n - (d - lo) + 1) * (n - d + k + 3)
    # summation non-empty for s <= (n - k - 4)/2, empty beyond
    assert _convex_max_ok(full, s, 0, (n - k - 4) / 2, bound, n, k + 4)
    assert _convex_max_ok(empty, s, (n - k - 3) / 2, n / 2, bound, n, 1)


def test_odd_case1_examples_and_sweep():
    rep = odd_case1_bound(40, 3, 24)
    lo = 40 - 24 + 7
    assert rep.quantity == 5 * 40 + loop_sum(lo, 24) + (40 - (24 - lo) + 1) * (40 - 24 + 6)
    assert rep.holds
    edge = odd_case1_bound(30, 2, 30)
    assert edge.quantity == 4 * 30 + loop_sum(6, 30) + (30 - 24 + 1) * 5
    for k in range(1, 9):
        for n in range(2, 201):
            for d in range(ceil(n / 2), n + 1):
                assert odd_case1_bound(n, k, d).holds
    with pytest.raises(ValueError):
        odd_case1_bound(40, 3, 19)


def test_even_quarter_constants_cover_all_cases():
    for k in range(3, 9):
        c1, c0 = even_quarter_constants(k)
        e1, e0 = edge_sum_constants(k)
        for n in range(2 * k, 120):
            q = Fraction(n * n, 4) + c1 * n + c0
            # case 1 with the largest admissible delta
            d = (n + 2 * k + 1) // 2
            assert Fraction((k - 2) * n + (n - k + 2) * d, 2) <= q
            for d in range(ceil(Fraction(n, 2) + k + 1), n + 1):
                assert Fraction((k - 1) * n + d + (n - k) * (n - d + k + 2), 2) <= q
                assert Fraction(n * n, 4) + (e1 * n + e0) / 2 <= q


# --------------------------------------------------------------------- partition bounds


def test_bpartition_examples():
    p = bpartition(complete_bipartite(3, 20), 16)
    assert p.B == frozenset(range(3)) and p.X == frozenset(range(3, 23))
    assert all(not ys for ys in p.Y.values()) and not p.R and p.hypotheses_hold
    assert bpartition(half_graph(4), 5).B == frozenset()
    c5 = bpartition(C5, 2)
    assert c5.B == frozenset(range(5)) and not c5.b_independent and not c5.hypotheses_hold


def test_k3_20_worked_example():
    g = complete_bipartite(3, 20)
    claim = claim_X_check(g, 16)
    assert claim.quantity == 20 and claim.value == Fraction(23, 4) and claim.holds
    struct = structural_edge_bound(g, 16)
    assert struct.value == struct.quantity == 60 and struct.holds


def test_trivial_cases():
    assert claim_X_check(complete_bipartite(2, 10), 8).value == 0
    empty = structural_edge_bound(Graph.empty(7), 3)
    assert empty.value == 21 and empty.quantity == 0 and empty.holds


def test_refusals():
    with pytest.raises(HypothesisError) as info:
        claim_X_check(C5, 2)
    assert info.value.hypothesis == "b-independent"
    with pytest.raises(HypothesisError):
        structural_edge_bound(C5, 2)
    linked = Graph.from_edges(8, [(0, 2), (0, 4), (0, 6), (1, 3), (1, 5), (1, 7), (2, 3)])
    with pytest.raises(HypothesisError) as info:
        claim_X_check(linked, 3)
    assert info.value.hypothesis == "neighborhoods-separated"
    with pytest.raises(HypothesisError) as info:
        claim_X_check(complete_bipartite(1, 5), 5)
    assert info.value.hypothesis == "b-size"


def _partition_is_consistent(g, part):
    nb = set(part.NB)
    ys = set().union(*part.Y.values()) if part.Y else set()
    assert part.X | ys == nb
    assert not part.X & ys
    assert not part.B & part.R and not nb & part.R
    assert part.B | nb | part.R == set(range(g.n))


def test_conforming_instances():
    rng = random.Random(7)
    for _ in range(500):
        g, D = conforming_instance(rng)
        part = bpartition(g, D)
        assert part.hypotheses_hold and len(part.B) >= 2
        _partition_is_consistent(g, part)
        assert claim_X_check(g, D).holds
        assert structural_edge_bound(g, D).holds


def test_partition_on_arbitrary_graphs():
    rng = random.Random(8)
    for _ in range(300):
        n = rng.randint(2, 20)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
        D = rng.randint(0, n)
        part = bpartition(g, D)
        assert part.B == {v for v in range(n) if g.degree(v) >= D}
        if part.b_independent:
            _partition_is_consistent(g, part)


# --------------------------------------------------------------------- proof replay


@pytest.mark.parametrize("n", [7, 8])
def test_even_replay_on_all_avoiders(n):
    held = 0
    for g in enumerate_nonisomorphic(n):
        if find_violation(g, 6) is None:
            rep = even_case_bound(g, 3)
            assert rep.holds, rep.to_json()
            held += 1
    assert held > 0


def test_even_replay_guard():
    with pytest.raises(ValueError):
        even_case_bound(half_graph(3), 2)
