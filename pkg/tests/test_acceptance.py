"""Exit criteria.  Each test records a PASS/FAIL line shown in the terminal summary."""
import time

import pytest

from treeideals.covers import (
    count_maximal_independent_sets_tree,
    maximal_independent_masks,
    maximum_matching_size,
    min_maximal_independent_set_size,
    vertex_cover_number,
)
from treeideals.formulas import alpha_closed, depth_closed, m_recursive, n_vertices, pd_closed
from treeideals.graph import perfect_binary_tree
from treeideals.hochster import finely_graded_betti_values, graded_betti
from treeideals.ideal import decomposition_holds, primary_decomposition
from treeideals.linalg import Field
from treeideals.taylor import taylor_betti_totals
from treeideals.verify import sample_trees, small_connected_graphs

SEED = 20240601


def oracle_graphs():
    return small_connected_graphs(5, 6) + [perfect_binary_tree(2)[0]]


def test_c1_m_sequence(criterion):
    start = time.perf_counter()
    seq = [m_recursive(h) for h in range(6)]
    dp = [count_maximal_independent_sets_tree(*perfect_binary_tree(h)) for h in range(5)]
    brute = [len(maximal_independent_masks(perfect_binary_tree(h)[0])) for h in range(4)]
    elapsed = time.perf_counter() - start
    ok = seq == [1, 2, 4, 23, 736, 591137] and dp == seq[:5] and brute == seq[:4] and elapsed < 1.0
    criterion(1, f"m_h = {seq}; DP h<=4 and brute force h<=3 agree; {elapsed:.2f}s < 1s", ok)
    assert ok


def test_c2_alpha_closed_form(criterion):
    start = time.perf_counter()
    computed = [vertex_cover_number(perfect_binary_tree(h)[0]) for h in range(1, 5)]
    closed = [alpha_closed(h) for h in range(1, 5)]
    a = alpha_closed
    recursion = all(a(h) == min(1 + 2 * a(h - 1), 2 + 4 * a(h - 2)) for h in range(2, 21))
    elapsed = time.perf_counter() - start
    ok = computed == closed == [1, 2, 5, 10] and recursion and elapsed < 1.0
    criterion(2, f"alpha(T_1..T_4) = {computed}; min-recursion on [2,20]; {elapsed:.2f}s < 1s", ok)
    assert ok


def test_c3_koenig(criterion):
    start = time.perf_counter()
    perfect = all(maximum_matching_size(perfect_binary_tree(h)[0]) == alpha_closed(h) for h in range(1, 5))
    trees = sample_trees(120, 14, SEED)
    brute = []
    for g in trees:
        largest_mis = max(bin(w).count("1") for w in maximal_independent_masks(g))
        brute.append(maximum_matching_size(g) == g.n - largest_mis == vertex_cover_number(g))
    elapsed = time.perf_counter() - start
    ok = perfect and all(brute) and len(trees) >= 100 and elapsed < 5.0
    criterion(3, f"matching = alpha on T_1..T_4 and {len(trees)} random trees n<=14; {elapsed:.2f}s < 5s", ok)
    assert ok


def test_c4_primary_decomposition(criterion):
    start = time.perf_counter()
    counts = [len(primary_decomposition(perfect_binary_tree(h)[0])) for h in range(1, 4)]
    trees = sample_trees(60, 12, SEED + 1)
    identity = all(decomposition_holds(g) is None for g in trees)
    elapsed = time.perf_counter() - start
    ok = counts == [m_recursive(h) for h in range(1, 4)] and identity and len(trees) >= 50 and elapsed < 30.0
    criterion(4, f"|components| = {counts}; membership identity on {len(trees)} trees; {elapsed:.2f}s < 30s", ok)
    assert ok


def test_c5_depth_equals_q(criterion):
    # the closed forms give 1, 2, 5, 9 at h = 1..4 (h = 4 is the case h = 3m + 1, m = 1)
    start = time.perf_counter()
    q = [min_maximal_independent_set_size(perfect_binary_tree(h)[0]) for h in range(1, 5)]
    closed = [depth_closed(h) for h in range(1, 5)]
    elapsed = time.perf_counter() - start
    ok = q == closed == [1, 2, 5, 9] and elapsed < 5.0
    criterion(5, f"q(T_1..T_4) = depth closed form = {q}; {elapsed:.2f}s < 5s", ok)
    assert ok


def test_c6_homological_golden(criterion):
    timings = {}
    tables = {}
    for h in (1, 2, 3):
        start = time.perf_counter()
        tables[h] = graded_betti(perfect_binary_tree(h)[0])
        timings[h] = time.perf_counter() - start
    t1, t2, t3 = tables[1], tables[2], tables[3]
    ok = (
        t1.totals() == [1, 2, 1] and t1.projective_dimension() == 2
        and t2.projective_dimension() == 5 and t2.totals()[5] == 1
        and t3.projective_dimension() == 10 and t3.depth() == 5 and t3.totals()[10] == 1
        and not any(t.partial for t in tables.values())
        and timings[1] < 1.0 and timings[2] < 1.0 and timings[3] <= 600.0
    )
    criterion(6, f"T_1 totals {t1.totals()}; pd(T_2)={t2.projective_dimension()}, "
                 f"pd(T_3)={t3.projective_dimension()}, depth(T_3)={t3.depth()}, last=1; "
                 f"T_3 in {timings[3]:.1f}s", ok)
    assert ok


def test_c7_taylor_cross_oracle(criterion):
    start = time.perf_counter()
    graphs = oracle_graphs()
    bad = [g for g in graphs if graded_betti(g, Field.rationals()).entries != taylor_betti_totals(g)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120.0
    criterion(7, f"Hochster = Taylor on {len(graphs)} graphs (connected, <=5 vertices, <=6 edges, plus T_2); "
                 f"{elapsed:.1f}s < 120s", ok)
    assert ok, [g.edges() for g in bad]


def test_c8_zero_one_law(criterion):
    start = time.perf_counter()
    trees = sample_trees(120, 12, SEED + 2)
    bad = [g for g in trees if not set(finely_graded_betti_values(g).values()) <= {0, 1}]
    elapsed = time.perf_counter() - start
    ok = not bad and len(trees) >= 100 and elapsed < 600.0
    criterion(8, f"finely graded Betti numbers in {{0,1}} on {len(trees)} random trees n<=12; {elapsed:.1f}s", ok)
    assert ok, [g.edges() for g in bad]


def test_c9_field_independence(criterion):
    graphs = oracle_graphs()
    bad = []
    for g in graphs:
        tables = {f.name: graded_betti(g, f).entries for f in (Field(2), Field(32749), Field.rationals())}
        if len({tuple(sorted(t.items())) for t in tables.values()}) != 1:
            bad.append((g.edges(), tables))
    ok = not bad
    criterion(9, f"GF(2), GF(32749), QQ tables coincide on {len(graphs)} graphs", ok)
    assert ok, bad


def test_c10_closed_form_scale(criterion):
    start = time.perf_counter()
    ok = all(depth_closed(h) + pd_closed(h) == n_vertices(h) for h in range(1, 65))
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    criterion(10, f"depth + pd = 2^(h+1) - 1 for h in [1,64] (closed forms only beyond h=3); {elapsed:.3f}s", ok)
    assert ok


@pytest.mark.slow
def test_c6_direct_route_agrees():
    # Same T_3 table with the cone and join shortcuts disabled.
    g = perfect_binary_tree(3)[0]
    assert graded_betti(g, shortcuts=False).entries == graded_betti(g).entries
