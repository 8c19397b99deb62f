"""Cross-checks between closed forms, brute force, tree DPs, Hochster and Taylor.

Each check returns a ``CheckResult``; a failing one carries a counterexample
(edge list plus expected/actual) small enough to paste into a bug report.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

import networkx as nx

from . import formulas
from .covers import (
    DEFAULT_CAP,
    count_maximal_independent_sets_tree,
    enumerate_minimal_covers,
    maximal_independent_masks,
    maximum_matching_size,
    min_maximal_independent_set_tree,
    root_split_tree,
    vertex_cover_number,
)
from .graph import Graph, is_tree, perfect_binary_tree, popcount, random_tree, serialize_edge_list
from .hochster import graded_betti, finely_graded_betti_values, independence_complex
from .ideal import decomposition_holds, primary_decomposition
from .linalg import Field
from .taylor import taylor_betti_totals

HOMOLOGY_MAX_HEIGHT = 3


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    counterexample: dict | None = None


@dataclass
class VerifyConfig:
    max_height: int = 3
    random_trees: int = 100
    max_n: int = 12
    seed: int = 0
    cap: int = DEFAULT_CAP
    skip_homology: bool = False
    threads: int = 1
    budget_secs: float | None = None
    field: Field = field(default_factory=Field)


class _Mismatch(Exception):
    def __init__(self, what: str, g: Graph | None, expected, actual):
        super().__init__(what)
        self.payload = {
            "what": what,
            "graph": serialize_edge_list(g) if g is not None else None,
            "expected": expected,
            "actual": actual,
        }


def _expect(what: str, expected, actual, g: Graph | None = None) -> None:
    if expected != actual:
        raise _Mismatch(what, g, expected, actual)


def small_connected_graphs(max_vertices: int = 5, max_edges: int = 6) -> list[Graph]:
    """Connected graphs up to isomorphism, from the networkx graph atlas."""
    out = []
    for a in nx.graph_atlas_g():
        n = a.number_of_nodes()
        if 1 <= n <= max_vertices and a.number_of_edges() <= max_edges and nx.is_connected(a):
            out.append(Graph.from_edges(n, a.edges()))
    return out


def sample_trees(k: int, max_n: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_tree(rng.randint(2, max_n), rng) for _ in range(k)]


def _heights(cfg: VerifyConfig, upper: int) -> range:
    return range(1, min(cfg.max_height, upper) + 1)


# combinatorial checks on perfect trees

def check_tree_counts(cfg):
    for h in range(0, min(cfg.max_height, 5) + 1):
        g, shape = perfect_binary_tree(h)
        leaves = sum(1 for v in range(g.n) if g.degree(v) <= 1 and shape.level_of[v] == h)
        _expect(f"T_{h} counts", (formulas.n_vertices(h), formulas.n_edges(h), formulas.n_leaves(h)),
                (g.n, g.n_edges, leaves), g)
        _expect(f"T_{h} perfect shape", True, is_tree(g) and shape.is_perfect_binary(), g)
    return "vertex/edge/leaf counts and shape for h <= %d" % min(cfg.max_height, 5)


def check_m_sequence(cfg):
    for h in range(0, min(cfg.max_height, 5) + 1):
        g, shape = perfect_binary_tree(h)
        _expect(f"m_{h} tree DP", formulas.m_recursive(h), count_maximal_independent_sets_tree(g, shape), g)
        if g.n <= min(cfg.cap, 15):
            _expect(f"m_{h} brute force", formulas.m_recursive(h), len(maximal_independent_masks(g, cfg.cap)), g)
    return "m_h closed recursion = tree DP (= brute force where n <= cap)"


def check_alpha(cfg):
    for h in _heights(cfg, 5):
        g, _ = perfect_binary_tree(h)
        _expect(f"alpha(T_{h})", formulas.alpha_closed(h), vertex_cover_number(g), g)
    for h in range(2, 21):
        a = formulas.alpha_closed
        _expect(f"alpha recursion at h={h}", a(h), min(1 + 2 * a(h - 1), 2 + 4 * a(h - 2)))
    return "alpha closed form = exact cover number; min-recursion for h in [2,20]"


def check_koenig_perfect(cfg):
    for h in _heights(cfg, 5):
        g, _ = perfect_binary_tree(h)
        _expect(f"matching(T_{h})", formulas.alpha_closed(h), maximum_matching_size(g), g)
    return "maximum matching of T_h = alpha closed form"


def check_depth_q(cfg):
    for h in _heights(cfg, 5):
        g, shape = perfect_binary_tree(h)
        _expect(f"q(T_{h}) DP", formulas.depth_closed(h), min_maximal_independent_set_tree(g, shape), g)
        if g.n <= min(cfg.cap, 15):
            q = min(popcount(w) for w in maximal_independent_masks(g, cfg.cap))
            _expect(f"q(T_{h}) brute force", formulas.depth_closed(h), q, g)
    return "depth closed form = q(T_h)"


def check_root_split(cfg):
    for h in range(2, min(cfg.max_height, 5) + 1):
        g, shape = perfect_binary_tree(h)
        if g.n <= min(cfg.cap, 15):
            covers = maximal_independent_masks(g, cfg.cap)
            root_out = sum(1 for w in covers if w & 1)
            root_in = len(covers) - root_out
        else:
            root_out, root_in = root_split_tree(g, shape)
        _expect(f"T_{h} covers avoiding root", formulas.m_recursive(h - 2) ** 4, root_out, g)
        _expect(f"T_{h} cover total", formulas.m_recursive(h), root_in + root_out, g)
    return "covers avoiding the root number m_{h-2}^4; both cases sum to m_h"


def check_decomposition_perfect(cfg):
    for h in _heights(cfg, 3):
        g, _ = perfect_binary_tree(h)
        comps = primary_decomposition(g, cfg.cap)
        _expect(f"|components(T_{h})|", formulas.m_recursive(h), len(comps), g)
        _expect(f"I(T_{h}) = intersection", None, decomposition_holds(g, comps), g)
    return "primary components of I(T_h) number m_h and intersect to I(T_h)"


def check_closed_identities(cfg):
    for h in range(1, 65):
        n = formulas.n_vertices(h)
        _expect(f"depth+pd at h={h}", n, formulas.depth_closed(h) + formulas.pd_closed(h))
        _expect(f"alpha+beta at h={h}", n, formulas.alpha_closed(h) + formulas.beta_closed(h))
    return "depth + pd = alpha + beta = 2^{h+1} - 1 for h in [1,64]"


# random-tree property checks

def check_random_covers(cfg):
    trees = sample_trees(cfg.random_trees, min(cfg.max_n, 14), cfg.seed)
    for g in trees:
        mis = maximal_independent_masks(g, cfg.cap)
        _expect("MIS count: DP vs brute force", len(mis), count_maximal_independent_sets_tree(g), g)
        alpha = g.n - max(popcount(w) for w in mis)
        _expect("cover number: brute force vs DP", alpha, vertex_cover_number(g), g)
        _expect("Koenig", alpha, maximum_matching_size(g), g)
        _expect("m <= 2^alpha", True, len(mis) <= 2**alpha, g)
        _expect("q: brute force vs DP", min(popcount(w) for w in mis), min_maximal_independent_set_tree(g), g)
        facets = independence_complex(g).facets()
        _expect("facets = cover complements", sorted(mis),
                sorted(g.full_mask ^ c.bits for c in enumerate_minimal_covers(g, cfg.cap)), g)
        _expect("facets = maximal independent sets", sorted(mis), facets, g)
    return f"{len(trees)} random trees: counts, Koenig, m <= 2^alpha, q, facets"


def check_random_decomposition(cfg):
    trees = sample_trees(max(cfg.random_trees // 2, 50), min(cfg.max_n, 12), cfg.seed + 1)
    for g in trees:
        _expect("I(G) = intersection of cover primes", None, decomposition_holds(g), g)
    return f"{len(trees)} random trees: membership identity over all squarefree monomials"


# homological checks

def _betti_kw(cfg):
    return {"workers": cfg.threads, "budget_secs": cfg.budget_secs}


def check_betti_perfect(cfg):
    for h in _heights(cfg, HOMOLOGY_MAX_HEIGHT):
        g, shape = perfect_binary_tree(h)
        t = graded_betti(g, cfg.field, **_betti_kw(cfg))
        if t.partial:
            raise _Mismatch(f"T_{h} Hochster run exceeded budget", g, "complete", "partial")
        _expect(f"pd(T_{h})", formulas.pd_closed(h), t.projective_dimension(), g)
        _expect(f"depth(T_{h})", formulas.depth_closed(h), t.depth(), g)
        _expect(f"depth(T_{h}) = q", min_maximal_independent_set_tree(g, shape), t.depth(), g)
        _expect(f"last Betti(T_{h})", 1, t.last_total_betti(), g)
        _expect(f"beta_1(T_{h})", formulas.n_edges(h), t.totals()[1], g)
    return "pd, depth = q, last total Betti = 1 for T_h, h <= %d" % min(cfg.max_height, HOMOLOGY_MAX_HEIGHT)


def check_zero_one_law(cfg):
    trees = sample_trees(cfg.random_trees, min(cfg.max_n, 12), cfg.seed + 2)
    for g in trees:
        fine = finely_graded_betti_values(g, cfg.field)
        bad = {f"{i},{s}": v for (i, s), v in fine.items() if v not in (0, 1)}
        _expect("finely graded Betti values in {0,1}", {}, bad, g)
        t = graded_betti(g, cfg.field)
        _expect("beta_0 and beta_1", (1, g.n_edges), tuple(t.totals()[:2]), g)
    return f"{len(trees)} random trees: finely graded Betti numbers are 0 or 1"


def _oracle_graphs() -> list[Graph]:
    return small_connected_graphs(5, 6) + [perfect_binary_tree(2)[0]]


def check_taylor(cfg):
    graphs = _oracle_graphs()
    for g in graphs:
        _expect("Hochster vs Taylor", taylor_betti_totals(g), graded_betti(g, Field.rationals()).entries, g)
    return f"{len(graphs)} graphs: Hochster Betti tables = Taylor complex oracle"


def check_fields(cfg):
    graphs = _oracle_graphs()
    for g in graphs:
        ref = graded_betti(g, Field.rationals()).entries
        for p in (2, 32749):
            _expect(f"Betti over GF({p}) vs QQ", ref, graded_betti(g, Field(p)).entries, g)
    return f"{len(graphs)} graphs: Betti tables agree over GF(2), GF(32749), QQ"


COMBINATORIAL: list[tuple[str, Callable]] = [
    ("tree-counts", check_tree_counts),
    ("m-sequence", check_m_sequence),
    ("alpha-closed-form", check_alpha),
    ("koenig-perfect", check_koenig_perfect),
    ("depth-equals-q", check_depth_q),
    ("cover-root-split", check_root_split),
    ("primary-decomposition", check_decomposition_perfect),
    ("closed-form-identities", check_closed_identities),
    ("random-tree-covers", check_random_covers),
    ("random-tree-decomposition", check_random_decomposition),
]

HOMOLOGICAL: list[tuple[str, Callable]] = [
    ("betti-perfect-trees", check_betti_perfect),
    ("betti-zero-one-law", check_zero_one_law),
    ("taylor-oracle", check_taylor),
    ("field-independence", check_fields),
]


def iter_checks(cfg: VerifyConfig) -> Iterator[CheckResult]:
    suites = COMBINATORIAL + ([] if cfg.skip_homology else HOMOLOGICAL)
    for name, fn in suites:
        try:
            detail = fn(cfg)
        except _Mismatch as exc:
            yield CheckResult(name, False, str(exc), exc.payload)
        else:
            yield CheckResult(name, True, detail)


def run_verify(cfg: VerifyConfig) -> list[CheckResult]:
    return list(iter_checks(cfg))

