"""Minimal vertex covers, maximal independent sets, matchings.

Two independent routes are provided for the counting quantities: a
brute-force scan over all ``2**n`` vertex subsets and dynamic programmes over
a rooted tree.  A subset ``W`` is a maximal independent set exactly when, for
every vertex ``v``, "``v`` in ``W``" and "``v`` has a neighbour in ``W``" differ;
minimal covers are the complements.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import NotATree, NotBipartite, TooLargeForEnumeration
from .graph import Graph, TreeShape, VertexSet, is_bipartite, is_tree, iter_bits, popcount

DEFAULT_CAP = 24
_CHUNK = 1 << 18


def _scan_chunk(adj: tuple[int, ...], start: int, stop: int) -> np.ndarray:
    s = np.arange(start, stop, dtype=np.uint64)
    ok = np.ones(len(s), dtype=bool)
    zero = np.uint64(0)
    for v, nb in enumerate(adj):
        inside = (s >> np.uint64(v)) & np.uint64(1) != zero
        dominated = (s & np.uint64(nb)) != zero
        ok &= inside != dominated
    return s[ok]


def maximal_independent_masks(g: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> list[int]:
    """All maximal independent sets as sorted bitmasks, by exhaustive scan."""
    if g.n > cap:
        raise TooLargeForEnumeration(f"{g.n} vertices exceeds enumeration cap {cap}")
    total = 1 << g.n
    bounds = [(a, min(a + _CHUNK, total)) for a in range(0, total, _CHUNK)]
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda b: _scan_chunk(g.adj, *b), bounds))
    else:
        parts = [_scan_chunk(g.adj, a, b) for a, b in bounds]
    return [int(x) for part in parts for x in part]


def enumerate_minimal_covers(g: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> list[VertexSet]:
    """Every minimal vertex cover, ascending by bitmask."""
    full = g.full_mask
    covers = sorted(full ^ w for w in maximal_independent_masks(g, cap, workers))
    return [VertexSet(c, g.n) for c in covers]


def is_minimal_cover(g: Graph, mask: int) -> bool:
    return g.is_cover(mask) and all(not g.is_cover(mask & ~(1 << v)) for v in iter_bits(mask))


def _shape_for(g: Graph, shape: TreeShape | None) -> TreeShape:
    if not is_tree(g):
        raise NotATree("tree dynamic programme needs a tree")
    if shape is None:
        return TreeShape.rooted(g)
    if shape.edges() != g.edges():
        raise ValueError("tree shape does not match graph edges")
    return shape


def _children_lists(shape: TreeShape) -> list[list[int]]:
    kids: list[list[int]] = [[] for _ in range(shape.n)]
    for v, p in enumerate(shape.parent):
        if p is not None:
            kids[p].append(v)
    return kids


def count_maximal_independent_sets_tree(g: Graph, shape: TreeShape | None = None) -> int:
    """Exact number of maximal independent sets of a tree.

    Per vertex, three states over its subtree: in the set; out and dominated
    by a child; out and waiting for the parent to dominate it.
    """
    return sum(root_split_tree(g, shape))


def root_split_tree(g: Graph, shape: TreeShape | None = None) -> tuple[int, int]:
    """Maximal independent sets of a tree split as (containing root, avoiding root).

    Equivalently: minimal covers avoiding the root, minimal covers containing it.
    """
    shape = _shape_for(g, shape)
    kids = _children_lists(shape)
    inn = [0] * g.n
    dom = [0] * g.n
    wait = [0] * g.n
    for v in shape.bottom_up():
        a = math.prod(dom[c] + wait[c] for c in kids[v])
        b_any = math.prod(inn[c] + dom[c] for c in kids[v])
        b_none = math.prod(dom[c] for c in kids[v])
        inn[v], dom[v], wait[v] = a, b_any - b_none, b_none
    r = shape.root
    return inn[r], dom[r]


def min_maximal_independent_set_tree(g: Graph, shape: TreeShape | None = None) -> int:
    """Smallest maximal independent set of a tree (same three states, min-plus)."""
    shape = _shape_for(g, shape)
    kids = _children_lists(shape)
    inf = math.inf
    inn = [0.0] * g.n
    dom = [0.0] * g.n
    wait = [0.0] * g.n
    for v in shape.bottom_up():
        cs = kids[v]
        inn[v] = 1 + sum(min(dom[c], wait[c]) for c in cs)
        wait[v] = sum(dom[c] for c in cs)
        if cs:
            base = sum(min(inn[c], dom[c]) for c in cs)
            dom[v] = base + min(max(inn[c] - dom[c], 0) for c in cs)
        else:
            dom[v] = inf
    r = shape.root
    return int(min(inn[r], dom[r]))


def _vertex_cover_tree(g: Graph, shape: TreeShape | None = None) -> int:
    shape = _shape_for(g, shape)
    kids = _children_lists(shape)
    take = [0] * g.n
    skip = [0] * g.n
    for v in shape.bottom_up():
        take[v] = 1 + sum(min(take[c], skip[c]) for c in kids[v])
        skip[v] = sum(take[c] for c in kids[v])
    r = shape.root
    return min(take[r], skip[r])


def _vertex_cover_bnb(adj: tuple[int, ...], alive: int, size: int, best: int) -> int:
    # alive: vertices still present; edges are those between alive vertices
    pick, pick_deg = -1, 0
    for v in iter_bits(alive):
        d = popcount(adj[v] & alive)
        if d > pick_deg:
            pick, pick_deg = v, d
    if pick_deg == 0:
        return size
    if size + 1 >= best:
        return best
    best = _vertex_cover_bnb(adj, alive & ~(1 << pick), size + 1, best)
    nb = adj[pick] & alive
    if size + pick_deg < best:
        best = _vertex_cover_bnb(adj, alive & ~nb & ~(1 << pick), size + pick_deg, best)
    return best


def vertex_cover_number(g: Graph) -> int:
    """Exact minimum vertex cover size: tree DP on trees, branch-and-bound otherwise."""
    if g.n_edges == 0:
        return 0
    if is_tree(g):
        return _vertex_cover_tree(g)
    return _vertex_cover_bnb(g.adj, g.full_mask, 0, g.n)


def min_maximal_independent_set_size(g: Graph, cap: int = DEFAULT_CAP) -> int:
    if is_tree(g):
        return min_maximal_independent_set_tree(g)
    return min(popcount(w) for w in maximal_independent_masks(g, cap))


def maximum_matching_size(g: Graph) -> int:
    """Maximum matching of a bipartite graph by augmenting paths."""
    sides = is_bipartite(g)
    if sides is None:
        raise NotBipartite("graph has an odd cycle")
    left = sides[0]
    mate = [-1] * g.n

    def augment(v: int, seen: list[bool]) -> bool:
        for u in iter_bits(g.adj[v]):
            if seen[u]:
                continue
            seen[u] = True
            if mate[u] < 0 or augment(mate[u], seen):
                mate[u] = v
                mate[v] = u
                return True
        return False

    size = 0
    for v in iter_bits(left):
        if augment(v, [False] * g.n):
            size += 1
    return size


@dataclass
class CoverCensus:
    """Cover and independence invariants of one graph.

    Fields that could not be computed within the caps are None and explained
    in ``missing``.
    """

    n: int
    alpha: int
    beta: int
    m_count: int | None
    q: int | None
    matching: int | None
    covers: list[VertexSet] | None = None
    missing: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in ("n", "alpha", "beta", "m_count", "q", "matching")}
        if self.covers is not None:
            d["covers"] = [c.labels() for c in self.covers]
        if self.missing:
            d["missing"] = dict(self.missing)
        return d


def census(g: Graph, cap: int = DEFAULT_CAP, list_covers: bool = False) -> CoverCensus:
    alpha = vertex_cover_number(g)
    missing: dict[str, str] = {}
    tree = is_tree(g)
    m_count = q = matching = None
    covers = None
    try:
        m_count = count_maximal_independent_sets_tree(g) if tree else len(maximal_independent_masks(g, cap))
    except TooLargeForEnumeration as exc:
        missing["m_count"] = str(exc)
    try:
        q = min_maximal_independent_set_size(g, cap)
    except TooLargeForEnumeration as exc:
        missing["q"] = str(exc)
    try:
        matching = maximum_matching_size(g)
    except NotBipartite as exc:
        missing["matching"] = str(exc)
    if list_covers:
        try:
            covers = enumerate_minimal_covers(g, cap)
        except TooLargeForEnumeration as exc:
            missing["covers"] = str(exc)
    return CoverCensus(g.n, alpha, g.n - alpha, m_count, q, matching, covers, missing)
