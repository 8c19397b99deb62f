"""Bitset-backed simple graphs, rooted tree shapes and perfect binary trees.

Vertices are 0-based internally and 1-based in every external format, so
vertex ``k`` of a perfect binary tree is printed as ``x_{k+1}``.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .errors import HeightTooLarge, NotATree, ParseError, SelfLoop, TooManyVertices

MAX_VERTICES = 63


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True, order=True)
class VertexSet:
    """A subset of ``range(universe)`` stored as a bitmask."""

    bits: int
    universe: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe:
            raise ValueError(f"mask {self.bits:#x} exceeds universe of {self.universe} vertices")

    @classmethod
    def from_vertices(cls, vertices: Iterable[int], universe: int) -> VertexSet:
        bits = 0
        for v in vertices:
            bits |= 1 << v
        return cls(bits, universe)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, v: int) -> bool:
        return bool(self.bits >> v & 1)

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.universe) - 1) ^ self.bits, self.universe)

    def labels(self) -> list[int]:
        """Sorted 1-based vertex labels."""
        return [v + 1 for v in self]

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.labels())) + "}"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on at most 63 vertices.

    ``adj[v]`` is the neighbour bitmask of ``v``.  ``origin`` maps vertices of an
    induced subgraph back to the graph it was cut from.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    origin: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise TooManyVertices(f"{self.n} vertices; at most {MAX_VERTICES} supported")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise ValueError(f"vertex {v + 1} adjacent to itself")
            if nb >> self.n:
                raise ValueError(f"vertex {v + 1} has a neighbour outside the graph")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v + 1}, {u + 1})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        """Build from 0-based edge pairs; duplicates are merged."""
        if n > MAX_VERTICES:
            raise TooManyVertices(f"{n} vertices; at most {MAX_VERTICES} supported")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u + 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def edge_masks(self) -> list[int]:
        return [(1 << u) | (1 << v) for u, v in self.edges()]

    @property
    def n_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def vertex_set(self, bits: int) -> VertexSet:
        return VertexSet(bits, self.n)

    def is_independent(self, mask: int) -> bool:
        return all(not self.adj[v] & mask for v in iter_bits(mask))

    def is_cover(self, mask: int) -> bool:
        return self.is_independent(self.full_mask ^ mask)

    def components(self) -> list[int]:
        """Connected components as bitmasks, ordered by lowest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def induced_subgraph(g: Graph, s: VertexSet | int) -> Graph:
    """The subgraph induced on ``s``, relabelled ``0..|s|-1`` in increasing order."""
    bits = s.bits if isinstance(s, VertexSet) else s
    if bits >> g.n:
        raise ValueError("vertex set not contained in graph")
    keep = list(iter_bits(bits))
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        nb = 0
        for u in iter_bits(g.adj[v] & bits):
            nb |= 1 << index[u]
        adj.append(nb)
    labels = tuple(g.labels[v] for v in keep) if g.labels else None
    return Graph(len(keep), tuple(adj), labels, origin=tuple(keep))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.n_edges == g.n - 1 and len(g.components()) == 1


def is_bipartite(g: Graph) -> tuple[int, int] | None:
    """Return a 2-colouring as ``(side0, side1)`` masks, or None."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side0 = sum(1 << v for v in range(g.n) if color[v] == 0)
    return side0, g.full_mask ^ side0


@dataclass(frozen=True)
class TreeShape:
    """A rooted tree: parent pointers, levels and height."""

    parent: tuple[int | None, ...]
    level_of: tuple[int, ...]
    height: int

    @classmethod
    def rooted(cls, g: Graph, root: int = 0) -> TreeShape:
        if not is_tree(g):
            raise NotATree("graph is not a tree")
        parent: list[int | None] = [None] * g.n
        level = [0] * g.n
        seen = 1 << root
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v] & ~seen):
                seen |= 1 << u
                parent[u] = v
                level[u] = level[v] + 1
                queue.append(u)
        return cls(tuple(parent), tuple(level), max(level))

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def root(self) -> int:
        return self.parent.index(None)

    def children(self, v: int) -> list[int]:
        return [u for u, p in enumerate(self.parent) if p == v]

    def bottom_up(self) -> list[int]:
        """Vertices ordered so every child precedes its parent."""
        return sorted(range(self.n), key=lambda v: (-self.level_of[v], v))

    def edges(self) -> list[tuple[int, int]]:
        return sorted((min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p is not None)

    def is_perfect_binary(self) -> bool:
        for v in range(self.n):
            k = len(self.children(v))
            if k == 0 and self.level_of[v] != self.height:
                return False
            if k not in (0, 2):
                return False
        return True


def perfect_binary_tree(h: int) -> tuple[Graph, TreeShape]:
    """Perfect binary tree of height ``h`` in level order.

    Externally vertex 1 is the root and vertex ``k`` has children ``2k`` and
    ``2k + 1``.
    """
    if h < 0:
        raise ValueError("height must be nonnegative")
    n = 2 ** (h + 1) - 1
    if n > MAX_VERTICES:
        raise HeightTooLarge(f"height {h} needs {n} vertices; graphs hold at most {MAX_VERTICES}")
    edges = [(k - 1, c - 1) for k in range(1, n + 1) for c in (2 * k, 2 * k + 1) if c <= n]
    g = Graph.from_edges(n, edges)
    parent = tuple(None if k == 1 else k // 2 - 1 for k in range(1, n + 1))
    level = tuple((k).bit_length() - 1 for k in range(1, n + 1))
    return g, TreeShape(parent, level, h)


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines of 1-based labels, with an optional ``n <count>`` header.

    Blank lines and ``#`` comments are skipped; repeated edges are merged.
    """
    declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None or edges or len(parts) != 2:
                raise ParseError(f"line {lineno}: misplaced or malformed vertex-count header")
            try:
                declared = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if declared < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer label in {line!r}") from None
        if u < 1 or v < 1:
            raise ParseError(f"line {lineno}: labels are 1-based")
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u - 1, v - 1))
    top = max((max(e) + 1 for e in edges), default=0)
    if declared is None:
        if not edges:
            raise ParseError("no edges and no vertex-count header")
        n = top
    else:
        if top > declared:
            raise ParseError(f"label {top} exceeds declared vertex count {declared}")
        n = declared
    if n > MAX_VERTICES:
        raise TooManyVertices(f"{n} vertices; at most {MAX_VERTICES} supported")
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def tree_from_prufer(seq: Sequence[int], n: int) -> Graph:
    """Labelled tree on ``n`` vertices from a Prüfer sequence of 0-based labels."""
    if n == 1:
        return Graph(1, (0,))
    t = nx.from_prufer_sequence(list(seq)) if n > 2 else nx.path_graph(2)
    return Graph.from_edges(n, t.edges())


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniformly random labelled tree on ``n`` vertices."""
    seq = [rng.randrange(n) for _ in range(max(n - 2, 0))]
    return tree_from_prufer(seq, n)
