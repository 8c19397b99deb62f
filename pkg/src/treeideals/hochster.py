"""Graded Betti numbers of edge ideals through Hochster's formula.

For a squarefree support ``sigma`` the finely graded Betti number is

    beta_{i, sigma}(S/I(G)) = dim H~_{|sigma| - i - 1}(Ind(G[sigma]))

where ``Ind`` is the independence complex.  Reduced homology is computed from
ranks of boundary matrices of the augmented chain complex (the empty face
spans degree -1).

Two exact shortcuts are applied by default and can be switched off:

* if ``G[sigma]`` has an isolated vertex, ``Ind(G[sigma])`` is a cone and has
  no reduced homology;
* ``Ind`` of a disjoint union is the join of the pieces, whose reduced
  homology over a field is the shifted tensor product of the pieces'
  (Künneth formula for joins).  Pieces are cached by their relabelled
  adjacency.
"""
from __future__ import annotations

import json
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import NotATree, TooLargeForHochster
from .graph import Graph, induced_subgraph, is_tree, iter_bits, popcount
from .linalg import Field

HOCHSTER_CAP = 16


@dataclass
class SimplicialComplex:
    """Independence complex of a graph, with faces generated on demand."""

    n_verts: int
    adj: tuple[int, ...]
    _faces: list[list[int]] | None = field(default=None, repr=False)

    def is_face(self, mask: int) -> bool:
        return all(not self.adj[v] & mask for v in iter_bits(mask))

    def faces_by_size(self) -> list[list[int]]:
        """``faces[k]`` lists the faces with ``k`` vertices, ascending by mask."""
        if self._faces is None:
            faces = [0]
            for v in range(self.n_verts):
                bit = 1 << v
                faces += [f | bit for f in faces if not f & self.adj[v]]
            by_size: list[list[int]] = [[] for _ in range(self.n_verts + 1)]
            for f in faces:
                by_size[popcount(f)].append(f)
            while len(by_size) > 1 and not by_size[-1]:
                by_size.pop()
            self._faces = [sorted(fs) for fs in by_size]
        return self._faces

    def facets(self) -> list[int]:
        faces = [f for fs in self.faces_by_size() for f in fs]
        return sorted(f for f in faces if all(f | (1 << v) == f or not self.is_face(f | (1 << v))
                                               for v in range(self.n_verts)))


def independence_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(g.n, g.adj)


def boundary_matrix(lower: list[int], upper: list[int]) -> np.ndarray:
    """Boundary map from faces in ``upper`` (k+1 vertices) to ``lower`` (k vertices).

    Removing the vertex at sorted position ``t`` carries sign ``(-1)**t``.
    """
    index = {f: r for r, f in enumerate(lower)}
    m = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for c, f in enumerate(upper):
        for t, v in enumerate(iter_bits(f)):
            m[index[f ^ (1 << v)], c] = -1 if t & 1 else 1
    return m


def reduced_homology_ranks(k: SimplicialComplex, fld: Field = Field(), check: bool = False) -> dict[int, int]:
    """Nonzero ``dim H~_d`` keyed by ``d`` (``d >= -1``)."""
    faces = k.faces_by_size()
    # rank of the map from faces with s vertices to faces with s - 1 vertices
    ranks = [0] * (len(faces) + 1)
    prev = None
    for s in range(1, len(faces)):
        mat = boundary_matrix(faces[s - 1], faces[s])
        if check and prev is not None and prev.size and mat.size:
            assert not (prev @ mat).any(), "boundary of boundary is nonzero"
        ranks[s] = fld.rank(mat)
        prev = mat
    out = {}
    for s, fs in enumerate(faces):
        h = len(fs) - ranks[s] - ranks[s + 1]
        if h:
            out[s - 1] = h
    return out


def _join(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = defaultdict(int)
    for i, x in a.items():
        for j, y in b.items():
            out[i + j + 1] += x * y
    return dict(out)


class _HomologyCache:
    def __init__(self, g: Graph, fld: Field, shortcuts: bool, check: bool):
        self.g = g
        self.fld = fld
        self.shortcuts = shortcuts
        self.check = check
        self.memo: dict[tuple[int, ...], dict[int, int]] = {}

    def _direct(self, sub: Graph) -> dict[int, int]:
        key = sub.adj
        hit = self.memo.get(key)
        if hit is None:
            hit = reduced_homology_ranks(independence_complex(sub), self.fld, self.check)
            self.memo[key] = hit
        return hit

    def of(self, sigma: int) -> dict[int, int]:
        g = self.g
        if not self.shortcuts:
            return self._direct(induced_subgraph(g, sigma))
        for v in iter_bits(sigma):
            if not g.adj[v] & sigma:
                return {}
        acc = {-1: 1}
        local = induced_subgraph(g, sigma)
        for comp in local.components():
            acc = _join(acc, self._direct(induced_subgraph(local, comp)))
            if not acc:
                break
        return acc


def _fine_chunk(args) -> tuple[dict[tuple[int, int], int], bool]:
    g, fld, shortcuts, check, sigmas, deadline = args
    cache = _HomologyCache(g, fld, shortcuts, check)
    fine: dict[tuple[int, int], int] = {}
    for sigma in sigmas:
        if deadline is not None and time.monotonic() > deadline:
            return fine, True
        size = popcount(sigma)
        for d, rank in cache.of(sigma).items():
            fine[(size - 1 - d, sigma)] = rank
    return fine, False


@dataclass
class BettiTable:
    """Graded Betti numbers of S/I.  ``entries[(i, j)]`` is beta_{i,j}.

    ``fine`` keeps the squarefree multidegree refinement ``(i, sigma)`` when
    available.  ``partial`` marks a run cut short by a time budget.
    """

    n_vars: int
    entries: dict[tuple[int, int], int]
    fine: dict[tuple[int, int], int] | None = None
    partial: bool = False
    field_name: str = ""

    @classmethod
    def from_fine(cls, n_vars: int, fine: dict[tuple[int, int], int], **kw) -> BettiTable:
        entries: dict[tuple[int, int], int] = defaultdict(int)
        for (i, sigma), v in fine.items():
            if v:
                entries[(i, popcount(sigma))] += v
        return cls(n_vars, dict(sorted(entries.items())), fine, **kw)

    def totals(self) -> list[int]:
        out = [0] * (self.projective_dimension() + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def projective_dimension(self) -> int:
        return max(i for (i, _), v in self.entries.items() if v)

    def depth(self) -> int:
        return self.n_vars - self.projective_dimension()

    def last_total_betti(self) -> int:
        return self.totals()[-1]

    def to_dict(self) -> dict:
        return {
            "n": self.n_vars,
            "entries": [{"i": i, "j": j, "count": v} for (i, j), v in sorted(self.entries.items())],
            "pd": self.projective_dimension(),
            "depth": self.depth(),
            "last_total_betti": self.last_total_betti(),
            "partial": self.partial,
            "field": self.field_name,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def render(self) -> str:
        """Macaulay2-style table: columns i, rows j - i."""
        pd = self.projective_dimension()
        rows = sorted({j - i for (i, j) in self.entries})
        cells = {(j - i, i): v for (i, j), v in self.entries.items()}
        width = max(len(str(v)) for v in self.totals() + list(range(pd + 1))) + 1
        label_w = max(len("total:"), *(len(f"{r}:") for r in rows))
        lines = [" " * label_w + "".join(str(i).rjust(width) for i in range(pd + 1))]
        lines.append("total:".rjust(label_w) + "".join(str(v).rjust(width) for v in self.totals()))
        for r in rows:
            line = f"{r}:".rjust(label_w)
            line += "".join(str(cells.get((r, i), ".")).rjust(width) for i in range(pd + 1))
            lines.append(line)
        return "\n".join(lines)


def finely_graded_betti(
    g: Graph,
    fld: Field = Field(),
    *,
    workers: int = 1,
    budget_secs: float | None = None,
    shortcuts: bool = True,
    check: bool = False,
    cap: int = HOCHSTER_CAP,
) -> tuple[dict[tuple[int, int], int], bool]:
    """Nonzero ``beta_{i,sigma}`` keyed by ``(i, sigma)``, plus a partial flag."""
    if g.n > cap:
        raise TooLargeForHochster(f"{g.n} vertices exceeds Hochster cap {cap}")
    deadline = None if budget_secs is None else time.monotonic() + budget_secs
    # ascending popcount, then mask: small supports first so partial runs are usable
    sigmas = sorted(range(1, 1 << g.n), key=lambda s: (popcount(s), s))
    fine = {(0, 0): 1}
    partial = False
    if workers > 1 and len(sigmas) > 64:
        chunks = [sigmas[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_fine_chunk, [(g, fld, shortcuts, check, c, deadline) for c in chunks]))
    else:
        results = [_fine_chunk((g, fld, shortcuts, check, sigmas, deadline))]
    for part, cut in results:
        fine.update(part)
        partial |= cut
    return dict(sorted(fine.items(), key=lambda kv: (kv[0][0], popcount(kv[0][1]), kv[0][1]))), partial


def graded_betti(g: Graph, fld: Field = Field(), **kw) -> BettiTable:
    fine, partial = finely_graded_betti(g, fld, **kw)
    return BettiTable.from_fine(g.n, fine, partial=partial, field_name=fld.name)


def finely_graded_betti_values(g: Graph, fld: Field = Field(), **kw) -> dict[tuple[int, int], int]:
    """Finely graded Betti numbers of a tree (the 0/1 law applies only to trees)."""
    if not is_tree(g):
        raise NotATree("finely graded 0/1 values are only defined here for trees")
    fine, _ = finely_graded_betti(g, fld, **kw)
    return fine


def projective_dimension(t: BettiTable) -> int:
    return t.projective_dimension()


def depth(t: BettiTable) -> int:
    return t.depth()


def last_total_betti(t: BettiTable) -> int:
    return t.last_total_betti()
