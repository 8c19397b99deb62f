"""Betti numbers from the Taylor complex, as an oracle for the Hochster route.

The Taylor resolution of a monomial ideal with generators m_1..m_r has a basis
element e_F for every subset F of generators, in multidegree lcm(m_F).  After
tensoring with the residue field only the faces with lcm(m_{F - j}) = lcm(m_F)
survive in the differential, so for each multidegree b the Betti numbers are
the homology of the complex on {F : lcm(m_F) = b}.  Ranks come from sympy so
that nothing is shared with the implementation being checked.
"""
from __future__ import annotations

from collections import defaultdict

from sympy import Matrix

from .graph import Graph

TAYLOR_MAX_GENERATORS = 8


def taylor_fine_betti(generators: list[int]) -> dict[tuple[int, int], int]:
    """Nonzero ``beta_{i,b}(S/I)`` keyed by ``(i, b)`` for squarefree generator supports."""
    r = len(generators)
    if r > TAYLOR_MAX_GENERATORS:
        raise ValueError(f"Taylor oracle limited to {TAYLOR_MAX_GENERATORS} generators, got {r}")
    lcm = [0] * (1 << r)
    for f in range(1, 1 << r):
        low = (f & -f).bit_length() - 1
        lcm[f] = lcm[f & (f - 1)] | generators[low]
    groups: dict[int, list[int]] = defaultdict(list)
    for f in range(1 << r):
        groups[lcm[f]].append(f)

    out = {}
    for b, subsets in groups.items():
        by_size: dict[int, list[int]] = defaultdict(list)
        for f in subsets:
            by_size[bin(f).count("1")].append(f)

        def diff_rank(i: int) -> int:
            # map from size-i subsets to size-(i-1) subsets within this multidegree
            src, dst = by_size.get(i, []), by_size.get(i - 1, [])
            if not src or not dst:
                return 0
            row = {f: k for k, f in enumerate(dst)}
            m = Matrix.zeros(len(dst), len(src))
            for c, f in enumerate(src):
                members = [j for j in range(r) if f >> j & 1]
                for pos, j in enumerate(members):
                    g = f & ~(1 << j)
                    if g in row:
                        m[row[g], c] = (-1) ** pos
            return m.rank()

        for i in sorted(by_size):
            betti = len(by_size[i]) - diff_rank(i) - diff_rank(i + 1)
            if betti:
                out[(i, b)] = betti
    return out


def taylor_betti_totals(g: Graph) -> dict[tuple[int, int], int]:
    """Coarse ``beta_{i,j}`` of S/I(G) via the Taylor complex."""
    coarse: dict[tuple[int, int], int] = defaultdict(int)
    for (i, b), v in taylor_fine_betti(g.edge_masks()).items():
        coarse[(i, bin(b).count("1"))] += v
    return dict(sorted(coarse.items()))
