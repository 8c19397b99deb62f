"""Edge ideals as squarefree monomial supports.

A squarefree monomial is identified with its support bitmask, so divisibility
is mask containment and no polynomial ring is needed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .covers import DEFAULT_CAP, count_maximal_independent_sets_tree, enumerate_minimal_covers, vertex_cover_number
from .graph import Graph, TreeShape, VertexSet, is_tree, iter_bits


def _monomial(mask: int) -> str:
    return "*".join(f"x{v + 1}" for v in iter_bits(mask)) or "1"


@dataclass(frozen=True)
class MonomialIdeal:
    n_vars: int
    generators: tuple[VertexSet, ...]

    def __post_init__(self):
        gens = [g.bits for g in self.generators]
        for a in gens:
            for b in gens:
                if a != b and a & b == a:
                    raise ValueError(f"{_monomial(a)} divides {_monomial(b)}; generating set not minimal")

    def contains(self, mask: int) -> bool:
        """Whether the squarefree monomial with support ``mask`` lies in the ideal."""
        return any(g.bits & mask == g.bits for g in self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(_monomial(g.bits) for g in self.generators) + ")" if self.generators else "(0)"


@dataclass(frozen=True)
class PrimeComponent:
    """The monomial prime generated by the variables in ``vars``."""

    vars: VertexSet

    def contains(self, mask: int) -> bool:
        return bool(self.vars.bits & mask)

    def labels(self) -> list[int]:
        return self.vars.labels()

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{v}" for v in self.labels()) + ")"


def edge_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal(g.n, tuple(VertexSet(m, g.n) for m in g.edge_masks()))


def primary_decomposition(g: Graph, cap: int = DEFAULT_CAP) -> list[PrimeComponent]:
    """One prime per minimal vertex cover, ascending by cover bitmask."""
    return [PrimeComponent(c) for c in enumerate_minimal_covers(g, cap)]


def decomposition_holds(g: Graph, components: list[PrimeComponent] | None = None) -> int | None:
    """Check that I(G) equals the intersection of its components on every
    squarefree monomial.  Returns the first offending support, or None."""
    ideal = edge_ideal(g)
    if components is None:
        components = primary_decomposition(g)
    for mask in range(1 << g.n):
        if ideal.contains(mask) != all(p.contains(mask) for p in components):
            return mask
    return None


def num_associated_primes(g: Graph, shape: TreeShape | None = None, cap: int = DEFAULT_CAP) -> int:
    if shape is not None or is_tree(g):
        return count_maximal_independent_sets_tree(g, shape)
    return len(enumerate_minimal_covers(g, cap))


def krull_dimension(g: Graph) -> int:
    return g.n - vertex_cover_number(g)


def decomposition_to_json(components: list[PrimeComponent]) -> list[list[int]]:
    return [p.labels() for p in components]
