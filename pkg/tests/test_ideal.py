import pytest
from hypothesis import given, settings

from conftest import edgeless, graphs, path, star, trees
from treeideals.formulas import beta_closed, m_recursive
from treeideals.graph import Graph, VertexSet, perfect_binary_tree
from treeideals.ideal import (
    MonomialIdeal,
    decomposition_holds,
    decomposition_to_json,
    edge_ideal,
    krull_dimension,
    num_associated_primes,
    primary_decomposition,
)


def test_edge_ideal_of_star():
    i = edge_ideal(star(2))
    assert [g.labels() for g in i.generators] == [[1, 2], [1, 3]]
    assert str(i) == "(x1*x2, x1*x3)"


def test_zero_ideal():
    i = edge_ideal(edgeless(3))
    assert i.generators == () and str(i) == "(0)"
    assert not i.contains(0b111)


def test_perfect_tree_generators():
    assert len(edge_ideal(perfect_binary_tree(2)[0]).generators) == 6


def test_non_minimal_generators_rejected():
    with pytest.raises(ValueError):
        MonomialIdeal(3, (VertexSet(0b011, 3), VertexSet(0b111, 3)))


def test_decomposition_examples():
    assert decomposition_to_json(primary_decomposition(star(2))) == [[1], [2, 3]]
    assert len(primary_decomposition(perfect_binary_tree(2)[0])) == 4
    assert decomposition_to_json(primary_decomposition(path(2))) == [[1], [2]]


@pytest.mark.parametrize("h", [1, 2, 3])
def test_decomposition_counts(h):
    g, _ = perfect_binary_tree(h)
    comps = primary_decomposition(g)
    assert len(comps) == m_recursive(h)
    assert decomposition_holds(g, comps) is None


def test_wrong_decomposition_is_caught():
    g = path(3)
    comps = primary_decomposition(g)[:1]
    assert decomposition_holds(g, comps) is not None


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_membership_identity(g):
    assert decomposition_holds(g) is None


@pytest.mark.parametrize("h, m", [(5, 591137), (3, 23)])
def test_associated_primes(h, m):
    g, shape = perfect_binary_tree(h)
    assert num_associated_primes(g, shape) == m


def test_associated_primes_single_vertex():
    assert num_associated_primes(Graph(1, (0,))) == 1


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=9))
def test_associated_primes_general(g):
    assert num_associated_primes(g) == len(primary_decomposition(g))


@pytest.mark.parametrize("h", [1, 2, 3, 4])
def test_krull_dimension(h):
    assert krull_dimension(perfect_binary_tree(h)[0]) == beta_closed(h)


def test_krull_dimension_edgeless():
    assert krull_dimension(edgeless(4)) == 4


@settings(max_examples=50, deadline=None)
@given(trees(max_n=12))
def test_tree_prime_count(g):
    assert num_associated_primes(g) == len(primary_decomposition(g))
