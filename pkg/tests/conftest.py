import itertools

import pytest
from hypothesis import strategies as st

from treeideals.graph import Graph, tree_from_prufer

ACCEPTANCE_LINES: list[str] = []


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def edgeless(n):
    return Graph(n, (0,) * n)


def star(k):
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def naive_minimal_covers(g):
    """Minimal covers straight from the definition, smallest-first."""
    edges = g.edges()

    def covers(s):
        return all(u in s or v in s for u, v in edges)

    out = []
    for r in range(g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            s = set(s)
            if covers(s) and all(not covers(s - {v}) for v in s):
                out.append(sum(1 << v for v in s))
    return sorted(out)


@st.composite
def trees(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)))
    return tree_from_prufer(seq, n)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""
    def record(number, text, ok):
        ACCEPTANCE_LINES.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}")
        return ok
    return record
