import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.matrices import DomainMatrix

from treeideals.linalg import Field, rank_mod_p, rank_rational

matrices = st.integers(0, 7).flatmap(
    lambda r: st.integers(0, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_rational_rank_matches_sympy(m):
    expected = sympy.Matrix(m).rank() if m and m[0] else 0
    assert rank_rational(m) == expected


def _gf_rank(m, p):
    dom = sympy.GF(p)
    return DomainMatrix([[dom(x) for x in row] for row in m], (len(m), len(m[0])), dom).rank()


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_mod_p_rank_matches_sympy(m):
    for p in (2, 3, 7, 32749):
        expected = _gf_rank(m, p) if m and m[0] else 0
        assert rank_mod_p(m, p) == expected


def test_characteristic_two_differs():
    m = [[1, 1], [1, -1]]
    assert rank_rational(m) == 2
    assert rank_mod_p(m, 2) == 1
    assert rank_mod_p(m, 3) == 2


def test_field_rejects_composite():
    with pytest.raises(ValueError):
        Field(15)


def test_field_names():
    assert Field().name == "GF(32749)"
    assert Field.rationals().name == "QQ"
    assert Field(2).rank([[1, 1], [1, -1]]) == 1
