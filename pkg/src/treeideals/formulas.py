"""Closed-form and recursive invariants of perfect binary trees as exact integers.

All functions take the height ``h`` and work for arbitrarily large ``h``.
Height 0 (a single vertex, zero edge ideal) follows the conventions
alpha=0, beta=1, m=1, depth=1, pd=0.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

_m_memo: list[int] = [1, 2, 4]

# m_h has about 0.6 * 2**h bits; records skip it above this height
RECORD_M_MAX_HEIGHT = 20


def _div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not integral")
    return q


def _check_height(h: int) -> None:
    if h < 0:
        raise ValueError("height must be nonnegative")


def m_recursive(h: int) -> int:
    """Number of minimal vertex covers (= maximal independent sets) of T_h.

    m_0=1, m_1=2, m_2=4 and m_{k+1} = 2 m_k m_{k-2}^4 + m_{k-1}^4 - m_{k-2}^8.
    """
    _check_height(h)
    while len(_m_memo) <= h:
        k = len(_m_memo) - 1
        a, b, c = _m_memo[k], _m_memo[k - 1], _m_memo[k - 2]
        nxt = 2 * a * c**4 + b**4 - c**8
        if nxt <= a:
            raise ArithmeticError(f"m-recursion stopped increasing at height {k + 1}")
        _m_memo.append(nxt)
    return _m_memo[h]


def n_vertices(h: int) -> int:
    return 2 ** (h + 1) - 1


def n_edges(h: int) -> int:
    return 2 ** (h + 1) - 2


def n_leaves(h: int) -> int:
    return 2**h


def alpha_closed(h: int) -> int:
    """Vertex cover number (= matching number) of T_h."""
    _check_height(h)
    if h == 0:
        return 0
    value = _div(2 ** (h + 2) - (3 + (-1) ** h), 6)
    # parity-split form taken from the level-alternating minimum cover
    split = _div(2 ** (h + 1) - 2, 3) if h % 2 == 0 else _div(2 ** (h + 1) - 1, 3)
    assert value == split
    return value


def beta_closed(h: int) -> int:
    """Independence number of T_h, which is also dim S/I(T_h)."""
    _check_height(h)
    if h == 0:
        return 1
    value = _div(2 ** (h + 3) - 3 + (-1) ** h, 6)
    assert value == n_vertices(h) - alpha_closed(h)
    return value


def depth_closed(h: int) -> int:
    """depth S/I(T_h), equal to the smallest size of a maximal independent set."""
    _check_height(h)
    if h == 0:
        return 1
    m, r = divmod(h, 3)
    if r == 0:
        return _div(4 * 8**m + 3, 7)
    if r == 1:
        return _div(8 ** (m + 1) - 1, 7)
    return _div(2 * (8 ** (m + 1) - 1), 7)


def pd_closed(h: int) -> int:
    """Projective dimension of S/I(T_h)."""
    _check_height(h)
    if h == 0:
        return 0
    m, r = divmod(h, 3)
    if r == 0:
        value = _div(10 * (8**m - 1), 7)
    elif r == 1:
        value = _div(20 * 8**m - 6, 7)
    else:
        value = _div(40 * 8**m - 5, 7)
    assert value == n_vertices(h) - depth_closed(h)
    return value


@dataclass(frozen=True)
class InvariantRecord:
    h: int
    n_vertices: int
    n_edges: int
    n_leaves: int
    alpha: int
    beta: int
    m: int | None
    matching: int
    depth: int
    pd: int
    last_betti: int

    def to_dict(self) -> dict:
        return asdict(self)


def record(h: int) -> InvariantRecord:
    """Every closed-form invariant of T_h in one record.

    ``m`` is None above ``RECORD_M_MAX_HEIGHT``; call ``m_recursive`` directly
    if the multi-megabyte integer is really wanted.
    """
    _check_height(h)
    return InvariantRecord(
        h=h,
        n_vertices=n_vertices(h),
        n_edges=n_edges(h),
        n_leaves=n_leaves(h),
        alpha=alpha_closed(h),
        beta=beta_closed(h),
        m=m_recursive(h) if h <= RECORD_M_MAX_HEIGHT else None,
        matching=alpha_closed(h),
        depth=depth_closed(h),
        pd=pd_closed(h),
        last_betti=1,
    )
