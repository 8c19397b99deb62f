"""Exact matrix rank over GF(p) and over the rationals."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sympy import isprime

DEFAULT_PRIME = 32749
# (p - 1)**2 must fit in int64 during row updates
_MAX_PRIME = 3_037_000_493


@dataclass(frozen=True)
class Field:
    """GF(p) when ``p`` is set, the rationals when ``p`` is None."""

    p: int | None = DEFAULT_PRIME

    def __post_init__(self):
        if self.p is not None:
            if not isprime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p > _MAX_PRIME:
                raise ValueError(f"prime {self.p} too large for int64 elimination")

    @classmethod
    def rationals(cls) -> Field:
        return cls(None)

    @property
    def name(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    def rank(self, m) -> int:
        return rank_mod_p(m, self.p) if self.p is not None else rank_rational(m)


def rank_mod_p(m, p: int) -> int:
    """Rank of an integer matrix reduced modulo the prime ``p``."""
    a = np.array(m, dtype=np.int64) % p
    if a.size == 0:
        return 0
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        below = r + 1 + np.flatnonzero(a[r + 1:, c])
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def rank_rational(m) -> int:
    """Exact rank over Q by fraction-free (Bareiss) elimination on Python ints."""
    a = [[int(x) for x in row] for row in np.asarray(m, dtype=object).tolist()] if len(m) else []
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(r + 1, rows):
            row = a[i]
            f = row[c]
            # exact division by the previous pivot is the Bareiss invariant
            a[i] = [(pv * row[j] - f * pr[j]) // prev for j in range(cols)]
        prev = pv
        r += 1
    return r
