"""Exact integer combinatorics: binomials, Stirling numbers, and the
coefficients of (1 - t)(1 - 2t) ... (1 - nt).

Everything returns plain Python integers, so results stay exact at any
size.  No floating point is used anywhere in this package.
"""

from __future__ import annotations

import math
import threading

__all__ = [
    "StirlingTables",
    "binomial",
    "stirling2",
    "stirling1_signed",
    "falling_factorial_coeffs",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial expects non-negative arguments")
    if k > n:
        return 0
    return math.comb(n, k)


class StirlingTables:
    """Memoized triangles of Stirling numbers, grown on demand.

    second_kind(p, k) counts partitions of a p-set into k nonempty blocks
    and satisfies {p, k} = {p-1, k-1} + k * {p-1, k}.  first_kind_signed(n, k)
    is the coefficient of x^k in x(x-1)...(x-n+1) and satisfies
    s(n, k) = s(n-1, k-1) - (n-1) * s(n-1, k).

    Rows are appended under a lock and never mutated afterwards, so
    lookups from concurrent threads are safe.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._second: list[list[int]] = [[1]]
        self._first: list[list[int]] = [[1]]

    def second_kind(self, p: int, k: int) -> int:
        if p < 0 or k < 0:
            raise ValueError("Stirling indices must be non-negative")
        if k > p:
            return 0
        if len(self._second) <= p:
            self._grow_second(p)
        return self._second[p][k]

    def first_kind_signed(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("Stirling indices must be non-negative")
        if k > n:
            return 0
        if len(self._first) <= n:
            self._grow_first(n)
        return self._first[n][k]

    def _grow_second(self, p: int) -> None:
        with self._lock:
            while len(self._second) <= p:
                q = len(self._second)
                prev = self._second[q - 1]
                row = [0] * (q + 1)
                for k in range(1, q):
                    row[k] = prev[k - 1] + k * prev[k]
                row[q] = 1
                self._second.append(row)

    def _grow_first(self, n: int) -> None:
        with self._lock:
            while len(self._first) <= n:
                q = len(self._first)
                prev = self._first[q - 1]
                row = [0] * (q + 1)
                for k in range(1, q):
                    row[k] = prev[k - 1] - (q - 1) * prev[k]
                row[q] = 1
                self._first.append(row)


_SHARED = StirlingTables()


def stirling2(p: int, k: int) -> int:
    """Stirling number of the second kind {p, k}; {0, 0} = 1."""
    return _SHARED.second_kind(p, k)


def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k)."""
    return _SHARED.first_kind_signed(n, k)


def falling_factorial_coeffs(n: int) -> list[int]:
    """Coefficients c_0..c_n of prod_{j=1..n} (1 - j*t).

    Computed by direct polynomial multiplication, which keeps this an
    independent route from the Stirling recurrence; the two agree through
    c_i = s(n+1, n+1-i).
    """
    if n < 0:
        raise ValueError("need a non-negative number of factors")
    coeffs = [1]
    for j in range(1, n + 1):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c
            nxt[i + 1] -= j * c
        coeffs = nxt
    return coeffs
