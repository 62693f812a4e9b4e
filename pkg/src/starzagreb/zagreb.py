"""General first Zagreb indices Z_p = sum_v deg(v)^p along three routes,
plus the rational generating function of the whole sequence (Z_p)_{p>=0}.

The generating function is N(t) / ((1-t)(1-2t)...(1-nt)) with deg N <= n.
Its denominator drives an order-n linear recurrence that extends Z_p to
arbitrary exponents without computing a single p-th power.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .combinatorics import falling_factorial_coeffs, stirling1_signed, stirling2
from .graph import Graph, degrees
from .star import StarSequence

__all__ = [
    "ZagrebGenFunc",
    "RecurrenceCheck",
    "zagreb_direct",
    "zagreb_from_stars",
    "genfunc_numerator",
    "recurrence_coeffs",
    "zagreb_by_recurrence",
    "verify_recurrence",
]


def zagreb_direct(g: Graph, p: int) -> int:
    """sum_v deg(v)^p with 0^0 = 1, so Z_0 = n and Z_1 = 2m."""
    if p < 0:
        raise ValueError("exponent must be a non-negative integer")
    return sum(d**p for d in degrees(g))


def zagreb_from_stars(s: StarSequence, p: int) -> int:
    """Z_p from star counts: 2*S_1 + sum_{i=2..p} i! {p, i} S_i.

    Valid for p >= 1 only.  At p = 0 the star route would collapse to 2m
    instead of n, so that case is refused; use zagreb_direct.
    """
    if p < 1:
        raise ValueError("star route needs p >= 1; use zagreb_direct for p = 0")
    total = s.adjusted_first
    for i in range(2, min(p, s.n - 1) + 1):
        total += math.factorial(i) * stirling2(p, i) * s.entry(i)
    return total


@dataclass(frozen=True)
class ZagrebGenFunc:
    """Numerator a_0..a_n of the Zagreb generating function over (1-t)...(1-nt).

    a_0 = n always, and a_n = (-1)^n n! f_0, so the numerator degree drops
    below n exactly when the graph has no isolated vertices.
    """

    n: int
    numerator: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("generating function needs at least one vertex")
        if len(self.numerator) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} numerator coefficients")

    @property
    def strictly_proper(self) -> bool:
        """True when the numerator degree is below the denominator degree (a_n = 0)."""
        return self.numerator[-1] == 0

    def denominator_coeffs(self) -> list[int]:
        """c_0..c_n of (1-t)(1-2t)...(1-nt)."""
        return falling_factorial_coeffs(self.n)

    def denominator_factors(self) -> list[str]:
        return ["1-t"] + [f"1-{j}t" for j in range(2, self.n + 1)]


def genfunc_numerator(g: Graph) -> ZagrebGenFunc:
    """Numerator coefficients a_k = sum_{i<=k} s(n+1, n+1-(k-i)) Z_i, k = 0..n."""
    n = g.n
    z = [zagreb_direct(g, p) for p in range(n + 1)]
    num = tuple(
        sum(stirling1_signed(n + 1, n + 1 - (k - i)) * z[i] for i in range(k + 1))
        for k in range(n + 1)
    )
    return ZagrebGenFunc(n=n, numerator=num)


def recurrence_coeffs(n: int) -> list[int]:
    """c_1..c_n with Z_p = -(c_1 Z_{p-1} + ... + c_n Z_{p-n}) for every p > n.

    c_i = s(n+1, n+1-i), the t^i coefficient of (1-t)(1-2t)...(1-nt); the
    coefficient index is tied to the vertex count, never to the exponent.
    """
    if n < 1:
        raise ValueError("recurrence needs at least one vertex")
    return [stirling1_signed(n + 1, n + 1 - i) for i in range(1, n + 1)]


def zagreb_by_recurrence(g: Graph, p: int) -> int:
    """Z_p via the order-n linear recurrence, seeded with direct values.

    Returns the direct value for p <= n; beyond that it slides a window of
    the n previous values forward, so memory stays O(n) for any exponent
    and no p-th powers are ever formed.
    """
    if p < 0:
        raise ValueError("exponent must be a non-negative integer")
    n = g.n
    if p <= n:
        return zagreb_direct(g, p)
    coeffs = recurrence_coeffs(n)
    window = deque((zagreb_direct(g, q) for q in range(1, n + 1)), maxlen=n)
    for _ in range(n + 1, p + 1):
        window.append(-sum(c * z for c, z in zip(coeffs, reversed(window))))
    return window[-1]


@dataclass(frozen=True)
class RecurrenceCheck:
    """Residual Z_p + sum_i c_i Z_{p-i} at one exponent; zero means the relation holds."""

    p: int
    residual: int

    @property
    def holds(self) -> bool:
        return self.residual == 0


def verify_recurrence(g: Graph, p_min: int, p_max: int) -> list[RecurrenceCheck]:
    """Recurrence residuals from direct values for each p in [p_min, p_max].

    The residual is zero for every p >= n+1.  At p = n it equals the top
    numerator coefficient (-1)^n n! f_0, hence vanishes exactly when the
    graph has no isolated vertices; checks may not start below p = n.
    """
    n = g.n
    if p_min < n:
        raise ValueError("recurrence checks start at p = n")
    coeffs = recurrence_coeffs(n)
    z = [zagreb_direct(g, q) for q in range(p_max + 1)]
    out = []
    for p in range(p_min, p_max + 1):
        residual = z[p] + sum(coeffs[i - 1] * z[p - i] for i in range(1, n + 1))
        out.append(RecurrenceCheck(p=p, residual=residual))
    return out
