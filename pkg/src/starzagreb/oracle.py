"""Brute-force ground truth and the all-identities verifier.

Star counts are recounted here by explicit subset enumeration, labeled
graphs are enumerated exhaustively, and the generating function is expanded
by exact long division.  verify_all_identities replays every identity in
the library against those independent routes; a report that says pass has
every residual identically zero, and disputed sign or index variants are
evaluated both ways and recorded as erratum notes instead of failures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .combinatorics import falling_factorial_coeffs, stirling1_signed
from .graph import Graph, frequency_sequence, to_graph6
from .star import (
    alternating_moment,
    frequency_from_star,
    inverse_degree_edge_sum,
    isolated_count_from_star,
    moment_identity_rhs,
    star_from_frequency,
    star_sequence,
)
from .zagreb import (
    genfunc_numerator,
    recurrence_coeffs,
    verify_recurrence,
    zagreb_by_recurrence,
    zagreb_direct,
    zagreb_from_stars,
)

__all__ = [
    "MAX_ENUM_N",
    "TheoremCheck",
    "TheoremResult",
    "ErratumNote",
    "TheoremReport",
    "count_stars_bruteforce",
    "all_labeled_graphs",
    "labeled_graph_from_mask",
    "series_expand_rational",
    "verify_all_identities",
]

MAX_ENUM_N = 7


def count_stars_bruteforce(g: Graph, k: int) -> int:
    """Count K_{1,k} subgraphs by enumerating (k+1)-subsets and centers.

    No binomial coefficients involved: a subset contributes once per member
    adjacent to all the others.  For k = 1 the two center choices of an
    edge describe the same subgraph, so the ordered count is halved.
    """
    if not 1 <= k <= g.n - 1:
        raise ValueError(f"star size k must be in [1, n-1]; got k = {k} with n = {g.n}")
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    ordered = 0
    for subset in combinations(range(g.n), k + 1):
        mask = 0
        for w in subset:
            mask |= 1 << w
        for c in subset:
            leaves = mask ^ (1 << c)
            if adj[c] & leaves == leaves:
                ordered += 1
    return ordered // 2 if k == 1 else ordered


def labeled_graph_from_mask(n: int, mask: int) -> Graph:
    """The labeled graph whose edge set is the given bitmask over vertex
    pairs in lexicographic order: bit 0 is (0,1), bit 1 is (0,2), ...
    """
    pairs = list(combinations(range(n), 2))
    if not 0 <= mask < 1 << len(pairs):
        raise ValueError(f"mask out of range for n = {n}")
    return Graph(n, frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Yield every labeled simple graph on n vertices exactly once.

    Edge subsets appear as increasing bitmasks over the C(n, 2) vertex
    pairs in lexicographic order, so the stream order is a fixed contract
    and the enumeration can be partitioned across workers by mask range.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= {MAX_ENUM_N}")
    pairs = list(combinations(range(n), 2))
    npairs = len(pairs)
    for mask in range(1 << npairs):
        yield Graph(n, frozenset(pairs[i] for i in range(npairs) if mask >> i & 1))


def series_expand_rational(numerator: Sequence[int], n: int, terms: int) -> list[int]:
    """First power-series coefficients of numerator(t) / prod_{j=1..n} (1 - j t).

    Exact long division: with denominator coefficients c_0..c_n (c_0 = 1),
    z_p = numerator_p - sum_{i=1..min(p,n)} c_i z_{p-i}.
    """
    if n < 1:
        raise ValueError("denominator needs at least one factor")
    if terms < 0:
        raise ValueError("cannot expand a negative number of terms")
    c = falling_factorial_coeffs(n)
    out: list[int] = []
    for p in range(terms):
        acc = numerator[p] if p < len(numerator) else 0
        for q in range(max(0, p - n), p):
            acc -= c[p - q] * out[q]
        out.append(acc)
    return out


@dataclass(frozen=True)
class TheoremCheck:
    """One exact comparison: residual = claimed value minus ground truth."""

    label: str
    residual: int | Fraction

    @property
    def holds(self) -> bool:
        return self.residual == 0


@dataclass(frozen=True)
class TheoremResult:
    """All checks run for one identity family on one graph."""

    name: str
    checks: tuple[TheoremCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def failures(self) -> tuple[TheoremCheck, ...]:
        return tuple(c for c in self.checks if not c.holds)


@dataclass(frozen=True)
class ErratumNote:
    """Both readings of a disputed sign or index, evaluated side by side.

    triggered means the two variants actually disagree on this graph; the
    witness then pins the first parameter where that happens.  Notes are
    observations, never failures.
    """

    note_id: str
    description: str
    triggered: bool
    witness: dict[str, str] | None


@dataclass(frozen=True)
class TheoremReport:
    """Deterministic per-graph verification report; no clocks, no floats."""

    graph_id: str
    n: int
    m: int
    p_max: int
    m_max: int
    theorems: tuple[TheoremResult, ...]
    errata: tuple[ErratumNote, ...]

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.theorems)

    @property
    def check_count(self) -> int:
        return sum(len(t.checks) for t in self.theorems)

    def failures(self) -> list[tuple[str, TheoremCheck]]:
        return [(t.name, c) for t in self.theorems for c in t.failures]


def _moment_sign_note(s, f, m_max: int) -> ErratumNote:
    description = (
        "moment identity right side: sign variant (-1)^k versus (-1)^(k-1) "
        "on the frequency-side sum; only the latter matches the star side"
    )
    for m_exp in range(1, m_max + 1):
        lhs = alternating_moment(s, m_exp)
        corrected = moment_identity_rhs(f, m_exp)
        flipped = -corrected
        if flipped != corrected:
            return ErratumNote(
                "moment_rhs_sign",
                description,
                True,
                {
                    "m": str(m_exp),
                    "lhs": str(lhs),
                    "rhs_sign_k": str(flipped),
                    "rhs_sign_k_minus_1": str(corrected),
                },
            )
    return ErratumNote("moment_rhs_sign", description, False, None)


def _f1_sign_note(s, f) -> ErratumNote:
    description = (
        "degree-one inversion term: sign exponent on k*S_k read as (-1)^(k-1) "
        "versus (-1)^k; the variants split whenever some S_k with k >= 2 is nonzero"
    )
    f1 = f.f(1)
    corrected = s.adjusted_first + sum(
        (-1) ** (k - 1) * k * s.entry(k) for k in range(2, s.n)
    )
    flipped = s.adjusted_first + sum(
        (-1) ** k * k * s.entry(k) for k in range(2, s.n)
    )
    if flipped != corrected:
        return ErratumNote(
            "f1_term_sign",
            description,
            True,
            {
                "f1": str(f1),
                "sign_k_minus_1": str(corrected),
                "sign_k": str(flipped),
            },
        )
    return ErratumNote("f1_term_sign", description, False, None)


def _recurrence_index_note(g: Graph, p_max: int) -> ErratumNote:
    description = (
        "recurrence coefficient index: s(n+1, n+1-i) tied to the vertex count "
        "versus s(p+1, p+1-i) tied to the exponent; only the former leaves "
        "zero residuals past p = n"
    )
    n = g.n
    coeffs = recurrence_coeffs(n)
    z = [zagreb_direct(g, q) for q in range(n + p_max + 1)]
    for p in range(n + 1, n + p_max + 1):
        by_exponent = z[p] + sum(
            stirling1_signed(p + 1, p + 1 - i) * z[p - i] for i in range(1, n + 1)
        )
        by_vertex_count = z[p] + sum(coeffs[i - 1] * z[p - i] for i in range(1, n + 1))
        if by_exponent != by_vertex_count:
            return ErratumNote(
                "recurrence_index_base",
                description,
                True,
                {
                    "p": str(p),
                    "residual_exponent_indexed": str(by_exponent),
                    "residual_vertex_indexed": str(by_vertex_count),
                },
            )
    return ErratumNote("recurrence_index_base", description, False, None)


def verify_all_identities(
    g: Graph, p_max: int = 8, m_max: int = 4, graph_id: str = ""
) -> TheoremReport:
    """Replay every identity against brute-force or direct evaluation.

    All comparisons are exact and every residual is (claimed - ground
    truth).  Failures land in the report, not in exceptions; two runs over
    the same graph produce identical reports.
    """
    if p_max < 1:
        raise ValueError("p_max must be at least 1")
    if m_max < 0:
        raise ValueError("m_max must be non-negative")
    n = g.n
    f = frequency_sequence(g)
    s = star_sequence(g)
    results = []

    # Inversion: formula-route star counts against degree counting, and back.
    s_from_f = star_from_frequency(f)
    checks = [TheoremCheck("S1", s_from_f.s1 - s.s1)]
    for k in range(2, n):
        checks.append(TheoremCheck(f"S{k}", s_from_f.entry(k) - s.entry(k)))
    f_from_s = frequency_from_star(s)
    for i in range(n):
        checks.append(TheoremCheck(f"f{i}", f_from_s.f(i) - f.f(i)))
    results.append(TheoremResult("inversion", tuple(checks)))

    # Alternating moments against the frequency-side sums.
    checks = [TheoremCheck("m=0", alternating_moment(s, 0) - sum(f.counts[1:]))]
    for m_exp in range(1, m_max + 1):
        checks.append(
            TheoremCheck(
                f"m={m_exp}",
                alternating_moment(s, m_exp) - moment_identity_rhs(f, m_exp),
            )
        )
    results.append(TheoremResult("moments", tuple(checks)))

    # Inverse-degree edge sum and the isolated-vertex count from stars.
    checks = [
        TheoremCheck("edge_sum", inverse_degree_edge_sum(g) - (n - f.isolated)),
        TheoremCheck("f0_from_stars", isolated_count_from_star(s) - f.isolated),
    ]
    results.append(TheoremResult("inverse_degree_sum", tuple(checks)))

    # Star-route Zagreb values against direct powers.
    checks = [
        TheoremCheck(f"p={p}", zagreb_from_stars(s, p) - zagreb_direct(g, p))
        for p in range(1, p_max + 1)
    ]
    results.append(TheoremResult("zagreb_from_stars", tuple(checks)))

    # Generating function: long-division series against direct values, plus
    # both endpoint coefficients.
    gf = genfunc_numerator(g)
    terms = max(p_max + 1, 2 * n + 10)
    series = series_expand_rational(gf.numerator, n, terms)
    checks = [
        TheoremCheck(f"series_p={p}", series[p] - zagreb_direct(g, p))
        for p in range(terms)
    ]
    checks.append(TheoremCheck("a0", gf.numerator[0] - n))
    checks.append(
        TheoremCheck(
            "a_top",
            gf.numerator[n] - (-1) ** n * math.factorial(n) * f.isolated,
        )
    )
    results.append(TheoremResult("genfunc", tuple(checks)))

    # Order-n recurrence: the boundary residual must equal the top numerator
    # coefficient, everything past it must vanish, and the sliding-window
    # route must reproduce direct values.
    checks = []
    for item in verify_recurrence(g, n, n + p_max):
        expected = gf.numerator[n] if item.p == n else 0
        checks.append(TheoremCheck(f"residual_p={item.p}", item.residual - expected))
    for p in range(1, p_max + 1):
        checks.append(
            TheoremCheck(f"route_p={p}", zagreb_by_recurrence(g, p) - zagreb_direct(g, p))
        )
    results.append(TheoremResult("recurrence", tuple(checks)))

    # Subset-enumeration star counts against the degree formula.
    checks = [
        TheoremCheck(f"k={k}", count_stars_bruteforce(g, k) - s.entry(k))
        for k in range(1, n)
    ]
    results.append(TheoremResult("star_bruteforce", tuple(checks)))

    errata = (
        _moment_sign_note(s, f, m_max),
        _f1_sign_note(s, f),
        _recurrence_index_note(g, p_max),
    )
    if not graph_id:
        graph_id = to_graph6(g) if n <= 62 else f"n={n},m={g.m}"
    return TheoremReport(
        graph_id=graph_id,
        n=n,
        m=g.m,
        p_max=p_max,
        m_max=m_max,
        theorems=tuple(results),
        errata=errata,
    )
