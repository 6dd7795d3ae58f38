"""Clique search tuned to random loss patterns, plus the analysis behind it.

With i.i.d. loss probability p, a row restricted to j fixed columns holds
exactly one 1 with probability f(j) = j * p * (1-p)^(j-1).  Rows that do
("good rows") are pairwise adjacent in the coding graph, so scanning
column subsets near the maximizer j* of f and keeping the largest good-row
set finds the maximum clique with high probability.  Scanning every subset
size instead turns the same machinery into an exact oracle, since any
clique consists of good rows of its own column support.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._scan import scan_columns
from .errors import ResourceLimitError
from .graph import Clique, Vertex
from .sideinfo import SideInfoMatrix

#: Work cap for the exact scan, measured as C(m, m//2 rounded up) * n * m.
#: The default accommodates m = 22 at desk sizes.
DEFAULT_EXACT_BUDGET = math.comb(22, 11) * 22 * 22

#: Absolute slack when testing whether consecutive f values tie; ties occur
#: exactly when (1-p)/p is an integer, which float noise would otherwise hide.
TIE_TOLERANCE = 1e-12


def good_row_probability(j: int, p: float) -> float:
    """Chance that a row has exactly one 1 among j fixed columns: j*p*(1-p)^(j-1)."""
    if j < 1:
        raise ValueError(f"column count must be >= 1, got {j}")
    if not 0 < p < 1:
        raise ValueError(f"loss probability must be in (0,1), got {p}")
    return j * p * (1.0 - p) ** (j - 1)


def j_star(p: float, m: int | None = None, tol: float = TIE_TOLERANCE) -> int:
    """Smallest maximizer of the good-row probability, clamped to m when given.

    f(j+1)/f(j) = (j+1)(1-p)/j, so f rises while j*p < 1-p and the scan can
    stop at the first non-increase.  Equality (a tie between j and j+1)
    happens exactly at j = (1-p)/p and is detected with the `tol` slack so
    ratios like p = 0.1 resolve to the smaller column count.
    """
    if not 0 < p < 1:
        raise ValueError(f"loss probability must be in (0,1), got {p}")
    if m is not None and m < 1:
        raise ValueError(f"packet count must be >= 1, got {m}")
    q = 1.0 - p
    j = 1
    while j * p < q - tol:
        j += 1
        if m is not None and j >= m:
            return m
    return j if m is None else min(j, m)


@dataclass(frozen=True)
class CliqueSearchParams:
    """Window configuration for the subset scan: look delta around j*."""

    p: float
    delta: int = 3

    def __post_init__(self):
        if not 0 < self.p < 1:
            raise ValueError(f"loss probability must be in (0,1), got {self.p}")
        if self.delta < 0:
            raise ValueError(f"delta must be >= 0, got {self.delta}")

    def window(self, m: int) -> tuple[int, int]:
        """Column-count range [lo, hi], clipped to the valid [1, m]."""
        center = j_star(self.p, m)
        return max(1, center - self.delta), min(m, center + self.delta)


def _column_masks(matrix: SideInfoMatrix) -> list[int]:
    cols = [0] * matrix.m
    for i, row in enumerate(matrix.rows):
        r = row
        while r:
            low = r & -r
            cols[low.bit_length() - 1] |= 1 << i
            r ^= low
    return cols


def _clique_from_scan(matrix: SideInfoMatrix, cols: tuple[int, ...]) -> Clique:
    """Rebuild the winning good rows as vertices (row, its single column)."""
    verts = []
    mask = 0
    for c in cols:
        mask |= 1 << c
    for i, row in enumerate(matrix.rows):
        x = row & mask
        if x and not x & (x - 1):
            verts.append(Vertex(i + 1, x.bit_length()))
    return Clique.of(verts)


def max_clique_window(matrix: SideInfoMatrix, lo: int, hi: int) -> Clique:
    """Largest good-row set over column subsets of size lo..hi, as a clique."""
    lo = max(1, lo)
    hi = min(matrix.m, hi)
    if lo > hi:
        raise ValueError(f"empty column window [{lo}, {hi}]")
    count, cols = scan_columns(_column_masks(matrix), matrix.n, lo, hi)
    if count == 0:
        return Clique.of([])
    return _clique_from_scan(matrix, cols)


def max_clique_search(matrix: SideInfoMatrix, params: CliqueSearchParams) -> Clique:
    """Window scan around j*; exact with high probability on random instances."""
    lo, hi = params.window(matrix.m)
    return max_clique_window(matrix, lo, hi)


def exact_scan_cost(matrix: SideInfoMatrix) -> int:
    return math.comb(matrix.m, (matrix.m + 1) // 2) * matrix.n * matrix.m


def max_clique_exact(matrix: SideInfoMatrix, budget: int = DEFAULT_EXACT_BUDGET) -> Clique:
    """Exact maximum clique: the window scan widened to every subset size.

    Every clique's vertices are good rows of the clique's own column
    support, so scanning all supports must meet a maximum clique.
    """
    cost = exact_scan_cost(matrix)
    if cost > budget:
        raise ResourceLimitError(
            f"exact scan cost {cost:.3g} exceeds budget {budget:.3g} (m = {matrix.m})"
        )
    return max_clique_window(matrix, 1, matrix.m)


def count_surjections(j: int, k: int) -> int:
    """Ways to fill a k x j matrix with one 1 per row and no empty column.

    Inclusion-exclusion over empty columns: sum of (-1)^i * C(j,i) * (j-i)^k.
    Exact integers at any size.
    """
    _check_jk(j, k)
    return sum((-1) ** i * math.comb(j, i) * (j - i) ** k for i in range(j))


def count_surjections_recurrence(j: int, k: int) -> int:
    """Same count via the subtract-smaller-supports recurrence (cross check)."""
    _check_jk(j, k)
    table = [0] * (j + 1)
    table[1] = 1
    for jj in range(2, j + 1):
        total = jj**k
        for t in range(1, jj):
            total -= math.comb(jj, t) * table[jj - t]
        table[jj] = total
    return table[j]


def _check_jk(j: int, k: int):
    if j < 1:
        raise ValueError(f"column count must be >= 1, got {j}")
    if k < j:
        raise ValueError(f"need at least as many rows as columns, got k={k} < j={j}")


def surjection_fraction_lower_bound(j: int, k: int) -> float:
    """Lower bound on the surjective fraction: 1 - j*((j-1)/j)^k.

    Valid once k reaches `min_rows_for_tail_bound(j)`; nonpositive while
    k < j, where the true fraction is 0.
    """
    if j < 1 or k < 1:
        raise ValueError(f"need j, k >= 1, got j={j}, k={k}")
    return 1.0 - j * ((j - 1) / j) ** k if j > 1 else 1.0


def min_rows_for_tail_bound(j: int) -> int:
    """Smallest k making the alternating tail of the surjection count nonnegative.

    The tail is sum_{i=2}^{j-1} (-1)^i C(j,i) (j-i)^k; once it is
    nonnegative, dropping it yields the closed-form lower bound above.
    """
    if j < 1:
        raise ValueError(f"column count must be >= 1, got {j}")
    if j <= 2:
        return 1  # empty tail
    k = 1
    while True:
        tail = sum((-1) ** i * math.comb(j, i) * (j - i) ** k for i in range(2, j))
        if tail >= 0:
            return k
        k += 1


@dataclass(frozen=True)
class ConcentrationBound:
    """Tail bound for the good-row count of a column set of size j."""

    mu: float
    mu_delta: float
    bound: float
    union_bound: float | None = None

    @property
    def vacuous(self) -> bool:
        return self.bound >= 1.0


def concentration_bound(
    n: int, j: int, p: float, c: float, d: float | None = None
) -> ConcentrationBound:
    """Chernoff-plus-coupling bound on |good rows - n*f(j)| >= n*f(j)*delta.

    With mu = n*f(j) and delta = sqrt(3*c*ln(n) / mu), the miss probability
    is at most 2/n^c + 2*mu*delta*j*(1 - 1/j)^(mu - mu*delta).  Passing d
    (packets per user) also reports the union-bound variant over all
    C(m, j) column sets, which multiplies the terms by (d*n)^j.  Bounds can
    exceed 1 at desk sizes; they are returned as computed.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if c <= 1:
        raise ValueError(f"need c > 1, got {c}")
    f = good_row_probability(j, p)  # validates j and p
    mu = n * f
    delta = math.sqrt(3.0 * c * math.log(n) / mu)
    mu_delta = mu * delta
    if j == 1:
        coupling = 0.0
    else:
        exponent = mu - mu_delta
        coupling = 2.0 * mu_delta * j * (1.0 - 1.0 / j) ** exponent
    bound = 2.0 / n**c + coupling
    union = None
    if d is not None:
        if d <= 0:
            raise ValueError(f"need d > 0, got {d}")
        union = (d**j) * (2.0 / n ** (c - j)) + (d * n) ** j * coupling
    return ConcentrationBound(mu, mu_delta, bound, union)
