"""Monte Carlo harness: random instances, scheme sweeps, summary tables.

Randomness is counter-based (Philox) with one derived stream per
(loss rate, trial, purpose), so every cell is reproducible on its own and
results do not depend on which schemes are enabled or in what order the
cells run.  All schemes inside a trial see the same matrix, which pairs
the comparison and removes between-instance noise from the ratios.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .baselines import best_repetition, cope_like, random_repetition
from .errors import ResourceLimitError
from .sideinfo import CodedPacket, SideInfoMatrix, beneficiaries
from .solvers import (
    DEFAULT_EXACT_BUDGET,
    CliqueSearchParams,
    exact_scan_cost,
    good_row_probability,
    j_star,
    max_clique_search,
    max_clique_exact,
)

SCHEMES = ("max_clique", "best_repetition", "random_repetition", "cope_like", "exact_oracle")

_STREAM_MATRIX = 0
_STREAM_ORDER = 1


def _stream(seed: int, p: float, trial: int, purpose: int) -> np.random.Generator:
    # Key on the loss value itself (scaled to an int) so a cell's stream
    # does not depend on where p sits in the grid.
    pkey = round(p * 1_000_000)
    ss = np.random.SeedSequence(seed, spawn_key=(pkey, trial, purpose))
    return np.random.Generator(np.random.Philox(ss))


def generate_matrix(n: int, m: int, p: float, seed: int | np.random.Generator) -> SideInfoMatrix:
    """Random matrix with i.i.d. entries equal to 1 with probability p."""
    if n < 1 or m < 1:
        raise ValueError(f"need positive dimensions, got {n}x{m}")
    if not 0 < p < 1:
        raise ValueError(f"loss probability must be in (0,1), got {p}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.Generator(np.random.Philox(seed))
    bits = rng.random((n, m)) < p
    rows = tuple(
        int.from_bytes(np.packbits(bits[i], bitorder="little").tobytes(), "little")
        for i in range(n)
    )
    return SideInfoMatrix(n, m, rows)


def default_loss_grid() -> tuple[float, ...]:
    return tuple(round(k / 100, 2) for k in range(1, 100))


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    m: int
    seed: int
    loss_grid: tuple[float, ...] = field(default_factory=default_loss_grid)
    trials: int = 100
    delta: int = 3
    schemes: tuple[str, ...] = ("max_clique", "best_repetition", "random_repetition", "cope_like")

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"need positive dimensions, got {self.n}x{self.m}")
        if self.trials < 1:
            raise ValueError(f"need at least one trial, got {self.trials}")
        if self.delta < 0:
            raise ValueError(f"delta must be >= 0, got {self.delta}")
        if not self.loss_grid:
            raise ValueError("loss grid is empty")
        for p in self.loss_grid:
            if not 0 < p < 1:
                raise ValueError(f"loss probability must be in (0,1), got {p}")
        if not self.schemes:
            raise ValueError("no schemes enabled")
        for s in self.schemes:
            if s not in SCHEMES:
                raise ValueError(f"unknown scheme {s!r}, choose from {SCHEMES}")


@dataclass
class CellStats:
    """Aggregates for one (scheme, loss rate) cell."""

    scheme: str
    p: float
    scores: list[int] | None  # None when the scheme hit its resource limit
    packets: list[list[int] | None] | None

    @property
    def failed(self) -> bool:
        return self.scores is None

    @property
    def mean(self) -> float:
        return float(np.mean(self.scores)) if self.scores else math.nan

    @property
    def stddev(self) -> float:
        return float(np.std(self.scores)) if self.scores else math.nan


def _score(matrix: SideInfoMatrix, packets: frozenset[int] | None) -> tuple[int, list[int] | None]:
    if not packets:
        return 0, None
    coded = CodedPacket(packets)
    return len(beneficiaries(matrix, coded)), sorted(packets)


def _run_scheme(
    scheme: str,
    matrix: SideInfoMatrix,
    p: float,
    trial: int,
    cfg: "ExperimentConfig",
) -> tuple[int, list[int] | None]:
    if scheme == "max_clique":
        clique = max_clique_search(matrix, CliqueSearchParams(p, cfg.delta))
        return _score(matrix, clique.packets() if clique.vertices else None)
    if scheme == "exact_oracle":
        clique = max_clique_exact(matrix)
        return _score(matrix, clique.packets() if clique.vertices else None)
    if scheme == "best_repetition":
        decision = best_repetition(matrix)
    elif scheme == "random_repetition":
        # Same stream as the greedy scheme's packet order: the pick equals
        # that order's head, pairing the two schemes on a common draw.
        decision = random_repetition(matrix, _stream(cfg.seed, p, trial, _STREAM_ORDER))
    elif scheme == "cope_like":
        wanted = [j for j in range(1, matrix.m + 1) if matrix.column_count(j) > 0]
        if not wanted:
            return 0, None
        order = _stream(cfg.seed, p, trial, _STREAM_ORDER).permutation(wanted)
        decision = cope_like(matrix, order)
    else:  # pragma: no cover - guarded by config validation
        raise ValueError(scheme)
    if decision.packet is None:
        return 0, None
    return decision.beneficiary_count, decision.packet.sorted()


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    cells: dict[tuple[str, float], CellStats]

    def cell(self, scheme: str, p: float) -> CellStats:
        return self.cells[(scheme, p)]

    def means(self, scheme: str) -> dict[float, float]:
        return {p: self.cell(scheme, p).mean for p in sorted(self.config.loss_grid)}

    def to_csv(self) -> str:
        lines = ["scheme,p,n,m,trials,mean,stddev"]
        for scheme in self.config.schemes:
            for p in sorted(self.config.loss_grid):
                cell = self.cell(scheme, p)
                lines.append(
                    f"{scheme},{p:.6g},{self.config.n},{self.config.m},"
                    f"{self.config.trials},{cell.mean:.6g},{cell.stddev:.6g}"
                )
        return "\n".join(lines) + "\n"

    def to_raw_json(self) -> str:
        payload = {
            "config": {
                "n": self.config.n,
                "m": self.config.m,
                "seed": self.config.seed,
                "trials": self.config.trials,
                "delta": self.config.delta,
                "schemes": list(self.config.schemes),
                "loss_grid": list(self.config.loss_grid),
            },
            "cells": [
                {
                    "scheme": cell.scheme,
                    "p": cell.p,
                    "scores": cell.scores,
                    "packets": cell.packets,
                }
                for cell in (
                    self.cell(s, p)
                    for s in self.config.schemes
                    for p in sorted(self.config.loss_grid)
                )
            ],
        }
        return json.dumps(payload, indent=2) + "\n"


def run_sweep(cfg: ExperimentConfig) -> ExperimentResult:
    """Score every enabled scheme on shared random matrices, cell by cell.

    A scheme that raises a resource-limit error (the exact oracle on a
    too-large matrix) marks its cells as failed instead of aborting the
    sweep.
    """
    cells: dict[tuple[str, float], CellStats] = {}
    exact_feasible = exact_scan_cost(SideInfoMatrix(cfg.n, cfg.m, (0,) * cfg.n)) <= DEFAULT_EXACT_BUDGET
    for p in cfg.loss_grid:
        matrices = [
            generate_matrix(cfg.n, cfg.m, p, _stream(cfg.seed, p, t, _STREAM_MATRIX))
            for t in range(cfg.trials)
        ]
        for scheme in cfg.schemes:
            if scheme == "exact_oracle" and not exact_feasible:
                cells[(scheme, p)] = CellStats(scheme, p, None, None)
                continue
            scores: list[int] = []
            packets: list[list[int] | None] = []
            try:
                for t, matrix in enumerate(matrices):
                    score, chosen = _run_scheme(scheme, matrix, p, t, cfg)
                    scores.append(score)
                    packets.append(chosen)
            except ResourceLimitError:
                cells[(scheme, p)] = CellStats(scheme, p, None, None)
                continue
            cells[(scheme, p)] = CellStats(scheme, p, scores, packets)
    return ExperimentResult(cfg, cells)


@dataclass(frozen=True)
class CliqueNumberSummary:
    """Distribution of found clique sizes over random instances."""

    n: int
    m: int
    p: float
    trials: int
    method: str  # "exact" or "window"
    sizes: tuple[int, ...]
    touched: tuple[int, ...]  # distinct packet columns used by each clique
    j_star: int
    mu: float
    mu_delta: float

    @property
    def mean_size(self) -> float:
        return float(np.mean(self.sizes))

    @property
    def std_size(self) -> float:
        return float(np.std(self.sizes))

    @property
    def fraction_within(self) -> float:
        lo, hi = self.mu - self.mu_delta, self.mu + self.mu_delta
        return float(np.mean([(lo < s < hi) for s in self.sizes]))

    def touched_fraction(self, count: int) -> float:
        return float(np.mean([t == count for t in self.touched]))


def clique_number_experiment(
    n: int,
    m: int,
    p: float,
    trials: int,
    seed: int,
    delta: int = 3,
    chernoff_c: float = 2.0,
) -> CliqueNumberSummary:
    """Empirical clique sizes on random instances, with the expected center.

    Uses the exact scan when the size budget allows, otherwise the window
    search (reported in `method`).  The center is mu = n*f(j*) and the
    half-width mu*sqrt(3*c*ln(n)/mu), both computed, not assumed.
    """
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    probe = SideInfoMatrix(n, m, (0,) * n)
    exact = exact_scan_cost(probe) <= DEFAULT_EXACT_BUDGET
    params = CliqueSearchParams(p, delta)
    sizes, touched = [], []
    for t in range(trials):
        matrix = generate_matrix(n, m, p, _stream(seed, p, t, _STREAM_MATRIX))
        clique = max_clique_exact(matrix) if exact else max_clique_search(matrix, params)
        sizes.append(len(clique))
        touched.append(len(clique.packets()))
    center_j = j_star(p, m)
    mu = n * good_row_probability(center_j, p)
    mu_delta = mu * math.sqrt(3.0 * chernoff_c * math.log(n) / mu) if n > 1 else math.nan
    return CliqueNumberSummary(
        n, m, p, trials, "exact" if exact else "window",
        tuple(sizes), tuple(touched), center_j, mu, mu_delta,
    )


def fj_table(p_grid: Iterable[float]) -> list[tuple[float, int, float]]:
    """Rows (p, j*, f(j*)) for each loss rate, with j* unclamped."""
    rows = []
    for p in p_grid:
        js = j_star(p)
        rows.append((p, js, good_row_probability(js, p)))
    return rows


def fj_table_csv(p_grid: Iterable[float]) -> str:
    lines = ["p,j_star,f_j_star"]
    for p, js, fj in fj_table(p_grid):
        lines.append(f"{p:.6g},{js},{fj:.6g}")
    return "\n".join(lines) + "\n"
