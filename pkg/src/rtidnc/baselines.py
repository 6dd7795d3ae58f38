"""Comparison schemes: plain rebroadcasts and an all-users greedy XOR.

best_repetition resends the single packet wanted by the most users,
random_repetition a uniformly random still-wanted packet, and cope_like
greedily XORs packets while the running combination stays decodable by
every user (at most one wanted component each, users wanting none are
unhurt but unhelped).  Every decision is scored by its maximal
beneficiary set, the same yardstick the clique schemes use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .sideinfo import CodedPacket, SideInfoMatrix, beneficiaries


@dataclass(frozen=True)
class SchemeDecision:
    """One transmission choice: `packet` is None when nothing is wanted."""

    packet: CodedPacket | None
    beneficiary_count: int
    scheme: str

    @property
    def nothing_needed(self) -> bool:
        return self.packet is None


def _decision(matrix: SideInfoMatrix, packets: set[int], scheme: str) -> SchemeDecision:
    coded = CodedPacket(frozenset(packets))
    return SchemeDecision(coded, len(beneficiaries(matrix, coded)), scheme)


def _wanted_columns(matrix: SideInfoMatrix) -> list[int]:
    return [j for j in range(1, matrix.m + 1) if matrix.column_count(j) > 0]


def best_repetition(matrix: SideInfoMatrix) -> SchemeDecision:
    """Most-wanted plain packet; smallest index on ties."""
    best_j, best_count = 0, 0
    for j in range(1, matrix.m + 1):
        count = matrix.column_count(j)
        if count > best_count:
            best_j, best_count = j, count
    if best_count == 0:
        return SchemeDecision(None, 0, "best_repetition")
    return _decision(matrix, {best_j}, "best_repetition")


def random_repetition(matrix: SideInfoMatrix, rng: np.random.Generator | int) -> SchemeDecision:
    """Uniform choice among still-wanted packets, driven by the given generator.

    The pick is the head of a random permutation, so a paired harness can
    hand this scheme and the greedy XOR scheme the same stream and compare
    them on a common draw.
    """
    if isinstance(rng, int):
        rng = np.random.Generator(np.random.Philox(rng))
    candidates = _wanted_columns(matrix)
    if not candidates:
        return SchemeDecision(None, 0, "random_repetition")
    pick = int(rng.permutation(candidates)[0])
    return _decision(matrix, {pick}, "random_repetition")


def cope_like(matrix: SideInfoMatrix, order: Sequence[int]) -> SchemeDecision:
    """Greedy XOR in the given packet order, kept decodable by all users.

    `order` must be a permutation of the still-wanted packet indices.  Each
    candidate joins the combination only if afterwards no user wants two or
    more of its components.
    """
    order = [int(j) for j in order]  # tolerate numpy integer arrays
    wanted = _wanted_columns(matrix)
    if sorted(order) != wanted:
        raise ValueError("order must be a permutation of the still-wanted packet indices")
    if not order:
        return SchemeDecision(None, 0, "cope_like")
    mask = 1 << (order[0] - 1)
    for j in order[1:]:
        tentative = mask | 1 << (j - 1)
        if all((row & tentative).bit_count() <= 1 for row in matrix.rows):
            mask = tentative
    packets = {j + 1 for j in range(matrix.m) if mask >> j & 1}
    return _decision(matrix, packets, "cope_like")
