"""Binary quadratic program equivalent of the maximum clique search.

Pick a 0/1 row selector r and column selector c and maximize r^T A c
subject to every selected row covering at most one selected 1.  Feasible
solutions correspond one-to-one with cliques of the coding graph and the
objective equals the clique size.  The decision version is NP-complete via
a reduction from exact cover by 3-sets, which is also implemented here so
the equivalence can be checked instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ParseError, ResourceLimitError
from .graph import Clique, IdncGraph, Vertex, is_clique
from .sideinfo import SideInfoMatrix

#: solve_exhaustive enumerates 2^m column subsets; cap n + m like a knob
#: on total work (2^m * n stays near 10^8 at the boundary).
EXHAUSTIVE_LIMIT = 24


@dataclass(frozen=True)
class IqpSolution:
    r: tuple[int, ...]
    c: tuple[int, ...]
    value: int

    def __post_init__(self):
        if any(v not in (0, 1) for v in self.r) or any(v not in (0, 1) for v in self.c):
            raise ValueError("selectors must be 0/1 vectors")


def evaluate(matrix: SideInfoMatrix, r: Sequence[int], c: Sequence[int]) -> tuple[bool, int]:
    """Feasibility of (r, c) plus the objective value, computed regardless."""
    if len(r) != matrix.n or len(c) != matrix.m:
        raise ValueError(
            f"selector lengths {len(r)},{len(c)} do not match matrix {matrix.n}x{matrix.m}"
        )
    if any(v not in (0, 1) for v in r) or any(v not in (0, 1) for v in c):
        raise ValueError("selectors must be 0/1 vectors")
    cmask = 0
    for j, v in enumerate(c):
        cmask |= v << j
    feasible = True
    value = 0
    for i, ri in enumerate(r):
        if not ri:
            continue
        selected = (matrix.rows[i] & cmask).bit_count()
        value += selected
        if selected > 1:
            feasible = False
    return feasible, value


def clique_to_solution(graph: IdncGraph, clique: Clique) -> IqpSolution:
    """Indicator vectors of the clique's users and packets; objective = |clique|."""
    if clique.vertices and not is_clique(graph, clique.vertices):
        raise ValueError("vertex set is not a clique")
    matrix = graph.matrix
    users = clique.users()
    packets = clique.packets()
    r = tuple(1 if i in users else 0 for i in range(1, matrix.n + 1))
    c = tuple(1 if j in packets else 0 for j in range(1, matrix.m + 1))
    return IqpSolution(r, c, len(clique))


def solution_to_clique(graph: IdncGraph, sol: IqpSolution) -> Clique:
    """Vertices at selected (row, column) ones; a clique of size equal to the objective."""
    matrix = graph.matrix
    feasible, _ = evaluate(matrix, sol.r, sol.c)
    if not feasible:
        raise ValueError("solution violates the one-selected-1-per-row constraint")
    verts = []
    for i in range(1, matrix.n + 1):
        if not sol.r[i - 1]:
            continue
        for j in range(1, matrix.m + 1):
            if sol.c[j - 1] and matrix.wants(i, j):
                verts.append(Vertex(i, j))
    return Clique.of(verts)


def _lex_less(a: int, b: int) -> bool:
    """Column-vector lexicographic order on subset masks (bit j-1 = column j)."""
    d = a ^ b
    if d == 0:
        return False
    low = d & -d
    return a & low == 0


def solve_exhaustive(matrix: SideInfoMatrix) -> IqpSolution:
    """Optimal solution by scanning all 2^m column subsets.

    For a fixed column subset, setting r on exactly the rows with a single
    selected 1 dominates every other feasible row choice: rows with none
    add 0 and rows with two or more are infeasible.  Ties go to the
    lexicographically smallest column vector.
    """
    if matrix.n + matrix.m > EXHAUSTIVE_LIMIT:
        raise ResourceLimitError(
            f"n + m = {matrix.n + matrix.m} exceeds the exhaustive limit {EXHAUSTIVE_LIMIT}"
        )
    best_value = 0
    best_mask = 0
    for cmask in range(1, 1 << matrix.m):
        count = 0
        for row in matrix.rows:
            x = row & cmask
            if x and not x & (x - 1):
                count += 1
        if count > best_value or (count == best_value and _lex_less(cmask, best_mask)):
            best_value = count
            best_mask = cmask
    if best_value == 0:
        best_mask = 0
    r = []
    for row in matrix.rows:
        x = row & best_mask
        r.append(1 if x and not x & (x - 1) else 0)
    c = tuple(1 if best_mask >> j & 1 else 0 for j in range(matrix.m))
    return IqpSolution(tuple(r), c, best_value)


@dataclass(frozen=True)
class X3cInstance:
    """Exact-cover-by-3-sets instance: 3k elements and ell > k triples."""

    k: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if len(self.sets) <= self.k:
            raise ValueError(f"need more than k={self.k} sets, got {len(self.sets)}")
        universe = range(1, 3 * self.k + 1)
        for s in self.sets:
            if len(s) != 3:
                raise ValueError(f"set {sorted(s)} does not have exactly 3 elements")
            for e in s:
                if e not in universe:
                    raise ValueError(f"element {e} outside [1..{3 * self.k}]")

    @property
    def element_count(self) -> int:
        return 3 * self.k

    @classmethod
    def of(cls, k: int, sets: Iterable[Iterable[int]]) -> "X3cInstance":
        return cls(k, tuple(frozenset(s) for s in sets))


def x3c_to_matrix(inst: X3cInstance) -> SideInfoMatrix:
    """Elements become users, triples become packets; membership becomes a 1."""
    n = inst.element_count
    rows = [0] * n
    for j, s in enumerate(inst.sets):
        for e in s:
            rows[e - 1] |= 1 << j
    return SideInfoMatrix(n, len(inst.sets), tuple(rows))


def has_exact_cover(inst: X3cInstance) -> bool:
    """Brute force: does some choice of k triples partition the elements?"""
    target = frozenset(range(1, inst.element_count + 1))
    for combo in combinations(range(len(inst.sets)), inst.k):
        union = set()
        for idx in combo:
            union |= inst.sets[idx]
        if union == target:
            return True
    return False


def check_reduction(inst: X3cInstance) -> tuple[bool, bool]:
    """Answer the cover question and the matching objective-reaches-3k question.

    The two answers are provably equal; returning both lets tests confirm
    it on concrete instances.
    """
    if inst.element_count > 12 or len(inst.sets) > 12:
        raise ResourceLimitError(
            f"instance {inst.element_count} elements / {len(inst.sets)} sets "
            "exceeds the brute-force guard (12/12)"
        )
    cover = has_exact_cover(inst)
    sol = solve_exhaustive(x3c_to_matrix(inst))
    return cover, sol.value == inst.element_count


def x3c_to_text(inst: X3cInstance) -> str:
    lines = [f"{inst.k} {len(inst.sets)}"]
    for s in inst.sets:
        lines.append(" ".join(str(e) for e in sorted(s)))
    return "\n".join(lines) + "\n"


def x3c_from_text(text: str) -> X3cInstance:
    """Parse "k ell" then ell lines of three element indices."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected 'k ell', got {lines[0]!r}", 1)
    try:
        k, ell = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"expected integers, got {lines[0]!r}", 1) from None
    if len(lines) < ell + 1:
        raise ParseError(f"expected {ell} sets, file has {len(lines) - 1}", len(lines) + 1)
    sets = []
    for idx in range(ell):
        parts = lines[idx + 1].split()
        if len(parts) != 3:
            raise ParseError(f"expected 3 elements, got {len(parts)}", idx + 2)
        try:
            sets.append([int(x) for x in parts])
        except ValueError:
            raise ParseError(f"bad element in {lines[idx + 1]!r}", idx + 2) from None
    try:
        return X3cInstance.of(k, sets)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
