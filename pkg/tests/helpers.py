"""Independent oracles used by the tests.

Everything here is computed straight from first principles (plain loops
over matrix entries), never by calling the code paths under test, so
agreement is meaningful.
"""

from __future__ import annotations

from itertools import combinations, product

from rtidnc.sideinfo import SideInfoMatrix


def entry(matrix: SideInfoMatrix, i: int, j: int) -> int:
    return (matrix.rows[i - 1] >> (j - 1)) & 1


def adjacency_oracle(matrix: SideInfoMatrix, a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Edge rule recomputed from raw entries: same packet, or mutual holding."""
    (i, j), (k, l) = a, b
    if (i, j) == (k, l):
        return False
    if j == l:
        return i != k
    return entry(matrix, k, j) == 0 and entry(matrix, i, l) == 0


def definition_optimum(matrix: SideInfoMatrix) -> int:
    """Best beneficiary count over every coded packet, straight from the rules.

    For each nonempty packet subset, the users able to decode are those
    wanting exactly one component; the subset is usable only if each
    component is the one some such user wants.  Over user subsets the
    decodable ones are the only candidates and shrinking the set never
    fixes coverage, so the per-packet best is all of them or nothing.
    """
    best = 0
    for mask_cols in range(1, 1 << matrix.m):
        packets = [j for j in range(1, matrix.m + 1) if mask_cols >> (j - 1) & 1]
        decoders = {}
        for i in range(1, matrix.n + 1):
            wanted = [j for j in packets if entry(matrix, i, j)]
            if len(wanted) == 1:
                decoders[i] = wanted[0]
        if set(decoders.values()) == set(packets):
            best = max(best, len(decoders))
    return best


def definition_optimum_literal(matrix: SideInfoMatrix) -> int:
    """Same quantity by enumerating every (packet set, user set) pair."""
    best = 0
    for mask_cols in range(1, 1 << matrix.m):
        packets = [j for j in range(1, matrix.m + 1) if mask_cols >> (j - 1) & 1]
        for mask_users in range(1, 1 << matrix.n):
            users = [i for i in range(1, matrix.n + 1) if mask_users >> (i - 1) & 1]
            recovered = []
            ok = True
            for i in users:
                wanted = [j for j in packets if entry(matrix, i, j)]
                if len(wanted) != 1:
                    ok = False
                    break
                recovered.append(wanted[0])
            if ok and set(recovered) == set(packets):
                best = max(best, len(users))
    return best


def enumerate_cliques(matrix: SideInfoMatrix) -> list[frozenset[tuple[int, int]]]:
    """All cliques (as (user, packet) sets), including the empty one.

    Grows cliques one vertex at a time in row-major order, checking
    adjacency with the raw-entry rule above.
    """
    vertices = [(i, j) for i in range(1, matrix.n + 1) for j in range(1, matrix.m + 1) if entry(matrix, i, j)]
    out: list[frozenset[tuple[int, int]]] = [frozenset()]

    def grow(current: list[tuple[int, int]], start: int):
        for idx in range(start, len(vertices)):
            v = vertices[idx]
            if all(adjacency_oracle(matrix, u, v) for u in current):
                current.append(v)
                out.append(frozenset(current))
                grow(current, idx + 1)
                current.pop()

    grow([], 0)
    return out


def max_clique_bruteforce(matrix: SideInfoMatrix) -> int:
    return max(len(c) for c in enumerate_cliques(matrix))


def window_scan_reference(matrix: SideInfoMatrix, lo: int, hi: int) -> tuple[int, tuple[int, ...]]:
    """Literal nested-loop scan: sizes ascending, column tuples in lex order,
    replace only on a strictly larger good-row count."""
    best_count, best_cols = 0, ()
    for j in range(lo, min(hi, matrix.m) + 1):
        for cols in combinations(range(matrix.m), j):
            count = 0
            for i in range(1, matrix.n + 1):
                hits = sum(entry(matrix, i, c + 1) for c in cols)
                if hits == 1:
                    count += 1
            if count > best_count:
                best_count, best_cols = count, cols
    return best_count, best_cols


def surjection_count_dp(j: int, k: int) -> int:
    """Count one-1-per-row fillings hitting every column, by dynamic programming
    over the set of columns already hit."""
    ways = {0: 1}
    for _ in range(k):
        nxt: dict[int, int] = {}
        for mask, w in ways.items():
            for c in range(j):
                key = mask | 1 << c
                nxt[key] = nxt.get(key, 0) + w
        ways = nxt
    return ways.get((1 << j) - 1, 0)


def surjection_count_literal(j: int, k: int) -> int:
    """Count by enumerating every placement (small j, k only)."""
    total = 0
    for placement in product(range(j), repeat=k):
        if len(set(placement)) == j:
            total += 1
    return total
