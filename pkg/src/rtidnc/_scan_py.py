"""Pure-Python column-subset scan, the fallback when the C kernel is absent.

Walks a prefix tree over column subsets of size lo..hi, carrying two row
bit masks: rows hit at least once and rows hit at least twice.  The rows
hit exactly once are the "good" rows of the subset, and they always form a
clique.  The walk keeps the subset with the most good rows; ties prefer
fewer columns, then the lexicographically smallest column tuple, which is
the order a plain nested loop over combinations would meet them in.

Two prunes keep this exact but fast: branches that cannot reach lo columns
are cut, and a subtree is skipped when even its surviving rows (hit at
most once so far) cannot beat the current best.
"""

from __future__ import annotations

from typing import Sequence


def scan(columns: Sequence[int], n_rows: int, lo: int, hi: int) -> tuple[int, tuple[int, ...]]:
    """Best good-row count over column subsets of size lo..hi.

    `columns[c]` is the bit mask of rows with a 1 in column c.  Returns the
    count and the winning 0-based column tuple, `(0, ())` when no subset
    has a good row.
    """
    m = len(columns)
    if not 1 <= lo <= hi:
        raise ValueError(f"bad column window [{lo}, {hi}]")
    best_count = 0
    best_j = 0
    best_cols: tuple[int, ...] = ()
    path: list[int] = []

    def walk(start: int, once: int, twice: int):
        nonlocal best_count, best_j, best_cols
        depth = len(path)
        if depth == hi:
            return
        for c in range(start, m):
            if depth + 1 + (m - c - 1) < lo:
                break  # later columns leave even fewer to pick from
            col = columns[c]
            t2 = twice | (once & col)
            alive = n_rows - t2.bit_count()
            if alive < best_count or (alive == best_count and depth + 1 >= best_j):
                continue  # subtree cannot beat or tie-better the best
            o2 = once | col
            path.append(c)
            if depth + 1 >= lo:
                cnt = (o2 & ~t2).bit_count()
                if cnt > best_count or (0 < cnt == best_count and depth + 1 < best_j):
                    best_count = cnt
                    best_j = depth + 1
                    best_cols = tuple(path)
            walk(c + 1, o2, t2)
            path.pop()

    walk(0, 0, 0)
    return best_count, best_cols
