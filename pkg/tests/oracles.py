"""Slow, literal reference computations used to freeze expected values.

Nothing here calls into the package's algorithms beyond constructing values.
"""

from __future__ import annotations

from itertools import product

from motzkin_multisegments import Multisegment, MotzkinPath


def fr_rank_literal(heights: tuple[int, ...]) -> dict[tuple[int, int], int]:
    """Evaluate the max over all i <= k <= l <= m <= j without shortcuts."""
    n = len(heights) - 1
    g = heights
    out = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            best = max(
                g[l] + g[l - 1] - g[m] - g[k - 1]
                for k in range(i, j + 1)
                for l in range(k, j + 1)
                for m in range(l, j + 1)
            )
            out[i, j] = n + 1 - best
    return out


def rank_literal(m: Multisegment) -> dict[tuple[int, int], int]:
    n = m.length
    return {
        (i, j): sum(1 for s in m if s.start <= i and j <= s.end)
        for i in range(1, n + 1)
        for j in range(i, n + 1)
    }


def weight_literal(m: Multisegment) -> tuple[int, ...]:
    return tuple(sum(1 for s in m if s.start <= k <= s.end) for k in range(1, m.length + 1))


def paths_by_steps(n: int) -> list[tuple[int, ...]]:
    """All Motzkin height sequences, by filtering all 3**n step words."""
    out = []
    for word in product((-1, 0, 1), repeat=n):
        h = [0]
        for d in word:
            h.append(h[-1] + d)
        if min(h) >= 0 and h[-1] == 0:
            out.append(tuple(h))
    return sorted(out)


def as_path(heights) -> MotzkinPath:
    return MotzkinPath(tuple(heights))
