"""Concatenation, suspension and restriction of multisegments.

Concatenation glues two weight-valid multisegments along a new special
full column; suspension wraps one inside a primitive multisegment two
points longer. On the submonoid ``M`` the restrictions undo both, which
gives unique factorization into primitives.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .errors import InternalDefect, NotASuspensionError, NotInMError
from .multisegments import (
    Multisegment,
    Segment,
    column_profiles,
    first_excess_cut,
    require_weight_valid,
)

__all__ = [
    "Factorization",
    "concat",
    "concat_all",
    "suspend",
    "left_restrict",
    "right_restrict",
    "is_primitive",
    "factorize",
    "desuspend",
    "has_suspension_markers",
    "E1",
    "random_in_M",
]

#: The unique element of ``M_1``.
E1 = Multisegment.of(1, [(1, 1), (1, 1)])


def concat(m: Multisegment, n: Multisegment) -> Multisegment:
    """The product ``m * n`` of weight-valid multisegments."""
    require_weight_valid(m)
    require_weight_valid(n)
    p, q = m.length, n.length
    if p == 0:
        return n
    if q == 0:
        return m

    out: Counter[Segment] = Counter()
    left_ends: list[int] = []
    right_ends: list[int] = []
    for seg, mult in m.counts:
        if seg.end < p:
            out[seg] += mult
        else:
            left_ends.extend([seg.start] * mult)
    for seg, mult in n.counts:
        if seg.start > 1:
            out[Segment(seg.start + p, seg.end + p)] += mult
        else:
            right_ends.extend([seg.end] * mult)
    left_ends.extend([1] * q)
    right_ends.extend([q] * p)
    left_ends.sort(reverse=True)
    right_ends.sort()
    if not len(left_ends) == len(right_ends) == p + q + 1:
        raise InternalDefect("gluing families do not have p + q + 1 members")
    for i, j in zip(left_ends, right_ends):
        out[Segment(i, j + p)] += 1

    result = Multisegment.from_counts(p + q, out)
    if not column_profiles(result)[p - 1].special_full:
        raise InternalDefect(f"concatenation lacks a special full column at {p}")
    return result


def concat_all(*factors: Multisegment) -> Multisegment:
    result = Multisegment.empty()
    for f in factors:
        result = concat(result, f)
    return result


def suspend(m: Multisegment) -> Multisegment:
    """Embed a weight-valid ``m`` of length ``n`` in a primitive one of length ``n + 2``."""
    require_weight_valid(m)
    n = m.length
    if n == 0:
        return Multisegment.of(2, [(1, 1), (1, 2), (1, 2), (2, 2)])
    out: Counter[Segment] = Counter()
    for seg, mult in m.counts:
        i, j = seg.start, seg.end
        if i > 1 and j < n:
            out[Segment(i + 1, j + 1)] += mult
        elif i == 1 and j < n:
            out[Segment(1, j + 1)] += mult
        elif i > 1:
            out[Segment(i + 1, n + 2)] += mult
        else:
            out[Segment(1, n + 2)] += mult
    for s in (Segment(1, 1), Segment(2, n + 2), Segment(1, n + 1), Segment(n + 2, n + 2)):
        out[s] += 1
    return Multisegment.from_counts(n + 2, out)


def require_in_M(m: Multisegment) -> None:
    require_weight_valid(m)
    bad = first_excess_cut(m)
    if bad is not None:
        raise NotInMError(bad.column, bad.cuts)


def _restrict(m: Multisegment, k: int, kept: Counter[Segment]) -> Multisegment:
    surplus = m.length - k
    full = Segment(1, k)
    if kept[full] < surplus:
        raise InternalDefect(f"fewer than {surplus} copies of {full} to remove")
    kept[full] -= surplus
    return Multisegment.from_counts(k, kept)


def _check_restriction_args(m: Multisegment, k: int) -> None:
    require_in_M(m)
    if not 1 <= k <= m.length:
        raise ValueError(f"restriction length {k} outside [1, {m.length}]")


def left_restrict(m: Multisegment, k: int) -> Multisegment:
    """Keep the first ``k`` points of ``m`` in ``M``, dropping surplus full segments."""
    _check_restriction_args(m, k)
    kept: Counter[Segment] = Counter()
    for seg, mult in m.counts:
        if seg.end <= k:
            kept[seg] += mult
        elif seg.start <= k:
            kept[Segment(seg.start, k)] += mult
    return _restrict(m, k, kept)


def right_restrict(m: Multisegment, k: int) -> Multisegment:
    """Keep the last ``k`` points of ``m`` in ``M``, dropping surplus full segments."""
    _check_restriction_args(m, k)
    shift = m.length - k
    kept: Counter[Segment] = Counter()
    for seg, mult in m.counts:
        if seg.start > shift:
            kept[Segment(seg.start - shift, seg.end - shift)] += mult
        elif seg.end > shift:
            kept[Segment(1, seg.end - shift)] += mult
    return _restrict(m, k, kept)


def is_primitive(m: Multisegment) -> bool:
    require_in_M(m)
    if m.length == 0:
        raise ValueError("the empty multisegment is the identity, not a primitive")
    return not any(p.special_full for p in column_profiles(m))


@dataclass(frozen=True)
class Factorization:
    """Primitive factors of an element of ``M`` and the columns split at."""

    factors: tuple[Multisegment, ...]
    split_columns: tuple[int, ...]

    def product(self) -> Multisegment:
        return concat_all(*self.factors)


def factorize(m: Multisegment) -> Factorization:
    """Unique factorization of ``m`` in ``M`` into primitives.

    Splits repeatedly at the leftmost special full column; the right part
    keeps the remaining split columns, shifted.
    """
    require_in_M(m)
    factors: list[Multisegment] = []
    splits: list[int] = []
    offset = 0
    rest = m
    while rest.length > 0:
        special = [p.column for p in column_profiles(rest) if p.special_full]
        if not special:
            factors.append(rest)
            break
        p = special[0]
        factors.append(left_restrict(rest, p))
        splits.append(offset + p)
        rest = right_restrict(rest, rest.length - p)
        offset += p
    return Factorization(tuple(factors), tuple(splits))


def has_suspension_markers(m: Multisegment) -> bool:
    n = m.length
    return n >= 2 and Segment(1, n - 1) in m and Segment(2, n) in m


def desuspend(m: Multisegment) -> Multisegment:
    """Double restriction of ``m`` in ``M``; inverts :func:`suspend`."""
    require_in_M(m)
    n = m.length
    if n < 2:
        raise NotASuspensionError(f"length {n} is too short to be a suspension")
    if not has_suspension_markers(m):
        raise NotASuspensionError(f"not a suspension: [1,{n - 1}] or [2,{n}] missing")
    if n == 2:
        return Multisegment.empty()
    return right_restrict(left_restrict(m, n - 1), n - 2)


def random_in_M(n: int, rng: random.Random, break_prob: float = 0.5) -> Multisegment:
    """Random element of ``M_n`` built from ``n + 1`` rows.

    The number of cuts at a column equals the number of rows broken there,
    so breaking at most one row per column stays inside ``M``. Every element
    of ``M_n`` is reachable this way.
    """
    breaks: list[set[int]] = [set() for _ in range(n + 1)]
    for k in range(1, n):
        if rng.random() < break_prob:
            breaks[rng.randrange(n + 1)].add(k)
    segments = []
    for row in breaks:
        start = 1
        for k in sorted(row):
            segments.append(Segment(start, k))
            start = k + 1
        if n:
            segments.append(Segment(start, n))
    return Multisegment.of(n, segments)
