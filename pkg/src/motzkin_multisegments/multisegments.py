"""Segments, multisegments and their column statistics.

A multisegment over ``[1, n]`` is stored as a canonical tuple of
``(segment, multiplicity)`` pairs sorted by ``(start, end)``, so equal
multisegments compare and hash equal. Values are immutable.

Membership in the three nested classes used throughout the package is
decided by predicates rather than by the type:

* weight-valid (``is_in_R``): every point of ``[1, n]`` lies in exactly
  ``n + 1`` segments;
* ``is_in_M``: weight-valid with at most one cut per column;
* ``is_excessive``: in ``M`` and free of linked triples.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import InvalidRankTupleError, NotWeightValidError, ParseError

__all__ = [
    "Segment",
    "Multisegment",
    "RankTuple",
    "ColumnProfile",
    "LinkedTriple",
    "parse_multisegment",
    "serialize_multisegment",
    "weight",
    "is_in_R",
    "require_weight_valid",
    "column_profiles",
    "is_in_M",
    "linked",
    "quasi_linked",
    "find_linked_triples",
    "first_linked_triple",
    "is_excessive",
    "rank_tuple",
    "from_rank_tuple",
    "row_decomposition",
]


@dataclass(frozen=True, order=True, slots=True)
class Segment:
    """The integer interval ``[start, end]``."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not 1 <= self.start <= self.end:
            raise ValueError(f"invalid segment [{self.start},{self.end}]")

    def __str__(self) -> str:
        return f"[{self.start},{self.end}]"

    def contains_point(self, k: int) -> bool:
        return self.start <= k <= self.end

    def contains_column(self, k: int) -> bool:
        """True if the segment contains both ``k`` and ``k + 1``."""
        return self.start <= k < self.end

    def issubset(self, other: Segment) -> bool:
        return other.start <= self.start and self.end <= other.end


def _as_segment(s: Segment | tuple[int, int]) -> Segment:
    return s if isinstance(s, Segment) else Segment(*s)


@dataclass(frozen=True, slots=True)
class Multisegment:
    """A multiset of segments over ``[1, length]``.

    Build instances with :meth:`of` or :meth:`from_counts`; the raw
    constructor expects ``counts`` already in canonical order.
    """

    length: int
    counts: tuple[tuple[Segment, int], ...] = ()

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("length must be non-negative")
        prev = None
        for seg, mult in self.counts:
            if mult <= 0:
                raise ValueError(f"multiplicity of {seg} must be positive")
            if seg.end > self.length:
                raise ValueError(f"segment {seg} does not fit in [1,{self.length}]")
            if prev is not None and not prev < seg:
                raise ValueError("counts must be strictly sorted by (start, end)")
            prev = seg

    @classmethod
    def of(cls, length: int, segments: Iterable[Segment | tuple[int, int]] = ()) -> Multisegment:
        """Multisegment from a list of segments, repeated entries counting twice."""
        return cls.from_counts(length, Counter(_as_segment(s) for s in segments))

    @classmethod
    def from_counts(
        cls, length: int, counts: Mapping[Segment | tuple[int, int], int]
    ) -> Multisegment:
        merged: Counter[Segment] = Counter()
        for seg, mult in counts.items():
            if mult < 0:
                raise ValueError(f"negative multiplicity for {seg}")
            merged[_as_segment(seg)] += mult
        return cls(length, tuple(sorted((s, m) for s, m in merged.items() if m)))

    @classmethod
    def empty(cls) -> Multisegment:
        return cls(0, ())

    def __iter__(self) -> Iterator[Segment]:
        """Segments with repetition, in canonical order."""
        for seg, mult in self.counts:
            for _ in range(mult):
                yield seg

    def __len__(self) -> int:
        return sum(m for _, m in self.counts)

    def __contains__(self, seg: object) -> bool:
        return self.multiplicity(seg) > 0  # type: ignore[arg-type]

    def __str__(self) -> str:
        return serialize_multisegment(self)

    def multiplicity(self, seg: Segment | tuple[int, int]) -> int:
        seg = _as_segment(seg)
        for s, m in self.counts:
            if s == seg:
                return m
        return 0

    def distinct(self) -> list[Segment]:
        return [s for s, _ in self.counts]

    def counter(self) -> Counter[Segment]:
        return Counter(dict(self.counts))


# ---------------------------------------------------------------------------
# text codec

_HEADER = re.compile(r"\s*n\s*=\s*(\d+)\s*:")
_ITEM = re.compile(r"\s*(-?\d+)\s*-\s*(-?\d+)\s*(?:\*\s*(-?\d+))?\s*")


def parse_multisegment(text: str) -> Multisegment:
    """Parse ``n=<int>: a-b, a-b*m, ...``.

    >>> str(parse_multisegment("n=2: 1-2, 1-1, 2-2, 1-2"))
    'n=2: 1-1,1-2*2,2-2'
    """
    header = _HEADER.match(text)
    if header is None:
        raise ParseError("expected header 'n=<int>:'", 0)
    n = int(header.group(1))
    pos = header.end()
    counts: Counter[Segment] = Counter()
    if text[pos:].strip() == "":
        return Multisegment.from_counts(n, counts)
    while True:
        item = _ITEM.match(text, pos)
        if item is None:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            raise ParseError("expected segment 'a-b' or 'a-b*m'", pos)
        a, b = int(item.group(1)), int(item.group(2))
        m = int(item.group(3)) if item.group(3) is not None else 1
        where = item.start(1)
        if a < 1:
            raise ParseError(f"segment start {a} must be at least 1", where)
        if a > b:
            raise ParseError(f"segment {a}-{b} has start greater than end", where)
        if b > n:
            raise ParseError(f"segment {a}-{b} exceeds n={n}", where)
        if m <= 0:
            raise ParseError(f"multiplicity {m} must be positive", where)
        counts[Segment(a, b)] += m
        pos = item.end()
        if pos == len(text):
            break
        if text[pos] != ",":
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        pos += 1
    return Multisegment.from_counts(n, counts)


def serialize_multisegment(m: Multisegment) -> str:
    items = [f"{s.start}-{s.end}" + (f"*{k}" if k >= 2 else "") for s, k in m.counts]
    return f"n={m.length}:" + (" " + ",".join(items) if items else "")


# ---------------------------------------------------------------------------
# weights and columns


def weight(m: Multisegment) -> tuple[int, ...]:
    """Number of segments (with multiplicity) containing each point ``1..n``."""
    diff = [0] * (m.length + 2)
    for seg, mult in m.counts:
        diff[seg.start] += mult
        diff[seg.end + 1] -= mult
    out = []
    running = 0
    for k in range(1, m.length + 1):
        running += diff[k]
        out.append(running)
    return tuple(out)


def is_in_R(m: Multisegment) -> bool:
    n = m.length
    return all(w == n + 1 for w in weight(m))


def require_weight_valid(m: Multisegment) -> None:
    if not is_in_R(m):
        raise NotWeightValidError(weight(m), m.length)


@dataclass(frozen=True, slots=True)
class ColumnProfile:
    column: int
    crossings: int
    cuts: int
    full: bool
    special_full: bool


def _is_chain(segments: list[Segment]) -> bool:
    # sorted by (start asc, end desc) a chain has non-increasing ends
    ordered = sorted(segments, key=lambda s: (s.start, -s.end))
    return all(b.end <= a.end for a, b in zip(ordered, ordered[1:]))


def _crossing_segments(m: Multisegment, k: int) -> list[tuple[Segment, int]]:
    return [(s, c) for s, c in m.counts if s.contains_column(k)]


def _profile(m: Multisegment, k: int, w: tuple[int, ...]) -> ColumnProfile:
    crossing = _crossing_segments(m, k)
    crossings = sum(c for _, c in crossing)
    cuts = min(w[k - 1], w[k]) - crossings
    full = cuts == 0
    special = full and _is_chain([s for s, _ in crossing])
    return ColumnProfile(k, crossings, cuts, full, special)


def column_profiles(m: Multisegment) -> list[ColumnProfile]:
    """Crossings, cuts and fullness of each column ``1..n-1``.

    Raises :class:`NotWeightValidError` unless ``m`` is weight-valid.
    """
    require_weight_valid(m)
    w = weight(m)
    return [_profile(m, k, w) for k in range(1, m.length)]


def special_full_columns(m: Multisegment) -> list[int]:
    return [p.column for p in column_profiles(m) if p.special_full]


def is_in_M(m: Multisegment) -> bool:
    if not is_in_R(m):
        return False
    n = m.length
    for k in range(1, n):
        crossings = sum(c for s, c in m.counts if s.contains_column(k))
        if n + 1 - crossings > 1:
            return False
    return True


def first_excess_cut(m: Multisegment) -> ColumnProfile | None:
    """Leftmost column of a weight-valid ``m`` with more than one cut."""
    for p in column_profiles(m):
        if p.cuts > 1:
            return p
    return None


# ---------------------------------------------------------------------------
# linkage


def linked(a: Segment, b: Segment) -> bool:
    """``a`` starts strictly earlier, ``b`` ends strictly later, union is a segment."""
    return a.start < b.start and a.end < b.end and b.start <= a.end + 1


def quasi_linked(a: Segment, b: Segment) -> bool:
    return linked(a, b) or a.end + 1 == b.start - 1


@dataclass(frozen=True, slots=True)
class LinkedTriple:
    a: Segment
    b: Segment
    c: Segment

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"

    def __iter__(self) -> Iterator[Segment]:
        return iter((self.a, self.b, self.c))


def _iter_linked_triples(m: Multisegment) -> Iterator[LinkedTriple]:
    # linked pairs start strictly later, so a triple uses three distinct
    # segment values and multiplicities never matter
    segs = m.distinct()
    after = {a: [b for b in segs if linked(a, b)] for a in segs}
    for a in segs:
        for b in after[a]:
            for c in after[b]:
                if quasi_linked(a, c):
                    yield LinkedTriple(a, b, c)


def find_linked_triples(m: Multisegment) -> list[LinkedTriple]:
    """All linked triples ``(A, B, C)``, lexicographic in ``(A, B, C)``."""
    return list(_iter_linked_triples(m))


def first_linked_triple(m: Multisegment) -> LinkedTriple | None:
    return next(_iter_linked_triples(m), None)


def is_excessive(m: Multisegment) -> bool:
    return is_in_M(m) and first_linked_triple(m) is None


# ---------------------------------------------------------------------------
# rank tuples


class RankTuple:
    """Upper-triangular matrix ``r[i, j]`` (1-based, ``i <= j``).

    Entry ``r[i, j]`` counts segments containing both ``i`` and ``j``.
    Construction only checks shape and sign; :func:`from_rank_tuple`
    decides whether the entries come from an actual multisegment.
    """

    __slots__ = ("length", "_a")

    def __init__(self, length: int, entries: np.ndarray | Iterable[Iterable[int]]) -> None:
        a = np.array(entries, dtype=np.int64).reshape(length, length)
        a = np.triu(a)
        if (a < 0).any():
            raise ValueError("rank tuple entries must be non-negative")
        a.setflags(write=False)
        self.length = length
        self._a = a

    @classmethod
    def from_dict(cls, length: int, entries: Mapping[tuple[int, int], int]) -> RankTuple:
        a = np.zeros((length, length), dtype=np.int64)
        for (i, j), v in entries.items():
            if not 1 <= i <= j <= length:
                raise ValueError(f"index ({i},{j}) out of range")
            a[i - 1, j - 1] = v
        return cls(length, a)

    @property
    def matrix(self) -> np.ndarray:
        """Read-only ``n x n`` array, 0-based, zero below the diagonal."""
        return self._a

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not 1 <= i <= j <= self.length:
            raise IndexError(f"({i},{j}) outside 1 <= i <= j <= {self.length}")
        return int(self._a[i - 1, j - 1])

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        n = self.length
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                yield (i, j), int(self._a[i - 1, j - 1])

    def rows(self) -> list[list[int]]:
        """Row ``i`` lists ``r[i, i], ..., r[i, n]``."""
        return [[int(x) for x in self._a[i, i:]] for i in range(self.length)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RankTuple):
            return NotImplemented
        return self.length == other.length and np.array_equal(self._a, other._a)

    def __hash__(self) -> int:
        return hash((self.length, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"RankTuple({self.length}, {self.rows()})"


def rank_tuple(m: Multisegment) -> RankTuple:
    n = m.length
    # c[a, b] = multiplicity of [a, b]; r[i, j] sums c over a <= i, b >= j
    c = np.zeros((n + 1, n + 2), dtype=np.int64)
    for seg, mult in m.counts:
        c[seg.start, seg.end] = mult
    r = np.cumsum(c, axis=0)
    r = np.cumsum(r[:, ::-1], axis=1)[:, ::-1]
    return RankTuple(n, r[1:, 1 : n + 1])


def from_rank_tuple(r: RankTuple) -> Multisegment:
    """Recover the multisegment by inclusion-exclusion on the rank matrix.

    Raises :class:`InvalidRankTupleError` at the first ``(i, j)`` (row-major)
    whose multiplicity comes out negative.
    """
    n = r.length
    pad = np.zeros((n + 2, n + 2), dtype=np.int64)
    pad[1 : n + 1, 1 : n + 1] = r.matrix
    mult = pad[1:-1, 1:-1] - pad[:-2, 1:-1] - pad[1:-1, 2:] + pad[:-2, 2:]
    mult = np.triu(mult)
    bad = np.argwhere(mult < 0)
    if len(bad):
        i, j = (int(x) + 1 for x in bad[0])
        raise InvalidRankTupleError(i, j, int(mult[i - 1, j - 1]))
    counts = {
        Segment(int(i) + 1, int(j) + 1): int(mult[i, j]) for i, j in np.argwhere(mult > 0)
    }
    return Multisegment.from_counts(n, counts)


# ---------------------------------------------------------------------------
# rows


def row_decomposition(m: Multisegment) -> list[list[Segment]]:
    """Split a weight-valid ``m`` into ``n + 1`` rows tiling ``[1, n]``.

    Rows are peeled off one at a time, always extending with the remaining
    segment that starts at the current point and ends furthest right.
    """
    require_weight_valid(m)
    n = m.length
    remaining = m.counter()
    by_start: dict[int, list[Segment]] = {}
    for seg in sorted(remaining, key=lambda s: -s.end):
        by_start.setdefault(seg.start, []).append(seg)
    rows = []
    for _ in range(n + 1):
        row = []
        pos = 1
        while pos <= n:
            seg = next(s for s in by_start.get(pos, ()) if remaining[s] > 0)
            remaining[seg] -= 1
            row.append(seg)
            pos = seg.end + 1
        rows.append(row)
    return rows


def interval_compositions(n: int) -> list[tuple[Segment, ...]]:
    """All ``2**(n-1)`` ways to tile ``[1, n]`` by consecutive segments."""
    if n == 0:
        return [()]
    out = []
    for cuts in range(2 ** (n - 1)):
        row = []
        start = 1
        for k in range(1, n):
            if cuts >> (k - 1) & 1:
                row.append(Segment(start, k))
                start = k + 1
        row.append(Segment(start, n))
        out.append(tuple(row))
    return out
