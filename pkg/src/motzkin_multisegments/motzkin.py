"""Motzkin paths as a free graded monoid with suspension."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InvalidPathError, ParseError

__all__ = [
    "MotzkinPath",
    "parse_path",
    "serialize_path",
    "concat_paths",
    "suspend_path",
    "factorize_path",
    "is_primitive_path",
    "desuspend_path",
    "iter_paths",
    "enumerate_paths",
    "motzkin_number",
    "unrank_path",
    "rank_path",
    "random_path",
]

_STEP = {"U": 1, "F": 0, "D": -1}
_STEP_CHAR = {1: "U", 0: "F", -1: "D"}


@dataclass(frozen=True, slots=True)
class MotzkinPath:
    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        h = self.heights
        if not h:
            raise InvalidPathError("a path has at least one height")
        if h[0] != 0 or h[-1] != 0:
            raise InvalidPathError(f"endpoints must be 0, got {h[0]} and {h[-1]}")
        for k, x in enumerate(h):
            if x < 0:
                raise InvalidPathError(f"height {x} at position {k} is negative")
        for k in range(len(h) - 1):
            if abs(h[k + 1] - h[k]) > 1:
                raise InvalidPathError(f"step from position {k} to {k + 1} exceeds 1")

    @classmethod
    def of(cls, *heights: int) -> MotzkinPath:
        return cls(tuple(heights))

    @classmethod
    def from_steps(cls, steps: str) -> MotzkinPath:
        h = [0]
        for c in steps:
            h.append(h[-1] + _STEP[c])
        return cls(tuple(h))

    @property
    def length(self) -> int:
        return len(self.heights) - 1

    @property
    def steps(self) -> str:
        h = self.heights
        return "".join(_STEP_CHAR[b - a] for a, b in zip(h, h[1:]))

    def __getitem__(self, k: int) -> int:
        return self.heights[k]

    def __str__(self) -> str:
        return serialize_path(self)


EMPTY_PATH = MotzkinPath((0,))
FLAT_STEP = MotzkinPath((0, 0))


def _parse_ints(body: str, offset: int) -> list[int]:
    out = []
    pos = 0
    for token in body.split(","):
        stripped = token.strip()
        where = offset + pos + (len(token) - len(token.lstrip()))
        if not stripped.isdigit():
            raise ParseError(f"expected a non-negative integer, got {stripped!r}", where)
        out.append(int(stripped))
        pos += len(token) + 1
    return out


def parse_path(text: str) -> MotzkinPath:
    """Parse ``heights:0,1,0``, ``steps:UD`` or bare ``0,1,0``."""
    head, sep, body = text.partition(":")
    if sep:
        kind = head.strip()
        offset = len(head) + 1
    else:
        kind, body, offset = "heights", text, 0
    if kind == "heights":
        heights = _parse_ints(body, offset)
    elif kind == "steps":
        heights = [0]
        stripped = body.strip()
        start = offset + body.index(stripped) if stripped else offset
        for i, c in enumerate(stripped):
            if c not in _STEP:
                raise ParseError(f"step {c!r} is not one of U, F, D", start + i)
            heights.append(heights[-1] + _STEP[c])
    else:
        raise ParseError(f"unknown path format {kind!r}", 0)
    return MotzkinPath(tuple(heights))


def serialize_path(g: MotzkinPath) -> str:
    return "heights:" + ",".join(map(str, g.heights))


def concat_paths(*paths: MotzkinPath) -> MotzkinPath:
    h = [0]
    for g in paths:
        h.extend(g.heights[1:])
    return MotzkinPath(tuple(h))


def suspend_path(g: MotzkinPath) -> MotzkinPath:
    return MotzkinPath((0, *(x + 1 for x in g.heights), 0))


def is_primitive_path(g: MotzkinPath) -> bool:
    return g.length >= 1 and all(x > 0 for x in g.heights[1:-1])


def factorize_path(g: MotzkinPath) -> list[MotzkinPath]:
    """Split at every interior zero; the factors are primitive."""
    factors = []
    last = 0
    for k in range(1, g.length + 1):
        if g.heights[k] == 0:
            factors.append(MotzkinPath(g.heights[last : k + 1]))
            last = k
    return factors


def desuspend_path(g: MotzkinPath) -> MotzkinPath:
    if g.length < 2 or not is_primitive_path(g):
        raise InvalidPathError(f"{serialize_path(g)} is not a suspension")
    return MotzkinPath(tuple(x - 1 for x in g.heights[1:-1]))


@lru_cache(maxsize=None)
def motzkin_number(n: int) -> int:
    """First-return recurrence: a path is flat-step-then-path or up-path-down-path."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= 1:
        return 1
    m = n - 1
    return motzkin_number(m) + sum(
        motzkin_number(k) * motzkin_number(m - 1 - k) for k in range(m)
    )


@lru_cache(maxsize=None)
def _completions(remaining: int, height: int) -> int:
    """Number of ways to walk ``remaining`` steps from ``height`` down to 0."""
    if height < 0 or height > remaining:
        return 0
    if remaining == 0:
        return 1
    return sum(_completions(remaining - 1, height + d) for d in (-1, 0, 1))


def iter_paths(n: int) -> Iterator[MotzkinPath]:
    """All paths of length ``n`` in lexicographic order of heights."""
    if n < 0:
        raise ValueError("n must be non-negative")
    h = [0] * (n + 1)

    def walk(k: int) -> Iterator[MotzkinPath]:
        if k == n:
            yield MotzkinPath(tuple(h))
            return
        for d in (-1, 0, 1):
            nxt = h[k] + d
            if 0 <= nxt <= n - k - 1:
                h[k + 1] = nxt
                yield from walk(k + 1)

    yield from walk(0)


def enumerate_paths(n: int) -> list[MotzkinPath]:
    return list(iter_paths(n))


def unrank_path(n: int, index: int) -> MotzkinPath:
    """The ``index``-th path of length ``n`` in :func:`iter_paths` order."""
    if not 0 <= index < motzkin_number(n):
        raise IndexError(f"index {index} out of range for length {n}")
    h = [0]
    for k in range(n):
        for d in (-1, 0, 1):
            c = _completions(n - k - 1, h[-1] + d)
            if index < c:
                h.append(h[-1] + d)
                break
            index -= c
    return MotzkinPath(tuple(h))


def rank_path(g: MotzkinPath) -> int:
    n = g.length
    index = 0
    for k in range(n):
        for d in (-1, 0, 1):
            if g.heights[k] + d == g.heights[k + 1]:
                break
            index += _completions(n - k - 1, g.heights[k] + d)
    return index


def random_path(n: int, rng: random.Random) -> MotzkinPath:
    """Uniformly random path of length ``n``."""
    return unrank_path(n, rng.randrange(motzkin_number(n)))
