"""The bijection between Motzkin paths and excessive multisegments.

Two independent constructions are provided. :func:`fr` evaluates the
max-formula for the rank tuple directly; :func:`phi` is the unique
monoid homomorphism commuting with suspension, built by recursion on the
factorization of the path. They agree on every path, and
:func:`fr_inverse` inverts both by factoring the multisegment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import InternalDefect, InvalidRankTupleError, NotExcessiveError
from .monoid import (
    E1,
    concat_all,
    desuspend,
    has_suspension_markers,
    left_restrict,
    require_in_M,
    right_restrict,
    suspend,
)
from .motzkin import (
    EMPTY_PATH,
    FLAT_STEP,
    MotzkinPath,
    concat_paths,
    desuspend_path,
    enumerate_paths,
    factorize_path,
    motzkin_number,
    suspend_path,
)
from .multisegments import (
    Multisegment,
    RankTuple,
    first_linked_triple,
    interval_compositions,
    is_excessive,
    is_in_M,
    from_rank_tuple,
    column_profiles,
)

__all__ = [
    "ExcessiveCatalogEntry",
    "IsomorphismReport",
    "fr_rank_tuple",
    "fr",
    "phi",
    "fr_inverse",
    "enumerate_excessive",
    "brute_force_universe",
    "brute_force_M",
    "brute_force_excessive",
    "verify_isomorphism",
    "ORACLE_MAX",
]

#: Largest length the row-multiset oracle runs at without an explicit opt-in.
ORACLE_MAX = 5


def fr_rank_tuple(g: MotzkinPath) -> RankTuple:
    """Rank tuple ``n + 1 - max{g(l) + g(l-1) - g(m) - g(k-1)}`` over ``i<=k<=l<=m<=j``.

    For fixed ``l`` the two subtracted terms are minimized independently,
    so each entry is a single pass over ``l`` using running minima.
    """
    h = g.heights
    n = g.length
    r = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        # left[l] = min h[k-1] for k in [i, l]
        left = {}
        low = h[i - 1]
        for l in range(i, n + 1):
            low = min(low, h[l - 1])
            left[l] = low
        for j in range(i, n + 1):
            best = 0
            right = h[j]
            for l in range(j, i - 1, -1):
                right = min(right, h[l])
                best = max(best, h[l] + h[l - 1] - right - left[l])
            r[i - 1][j - 1] = n + 1 - best
    return RankTuple(n, r)


def fr(g: MotzkinPath) -> Multisegment:
    try:
        return from_rank_tuple(fr_rank_tuple(g))
    except InvalidRankTupleError as exc:
        raise InternalDefect(f"rank formula failed for {g}: {exc}") from exc


@lru_cache(maxsize=4096)
def phi(g: MotzkinPath) -> Multisegment:
    """Image of ``g`` under the suspension-compatible homomorphism."""
    images = []
    for factor in factorize_path(g):
        if factor.length == 1:
            images.append(E1)
        else:
            images.append(suspend(phi(desuspend_path(factor))))
    return concat_all(*images)


def _fr_inverse(m: Multisegment) -> MotzkinPath:
    n = m.length
    if n == 0:
        return EMPTY_PATH
    if n == 1:
        return FLAT_STEP
    special = [p.column for p in column_profiles(m) if p.special_full]
    if special:
        p = special[0]
        return concat_paths(
            _fr_inverse(left_restrict(m, p)), _fr_inverse(right_restrict(m, n - p))
        )
    if not has_suspension_markers(m):
        raise InternalDefect(f"primitive excessive {m} lacks suspension markers")
    return suspend_path(_fr_inverse(desuspend(m)))


def fr_inverse(m: Multisegment) -> MotzkinPath:
    """The path mapped to the excessive multisegment ``m``.

    Raises :class:`NotWeightValidError`, :class:`NotInMError` or
    :class:`NotExcessiveError` (carrying a witness) on invalid input.
    """
    require_in_M(m)
    witness = first_linked_triple(m)
    if witness is not None:
        raise NotExcessiveError(witness)
    return _fr_inverse(m)


@dataclass(frozen=True)
class ExcessiveCatalogEntry:
    path: MotzkinPath
    multisegment: Multisegment
    rank: RankTuple


def enumerate_excessive(n: int) -> list[ExcessiveCatalogEntry]:
    """``(path, fr(path), rank tuple)`` for every path of length ``n``, in path order."""
    out = []
    for g in enumerate_paths(n):
        r = fr_rank_tuple(g)
        out.append(ExcessiveCatalogEntry(g, from_rank_tuple(r), r))
    return out


def _check_oracle_size(n: int, allow_large: bool) -> None:
    cap = ORACLE_MAX + 1 if allow_large else ORACLE_MAX
    if not 0 <= n <= cap:
        hint = "" if allow_large else " (pass allow_large=True for n=6)"
        raise ValueError(f"oracle supports 0 <= n <= {cap}{hint}")


@lru_cache(maxsize=None)
def brute_force_universe(n: int, allow_large: bool = False) -> frozenset[Multisegment]:
    """Every weight-valid multisegment of length ``n``.

    Each one is a union of ``n + 1`` rows tiling ``[1, n]``, so running over
    all multisets of rows reaches all of them.
    """
    _check_oracle_size(n, allow_large)
    rows = interval_compositions(n)
    found = set()
    for choice in combinations_with_replacement(rows, n + 1):
        found.add(Multisegment.of(n, (s for row in choice for s in row)))
    return frozenset(found)


def brute_force_M(n: int, allow_large: bool = False) -> frozenset[Multisegment]:
    return frozenset(m for m in brute_force_universe(n, allow_large) if is_in_M(m))


def brute_force_excessive(n: int, allow_large: bool = False) -> frozenset[Multisegment]:
    return frozenset(m for m in brute_force_M(n, allow_large) if is_excessive(m))


@dataclass
class IsomorphismReport:
    n: int
    entries: int
    expected: int
    checks: dict[str, bool] = field(default_factory=dict)
    counterexamples: list[str] = field(default_factory=list)
    oracle_checked: bool = False

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        oracle = "oracle checked" if self.oracle_checked else "oracle skipped"
        return f"n={self.n}: {status}, {self.entries} entries ({oracle})"


def verify_isomorphism(
    n: int, oracle_max: int = ORACLE_MAX, max_examples: int = 10
) -> IsomorphismReport:
    """Check every property of the bijection at length ``n``; never raises on failure."""
    report = IsomorphismReport(n, 0, motzkin_number(n))
    bad: dict[str, list[str]] = {
        "phi_equals_fr": [],
        "excessive": [],
        "round_trip": [],
    }
    images: dict[Multisegment, MotzkinPath] = {}
    duplicates: list[str] = []
    for g in enumerate_paths(n):
        m = fr(g)
        report.entries += 1
        if phi(g) != m:
            bad["phi_equals_fr"].append(f"{g}: phi={phi(g)} fr={m}")
        if not is_excessive(m):
            bad["excessive"].append(f"{g}: {m}")
            continue
        back = fr_inverse(m)
        if back != g:
            bad["round_trip"].append(f"{g}: fr_inverse gives {back}")
        if m in images:
            duplicates.append(f"{g} and {images[m]} both map to {m}")
        images[m] = g
    for name, items in bad.items():
        report.checks[name] = not items
        report.counterexamples += [f"{name}: {x}" for x in items[:max_examples]]
    report.checks["distinct"] = not duplicates
    report.counterexamples += [f"distinct: {x}" for x in duplicates[:max_examples]]
    report.checks["count"] = len(images) == report.expected == report.entries
    if n <= min(oracle_max, ORACLE_MAX + 1):
        oracle = brute_force_excessive(n, allow_large=n > ORACLE_MAX)
        report.oracle_checked = True
        report.checks["oracle"] = oracle == set(images)
        for m in sorted(oracle ^ set(images), key=str)[:max_examples]:
            report.counterexamples.append(f"oracle: {m}")
    return report
