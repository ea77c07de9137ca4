"""Invariant suite: exhaustive checks at small sizes, seeded sampling beyond.

Every check returns the number of cases it examined and the counterexamples
it found, so a run is a table of ``(name, cases, failures)`` rows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from .correspondence import (
    ORACLE_MAX,
    brute_force_M,
    brute_force_universe,
    fr,
    fr_rank_tuple,
    verify_isomorphism,
)
from .monoid import (
    concat,
    desuspend,
    factorize,
    has_suspension_markers,
    left_restrict,
    random_in_M,
    right_restrict,
    suspend,
)
from .motzkin import (
    concat_paths,
    desuspend_path,
    enumerate_paths,
    factorize_path,
    is_primitive_path,
    motzkin_number,
    random_path,
    suspend_path,
)
from .multisegments import (
    Multisegment,
    Segment,
    column_profiles,
    from_rank_tuple,
    is_excessive,
    is_in_M,
    linked,
    parse_multisegment,
    quasi_linked,
    rank_tuple,
    row_decomposition,
    serialize_multisegment,
)

MAX_REPORTED = 5


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, detail: Callable[[], str] | str) -> None:
        self.cases += 1
        if not ok and len(self.failures) < MAX_REPORTED:
            self.failures.append(detail() if callable(detail) else detail)


@dataclass
class SelftestConfig:
    n_max: int = 8
    samples: int = 1000
    seed: int = 0
    oracle_max: int = ORACLE_MAX
    allow_large_oracle: bool = False

    @property
    def oracle_cap(self) -> int:
        cap = ORACLE_MAX + 1 if self.allow_large_oracle else ORACLE_MAX
        return max(0, min(self.oracle_max, self.n_max, cap))

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    def universe(self, n: int) -> frozenset[Multisegment]:
        return brute_force_universe(n, self.allow_large_oracle and n > ORACLE_MAX)

    def m_universe(self, n: int) -> frozenset[Multisegment]:
        return brute_force_M(n, self.allow_large_oracle and n > ORACLE_MAX)


def _paths(cfg: SelftestConfig):
    for n in range(cfg.n_max + 1):
        yield from enumerate_paths(n)


def check_motzkin_counts(cfg: SelftestConfig, res: CheckResult) -> None:
    for n in range(cfg.n_max + 1):
        got = len(enumerate_paths(n))
        res.expect(got == motzkin_number(n), f"n={n}: {got} paths vs {motzkin_number(n)}")


def check_path_factorization(cfg: SelftestConfig, res: CheckResult) -> None:
    for g in _paths(cfg):
        fs = factorize_path(g)
        ok = concat_paths(*fs) == g and all(is_primitive_path(f) for f in fs)
        ok = ok and factorize_path(concat_paths(*fs)) == fs
        ok = ok and all(
            f.length == 1 or suspend_path(desuspend_path(f)) == f for f in fs
        )
        res.expect(ok, lambda: f"{g}: factors {[str(f) for f in fs]}")


def check_isomorphism(cfg: SelftestConfig, res: CheckResult) -> None:
    for n in range(cfg.n_max + 1):
        report = verify_isomorphism(n, oracle_max=cfg.oracle_cap)
        res.expect(report.passed, lambda: f"{report.summary()}: {report.counterexamples}")


def _random_pair(cfg: SelftestConfig, rng: random.Random):
    total = rng.randint(0, 2 * cfg.n_max)
    p = rng.randint(0, total)
    return random_path(p, rng), random_path(total - p, rng)


def check_homomorphism(cfg: SelftestConfig, res: CheckResult) -> None:
    rng = cfg.rng("homomorphism")
    for _ in range(cfg.samples):
        g, h = _random_pair(cfg, rng)
        res.expect(
            fr(concat_paths(g, h)) == concat(fr(g), fr(h)),
            lambda: f"fr({g} * {h}) != fr({g}) * fr({h})",
        )
        res.expect(fr(suspend_path(g)) == suspend(fr(g)), lambda: f"fr(S({g})) != S(fr({g}))")


def check_rank_formulas(cfg: SelftestConfig, res: CheckResult) -> None:
    """Piecewise rank formulas for products and suspensions of FR images."""
    rng = cfg.rng("rank-formulas")
    for _ in range(cfg.samples):
        g, h = _random_pair(cfg, rng)
        p, q = g.length, h.length
        rg, rh = fr_rank_tuple(g), fr_rank_tuple(h)
        prod = rank_tuple(concat(fr(g), fr(h)))
        path_prod = fr_rank_tuple(concat_paths(g, h))
        for i in range(1, p + q + 1):
            for j in range(i, p + q + 1):
                if j <= p:
                    want = rg[i, j] + q
                elif i > p:
                    want = rh[i - p, j - p] + p
                else:
                    want = min(rg[i, p] + q, rh[1, j - p] + p)
                res.expect(
                    prod[i, j] == want == path_prod[i, j],
                    lambda: f"product rank ({i},{j}) for {g} * {h}",
                )
        susp = rank_tuple(suspend(fr(g)))
        path_susp = fr_rank_tuple(suspend_path(g))
        for i in range(1, p + 3):
            for j in range(i, p + 3):
                if p == 0 or (i, j) in ((1, 1), (p + 2, p + 2)):
                    # corners fall outside the formulas; they carry the full weight
                    want = p + 3 if i == j else path_susp[i, j]
                elif 1 < i and j < p + 2:
                    want = rg[i - 1, j - 1] + 2
                elif i == 1 and j < p + 2:
                    want = rg[1, j - 1] + 1
                elif 1 < i:
                    want = rg[i - 1, p] + 1
                else:
                    want = rg[1, p]
                res.expect(
                    susp[i, j] == want == path_susp[i, j],
                    lambda: f"suspension rank ({i},{j}) for {g}",
                )


def check_core_invariants(cfg: SelftestConfig, res: CheckResult) -> None:
    """Codec, rank tuples, column balance and row decomposition on all of R_n."""
    for n in range(cfg.oracle_cap + 1):
        for m in cfg.universe(n):
            text = serialize_multisegment(m)
            res.expect(parse_multisegment(text) == m, f"codec: {text}")
            res.expect(from_rank_tuple(rank_tuple(m)) == m, f"rank round trip: {text}")
            for prof in column_profiles(m):
                k = prof.column
                ending = sum(c for s, c in m.counts if s.end == k)
                starting = sum(c for s, c in m.counts if s.start == k + 1)
                res.expect(ending == n + 1 - prof.crossings == starting, f"balance at {k}: {text}")
                if prof.special_full:
                    cross = [s for s in m.distinct() if s.contains_column(k)]
                    res.expect(
                        all(a.issubset(b) or b.issubset(a) for a in cross for b in cross),
                        f"special full column {k} not a chain: {text}",
                    )
            rows = row_decomposition(m)
            tiled = all(
                [s.start for s in r] == [1] + [a.end + 1 for a in r[:-1]] and r[-1].end == n
                if r
                else n == 0
                for r in rows
            )
            union = Multisegment.of(n, (s for r in rows for s in r))
            res.expect(
                len(rows) == n + 1 and tiled and union == m,
                f"rows: {text}",
            )


def check_linkage(cfg: SelftestConfig, res: CheckResult) -> None:
    top = max(cfg.n_max, 1) + 1
    segs = [Segment(i, j) for i in range(1, top + 1) for j in range(i, top + 1)]
    for a, b in product(segs, segs):
        if linked(a, b):
            res.expect(
                quasi_linked(a, b) and not a.issubset(b) and not b.issubset(a),
                f"linked {a},{b}",
            )
        else:
            res.cases += 1


def _pairs(cfg: SelftestConfig, universe: Callable[[int], frozenset[Multisegment]]):
    for total in range(cfg.oracle_cap + 1):
        for p in range(total + 1):
            for a in universe(p):
                for b in universe(total - p):
                    yield p, total - p, a, b


def check_monoid_laws(cfg: SelftestConfig, res: CheckResult) -> None:
    empty = Multisegment.empty()
    images: dict[tuple[int, Multisegment], tuple[Multisegment, Multisegment]] = {}
    for p, q, a, b in _pairs(cfg, cfg.universe):
        c = concat(a, b)
        res.expect(concat(empty, a) == a == concat(a, empty), f"identity: {a}")
        res.expect(c.length == p + q, f"grading: {a} * {b}")
        if p and q:
            res.expect(column_profiles(c)[p - 1].special_full, f"no special column: {a} * {b}")
        key = (p, c)
        res.expect(key not in images, f"not injective: {a} * {b} = {images.get(key)}")
        images[key] = (a, b)
    rng = cfg.rng("associativity")
    small = [m for n in range(min(cfg.oracle_cap, 3) + 1) for m in sorted(cfg.universe(n), key=str)]
    for _ in range(cfg.samples if small else 0):
        a, b, c = (rng.choice(small) for _ in range(3))
        res.expect(concat(concat(a, b), c) == concat(a, concat(b, c)), f"assoc: {a}, {b}, {c}")


def check_concat_bijection_on_M(cfg: SelftestConfig, res: CheckResult) -> None:
    """On M, concatenation at p is onto the elements with a special full column at p."""
    hit: dict[int, set[Multisegment]] = {}
    for p, q, a, b in _pairs(cfg, cfg.m_universe):
        if not (p and q):
            continue
        c = concat(a, b)
        res.expect(is_in_M(c), f"product leaves M: {a} * {b}")
        res.expect(left_restrict(c, p) == a, f"left restriction: {a} * {b}")
        res.expect(right_restrict(c, q) == b, f"right restriction: {a} * {b}")
        res.expect(
            is_excessive(c) == (is_excessive(a) and is_excessive(b)),
            f"excessive product: {a} * {b}",
        )
        hit.setdefault(p, set()).add(c)
    for n in range(2, cfg.oracle_cap + 1):
        for m in cfg.m_universe(n):
            special = [x.column for x in column_profiles(m) if x.special_full]
            for p in special:
                res.expect(m in hit.get(p, ()), f"not a product at {p}: {m}")
                res.expect(
                    concat(left_restrict(m, p), right_restrict(m, n - p)) == m,
                    f"restrictions do not recompose at {p}: {m}",
                )
                left = left_restrict(m, p)
                left_special = p > 1 and any(x.special_full for x in column_profiles(left))
                res.expect(
                    left_special == any(s < p for s in special),
                    f"left factor special columns at {p}: {m}",
                )
            fac = factorize(m)
            res.expect(
                fac.product() == m and fac.split_columns == tuple(special),
                f"factorization: {m}",
            )


def check_suspension(cfg: SelftestConfig, res: CheckResult) -> None:
    for n in range(cfg.oracle_cap + 1):
        for m in cfg.universe(n):
            s = suspend(m)
            res.expect(s.length == n + 2, f"grading: S({m})")
            res.expect(not any(x.special_full for x in column_profiles(s)), f"S({m}) not primitive")
            res.expect(is_in_M(s) == is_in_M(m), f"M membership: S({m})")
            res.expect(has_suspension_markers(s), f"markers: S({m})")
            if is_in_M(m):
                res.expect(desuspend(s) == m, f"desuspend(S({m}))")
                res.expect(is_excessive(s) == is_excessive(m), f"excessive: S({m})")
    rng = cfg.rng("desuspend")
    for _ in range(cfg.samples):
        n = rng.randint(cfg.oracle_cap + 1, cfg.oracle_cap + 6)
        m = random_in_M(n, rng)
        res.expect(desuspend(suspend(m)) == m, f"desuspend(S({m}))")


def check_marker_characterization(cfg: SelftestConfig, res: CheckResult) -> None:
    for n in range(2, cfg.oracle_cap + 1):
        suspensions = {suspend(x) for x in cfg.m_universe(n - 2)}
        for m in cfg.m_universe(n):
            res.expect(has_suspension_markers(m) == (m in suspensions), f"markers: {m}")


def check_non_freeness(cfg: SelftestConfig, res: CheckResult) -> None:
    a = parse_multisegment("n=2: 1-1*3,2-2*3")
    b = parse_multisegment("n=4: 1-1*5,2-3*3,2-4*2,4-4*3")
    b2 = parse_multisegment("n=4: 1-1*3,1-3*2,2-3*3,4-4*5")
    c = parse_multisegment("n=6: 1-1*3,1-3*2,1-6*2,2-3*3,4-5*3,4-6*2,6-6*3")
    res.expect(concat(a, b) == c == concat(b2, a), "A*B = C = B'*A fails")


CHECKS: list[tuple[str, Callable[[SelftestConfig, CheckResult], None]]] = [
    ("motzkin counts", check_motzkin_counts),
    ("path factorization", check_path_factorization),
    ("linkage predicates", check_linkage),
    ("core invariants on R_n", check_core_invariants),
    ("monoid laws on R", check_monoid_laws),
    ("concatenation bijection on M", check_concat_bijection_on_M),
    ("suspension", check_suspension),
    ("suspension markers", check_marker_characterization),
    ("non-freeness of R", check_non_freeness),
    ("fr homomorphism", check_homomorphism),
    ("piecewise rank formulas", check_rank_formulas),
    ("isomorphism and oracle", check_isomorphism),
]


def iter_selftest(cfg: SelftestConfig) -> Iterator[CheckResult]:
    for name, fn in CHECKS:
        res = CheckResult(name)
        try:
            fn(cfg, res)
        except Exception as exc:  # a crash is a failed check, not an aborted run
            res.failures.append(f"raised {type(exc).__name__}: {exc}")
        yield res


def run_selftest(cfg: SelftestConfig | None = None) -> list[CheckResult]:
    return list(iter_selftest(cfg or SelftestConfig()))
