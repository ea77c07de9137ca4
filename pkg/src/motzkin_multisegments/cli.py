"""Command line interface.

Exit status: 0 on success, 1 on a malformed literal or bad arguments,
2 when a well-formed input lies outside the required class (for example
``fr-inverse`` on a multisegment that is not excessive).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .correspondence import ORACLE_MAX, enumerate_excessive, fr, fr_inverse
from .errors import DomainError, InvalidPathError, NotExcessiveError, ParseError
from .monoid import factorize, has_suspension_markers
from .motzkin import MotzkinPath, enumerate_paths, motzkin_number, parse_path, serialize_path
from .multisegments import (
    LinkedTriple,
    Multisegment,
    column_profiles,
    find_linked_triples,
    is_in_M,
    is_in_R,
    parse_multisegment,
    rank_tuple,
    row_decomposition,
    serialize_multisegment,
    weight,
)
from .selftest import SelftestConfig, iter_selftest

LISTING_LIMIT = 14
WITNESS_LIMIT = 10


@dataclass
class CommandResult:
    exit_code: int
    stdout: str = ""
    stderr: str = ""


class _Failure(Exception):
    def __init__(self, code: int, message: str, payload: dict | None = None) -> None:
        super().__init__(message)
        self.code = code
        self.payload = payload or {}


def _parse_multisegment(text: str) -> Multisegment:
    try:
        return parse_multisegment(text)
    except ParseError as exc:
        raise _Failure(1, f"cannot parse multisegment: {exc}") from exc


def _parse_path(text: str) -> MotzkinPath:
    try:
        return parse_path(text)
    except (ParseError, InvalidPathError) as exc:
        raise _Failure(1, f"cannot parse path: {exc}") from exc


def _triple(t: LinkedTriple) -> list[str]:
    return [f"{s.start}-{s.end}" for s in t]


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# classify


def _classify_doc(m: Multisegment) -> dict:
    doc: dict = {
        "multisegment": serialize_multisegment(m),
        "length": m.length,
        "weight": list(weight(m)),
        "weight_valid": is_in_R(m),
    }
    triples = find_linked_triples(m)
    doc["linked_triples"] = [_triple(t) for t in triples[:WITNESS_LIMIT]]
    doc["linked_triple_count"] = len(triples)
    doc["suspension_markers"] = has_suspension_markers(m)
    if not doc["weight_valid"]:
        doc.update(columns=None, in_M=False, excessive=False, factorization=None)
        return doc
    profiles = column_profiles(m)
    doc["columns"] = [
        {
            "column": p.column,
            "crossings": p.crossings,
            "cuts": p.cuts,
            "full": p.full,
            "special_full": p.special_full,
        }
        for p in profiles
    ]
    doc["full_columns"] = [p.column for p in profiles if p.full]
    doc["special_full_columns"] = [p.column for p in profiles if p.special_full]
    doc["in_M"] = is_in_M(m)
    doc["excessive"] = doc["in_M"] and not triples
    if doc["in_M"]:
        fac = factorize(m)
        doc["factorization"] = {
            "factors": [serialize_multisegment(f) for f in fac.factors],
            "split_columns": list(fac.split_columns),
        }
    else:
        doc["factorization"] = None
    return doc


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_classify(literal: str, as_json: bool = False) -> CommandResult:
    m = _parse_multisegment(literal)
    doc = _classify_doc(m)
    if as_json:
        return CommandResult(0, _dump(doc))
    n = m.length
    lines = [
        f"multisegment: {doc['multisegment']}",
        f"weight: {tuple(doc['weight'])}",
        f"weight-valid: {_yes(doc['weight_valid'])}"
        + ("" if doc["weight_valid"] else f" (expected {tuple([n + 1] * n)})"),
    ]
    if doc["weight_valid"]:
        lines.append("columns:")
        lines.append("  k  crossings  cuts  full  special")
        for c in doc["columns"]:
            lines.append(
                f"  {c['column']:<2} {c['crossings']:<10} {c['cuts']:<5} "
                f"{_yes(c['full']):<5} {_yes(c['special_full'])}"
            )
        lines.append(f"full columns: {doc['full_columns']}")
        lines.append(f"special full columns: {doc['special_full_columns']}")
        lines.append(f"in M: {_yes(doc['in_M'])}")
        lines.append(f"excessive: {_yes(doc['excessive'])}")
    if doc["linked_triples"]:
        lines.append(f"linked triples ({doc['linked_triple_count']}):")
        lines += [f"  ({', '.join(t)})" for t in doc["linked_triples"]]
    else:
        lines.append("linked triples: none")
    lines.append(f"suspension markers: {_yes(doc['suspension_markers'])}")
    if doc.get("factorization"):
        f = doc["factorization"]
        lines.append(f"factorization (split columns {f['split_columns']}):")
        lines += [f"  {x}" for x in f["factors"]]
    return CommandResult(0, "\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# convert


def cmd_convert(direction: str, literal: str, as_json: bool = False) -> CommandResult:
    if direction == "fr":
        g = _parse_path(literal)
        m = fr(g)
        doc = {
            "path": serialize_path(g),
            "multisegment": serialize_multisegment(m),
            "rank_tuple": rank_tuple(m).rows(),
        }
        text = doc["multisegment"]
    elif direction == "fr-inverse":
        m = _parse_multisegment(literal)
        try:
            g = fr_inverse(m)
        except NotExcessiveError as exc:
            raise _Failure(2, str(exc), {"witness": _triple(exc.witness)}) from exc
        except DomainError as exc:
            raise _Failure(2, str(exc)) from exc
        doc = {"multisegment": serialize_multisegment(m), "path": serialize_path(g)}
        text = doc["path"]
    else:
        raise _Failure(1, f"unknown direction {direction!r}")
    return CommandResult(0, _dump(doc) if as_json else text + "\n")


# ---------------------------------------------------------------------------
# enumerate


def cmd_enumerate(
    kind: str, n: int, count_only: bool = False, as_json: bool = False, force: bool = False
) -> CommandResult:
    if n < 0:
        raise _Failure(1, "n must be non-negative")
    if n > LISTING_LIMIT and not force:
        raise _Failure(1, f"n={n} exceeds {LISTING_LIMIT}; pass --force to enumerate anyway")
    if kind == "paths":
        items = [{"path": serialize_path(g)} for g in enumerate_paths(n)]
    elif kind == "excessive":
        items = [
            {
                "path": serialize_path(e.path),
                "multisegment": serialize_multisegment(e.multisegment),
                "rank_tuple": e.rank.rows(),
            }
            for e in enumerate_excessive(n)
        ]
    else:
        raise _Failure(1, f"unknown kind {kind!r}")
    expected = motzkin_number(n)
    if len(items) != expected:
        raise _Failure(2, f"enumerated {len(items)} objects, expected {expected}")
    if as_json:
        doc: dict = {"kind": kind, "n": n, "count": len(items)}
        if not count_only:
            doc["items"] = items
        return CommandResult(0, _dump(doc))
    if count_only:
        return CommandResult(0, f"{len(items)}\n")
    if kind == "paths":
        lines = [it["path"] for it in items]
    else:
        lines = [
            f"{it['path']} -> {it['multisegment']}  rank={it['rank_tuple']}" for it in items
        ]
    return CommandResult(0, "".join(line + "\n" for line in lines))


# ---------------------------------------------------------------------------
# render


def render_path(g: MotzkinPath) -> str:
    """Draw ``/``, ``_`` and ``\\`` steps above a ``-`` baseline."""
    n = g.length
    if n == 0:
        return "(empty path)\n"
    h = g.heights
    top = max(h)
    grid = [[" "] * n for _ in range(top + 1)]
    for k in range(n):
        a, b = h[k], h[k + 1]
        if b > a:
            grid[a][k] = "/"
        elif b < a:
            grid[b][k] = "\\"
        else:
            grid[a][k] = "_"
    rows = ["".join(r).rstrip() for r in reversed(grid)]
    while rows and not rows[0]:
        rows.pop(0)
    return "\n".join(rows + ["-" * n]) + "\n"


def render_multisegment(m: Multisegment) -> str:
    """One line per row: ``o`` per point, ``-`` joining points of one segment."""
    if m.length == 0:
        return "(empty multisegment)\n"
    lines = []
    for row in row_decomposition(m):
        lines.append(" ".join("-".join("o" * (s.end - s.start + 1)) for s in row))
    return "\n".join(lines) + "\n"


def cmd_render(literal: str) -> CommandResult:
    if literal.lstrip().startswith("n"):
        m = _parse_multisegment(literal)
        if not is_in_R(m):
            raise _Failure(2, f"cannot draw rows: weight {weight(m)} is not weight-valid")
        return CommandResult(0, render_multisegment(m))
    return CommandResult(0, render_path(_parse_path(literal)))


# ---------------------------------------------------------------------------
# selftest


def cmd_selftest(
    n_max: int = 8,
    samples: int = 1000,
    seed: int = 0,
    oracle_max: int = ORACLE_MAX,
    allow_large_oracle: bool = False,
) -> CommandResult:
    cfg = SelftestConfig(n_max, samples, seed, oracle_max, allow_large_oracle)
    lines = [
        f"selftest n-max={n_max} samples={samples} seed={seed} oracle-max={cfg.oracle_cap}",
        f"{'check':34} {'cases':>8}  result",
    ]
    ok = True
    for res in iter_selftest(cfg):
        ok &= res.passed
        lines.append(f"{res.name:34} {res.cases:>8}  {'PASS' if res.passed else 'FAIL'}")
        lines += [f"    {f}" for f in res.failures]
    lines.append("all checks passed" if ok else "SOME CHECKS FAILED")
    return CommandResult(0 if ok else 2, "\n".join(lines) + "\n")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motzkin-multisegments",
        description="Motzkin paths and excessive multisegments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="report column statistics and class membership")
    p.add_argument("literal", help="multisegment, e.g. 'n=2: 1-2*3'")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("convert", help="apply FR or its inverse")
    p.add_argument("direction", choices=["fr", "fr-inverse"])
    p.add_argument("literal")
    p.add_argument("--json", action="store_true")

    for name in ("fr", "fr-inverse"):
        p = sub.add_parser(name, help=f"shorthand for 'convert {name}'")
        p.add_argument("literal")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="list paths or excessive multisegments of length n")
    p.add_argument("kind", choices=["paths", "excessive"])
    p.add_argument("n", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--force", action="store_true", help=f"allow n > {LISTING_LIMIT}")

    p = sub.add_parser("render", help="ASCII drawing of a path or multisegment")
    p.add_argument("literal")

    p = sub.add_parser("selftest", help="run the invariant suite")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-max", type=int, default=ORACLE_MAX)
    p.add_argument(
        "--allow-large-oracle",
        action="store_true",
        help=f"let the brute-force oracle run at n={ORACLE_MAX + 1}",
    )
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(0 if exc.code == 0 else 1)
    as_json = getattr(args, "json", False)
    try:
        if args.command == "classify":
            return cmd_classify(args.literal, as_json)
        if args.command == "convert":
            return cmd_convert(args.direction, args.literal, as_json)
        if args.command in ("fr", "fr-inverse"):
            return cmd_convert(args.command, args.literal, as_json)
        if args.command == "enumerate":
            return cmd_enumerate(args.kind, args.n, args.count_only, as_json, args.force)
        if args.command == "render":
            return cmd_render(args.literal)
        return cmd_selftest(
            args.n_max, args.samples, args.seed, args.oracle_max, args.allow_large_oracle
        )
    except _Failure as exc:
        if as_json:
            doc = {"error": str(exc), "exit_code": exc.code, **exc.payload}
            return CommandResult(exc.code, _dump(doc), f"error: {exc}\n")
        err = f"error: {exc}\n"
        if "witness" in exc.payload:
            err += f"witness: ({', '.join(exc.payload['witness'])})\n"
        return CommandResult(exc.code, "", err)


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
