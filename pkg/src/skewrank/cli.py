"""Command-line driver.

Subcommands: analyze, code, snakes, decompose, character, expand, shat,
zrank, latin, scan. Human-readable text by default, JSON with --json.
Exit codes: 0 success, 2 usage error, 3 internal invariant failure,
4 when the scan finds a rank != zrank counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import characters, codes, decomp, orders, snakes, specialization
from .shapes import (
    InvariantError,
    ShapeError,
    SkewShape,
    diagonal_rank,
    enumerate_shapes,
    normalize,
    parse_shape,
    partitions_of,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3
EXIT_COUNTEREXAMPLE = 4


def _fraction_json(q: Fraction) -> dict:
    return {"numerator": q.numerator, "denominator": q.denominator}


def build_shape_report(shape: SkewShape, full: bool = False) -> dict:
    """Cross-validated per-shape report.

    All four rank characterizations must agree, the minimal-decomposition
    count must equal is^2, and the three y routes must coincide; any
    violation raises InvariantError and the report is never emitted.
    """
    shape = normalize(shape)
    ranks = specialization.rank_profile(shape)
    rank = ranks["diagonal"]
    code = codes.code_of(shape)
    count = snakes.is_count(shape)
    report_counts = decomp.counting_report(shape)
    if report_counts.mbsd != count * count:
        raise InvariantError("mbsd differs from is^2")
    y_routes = {
        m: characters.y_value(shape, method=m)
        for m in ("intervals", "pfaffian", "leading")
    }
    if len(set(y_routes.values())) != 1:
        raise InvariantError(f"y routes disagree: {y_routes}")
    y = y_routes["intervals"]
    poly = specialization.principal_specialization(shape)
    zr = poly.low_order() if not shape.is_empty else 0
    thm1b = specialization.thm1b_condition(shape)
    if thm1b:
        cy = specialization.cauchy_y(shape)
        if cy != y or cy == 0:
            raise InvariantError(f"Cauchy coefficient {cy} disagrees with y = {y}")
    divisibility: dict = {"status": "skipped"}
    if full or shape.size <= 12:
        checked = 0
        for nu in partitions_of(shape.size, length=rank):
            result = characters.divisibility_check(shape, nu)
            if not result.divides:
                raise InvariantError(f"divisibility fails at {nu}")
            checked += 1
        divisibility = {"status": "ok", "checked": checked}
    return {
        "shape": shape.literal(),
        "cells": shape.size,
        "rank": ranks,
        "zrank": zr,
        "y": _fraction_json(y),
        "is": count,
        "mbsd": report_counts.mbsd,
        "mbst": report_counts.mbst,
        "snake_sequence": str(snakes.snake_sequence(shape)),
        "pairing": snakes.canonical_pairing(shape).to_json(),
        "z": snakes.z_statistic(shape),
        "code": code.to_json(),
        "flags": {"thm1b": thm1b, "divisibility": divisibility},
    }


def _print_report(report: dict, out) -> None:
    ranks = report["rank"]
    print(f"shape: {report['shape']}", file=out)
    print(f"cells: {report['cells']}", file=out)
    print(
        "rank: {} (diagonal={diagonal}, strips={strips}, "
        "jacobi_trudi={jacobi_trudi}, code={code})".format(ranks["diagonal"], **ranks),
        file=out,
    )
    print(f"zrank: {report['zrank']}", file=out)
    y = report["y"]
    print(f"y: {y['numerator']}/{y['denominator']}", file=out)
    print(f"snake sequence: {report['snake_sequence']}", file=out)
    pairing = " ".join(f"({u},{v})" for u, v in report["pairing"])
    print(f"pairing: {pairing}", file=out)
    print(f"code c: {report['code']['c']}", file=out)
    print(f"code d: {report['code']['d']}", file=out)
    print(f"z: {report['z']}", file=out)
    print(f"interval sets: {report['is']}", file=out)
    print(f"minimal decompositions: {report['mbsd']}", file=out)
    print(f"minimal tableaux: {report['mbst']}", file=out)
    print(f"thm1b condition: {report['flags']['thm1b']}", file=out)
    div = report["flags"]["divisibility"]
    if div["status"] == "ok":
        print(f"divisibility: ok ({div['checked']} types checked)", file=out)
    else:
        print("divisibility: skipped (rerun with --full)", file=out)


def _parse_partition_arg(text: str) -> tuple[int, ...]:
    from .shapes import as_partition

    if "," in text:
        return as_partition(int(x) for x in text.split(","))
    if all(ch in "123456789" for ch in text):
        return as_partition(int(ch) for ch in text)
    if text.isdigit():
        return as_partition((int(text),))
    raise ShapeError(f"bad partition: {text!r}")


def _emit(args, payload: dict, human) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        human()


def _cmd_analyze(args) -> int:
    shape = parse_shape(args.shape)
    report = build_shape_report(shape, full=args.full)
    _emit(args, report, lambda: _print_report(report, sys.stdout))
    return EXIT_OK


def _cmd_code(args) -> int:
    shape = parse_shape(args.shape)
    code = codes.code_of(shape)
    payload = {"shape": normalize(shape).literal(), **code.to_json()}

    def human():
        print(f"c: {payload['c']}")
        print(f"d: {payload['d']}")

    _emit(args, payload, human)
    return EXIT_OK


def _cmd_snakes(args) -> int:
    shape = parse_shape(args.shape)
    items = snakes.snakes_of(shape)
    payload = {
        "shape": normalize(shape).literal(),
        "snake_sequence": str(snakes.snake_sequence(shape)),
        "snakes": [
            {
                "index": s.index,
                "kind": s.kind.value,
                "length": s.length,
                "squares": [[i, j] for i, j in s.squares],
            }
            for s in items
        ],
    }

    def human():
        print(f"snake sequence: {payload['snake_sequence']}")
        for s in items:
            squares = " ".join(f"({i},{j})" for i, j in s.squares) or "-"
            print(f"  {s.index:3d} {s.kind.value:<5} length {s.length:2d}  {squares}")

    _emit(args, payload, human)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    shape = parse_shape(args.shape)
    counts = decomp.counting_report(shape)
    if args.count_only:
        payload = {
            "shape": normalize(shape).literal(),
            "total": counts.total,
            "mbsd": counts.mbsd,
            "mbst": counts.mbst,
            "by_type": {str(list(t)): n for t, n in sorted(counts.by_type.items())},
        }

        def human():
            print(f"total decompositions: {counts.total}")
            print(f"minimal decompositions: {counts.mbsd}")
            print(f"minimal tableaux: {counts.mbst}")
            for t, n in sorted(counts.by_type.items(), reverse=True):
                print(f"  type {t}: {n}")

        _emit(args, payload, human)
        return EXIT_OK
    stream = (
        decomp.minimal_decompositions(shape)
        if args.minimal
        else decomp.all_decompositions(shape)
    )
    items = list(stream)
    payload = {
        "shape": normalize(shape).literal(),
        "count": len(items),
        "decompositions": [d.to_json() for d in items],
    }

    def human():
        for n, d in enumerate(items, start=1):
            strips = "; ".join(
                " ".join(f"({i},{j})" for i, j in b.squares) for b in d.strips
            )
            print(f"{n:4d}  type {d.type}: {strips}")
        print(f"count: {len(items)}")

    _emit(args, payload, human)
    return EXIT_OK


def _cmd_character(args) -> int:
    shape = parse_shape(args.shape)
    nu = _parse_partition_arg(args.type)
    value = characters.mn_character(shape, nu)
    payload = {"shape": normalize(shape).literal(), "type": list(nu), "chi": value}
    _emit(args, payload, lambda: print(f"chi{tuple(nu)} = {value}"))
    return EXIT_OK


def _cmd_expand(args) -> int:
    shape = parse_shape(args.shape)
    poly = characters.power_sum_expansion(shape)
    payload = {"shape": normalize(shape).literal(), "power_sums": poly.to_json()}
    _emit(args, payload, lambda: print(str(poly)))
    return EXIT_OK


def _cmd_shat(args) -> int:
    shape = parse_shape(args.shape)
    if args.method == "all":
        values = {
            m: characters.s_hat(shape, method=m)
            for m in ("direct", "intervals", "pfaffian")
        }
        if len({tuple(v.terms) for v in values.values()}) != 1:
            raise InvariantError("s_hat methods disagree")
        poly = values["intervals"]
    else:
        poly = characters.s_hat(shape, method=args.method)
    payload = {
        "shape": normalize(shape).literal(),
        "method": args.method,
        "power_sums": poly.to_json(),
    }
    _emit(args, payload, lambda: print(str(poly)))
    return EXIT_OK


def _cmd_zrank(args) -> int:
    shape = parse_shape(args.shape)
    rank = diagonal_rank(normalize(shape))
    poly = specialization.principal_specialization(shape)
    zr = poly.low_order()
    y = poly.coefficient(rank)
    payload = {
        "shape": normalize(shape).literal(),
        "rank": rank,
        "zrank": zr,
        "equal": rank == zr,
        "y": _fraction_json(y),
        "specialization": poly.to_json(),
    }

    def human():
        print(f"rank:  {rank}")
        print(f"zrank: {zr}")
        print(f"equal: {rank == zr}")
        print(f"y (coefficient of t^{rank}): {y}")

    _emit(args, payload, human)
    return EXIT_OK


def _cmd_latin(args) -> int:
    shape = parse_shape(args.shape)
    square = decomp.latin_square(shape)
    payload = {"shape": normalize(shape).literal(), **square.to_json()}

    def human():
        print("interval sets:")
        for n, iset in enumerate(square.legend, start=1):
            pairs = " ".join(f"({u},{v})" for u, v in iset.pairs)
            print(f"  {n}: {pairs}")
        print("latin square:")
        for row in square.indices:
            print("  " + " ".join(str(x) for x in row))

    _emit(args, payload, human)
    return EXIT_OK


@dataclass(frozen=True)
class ScanConfig:
    max_rows: int
    max_cols: int
    max_cells: int
    shard_index: int = 0
    shard_count: int = 1
    workers: int = 1
    output: str | None = None

    def __post_init__(self) -> None:
        if min(self.max_rows, self.max_cols, self.max_cells) < 0:
            raise ValueError("scan bounds must be nonnegative")
        if not 0 <= self.shard_index < self.shard_count:
            raise ValueError(f"shard {self.shard_index}/{self.shard_count} invalid")
        if self.workers < 1:
            raise ValueError("workers must be positive")


@dataclass(frozen=True)
class ScanSummary:
    config: ScanConfig
    shapes_scanned: int
    by_cells: dict[int, int]
    counterexamples: tuple[str, ...]
    elapsed_seconds: float

    def file_record(self) -> dict:
        # Byte-stable: no timings, no worker count.
        return {
            "type": "summary",
            "config": {
                "max_rows": self.config.max_rows,
                "max_cols": self.config.max_cols,
                "max_cells": self.config.max_cells,
                "shard": [self.config.shard_index, self.config.shard_count],
            },
            "shapes_scanned": self.shapes_scanned,
            "by_cells": {str(k): v for k, v in sorted(self.by_cells.items())},
            "counterexamples": list(self.counterexamples),
        }


def _scan_one(pair: tuple[tuple[int, ...], tuple[int, ...]]) -> tuple:
    """Worker: rank and zrank of one shape, plus the straight-shape
    hook-content confirmation. Must stay importable for multiprocessing."""
    lam, mu = pair
    shape = SkewShape(lam, mu)
    rank = diagonal_rank(shape)
    poly = specialization.principal_specialization(shape)
    zr = poly.low_order()
    if not mu:
        hook = specialization.hook_content_specialization(lam)
        if hook != poly:
            raise InvariantError(f"hook content mismatch for straight shape {lam}")
    return (lam, mu, shape.size, rank, zr)


def run_scan(cfg: ScanConfig):
    """Exhaustive rank-vs-zrank comparison over the configured box.

    Returns (summary, counterexample_reports). Results are independent of
    the worker count and shard split; records are merged in enumeration
    order.
    """
    start = time.monotonic()
    pairs = [
        (s.lam, s.mu)
        for n, s in enumerate(enumerate_shapes(cfg.max_rows, cfg.max_cols, cfg.max_cells))
        if n % cfg.shard_count == cfg.shard_index
    ]
    if cfg.workers > 1 and len(pairs) > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_scan_one, pairs, chunksize=64))
    else:
        results = [_scan_one(p) for p in pairs]
    by_cells: dict[int, int] = {}
    bad: list[dict] = []
    for lam, mu, size, rank, zr in results:
        by_cells[size] = by_cells.get(size, 0) + 1
        if rank != zr:
            bad.append(build_shape_report(SkewShape(lam, mu), full=True))
    summary = ScanSummary(
        config=cfg,
        shapes_scanned=len(results),
        by_cells=by_cells,
        counterexamples=tuple(r["shape"] for r in bad),
        elapsed_seconds=time.monotonic() - start,
    )
    return summary, bad


def _cmd_scan(args) -> int:
    if args.shard:
        try:
            idx, cnt = args.shard.split("/")
            shard_index, shard_count = int(idx), int(cnt)
        except ValueError:
            raise ShapeError(f"bad --shard (want INDEX/COUNT): {args.shard!r}")
    else:
        shard_index, shard_count = 0, 1
    cfg = ScanConfig(
        max_rows=args.max_rows,
        max_cols=args.max_cols,
        max_cells=args.max_cells,
        shard_index=shard_index,
        shard_count=shard_count,
        workers=args.workers,
        output=args.output,
    )
    summary, bad = run_scan(cfg)
    lines = [json.dumps({"type": "shape_report", **r}, sort_keys=True) for r in bad]
    lines.append(json.dumps(summary.file_record(), sort_keys=True))
    text = "\n".join(lines) + "\n"
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(
            f"scanned {summary.shapes_scanned} shapes "
            f"({cfg.max_rows}x{cfg.max_cols} box, <= {cfg.max_cells} cells), "
            f"shard {shard_index}/{shard_count}"
        )
        print(f"counterexamples: {len(bad)}")
        print(f"elapsed: {summary.elapsed_seconds:.1f}s")
        print(f"wrote {cfg.output}")
    else:
        sys.stdout.write(text)
    return EXIT_COUNTEREXAMPLE if bad else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewrank",
        description="Exact invariants of skew partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = add("analyze", _cmd_analyze, "full cross-validated report for one shape")
    p.add_argument("shape")
    p.add_argument("--full", action="store_true",
                   help="run the divisibility sweep even for large shapes")
    p = add("code", _cmd_code, "reduced two-row code")
    p.add_argument("shape")
    p = add("snakes", _cmd_snakes, "snakes and the snake sequence")
    p.add_argument("shape")
    p = add("decompose", _cmd_decompose, "border strip decompositions")
    p.add_argument("shape")
    p.add_argument("--minimal", action="store_true", help="only minimal ones")
    p.add_argument("--count-only", action="store_true", help="counts, no listing")
    p = add("character", _cmd_character, "Murnaghan-Nakayama character value")
    p.add_argument("shape")
    p.add_argument("--type", required=True, help="partition, e.g. 511 or 5,1,1")
    p = add("expand", _cmd_expand, "power-sum expansion of the skew Schur function")
    p.add_argument("shape")
    p = add("shat", _cmd_shat, "lowest-degree part of the skew Schur function")
    p.add_argument("shape")
    p.add_argument("--method", choices=("all", "direct", "intervals", "pfaffian"),
                   default="all")
    p = add("zrank", _cmd_zrank, "principal specialization, zrank, and y")
    p.add_argument("shape")
    p = add("latin", _cmd_latin, "minimal-decomposition Latin square")
    p.add_argument("shape")
    p = add("scan", _cmd_scan, "exhaustive rank vs zrank scan")
    p.add_argument("--max-rows", type=int, required=True)
    p.add_argument("--max-cols", type=int, required=True)
    p.add_argument("--max-cells", type=int, required=True)
    p.add_argument("--shard", default=None, help="INDEX/COUNT")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", default=None, help="JSONL output path (default stdout)")
    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ShapeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvariantError, AssertionError) as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
