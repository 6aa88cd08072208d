"""Command-line front end.

Exit codes: 0 all checks hold or are not applicable, 1 operational error,
2 usage error, 3 inequality violation found.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from . import bounds
from .bounds import FamilyParams, Status
from .generators import GeneratorSpec, SplitMix64, generate, gnp
from .graph import GraphError, parse_edge_list
from .graph6 import HEADER, encode_graph6, parse_graph6
from .harness import ALL_CHECKS, FAMILY_CHECKS, VerifyConfig, fmt, graph_record, margin_key, run_checks, verify_corpus

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3
SCAN_P_GRID = tuple(round(0.1 * i, 1) for i in range(1, 10))
SCAN_MAX_N = 64
SCAN_TOP = 10


class UsageError(Exception):
    pass


def _round_floats(obj):
    if isinstance(obj, float):
        if math.isnan(obj):
            return None
        return float(fmt(obj))
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def dump_json(obj) -> str:
    return json.dumps(_round_floats(obj), indent=2)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family_from_args(args) -> FamilyParams | None:
    if getattr(args, "family", None):
        if args.c is not None or args.eps is not None:
            raise UsageError("use either --family or --c/--eps, not both")
        try:
            return bounds.parse_family(args.family).family
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.c is None and args.eps is None:
        return None
    if args.c is None or args.eps is None:
        raise UsageError("--c and --eps must be given together")
    try:
        return FamilyParams(args.eps, args.c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _checks_from_args(args, family: FamilyParams | None) -> tuple[str, ...]:
    if args.checks:
        checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
        unknown = [c for c in checks if c not in ALL_CHECKS]
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(unknown)}; choose from {','.join(ALL_CHECKS)}")
        if family is None and FAMILY_CHECKS & set(checks):
            raise UsageError("thm14/thm16/rem24 need --family or --c/--eps")
        return checks
    return tuple(c for c in ALL_CHECKS if family is not None or c not in FAMILY_CHECKS)


def _config(args) -> VerifyConfig:
    family = _family_from_args(args)
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    if args.zero_tol_scale <= 0:
        raise UsageError("--zero-tol-scale must be positive")
    return VerifyConfig(_checks_from_args(args, family), family, args.k, args.zero_tol_scale)


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="ascii") as fh:
        return fh.read()


def read_single_graph(source: str):
    """A graph6 string, ``-`` for stdin, or a path to a graph6 / edge-list file."""
    if source == "-" or os.path.exists(source):
        text = _read_text(source)
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise GraphError("empty input")
        first = lines[0].split()
        if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
            return parse_edge_list(text)
        return parse_graph6(lines[0])
    return parse_graph6(source)


def read_corpus(source: str) -> str | list[str]:
    if source.startswith("all") and source[3:].isdigit():
        return source
    text = _read_text(source)
    out = []
    for ln in text.splitlines():
        ln = ln.strip()
        if ln.startswith(HEADER):
            ln = ln[len(HEADER):]
        if ln:
            out.append(ln)
    return out


# ---------------------------------------------------------------- subcommands


def cmd_analyze(args) -> int:
    cfg = _config(args)
    try:
        g = read_single_graph(args.input)
    except (GraphError, UnicodeDecodeError) as exc:
        print(f"error: cannot parse graph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if g.n == 0:
        print("error: graph has no vertices", file=sys.stderr)
        return EXIT_USAGE
    f = bounds.compute_facts(g, zero_tol_scale=cfg.zero_tol_scale)
    verdicts = run_checks(f, cfg)
    record = graph_record(f, verdicts)
    record["lemma22_by_k"] = [v.as_dict() for v in bounds.check_lemma22(f)]
    _emit(dump_json(record) + "\n", args.out)
    return EXIT_VIOLATION if any(v.status is Status.FAILS for v in verdicts.values()) else EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config(args)
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    try:
        corpus = read_corpus(args.corpus)
    except OSError as exc:
        print(f"error: cannot read corpus: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        report = verify_corpus(corpus, cfg, workers=args.workers, want_rows=args.format == "csv" or bool(args.csv))
    except GraphError as exc:
        print(f"error: bad corpus entry: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    summary = dump_json(report.summary_dict()) + "\n"
    if args.csv:
        _emit(report.csv_text(), args.csv)
    if args.format == "csv":
        _emit(report.csv_text(), args.out)
        sys.stderr.write(summary)
    else:
        _emit(summary, args.out)
    return EXIT_VIOLATION if report.failed else EXIT_OK


def _expand_spec(text: str, seed: int) -> list[GeneratorSpec]:
    """``fan:51..60`` expands to one spec per n."""
    family, _, rest = text.partition(":")
    if ".." in rest:
        lo, _, hi = rest.partition("..")
        return [GeneratorSpec.parse(f"{family}:{n}", seed) for n in range(int(lo), int(hi) + 1)]
    return [GeneratorSpec.parse(text, seed)]


def cmd_generate(args) -> int:
    try:
        specs = _expand_spec(args.spec, args.seed)
    except (GraphError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    lines = []
    for spec in specs:
        for i in range(args.count):
            s = GeneratorSpec(spec.family, spec.args, (spec.seed + i) % (1 << 64))
            lines.append(encode_graph6(generate(s)))
    try:
        _emit("\n".join(lines) + "\n", args.out)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def scan(n: int, budget: int, seed: int, objective: str, cfg: VerifyConfig) -> dict:
    """Sample gnp graphs over a p-grid and keep the tightest margins for one check."""
    rng = SplitMix64(seed)
    best: dict[str, tuple] = {}
    violations = []
    evaluated = applicable = 0
    for i in range(budget):
        p = SCAN_P_GRID[i % len(SCAN_P_GRID)]
        g = gnp(n, p, rng.next_u64())
        evaluated += 1
        f = bounds.compute_facts(g, zero_tol_scale=cfg.zero_tol_scale)
        v = run_checks(f, cfg)[objective]
        if not v.applicable:
            continue
        applicable += 1
        g6 = encode_graph6(g)
        if v.status is Status.FAILS:
            violations.append(graph_record(f, {objective: v}, g6))
            continue
        key = (margin_key(v.margin), g6)
        if g6 not in best:
            best[g6] = (key, v.margin, p)
            if len(best) > 4 * SCAN_TOP:
                for drop in sorted(best, key=lambda x: best[x][0])[SCAN_TOP:]:
                    del best[drop]
    top = sorted(best.items(), key=lambda kv: kv[1][0])[:SCAN_TOP]
    return {
        "n": n,
        "budget": budget,
        "seed": seed,
        "objective": objective,
        "evaluated": evaluated,
        "applicable": applicable,
        "tightest": [{"graph6": g6, "margin": margin, "p": p} for g6, (_, margin, p) in top],
        "violations": violations,
    }


def cmd_scan(args) -> int:
    if args.objective not in ALL_CHECKS:
        raise UsageError(f"unknown objective {args.objective!r}; choose from {','.join(ALL_CHECKS)}")
    if not 1 <= args.n <= SCAN_MAX_N:
        raise UsageError(f"--n must lie in [1, {SCAN_MAX_N}]")
    if args.budget < 1:
        raise UsageError("--budget must be >= 1")
    family = _family_from_args(args)
    if args.objective in FAMILY_CHECKS and family is None:
        raise UsageError(f"{args.objective} needs --family or --c/--eps")
    cfg = VerifyConfig((args.objective,), family, args.k, args.zero_tol_scale)
    result = scan(args.n, args.budget, args.seed, args.objective, cfg)
    _emit(dump_json(result) + "\n", args.out)
    return EXIT_VIOLATION if result["violations"] else EXIT_OK


def threshold_rows(book_k: int = 2, cycle_k: int = 4) -> list[bounds.CorollaryClass]:
    return [
        bounds.corollary_class("planar"),
        bounds.corollary_class("outerplanar"),
        bounds.corollary_class("book_free", book_k),
        bounds.corollary_class("cycle_free", cycle_k),
    ]


def cmd_thresholds(args) -> int:
    try:
        rows = threshold_rows(args.book_k, args.cycle_k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        payload = [
            {
                "class": r.label,
                "c": r.c,
                "epsilon": r.epsilon,
                "omega_cap": r.omega_cap,
                "triangle_bound": r.triangle_bound,
                "raw_threshold": r.raw_threshold,
                "edge_threshold": r.edge_threshold,
            }
            for r in rows
        ]
        _emit(dump_json(payload) + "\n", args.out)
        return EXIT_OK
    lines = [f"{'class':<16}{'c':>10}{'eps':>6}{'omega_cap':>11}  {'triangle bound':<16}{'raw':>14}{'edges >=':>10}"]
    for r in rows:
        lines.append(
            f"{r.label:<16}{r.c:>10.6g}{r.epsilon:>6g}{r.omega_cap:>11}  {r.triangle_bound:<16}"
            f"{r.raw_threshold:>14.6f}{r.edge_threshold:>10}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _add_common(p: argparse.ArgumentParser, *, family: bool = True) -> None:
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--zero-tol-scale", type=float, default=1.0, help="multiplier on the default zero tolerance")
    if family:
        p.add_argument("--checks", help=f"comma list from {','.join(ALL_CHECKS)}")
        p.add_argument("--family", help="planar | outerplanar | book:K | cycle:K")
        p.add_argument("--c", type=float, help="triangle budget constant")
        p.add_argument("--eps", type=float, help="triangle budget exponent gap")
        p.add_argument("--k", type=int, default=1, help="exponent k of the omega^-k term")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bnspectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full record for one graph as JSON")
    p.add_argument("input", help="graph6 string, '-' for stdin, or a graph6/edge-list file")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run checks over a corpus")
    p.add_argument("corpus", help="graph6 file, '-' for stdin, or all1..all6")
    _add_common(p)
    p.add_argument("--format", choices=("json", "csv"), default="json", help="csv sends the summary JSON to stderr")
    p.add_argument("--csv", help="also write the per-graph CSV here")
    p.add_argument("--workers", type=int, default=1, help="worker processes; output does not depend on it")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write graph6 lines for a family")
    p.add_argument("spec", help="family[:args], e.g. fan:5, gnp:10,0.5, book:3, fan:51..60")
    p.add_argument("--count", type=int, default=1, help="graphs per spec; seeds seed, seed+1, ...")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("scan", help="random search for near-tight instances")
    p.add_argument("--n", type=int, required=True, help="vertex count (at most 64)")
    p.add_argument("--budget", type=int, default=1000, help="random graphs to evaluate")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--objective", default="bn", help="check whose margin is minimized")
    _add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("thresholds", help="edge thresholds for the sparse graph classes")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--book-k", type=int, default=2)
    p.add_argument("--cycle-k", type=int, default=4)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_thresholds)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
