"""Corpus evaluation: per-graph records, sharded parallel map, deterministic reduce."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import bounds
from .bounds import FamilyParams, GraphFacts, Status, Verdict, compute_facts
from .counting import DEFAULT_CLIQUE_BUDGET
from .generators import corpus_size, enumerate_all_labeled_graphs
from .graph import Graph
from .graph6 import encode_graph6, parse_graph6
from .spectral import square_sum

ALL_CHECKS = ("t11", "bn", "general", "lemma22", "thm14", "thm31", "thm16", "rem24")
FAMILY_CHECKS = frozenset({"thm14", "thm16", "rem24"})
CSV_COLUMNS = ("graph6", "n", "m", "t", "omega", "nplus", "lambda1", "lambda2", "Lell", "check", "holds", "margin")
SHARD_SIZE = 2048


def fmt(x: float | None) -> str:
    """12 significant digits; negative zero folds to zero."""
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return f"{x + 0.0:.12g}"


def margin_key(margin: float) -> float:
    return round(margin, 12) + 0.0


@dataclass(frozen=True)
class VerifyConfig:
    checks: tuple[str, ...] = ("t11", "bn", "general", "lemma22", "thm31")
    family: FamilyParams | None = None
    k: int = 1
    zero_tol_scale: float = 1.0
    clique_budget: int = DEFAULT_CLIQUE_BUDGET

    def __post_init__(self) -> None:
        unknown = [c for c in self.checks if c not in ALL_CHECKS]
        if unknown:
            raise ValueError(f"unknown check(s): {', '.join(unknown)}")
        if self.family is None and FAMILY_CHECKS & set(self.checks):
            raise ValueError("checks thm14/thm16/rem24 need --family or --c/--eps")
        if self.k < 1:
            raise ValueError("k must be >= 1")


def run_checks(f: GraphFacts, cfg: VerifyConfig) -> dict[str, Verdict]:
    out: dict[str, Verdict] = {}
    for name in cfg.checks:
        if name == "t11":
            out[name] = bounds.check_theorem_1_1(f)
        elif name == "bn":
            out[name] = bounds.check_conjecture_bn(f)
        elif name == "general":
            out[name] = bounds.check_conjecture_general(f)
        elif name == "lemma22":
            out[name] = bounds.summarize_lemma22(bounds.check_lemma22(f), f)
        elif name == "thm14":
            out[name] = bounds.check_theorem14(f, cfg.family, cfg.k)
        elif name == "thm31":
            out[name] = bounds.check_theorem31(f)
        elif name == "thm16":
            out[name] = bounds.check_theorem16(f, cfg.family)
        elif name == "rem24":
            out[name] = bounds.check_remark24(f, cfg.family)
    return out


def graph_record(f: GraphFacts, verdicts: dict[str, Verdict] | None = None, g6: str | None = None) -> dict:
    """Full JSON-ready record for one graph."""
    g, s = f.graph, f.spectrum
    ell = min(f.inertia.n_plus, f.omega) if g.m else None
    return {
        "graph6": g6 if g6 is not None else encode_graph6(g),
        "n": g.n,
        "m": g.m,
        "t": f.t,
        "omega": f.omega,
        "omega_exact": f.clique.exact,
        "inertia": list(f.inertia),
        "inertia_stable": f.inertia_stable,
        "zero_tol": s.zero_tol,
        "lambda1": s[1],
        "lambda2": s[2] if g.n >= 2 else None,
        "s1": square_sum(s, 1),
        "s2": square_sum(s, 2) if g.n >= 2 else None,
        "ell": ell,
        "Lell": square_sum(s, ell) / g.m if ell else None,
        "verdicts": {k: v.as_dict() for k, v in (verdicts or {}).items()},
    }


@dataclass
class CheckSummary:
    holds: int = 0
    fails: int = 0
    not_applicable: int = 0
    min_margin: float | None = None
    witness: str | None = None
    failures: list = field(default_factory=list)

    def add(self, v: Verdict, g6: str, record_fn) -> None:
        if v.status is Status.NOT_APPLICABLE:
            self.not_applicable += 1
            return
        if v.status is Status.HOLDS:
            self.holds += 1
        else:
            self.fails += 1
            self.failures.append(record_fn())
        key = (margin_key(v.margin), g6)
        if self.min_margin is None or key < (margin_key(self.min_margin), self.witness):
            self.min_margin, self.witness = v.margin, g6

    def merge(self, other: "CheckSummary") -> None:
        self.holds += other.holds
        self.fails += other.fails
        self.not_applicable += other.not_applicable
        self.failures.extend(other.failures)
        if other.min_margin is not None and (
            self.min_margin is None
            or (margin_key(other.min_margin), other.witness) < (margin_key(self.min_margin), self.witness)
        ):
            self.min_margin, self.witness = other.min_margin, other.witness

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "fails": self.fails,
            "not_applicable": self.not_applicable,
            "min_margin": self.min_margin,
            "witness": self.witness,
            "failures": self.failures,
        }


@dataclass
class ShardResult:
    count: int
    summaries: dict[str, CheckSummary]
    rows: list[tuple]


# a shard is ("all", n, start, stop) or ("g6", [strings])
Shard = tuple


def _shard_graphs(shard: Shard) -> Iterator[tuple[str | None, Graph]]:
    if shard[0] == "all":
        _, n, start, stop = shard
        for g in enumerate_all_labeled_graphs(n, start, stop):
            yield None, g
    else:
        for text in shard[1]:
            yield text, parse_graph6(text)


def evaluate_shard(shard: Shard, cfg: VerifyConfig, want_rows: bool = True) -> ShardResult:
    summaries = {name: CheckSummary() for name in cfg.checks}
    rows: list[tuple] = []
    count = 0
    for g6, g in _shard_graphs(shard):
        count += 1
        g6 = g6 if g6 is not None else encode_graph6(g)
        if g.n == 0:
            raise ValueError("corpus graphs need at least one vertex")
        f = compute_facts(g, zero_tol_scale=cfg.zero_tol_scale, clique_budget=cfg.clique_budget)
        verdicts = run_checks(f, cfg)
        for name, v in verdicts.items():
            summaries[name].add(v, g6, lambda: graph_record(f, verdicts, g6))
        if want_rows:
            s = f.spectrum
            ell = min(f.inertia.n_plus, f.omega) if g.m else 0
            base = (
                g6,
                str(g.n),
                str(g.m),
                str(f.t),
                str(f.omega),
                str(f.inertia.n_plus),
                fmt(s[1]),
                fmt(s[2]) if g.n >= 2 else "",
                fmt(square_sum(s, ell) / g.m) if ell else "",
            )
            for name, v in verdicts.items():
                status = {"holds": "true", "fails": "false", "not_applicable": "na"}[v.status.value]
                rows.append(base + (name, status, fmt(v.margin) if v.applicable else ""))
    return ShardResult(count, summaries, rows)


def make_shards(corpus: str | Sequence[str], workers: int = 1) -> list[Shard]:
    """Split a built-in corpus name (``all1``..``all6``) or a list of graph6 lines into shards."""
    if isinstance(corpus, str):
        n = builtin_order(corpus)
        total = corpus_size(n)
        return [("all", n, a, min(a + SHARD_SIZE, total)) for a in range(0, total, SHARD_SIZE)]
    lines = list(corpus)
    # user corpora may hold few, large graphs: aim for several shards per worker
    shard_size = max(1, min(SHARD_SIZE, len(lines) // (4 * workers)))
    return [("g6", lines[a : a + shard_size]) for a in range(0, len(lines), shard_size)]


def builtin_order(name: str) -> int:
    if name.startswith("all") and name[3:].isdigit() and 1 <= int(name[3:]) <= 6:
        return int(name[3:])
    raise ValueError(f"unknown built-in corpus {name!r} (expected all1..all6)")


def _eval(args) -> ShardResult:
    return evaluate_shard(*args)


@dataclass
class CorpusReport:
    size: int
    summaries: dict[str, CheckSummary]
    rows: list[tuple]

    @property
    def failed(self) -> bool:
        return any(s.fails for s in self.summaries.values())

    def summary_dict(self) -> dict:
        return {"corpus_size": self.size, "checks": {k: v.as_dict() for k, v in self.summaries.items()}}

    def csv_text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(self.rows)
        return buf.getvalue()


def verify_corpus(corpus: str | Sequence[str], cfg: VerifyConfig, workers: int = 1, want_rows: bool = True) -> CorpusReport:
    """Evaluate every graph; shard results are reduced in corpus order so output is independent of ``workers``."""
    shards = make_shards(corpus, workers)
    jobs = [(sh, cfg, want_rows) for sh in shards]
    if workers > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results: Iterable[ShardResult] = list(pool.map(_eval, jobs))
    else:
        results = [_eval(j) for j in jobs]
    summaries = {name: CheckSummary() for name in cfg.checks}
    rows: list[tuple] = []
    size = 0
    for r in results:
        size += r.count
        rows.extend(r.rows)
        for name, s in r.summaries.items():
            summaries[name].merge(s)
    return CorpusReport(size, summaries, rows)
