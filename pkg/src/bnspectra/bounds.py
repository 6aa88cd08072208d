"""Spectral inequalities, thresholds and conjecture predicates.

Every ``check_*`` function returns a :class:`Verdict` whose ``lhs <= rhs`` is
the inequality being tested. A check whose hypotheses the graph does not meet
returns status ``NOT_APPLICABLE`` instead of passing vacuously.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .counting import DEFAULT_CLIQUE_BUDGET, CliqueResult, max_clique, triangles_by_intersection
from .graph import Graph
from .spectral import Inertia, Spectrum, eigenvalues, inertia, inertia_is_stable, square_sum

SLACK = 1e-9

# rounded constants used by the thresholds; see thm14_constant / remark24_constant for the exact ones
THM14_CONSTANT = 2.2
REMARK24_CONSTANT = 10.06


def slack_for(rhs: float) -> float:
    return SLACK * max(1.0, abs(rhs))


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Verdict:
    name: str
    status: Status
    lhs: float = math.nan
    rhs: float = math.nan
    strict: bool = False
    context: dict = field(default_factory=dict)
    warnings: tuple[str, ...] = ()
    reason: str = ""

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def applicable(self) -> bool:
        return self.status is not Status.NOT_APPLICABLE

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "strict": self.strict,
            "context": self.context,
            "warnings": list(self.warnings),
            "reason": self.reason,
        }


def judge(name: str, lhs: float, rhs: float, *, strict: bool = False, context=None, warnings=()) -> Verdict:
    margin = rhs - lhs
    tol = slack_for(rhs)
    ok = margin > tol if strict else margin >= -tol
    return Verdict(name, Status.HOLDS if ok else Status.FAILS, lhs, rhs, strict, dict(context or {}), tuple(warnings))


def not_applicable(name: str, reason: str, context=None, warnings=()) -> Verdict:
    return Verdict(name, Status.NOT_APPLICABLE, context=dict(context or {}), warnings=tuple(warnings), reason=reason)


@dataclass(frozen=True)
class FamilyParams:
    """Triangle budget ``t(G) <= c * m**(1.5 - epsilon)``."""

    epsilon: float
    c: float

    def __post_init__(self) -> None:
        if not 0.0 < self.epsilon <= 1.5:
            raise ValueError(f"epsilon must lie in (0, 1.5], got {self.epsilon}")
        if not self.c > 0.0:
            raise ValueError(f"c must be positive, got {self.c}")

    def budget(self, m: int) -> float:
        return self.c * m ** (1.5 - self.epsilon)


@dataclass(frozen=True)
class GraphFacts:
    """Everything the checks need about one graph, computed once."""

    graph: Graph
    spectrum: Spectrum
    inertia: Inertia
    inertia_stable: bool
    t: int
    clique: CliqueResult

    @property
    def omega(self) -> int:
        return self.clique.omega

    def warnings(self) -> list[str]:
        out = []
        if not self.inertia_stable:
            out.append("inertia changes at 10x zero_tol")
        if not self.clique.exact:
            out.append("omega is lower bound")
        return out


def compute_facts(
    g: Graph, *, zero_tol_scale: float = 1.0, clique_budget: int = DEFAULT_CLIQUE_BUDGET, method: str = "lapack"
) -> GraphFacts:
    spec = eigenvalues(g, method=method, zero_tol_scale=zero_tol_scale)
    return GraphFacts(g, spec, inertia(spec), inertia_is_stable(spec), triangles_by_intersection(g), max_clique(g, clique_budget))


def _facts(g: Graph | GraphFacts) -> GraphFacts:
    return g if isinstance(g, GraphFacts) else compute_facts(g)


def _ctx(f: GraphFacts, **extra) -> dict:
    return {"m": f.graph.m, "t": f.t, "omega": f.omega, **extra}


# ---------------------------------------------------------------- bound functions


def turan_bound(omega: int) -> float:
    if omega < 2:
        raise ValueError(f"Turan bound needs omega >= 2, got {omega}")
    return 2.0 * (1.0 - 1.0 / omega)


def lemma22_lower_bound(s_k: float, m: int, k: int) -> float:
    """Lower bound on six times the triangle count from the top ``k`` eigenvalues."""
    if k < 1:
        raise ValueError("k must be >= 1")
    two_m = 2.0 * m
    if s_k < 0 or s_k > two_m + slack_for(two_m):
        raise ValueError(f"inconsistent inputs: need 0 <= s_k <= 2m, got s_k={s_k}, m={m}")
    rest = max(0.0, two_m - s_k)
    return s_k**1.5 / math.sqrt(k) - rest**1.5


def thm14_bound(omega: int, k: int) -> float:
    if omega < 3:
        raise ValueError(f"needs omega >= 3, got {omega}")
    if k < 1:
        raise ValueError(f"needs k >= 1, got {k}")
    r = omega ** (1.0 / 3.0)
    return 2.0 * (r / (1.0 + r) + omega ** (-k))


def thm14_threshold(fp: FamilyParams, omega: int, k: int) -> float:
    return (THM14_CONSTANT * fp.c * omega ** (2 * k)) ** (1.0 / fp.epsilon)


def remark24_threshold(fp: FamilyParams, omega: int) -> float:
    if omega < 3:
        raise ValueError(f"needs omega >= 3, got {omega}")
    return (REMARK24_CONSTANT * fp.c * math.sqrt(omega)) ** (1.0 / fp.epsilon)


def thm31_bound(m: int, t: int) -> float:
    if m < 2:
        raise ValueError(f"needs m >= 2, got {m}")
    return m + (3.0 * t) ** (2.0 / 3.0)


def thm16_bound(m: int, fp: FamilyParams) -> float:
    """Upper bound on the top-two square-sum ratio for the triangle-budget family."""
    if m < 2:
        raise ValueError(f"needs m >= 2, got {m}")
    return 1.0 + (3.0 * fp.c) ** (2.0 / 3.0) * m ** (-2.0 * fp.epsilon / 3.0)


def thm14_constant() -> float:
    """Exact factor the rounded 2.2 stands in for: ``6 / 2**1.5``."""
    return 6.0 / 2.0**1.5


def remark24_constant() -> float:
    """Exact factor the rounded 10.06 stands in for."""
    return 6.0 * 3.0 * math.sqrt(3.0) / (2.0**1.5 * (2.0 * math.sqrt(2.0) - math.sqrt(3.0)))


def ceil_threshold(x: float) -> int:
    # absorb representation noise such as 404.81440000000003
    return math.ceil(round(x, 9))


# ---------------------------------------------------------------- corollary classes


@dataclass(frozen=True)
class CorollaryClass:
    tag: str
    k: int | None
    c: float
    epsilon: float
    omega_cap: int
    triangle_bound: str
    raw_threshold: float
    edge_threshold: int

    @property
    def family(self) -> FamilyParams:
        return FamilyParams(self.epsilon, self.c)

    @property
    def label(self) -> str:
        return self.tag if self.k is None else f"{self.tag}({self.k})"


def corollary_class(tag: str, k: int | None = None) -> CorollaryClass:
    if tag == "planar":
        c, cap, desc = 1.0, 4, "t <= m - 2"
    elif tag == "outerplanar":
        c, cap, desc = 0.5, 3, "t <= (m - 1)/2"
    elif tag == "book_free":
        if k is None or k < 2:
            raise ValueError("book_free needs k >= 2")
        c, cap, desc = (k - 1) / 3.0, k + 1, f"t <= {k - 1}m/3"
    elif tag == "cycle_free":
        if k is None or k < 4:
            raise ValueError("cycle_free needs k >= 4")
        c, cap, desc = (k - 3) / 3.0, k, f"t <= {k - 3}m/3"
    else:
        raise ValueError(f"unknown corollary class {tag!r}")
    if tag in ("planar", "outerplanar") and k is not None:
        raise ValueError(f"{tag} takes no parameter")
    fp = FamilyParams(0.5, c)
    raw = remark24_threshold(fp, cap)
    return CorollaryClass(tag, k, c, 0.5, cap, desc, raw, ceil_threshold(raw))


def parse_family(text: str) -> CorollaryClass:
    """``planar``, ``outerplanar``, ``book:K`` or ``cycle:K``."""
    tag, _, arg = text.partition(":")
    tag = {"book": "book_free", "cycle": "cycle_free"}.get(tag, tag)
    return corollary_class(tag, int(arg) if arg else None)


# ---------------------------------------------------------------- checks


def _omega_ok(f: GraphFacts, name: str) -> Verdict | None:
    if f.graph.m < 1:
        return not_applicable(name, "edgeless graph", _ctx(f))
    if not f.clique.exact:
        return not_applicable(name, "clique search hit its budget", _ctx(f), f.warnings())
    return None


def check_theorem_1_1(g: Graph | GraphFacts) -> Verdict:
    f = _facts(g)
    if (na := _omega_ok(f, "t11")) is not None:
        return na
    lhs = square_sum(f.spectrum, 1) / f.graph.m
    return judge("t11", lhs, turan_bound(f.omega), context=_ctx(f, k=1), warnings=f.warnings())


def check_conjecture_bn(g: Graph | GraphFacts) -> Verdict:
    f = _facts(g)
    if (na := _omega_ok(f, "bn")) is not None:
        return na
    if f.graph.is_complete():
        return not_applicable("bn", "complete graph excluded", _ctx(f))
    lhs = square_sum(f.spectrum, 2) / f.graph.m
    return judge("bn", lhs, turan_bound(f.omega), context=_ctx(f, k=2), warnings=f.warnings())


def check_conjecture_general(g: Graph | GraphFacts) -> Verdict:
    f = _facts(g)
    if (na := _omega_ok(f, "general")) is not None:
        return na
    ell = min(f.inertia.n_plus, f.omega)
    lhs = square_sum(f.spectrum, ell) / f.graph.m
    return judge("general", lhs, turan_bound(f.omega), context=_ctx(f, ell=ell), warnings=f.warnings())


def check_lemma22(g: Graph | GraphFacts) -> list[Verdict]:
    """One verdict per k in [1, n_plus]; ``lhs`` is the lower bound, ``rhs`` is 6t."""
    f = _facts(g)
    m = f.graph.m
    if m < 1:
        return []
    six_t = 6.0 * f.t
    out = []
    for k in range(1, f.inertia.n_plus + 1):
        lower = lemma22_lower_bound(square_sum(f.spectrum, k), m, k)
        out.append(judge("lemma22", lower, six_t, context=_ctx(f, k=k), warnings=f.warnings()))
    return out


def summarize_lemma22(verdicts: list[Verdict], f: GraphFacts) -> Verdict:
    """Collapse the per-k verdicts to the one with the smallest margin."""
    if not verdicts:
        return not_applicable("lemma22", "no positive eigenvalues", _ctx(f))
    return min(verdicts, key=lambda v: (v.holds, v.margin))


def check_theorem14(g: Graph | GraphFacts, fp: FamilyParams, k: int = 1) -> Verdict:
    f = _facts(g)
    if (na := _omega_ok(f, "thm14")) is not None:
        return na
    m, omega = f.graph.m, f.omega
    ctx = _ctx(f, k=k)
    if omega < 3:
        return not_applicable("thm14", f"omega = {omega} < 3", ctx)
    if f.t > fp.budget(m):
        return not_applicable("thm14", "triangle budget exceeded", ctx)
    threshold = thm14_threshold(fp, omega, k)
    if m < threshold:
        return not_applicable("thm14", f"m = {m} below edge threshold {threshold:.6g}", ctx)
    ell = min(f.inertia.n_plus, omega)
    lhs = square_sum(f.spectrum, ell) / m
    return judge("thm14", lhs, thm14_bound(omega, k), strict=True, context={**ctx, "ell": ell}, warnings=f.warnings())


def check_remark24(g: Graph | GraphFacts, fp: FamilyParams) -> Verdict:
    """Strict form of the general conjecture once m clears its edge threshold."""
    f = _facts(g)
    if (na := _omega_ok(f, "rem24")) is not None:
        return na
    m, omega = f.graph.m, f.omega
    ctx = _ctx(f)
    if omega < 3:
        return not_applicable("rem24", f"omega = {omega} < 3", ctx)
    if f.t > fp.budget(m):
        return not_applicable("rem24", "triangle budget exceeded", ctx)
    threshold = remark24_threshold(fp, omega)
    if m < threshold:
        return not_applicable("rem24", f"m = {m} below edge threshold {threshold:.6g}", ctx)
    ell = min(f.inertia.n_plus, omega)
    lhs = square_sum(f.spectrum, ell) / m
    return judge("rem24", lhs, turan_bound(omega), strict=True, context={**ctx, "ell": ell}, warnings=f.warnings())


def check_theorem31(g: Graph | GraphFacts) -> Verdict:
    f = _facts(g)
    m = f.graph.m
    if m < 2:
        return not_applicable("thm31", "needs m >= 2", _ctx(f))
    lhs = square_sum(f.spectrum, 2)
    return judge("thm31", lhs, thm31_bound(m, f.t), strict=f.t > 0, context=_ctx(f), warnings=f.warnings())


def check_theorem16(g: Graph | GraphFacts, fp: FamilyParams) -> Verdict:
    f = _facts(g)
    m = f.graph.m
    if m < 2:
        return not_applicable("thm16", "needs m >= 2", _ctx(f))
    if f.t > fp.budget(m):
        return not_applicable("thm16", "triangle budget exceeded", _ctx(f))
    lhs = square_sum(f.spectrum, 2) / m
    return judge("thm16", lhs, thm16_bound(m, fp), context=_ctx(f), warnings=f.warnings())
