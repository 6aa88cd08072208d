"""Adjacency spectra, triangle counts and clique numbers for checking
square-sum eigenvalue bounds against the clique number."""

from .bounds import (
    CorollaryClass,
    FamilyParams,
    GraphFacts,
    Status,
    Verdict,
    check_conjecture_bn,
    check_conjecture_general,
    check_lemma22,
    check_remark24,
    check_theorem14,
    check_theorem16,
    check_theorem31,
    check_theorem_1_1,
    compute_facts,
    corollary_class,
    lemma22_lower_bound,
    remark24_threshold,
    thm14_bound,
    thm14_threshold,
    thm16_bound,
    thm31_bound,
    turan_bound,
)
from .counting import (
    TriangleReport,
    clique_number,
    max_clique,
    triangle_budget_ok,
    triangle_report,
    triangles_by_intersection,
    triangles_by_neighborhood,
    triangles_by_trace,
)
from .generators import GeneratorSpec, enumerate_all_labeled_graphs, generate
from .graph import Graph, GraphError, from_edge_list, has_cycle_of_length, max_triangles_per_edge
from .graph6 import encode_graph6, parse_graph6
from .spectral import (
    Inertia,
    Spectrum,
    eigenvalues,
    inertia,
    is_weakly_majorized,
    lambda_ratio,
    p_norm,
    power_sum,
    square_sum,
)

__version__ = "0.1.0"
