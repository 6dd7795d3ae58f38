"""Instantly decodable network coding for single-shot broadcast loss recovery.

The pieces, bottom up: a side-information matrix and its decodability
semantics (`sideinfo`), the coding graph whose cliques are exactly the
decodable transmissions (`graph`), the equivalent binary quadratic
program with an NP-completeness reduction (`iqp`), clique search tuned to
random loss (`solvers`), baseline schemes (`baselines`), and a seeded
Monte Carlo harness (`experiments`).  The subset scan at the heart of the
solvers runs on a compiled kernel when available; `SCAN_BACKEND` tells
which one is active.
"""

from ._scan import BACKEND as SCAN_BACKEND
from .baselines import SchemeDecision, best_repetition, cope_like, random_repetition
from .errors import ParseError, ResourceLimitError
from .experiments import (
    CliqueNumberSummary,
    ExperimentConfig,
    ExperimentResult,
    clique_number_experiment,
    default_loss_grid,
    fj_table,
    fj_table_csv,
    generate_matrix,
    run_sweep,
)
from .graph import (
    Clique,
    IdncGraph,
    Vertex,
    build_graph,
    clique_to_packet,
    is_clique,
    packet_to_clique,
    to_dot,
)
from .iqp import (
    IqpSolution,
    X3cInstance,
    check_reduction,
    clique_to_solution,
    evaluate,
    has_exact_cover,
    solution_to_clique,
    solve_exhaustive,
    x3c_from_text,
    x3c_to_matrix,
    x3c_to_text,
)
from .sideinfo import (
    BeneficiarySet,
    CodedPacket,
    SideInfoMatrix,
    beneficiaries,
    decodable_for_user,
    is_instantly_decodable,
    matrix_from_text,
    matrix_to_text,
)
from .solvers import (
    CliqueSearchParams,
    ConcentrationBound,
    concentration_bound,
    count_surjections,
    count_surjections_recurrence,
    good_row_probability,
    j_star,
    max_clique_search,
    max_clique_exact,
    max_clique_window,
    min_rows_for_tail_bound,
    surjection_fraction_lower_bound,
)

__all__ = [
    "SCAN_BACKEND",
    "BeneficiarySet",
    "Clique",
    "CliqueNumberSummary",
    "CliqueSearchParams",
    "CodedPacket",
    "ConcentrationBound",
    "ExperimentConfig",
    "ExperimentResult",
    "IdncGraph",
    "IqpSolution",
    "ParseError",
    "ResourceLimitError",
    "SchemeDecision",
    "SideInfoMatrix",
    "Vertex",
    "X3cInstance",
    "beneficiaries",
    "best_repetition",
    "build_graph",
    "check_reduction",
    "clique_number_experiment",
    "clique_to_packet",
    "clique_to_solution",
    "concentration_bound",
    "cope_like",
    "count_surjections",
    "count_surjections_recurrence",
    "decodable_for_user",
    "default_loss_grid",
    "evaluate",
    "fj_table",
    "fj_table_csv",
    "generate_matrix",
    "good_row_probability",
    "has_exact_cover",
    "is_clique",
    "is_instantly_decodable",
    "j_star",
    "matrix_from_text",
    "matrix_to_text",
    "max_clique_search",
    "max_clique_exact",
    "max_clique_window",
    "min_rows_for_tail_bound",
    "packet_to_clique",
    "random_repetition",
    "run_sweep",
    "solution_to_clique",
    "solve_exhaustive",
    "surjection_fraction_lower_bound",
    "to_dot",
    "x3c_from_text",
    "x3c_to_matrix",
    "x3c_to_text",
]
