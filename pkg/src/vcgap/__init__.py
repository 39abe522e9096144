"""Exact integrality gap of the vertex cover LP relaxation, with certificates."""

from .fracchrom import FractionalColoring, DualWeights, chi_f_bruteforce, price_column, solve_chi_f
from .gap import (
    GapCertificate,
    decompose_upper,
    empirical_ratio,
    integrality_gap,
    verify_certificate,
    worst_case_certificate,
)
from .graphs import (
    Graph,
    gen_family,
    induced_subgraph,
    is_bipartite,
    is_independent,
    is_vertex_cover,
    parse_dimacs,
)
from .ratlp import LpProblem, LpSolution, check_certificate, solve
from .vclp import (
    HalfIntegralVC,
    min_vc_exact,
    nt_partition,
    solve_vc_lp,
    solve_vc_lp_bipartite_double,
)

__version__ = "0.1.0"
