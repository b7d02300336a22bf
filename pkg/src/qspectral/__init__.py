"""qspectral: signless-Laplacian spectra, power sums, and extremal bounds.

The matrix of interest is Q(G) = D(G) + A(G). The package computes its
spectrum numerically (cyclic Jacobi, compiled kernel with a pure-Python
fallback), carries exact closed forms for several graph families, and turns
two conjectured extremal bounds into checkable, falsifiable computations.
"""

__version__ = "0.1.0"

from .closed_forms import (
    ClosedFormSpectrum,
    NonEquitableError,
    bipartite_bound,
    connectivity_bound,
    join_split_partition,
    join_split_quotient,
    join_split_theta,
    quotient_eigenvalues,
    quotient_matrix,
    spectrum_complete,
    spectrum_complete_bipartite,
    spectrum_join_split,
)
from .conjectures import (
    CSV_COLUMNS,
    VERDICT_HOLDS,
    VERDICT_TIGHT,
    VERDICT_VIOLATED,
    BoundReport,
    CounterexampleReport,
    exhaustive_verify,
    f_profile,
    find_counterexample_conj1,
    find_counterexample_conj2,
    g_profile,
    p_coefficient,
    verify_conjecture1,
    zeta,
)
from .graphs import (
    ComponentSummary,
    Graph,
    GraphFormatError,
    complete,
    complete_bipartite,
    components,
    delete_edge,
    disjoint_union,
    edge_mask,
    edge_order,
    from_edge_list,
    from_edge_mask,
    from_graph6,
    join,
    join_split,
    random_gnp,
    to_edge_list,
    to_graph6,
    vertex_connectivity,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .spectra import (
    EigensolverError,
    Spectrum,
    SpectrumConsistencyError,
    check_interlacing,
    eigen_spectrum,
    s_alpha,
    signless_laplacian,
    spectrum_of,
)

__all__ = [
    "CSV_COLUMNS",
    "VERDICT_HOLDS",
    "VERDICT_TIGHT",
    "VERDICT_VIOLATED",
    "BoundReport",
    "ClosedFormSpectrum",
    "ComponentSummary",
    "CounterexampleReport",
    "EigensolverError",
    "Graph",
    "GraphFormatError",
    "KERNEL_BACKEND",
    "NonEquitableError",
    "Spectrum",
    "SpectrumConsistencyError",
    "__version__",
    "bipartite_bound",
    "check_interlacing",
    "complete",
    "complete_bipartite",
    "components",
    "connectivity_bound",
    "delete_edge",
    "disjoint_union",
    "edge_mask",
    "edge_order",
    "eigen_spectrum",
    "exhaustive_verify",
    "f_profile",
    "find_counterexample_conj1",
    "find_counterexample_conj2",
    "from_edge_list",
    "from_edge_mask",
    "from_graph6",
    "g_profile",
    "join",
    "join_split",
    "join_split_partition",
    "join_split_quotient",
    "join_split_theta",
    "p_coefficient",
    "quotient_eigenvalues",
    "quotient_matrix",
    "random_gnp",
    "s_alpha",
    "signless_laplacian",
    "spectrum_complete",
    "spectrum_complete_bipartite",
    "spectrum_join_split",
    "spectrum_of",
    "to_edge_list",
    "to_graph6",
    "verify_conjecture1",
    "vertex_connectivity",
    "zeta",
]
