"""Seidel matrices, spectra and energy of uniform hypergraphs.

Includes exact equitable-partition quotients and closed-form checks for
complete 3-uniform bipartite hypergraphs under edge and vertex deletion.
"""

from .closedform import (
    C3Params,
    ClosedSpectrum,
    c3,
    c3_minus_edge,
    check_factorization_claim,
    delta_u,
    energy_formula_c3,
    l_of,
    quotient_c3,
    quotient_type1,
    quotient_type2,
    spectrum_c3,
    spectrum_c3_minus_edge,
    u_of,
    verify_trivial_eigenvectors,
    xi1,
    xi2,
)
from .equitable import (
    VertexPartition,
    check_equitable,
    parse_partition,
    quotient_char_poly,
    quotient_matrix,
    quotient_spectrum_subset,
)
from .errors import (
    HyperSeidelError,
    InvalidHypergraph,
    InvalidParams,
    NoConvergence,
    NotEquitable,
)
from .hypergraph import (
    BipartitionLabels,
    EdgeType,
    Hypergraph,
    classify_edge,
    delete_hyperedge,
    gen_complete_bipartite,
    gen_random,
    gen_turan,
    load_fixture,
    read_hypergraph,
    strong_delete_vertex,
    weak_delete_vertex,
    write_hypergraph,
)
from .linalg import Inertia, Spectrum, char_poly_exact, eig_symmetric, inertia_of
from .poly import IntPolynomial, real_roots, sign_variations
from .seidel import (
    EnergyChange,
    SeidelMatrix,
    co_degree_matrix,
    seidel_energy,
    seidel_matrix,
    seidel_spectrum,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
