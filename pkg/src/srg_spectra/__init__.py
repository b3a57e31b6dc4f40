"""Strongly regular graphs: parameter feasibility, families, spectra,
Hamiltonicity search and distance-regular checks."""

from .errors import *  # noqa: F401,F403
from .families import (
    affine_plane_system,
    complete_multipartite,
    hamming,
    johnson,
    latin_square_graph,
    mols,
    paley,
    petersen,
    srg_params_of,
    steiner_block_graph,
    steiner_triple_system,
    triangular,
)
from .graph import Graph, parse_edge_list, read_edge_list, write_edge_list
from .hamilton import (
    SearchBudget,
    Verdict,
    count_hamiltonian_cycles,
    find_hamiltonian,
    toughness_exact,
    toughness_lower_bound,
    verify_cycle,
)
from .spectral import eigen_multiplicities, multiplicity_gap_bound, second_eigenvalue, spectrum
from .srg_core import (
    SrgParams,
    bound_suite,
    check_feasibility,
    classify_params,
    enumerate_feasible,
    ks_threshold,
    spectrum_from_params,
)
from .surd import Surd

__version__ = "0.1.0"
