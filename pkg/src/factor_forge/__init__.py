"""Degree-constrained factors of graphs: criteria, constructions, counterexamples."""
from .counterexample import (
    RefutationReport,
    forced_degree_demo,
    positive_controls,
    sharpness_check,
    verify_gstar_infeasible,
)
from .criteria import (
    DegreeBounds,
    DegreeSpec,
    Witness,
    criterion_exhaustive,
    eta,
    fls_condition,
    gamma,
    main_condition,
    q_count,
    sv_condition,
)
from .families import (
    GStarLayout,
    circulant,
    complete_graph,
    cycle_graph,
    gstar,
    hstar,
    j_graph,
    petersen_graph,
    random_near_regular,
    random_regular,
)
from .graph import (
    Factor,
    Graph,
    MultiGraph,
    Orientation,
    components,
    edge_boundary,
    edge_connectivity,
    eulerian_orientation,
    is_independent,
)
from .matching import Matching, f_factor, gf_factor, max_matching, parity_factor
from .solver import BudgetExceeded, PruningRules, SearchBudget, classify_spec, exact_h_factor, solve
from .theorems import (
    PipelineTrace,
    akbari_kano_factor,
    akbari_parity_factor,
    gallai_check,
    lemma_u_factor,
    main_h_factor,
    petersen_k_factor,
    reduce_heavy_adjacency,
    shift_spec,
    thomassen_factor,
)

__version__ = "0.1.0"
