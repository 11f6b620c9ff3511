"""
Reaction network analysis
Exact structural checks, weakly reversible realizations and disguised toric locus LPs
"""

from .crn_errors import (
    ArrangementTooLargeError,
    CrnError,
    DegenerateHullError,
    DimensionMismatchError,
    HypothesisError,
    HypothesisFailedError,
    InteriorSourcesError,
    InternalInvariantError,
    MalformedProgramError,
    NeitherConditionHoldsError,
    NetworkParseError,
    NotStronglyEndotacticError,
)
from .crn_graph import (
    EGraph,
    Edge,
    RateVector,
    complete_graph,
    conservation_laws,
    deficiency,
    is_weakly_reversible,
    linkage_classes,
    reaction_vector,
    source_vertices,
    stoichiometric_dimension,
    stoichiometric_subspace,
    strong_components,
    terminal_components,
)
from .crn_geometry import (
    ConeClass,
    HullClassification2D,
    NewtonPolytope,
    classify_hull_2d,
    cone_membership,
    newton_polytope,
    on_boundary,
    points_into_relative_interior,
    polytopes_equal,
    subspaces_equal,
    tangent_cone_contains,
)
from .crn_endotactic import (
    DirectionWitness,
    check_terminal_interior,
    endotactic_by_angular_sweep,
    is_endotactic,
    is_strongly_endotactic,
    net_reaction_graph,
    net_reaction_vector,
    violates_at,
)
from .crn_realization import (
    RealizationResult,
    construct_wr_graph_2d,
    equivalence_certificate,
    probe_inclusion,
    rate_solve,
    realize,
    realize_2d,
    realize_highdim,
    verify_equivalence,
)
from .crn_lp import LinProgram, LpSolution, LpStatus, positive_combination, simplex_solve
from .crn_disguised import (
    P1Result,
    P2Result,
    check_p2_certificate,
    disguised_membership_at,
    extract_wr_support,
    solve_p1_fixed_k,
    solve_p2,
)
from .crn_massaction import (
    Trajectory,
    is_complex_balanced_at,
    monomial,
    numeric_equivalence_deviation,
    rhs,
    simulate,
)
from .crn_network_file import parse_network, print_network

__all__ = [
    'ArrangementTooLargeError', 'CrnError', 'DegenerateHullError', 'DimensionMismatchError',
    'HypothesisError', 'HypothesisFailedError', 'InteriorSourcesError', 'InternalInvariantError',
    'MalformedProgramError', 'NeitherConditionHoldsError', 'NetworkParseError', 'NotStronglyEndotacticError',
    'EGraph', 'Edge', 'RateVector', 'complete_graph', 'conservation_laws', 'deficiency',
    'is_weakly_reversible', 'linkage_classes', 'reaction_vector', 'source_vertices',
    'stoichiometric_dimension', 'stoichiometric_subspace', 'strong_components', 'terminal_components',
    'ConeClass', 'HullClassification2D', 'NewtonPolytope', 'classify_hull_2d', 'cone_membership',
    'newton_polytope', 'on_boundary', 'points_into_relative_interior', 'polytopes_equal',
    'subspaces_equal', 'tangent_cone_contains',
    'DirectionWitness', 'check_terminal_interior', 'endotactic_by_angular_sweep', 'is_endotactic',
    'is_strongly_endotactic', 'net_reaction_graph', 'net_reaction_vector', 'violates_at',
    'RealizationResult', 'construct_wr_graph_2d', 'equivalence_certificate', 'probe_inclusion',
    'rate_solve', 'realize', 'realize_2d', 'realize_highdim', 'verify_equivalence',
    'LinProgram', 'LpSolution', 'LpStatus', 'positive_combination', 'simplex_solve',
    'P1Result', 'P2Result', 'check_p2_certificate', 'disguised_membership_at', 'extract_wr_support',
    'solve_p1_fixed_k', 'solve_p2',
    'Trajectory', 'is_complex_balanced_at', 'monomial', 'numeric_equivalence_deviation', 'rhs', 'simulate',
    'parse_network', 'print_network',
]
