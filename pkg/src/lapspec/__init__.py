"""Exact Laplacian spectral toolkit for dumbbell and theta graphs.

Everything is integer arithmetic end to end: characteristic polynomials via
a division-free algorithm or the family recurrences, spanning trees via
matrix-tree cofactors,
isomorphism via canonical graph6 forms, and verification suites that replay
the family's spectral-determination argument on exhaustively enumerated
small graphs.
"""

from .canonical import (are_isomorphic, canonical_form, canonical_graph,
                        canonical_permutation, refined_colors)
from .enumeration import (DEFAULT_CAP, EnumerationCapError, EnumerationTask,
                          enumerate_by_vertex_growth, enumerate_graphs,
                          random_connected_graph)
from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .graphs import (DumbbellParams, Graph, ThetaParams, classify_bicyclic,
                     connected_components, dumbbell_graph, find_bridges,
                     is_connected, make_cycle, make_dumbbell, make_path,
                     make_theta, relabel, theta_graph)
from .invariants import (InvalidCharpolyError, SpectralInvariants,
                         degree_constraint_solver, graph_invariants,
                         invariants_from_charpoly, is_l_cospectral)
from .laplacian import (charpoly, charpoly_interpolated, cycles_through,
                        det_bareiss, laplacian, spanning_tree_count,
                        submatrix_charpoly, u_matrix, u_matrix_charpoly,
                        verify_deletion_formula)
from .polynomials import IntPoly, LaurentPoly, Y_SUBSTITUTION, substitute_y
from .recurrences import (dumbbell_charpoly_rec, dumbbell_helper_poly,
                          dumbbell_value_at4, path_charpoly_rec, path_value_at4,
                          theta_charpoly_rec, theta_helper_poly, theta_value_at4,
                          u_generating_identity_holds, u_poly_rec, u_value_at2,
                          u_value_at4)
from .reports import VerificationReport
from .termtables import (TermTable, audit_dumbbell_identity, audit_theta_identity,
                         correction_poly, dumbbell_table, dumbbell_table_lowest_term,
                         identity_lhs, theta_table, theta_table_lowest_term)
from .verify import (dumbbell_parameter_grid, family_members, member_charpoly,
                     theta_parameter_grid, verify_census,
                     verify_cospectral_structure, verify_deletion_suite,
                     verify_determination, verify_dumbbell_table,
                     verify_family_values, verify_generating_identity,
                     verify_invariants_suite, verify_recurrences,
                     verify_special_values, verify_theta_table,
                     verify_within_family)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CAP",
    "DumbbellParams",
    "EnumerationCapError",
    "EnumerationTask",
    "Graph",
    "Graph6Error",
    "IntPoly",
    "InvalidCharpolyError",
    "LaurentPoly",
    "SpectralInvariants",
    "TermTable",
    "ThetaParams",
    "VerificationReport",
    "Y_SUBSTITUTION",
    "are_isomorphic",
    "audit_dumbbell_identity",
    "audit_theta_identity",
    "canonical_form",
    "canonical_graph",
    "canonical_permutation",
    "charpoly",
    "charpoly_interpolated",
    "classify_bicyclic",
    "connected_components",
    "correction_poly",
    "cycles_through",
    "degree_constraint_solver",
    "det_bareiss",
    "dumbbell_charpoly_rec",
    "dumbbell_graph",
    "dumbbell_helper_poly",
    "dumbbell_parameter_grid",
    "dumbbell_table",
    "dumbbell_table_lowest_term",
    "dumbbell_value_at4",
    "enumerate_by_vertex_growth",
    "enumerate_graphs",
    "family_members",
    "find_bridges",
    "graph6_decode",
    "graph6_encode",
    "graph_invariants",
    "identity_lhs",
    "invariants_from_charpoly",
    "is_connected",
    "is_l_cospectral",
    "laplacian",
    "make_cycle",
    "make_dumbbell",
    "make_path",
    "make_theta",
    "member_charpoly",
    "path_charpoly_rec",
    "path_value_at4",
    "random_connected_graph",
    "refined_colors",
    "relabel",
    "spanning_tree_count",
    "submatrix_charpoly",
    "substitute_y",
    "theta_charpoly_rec",
    "theta_graph",
    "theta_helper_poly",
    "theta_parameter_grid",
    "theta_table",
    "theta_table_lowest_term",
    "theta_value_at4",
    "u_generating_identity_holds",
    "u_matrix",
    "u_matrix_charpoly",
    "u_poly_rec",
    "u_value_at2",
    "u_value_at4",
    "verify_census",
    "verify_cospectral_structure",
    "verify_deletion_formula",
    "verify_deletion_suite",
    "verify_determination",
    "verify_dumbbell_table",
    "verify_family_values",
    "verify_generating_identity",
    "verify_invariants_suite",
    "verify_recurrences",
    "verify_special_values",
    "verify_theta_table",
    "verify_within_family",
]
