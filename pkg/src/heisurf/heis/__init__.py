"""Heisenberg groups, Schroedinger representations and invariant polynomials."""

from .group import (DEFAULT_BOUND, HeisElement, HeisType, dual_rep, named_generators,
                    schrodinger_rep)
from .modules import (GradedModule, act, action_matrix_on_span, all_characters,
                      character_projector, character_value, eigenspace_basis, eigenvalue,
                      induced_action, is_eigenvector, substitution)
from .relations import (RelationReport, gamma_delta2, involution_bindings, involution_matrix,
                        involution_normalizes, verify_group_relations)

__all__ = [
    "DEFAULT_BOUND", "HeisElement", "HeisType", "dual_rep", "named_generators", "schrodinger_rep",
    "GradedModule", "act", "action_matrix_on_span", "all_characters", "character_projector",
    "character_value", "eigenspace_basis", "eigenvalue", "induced_action", "is_eigenvector",
    "substitution", "RelationReport", "gamma_delta2", "involution_bindings",
    "involution_matrix", "involution_normalizes", "verify_group_relations",
]
