"""Supersimple 2-(n,4,lambda) designs and their hole stabilizers.

Move calculus over block designs with lines of size 4: elementary moves,
closed-walk hole stabilizers, exact group computations, classification
against reference tables, and orderly enumeration up to isomorphism.
"""

from ._kernels import active_backend
from .classify import (CriterionResult, Signature, check_lambda3_classification,
                       check_stabilizer_bounds, classification_report, recognize,
                       signature, support_obstruction)
from .designs import (CapExceeded, Design, ParseError, ValidationReport,
                      boolean_quadruple_system, builtin, parse_design,
                      projective_plane_3, serialize_design, validate)
from .enumeration import (EnumerationResult, canonical_form, count_designs,
                          enumerate_designs, enumerate_labeled_designs,
                          is_canonical_form)
from .groups import BlockSystem, Group
from .moves import (NonCollinearError, elementary_move, hole_generators,
                    hole_stabilizer, is_collinear, move_sequence,
                    restrict_to_hole)
from .perms import Permutation, parse_cycle_string

__version__ = "0.1.0"

__all__ = [
    "BlockSystem", "CapExceeded", "CriterionResult", "Design",
    "EnumerationResult", "Group", "NonCollinearError", "ParseError",
    "Permutation", "Signature", "ValidationReport", "active_backend",
    "boolean_quadruple_system", "builtin", "canonical_form",
    "check_lambda3_classification", "check_stabilizer_bounds",
    "classification_report", "count_designs", "elementary_move",
    "enumerate_designs", "enumerate_labeled_designs", "hole_generators",
    "hole_stabilizer", "is_canonical_form", "is_collinear", "move_sequence",
    "parse_cycle_string", "parse_design", "projective_plane_3", "recognize",
    "restrict_to_hole", "serialize_design", "signature",
    "support_obstruction", "validate",
]
