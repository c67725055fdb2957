"""Stratified modal logic toolkit."""

from ._core import (
    AxiomProfile,
    BoundsTooLarge,
    CoherenceMode,
    CycleError,
    Formula,
    FramePolicy,
    FrameViolation,
    ParseError,
    SalError,
    StratifiedModel,
    UndeclaredIdentifier,
    axiom_matrix,
    check_proof,
    decide_sat,
    decide_valid,
    eval,
    is_admissible,
    parse_formula,
    parse_model,
    print_formula,
    print_model,
    to_dot,
    validate_frame,
)

__all__ = [
    "AxiomProfile",
    "BoundsTooLarge",
    "CoherenceMode",
    "CycleError",
    "Formula",
    "FramePolicy",
    "FrameViolation",
    "ParseError",
    "SalError",
    "StratifiedModel",
    "UndeclaredIdentifier",
    "axiom_matrix",
    "check_proof",
    "decide_sat",
    "decide_valid",
    "eval",
    "is_admissible",
    "parse_formula",
    "parse_model",
    "print_model",
    "print_formula",
    "to_dot",
    "validate_frame",
]
