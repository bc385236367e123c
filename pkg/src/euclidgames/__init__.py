"""Engine, verifier, and play service for three subtraction games on
integer pairs: Euclid, Grossman's variant, and M-Euclid."""

from .cf import (
    ContinuedFraction,
    cf_expand,
    cf_value,
    grundy_formula,
    index_i,
    index_j,
    move_to_value,
    winning_move,
)
from .errors import (
    ContinuedFractionError,
    GameError,
    IllegalMoveError,
    InvalidPositionError,
    OracleBoundError,
    TerminalPositionError,
    UnknownSessionError,
)
from .rules import (
    GrundyReport,
    Method,
    Move,
    Position,
    TargetEntry,
    Variant,
    apply_move,
    default_oracle_bound,
    is_terminal,
    legal_moves,
    mex,
    oracle_grundy,
    resolve_move,
)
from .verify import (
    CensusRow,
    census_csv,
    census_row,
    check_corollary,
    check_proof_properties,
    exception_census,
    grundy_table,
    sweep_positions,
    table_csv,
    verify_range,
)

__version__ = "0.1.0"

__all__ = [
    "CensusRow",
    "ContinuedFraction",
    "ContinuedFractionError",
    "GameError",
    "GrundyReport",
    "IllegalMoveError",
    "InvalidPositionError",
    "Method",
    "Move",
    "OracleBoundError",
    "Position",
    "TargetEntry",
    "TerminalPositionError",
    "UnknownSessionError",
    "Variant",
    "apply_move",
    "census_csv",
    "census_row",
    "cf_expand",
    "cf_value",
    "check_corollary",
    "check_proof_properties",
    "default_oracle_bound",
    "exception_census",
    "grundy_formula",
    "grundy_table",
    "index_i",
    "index_j",
    "is_terminal",
    "legal_moves",
    "mex",
    "move_to_value",
    "oracle_grundy",
    "resolve_move",
    "sweep_positions",
    "table_csv",
    "verify_range",
    "winning_move",
]
