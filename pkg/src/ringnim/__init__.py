"""Ring Nim: solver, classifiers, and verification tools for circular
take-away games on static and shrinking rings."""

from .ring import (
    EnumerationScope,
    GameError,
    InvalidMoveError,
    InvalidPositionError,
    Move,
    Position,
    Rules,
    TerminalPositionError,
    BudgetExceededError,
    Variant,
    apply_move,
    canonicalize,
    dihedral_orbit,
    enumerate_positions,
    format_position,
    is_terminal,
    legal_moves,
    orientations,
    parse_position,
    validate_position,
    window_width,
)
from .solver import (
    DEFAULT_SOLVE_BUDGET,
    SolveCache,
    Status,
    best_move,
    solve_space,
    status,
    winning_moves,
)
from .classifiers import (
    Classifier,
    UnknownClassifierError,
    classifier_ids,
    fit_opposite_difference,
    nim_sum,
    p_cn52,
    p_cn53,
    p_cn63,
    p_cn64,
    p_cn86,
    p_cn_moore,
    p_scn42,
    p_scn52,
    p_scn53,
    p_scn86,
    resolve_classifier,
    scn86_family,
    tau,
    tau_inverse,
)
from .verifier import (
    ExploreReport,
    Mismatch,
    NamedPositionCheck,
    VerifyReport,
    check_named_positions,
    explore_conjecture_64,
    explore_generic,
    parse_game,
    verify,
)

__version__ = "0.1.0"
