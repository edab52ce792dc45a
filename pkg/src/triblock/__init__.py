"""Triangulation blockers of a convex polygon and the Maker-Breaker game."""

from .polygon import (
    Diagonal,
    DiagonalSet,
    InvalidDiagonalError,
    all_diagonals,
    canonical_rotation,
    covered_vertex,
    crosses,
    diagonal_count,
    diagonal_order,
    is_ear_cover,
    make_diagonal,
    parse_diagonal,
    remove_vertex,
    rotate,
)
from .triangulation import (
    FeasibilityError,
    catalan,
    contains_triangulation,
    enumerate_triangulations,
    is_triangulation,
    triangulation_count,
)
from .blockers import (
    BlockerReport,
    BlockerStructure,
    blocker_report,
    brute_force_blockers,
    build_edges,
    dedupe_rotations,
    ears_of,
    enumerate_blockers,
    is_blocker,
    is_blocking_set,
    observation_checks,
    parse_structure,
)
from .counting import (
    CountTable,
    blocker_count_formula,
    f_k,
    f_total,
    fib,
    verify_identities,
)
from .game import (
    GameConfig,
    GameState,
    Player,
    Status,
    apply_move,
    erdos_selfridge_potential,
    maker_strategy_move,
    breaker_strategy_moves,
    new_game,
    play_out,
    solve,
    verify_breaker_strategy,
    verify_maker_strategy,
)

__version__ = "0.1.0"
