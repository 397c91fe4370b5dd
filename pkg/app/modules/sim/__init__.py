from app.modules.sim.distance import certified_distance, controlled_phase_bound, squared_distance_upper
from app.modules.sim.simulator import (
    ExactMatrix,
    apply_gate,
    block_diagonal,
    circuit_matrix,
    diagonal_phase,
    exact_equal,
    simulate,
    two_level_matrix,
)

__all__ = [
    "ExactMatrix",
    "apply_gate",
    "block_diagonal",
    "certified_distance",
    "circuit_matrix",
    "controlled_phase_bound",
    "diagonal_phase",
    "exact_equal",
    "simulate",
    "squared_distance_upper",
    "two_level_matrix",
]
