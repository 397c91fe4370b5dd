from app.modules.synth.column import column_reduce, count_htm, prep_sequence, reduce_step
from app.modules.synth.state import StateVec
from app.modules.synth.two_level import TwoLevelGate, apply_sequence, apply_two_level

__all__ = [
    "StateVec",
    "TwoLevelGate",
    "apply_sequence",
    "apply_two_level",
    "column_reduce",
    "count_htm",
    "prep_sequence",
    "reduce_step",
]
