from app.modules.orchestrator.euler import EulerAngles, euler_decompose, parse_matrix, snap_angle
from app.modules.orchestrator.workflow import SynthesisWorkflow, UnitarySynthesisResult

__all__ = [
    "EulerAngles",
    "SynthesisWorkflow",
    "UnitarySynthesisResult",
    "euler_decompose",
    "parse_matrix",
    "snap_angle",
]
