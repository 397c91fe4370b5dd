from typing import Dict, List

from pydantic import BaseModel, Field


class VerifyFlags(BaseModel):
    """Exact checks made on every synthesized circuit."""
    prep_exact: bool
    controlled_block_exact: bool

    @property
    def ok(self) -> bool:
        return self.prep_exact and self.controlled_block_exact


class SynthesisReport(BaseModel):
    """Certification metadata for one Λ(e^{iφ}) circuit. Reals are decimal strings."""
    phi: str
    octant: int = Field(ge=0, le=7)
    k: int = Field(ge=0)
    eps_target: str
    eps_bound: str
    eps_certified: str
    M: int = Field(ge=0)
    quad: List[int]
    gate_counts: Dict[str, int]
    t_count: int
    total_gates: int
    two_level_count: int
    ancillae: int = 2
    seed: int
    verify: VerifyFlags


class EulerDecomposition(BaseModel):
    """U = e^{iα}·Rz(β)·H·Rz(γ)·H·Rz(δ), angles in radians."""
    alpha: str
    beta: str
    gamma: str
    delta: str


class UnitarySynthesisReport(BaseModel):
    eps_target: str
    exact_phase: bool
    decomposition: EulerDecomposition
    blocks: List[SynthesisReport]
    snap_error: str
    reconstruction_error: str
    eps_certified: str
    gate_counts: Dict[str, int]
    t_count: int
    total_gates: int
    ancillae: int = 2


class VerificationReport(BaseModel):
    phi: str
    eps_target: str
    eps_certified: str
    n_qubits: int
    total_gates: int
    t_count: int
    certified: bool


class BenchRow(BaseModel):
    """One bench measurement; columns of the bench CSV."""
    eps: str
    k: int
    total_gates: int
    t_count: int
    wall_time: float
    quad_trials: int
