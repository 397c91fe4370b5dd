from typing import Dict, List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

GateName = Literal["H", "T", "TDG", "S", "SDG", "X", "Z", "CNOT"]

GATE_NAMES: Tuple[str, ...] = ("H", "T", "TDG", "S", "SDG", "X", "Z", "CNOT")

ADJOINT_NAME: Dict[str, str] = {
    "H": "H",
    "T": "TDG",
    "TDG": "T",
    "S": "SDG",
    "SDG": "S",
    "X": "X",
    "Z": "Z",
    "CNOT": "CNOT",
}


class PrimGate(BaseModel):
    """A Clifford+T primitive; CNOT operands are (control, target)."""
    model_config = ConfigDict(frozen=True)

    kind: GateName
    qubits: Tuple[int, ...]

    @model_validator(mode="after")
    def check_operands(self) -> "PrimGate":
        arity = 2 if self.kind == "CNOT" else 1
        if len(self.qubits) != arity:
            raise ValueError(f"{self.kind} takes {arity} operand(s), got {len(self.qubits)}")
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative operand in {self.kind} {self.qubits}")
        if arity == 2 and self.qubits[0] == self.qubits[1]:
            raise ValueError("CNOT control and target must differ")
        return self

    def adjoint(self) -> "PrimGate":
        return PrimGate(kind=ADJOINT_NAME[self.kind], qubits=self.qubits)

    def shifted(self, offset: int) -> "PrimGate":
        return PrimGate(kind=self.kind, qubits=tuple(q + offset for q in self.qubits))

    def __str__(self) -> str:
        return " ".join([self.kind, *map(str, self.qubits)])


class Circuit(BaseModel):
    """Time-ordered gate list; gates[0] is applied first."""
    n_qubits: int = Field(ge=1)
    gates: List[PrimGate] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_wires(self) -> "Circuit":
        for g in self.gates:
            if max(g.qubits) >= self.n_qubits:
                raise ValueError(f"gate {g} touches a wire outside 0..{self.n_qubits - 1}")
        return self

    def __add__(self, other: "Circuit") -> "Circuit":
        if other.n_qubits != self.n_qubits:
            raise ValueError("cannot concatenate circuits of different widths")
        return Circuit(n_qubits=self.n_qubits, gates=self.gates + other.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def inverse(self) -> "Circuit":
        return Circuit(n_qubits=self.n_qubits, gates=[g.adjoint() for g in reversed(self.gates)])

    def widened(self, n_qubits: int, offset: int = 0) -> "Circuit":
        """Same gates on a wider register, operands moved up by `offset`."""
        return Circuit(n_qubits=n_qubits, gates=[g.shifted(offset) for g in self.gates])

    def gate_counts(self) -> Dict[str, int]:
        counts = {name: 0 for name in GATE_NAMES}
        for g in self.gates:
            counts[g.kind] += 1
        return counts

    @property
    def t_count(self) -> int:
        return sum(1 for g in self.gates if g.kind in ("T", "TDG"))
