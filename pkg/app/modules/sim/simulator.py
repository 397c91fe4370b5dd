"""Dense exact simulation of Clifford+T circuits over D[ω].

Qubit 0 is the most significant bit of a basis index, so on three qubits the
index of |q0 q1 q2⟩ is 4·q0 + 2·q1 + q2.
"""

from typing import Dict, Iterable, List, Tuple, Union

import attrs

from app.modules.ring import ONE, ZERO_SCALAR, RingScalar, omega_mul
from app.modules.synth.state import StateVec
from app.modules.synth.two_level import TwoLevelGate, apply_two_level
from app.schemas.common import Circuit, PrimGate

# diagonal gates: phase exponent of ω applied to |1⟩
PHASE_EXPONENT: Dict[str, int] = {"T": 1, "S": 2, "Z": 4, "SDG": 6, "TDG": 7}

_INV_SQRT2 = RingScalar(ONE, 1)


def _bit(n_qubits: int, qubit: int) -> int:
    return 1 << (n_qubits - 1 - qubit)


def _n_qubits(dim: int) -> int:
    return dim.bit_length() - 1


def _apply_to_entries(g: PrimGate, entries: List[RingScalar], n_qubits: int) -> List[RingScalar]:
    out = list(entries)
    if g.kind == "CNOT":
        control, target = (_bit(n_qubits, q) for q in g.qubits)
        for idx in range(len(out)):
            if idx & control and not idx & target:
                out[idx], out[idx | target] = out[idx | target], out[idx]
        return out

    mask = _bit(n_qubits, g.qubits[0])
    for idx in range(len(out)):
        if idx & mask:
            continue
        low, high = idx, idx | mask
        if g.kind == "H":
            x, y = entries[low], entries[high]
            out[low] = ((x + y) * _INV_SQRT2).normalize()
            out[high] = ((x - y) * _INV_SQRT2).normalize()
        elif g.kind == "X":
            out[low], out[high] = entries[high], entries[low]
        else:
            out[high] = entries[high].omega_mul(PHASE_EXPONENT[g.kind])
    return out


@attrs.frozen(slots=True)
class ExactMatrix:
    """Square matrix over D[ω], stored as its columns."""

    columns: Tuple[StateVec, ...] = attrs.field(converter=tuple)

    @classmethod
    def identity(cls, dim: int) -> "ExactMatrix":
        return cls(StateVec.basis(dim, j) for j in range(dim))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RingScalar]]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        return cls(StateVec.of(row[j] for row in rows) for j in range(len(rows)))

    @property
    def dim(self) -> int:
        return len(self.columns)

    def entry(self, row: int, col: int) -> RingScalar:
        return self.columns[col][row]

    def adjoint(self) -> "ExactMatrix":
        return ExactMatrix(
            StateVec(self.columns[r][c].conj() for r in range(self.dim)) for c in range(self.dim)
        )

    def apply(self, v: StateVec) -> StateVec:
        acc = [ZERO_SCALAR] * self.dim
        for j, coeff in enumerate(v):
            if coeff.is_zero():
                continue
            for i, e in enumerate(self.columns[j]):
                if not e.is_zero():
                    acc[i] = acc[i] + e * coeff
        return StateVec.of(acc)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self.apply(col) for col in other.columns)

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.dim)

    def is_unitary(self) -> bool:
        return (self.adjoint() @ self).is_identity()

    def submatrix(self, indices: List[int]) -> "ExactMatrix":
        return ExactMatrix(StateVec(self.columns[c][r] for r in indices) for c in indices)


State = Union[StateVec, ExactMatrix]


def apply_gate(g: PrimGate, target: State) -> State:
    """Exact action of one primitive; for a matrix M this returns G·M."""
    if isinstance(target, ExactMatrix):
        return ExactMatrix(apply_gate(g, col) for col in target.columns)
    n = _n_qubits(target.dim)
    if max(g.qubits) >= n:
        raise ValueError(f"gate {g} does not fit {n} qubits")
    return StateVec(_apply_to_entries(g, list(target.entries), n))


def simulate(circuit: Circuit, v: StateVec) -> StateVec:
    for g in circuit.gates:
        v = apply_gate(g, v)
    return v


def circuit_matrix(circuit: Circuit) -> ExactMatrix:
    """Exact unitary of the circuit, gates applied in time order."""
    dim = 1 << circuit.n_qubits
    return ExactMatrix(simulate(circuit, StateVec.basis(dim, j)) for j in range(dim))


def exact_equal(a: State, b: State) -> bool:
    if type(a) is not type(b):
        raise TypeError("exact_equal compares two vectors or two matrices")
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    return a == b


def block_diagonal(upper: ExactMatrix, lower: ExactMatrix) -> ExactMatrix:
    """diag(upper, lower)."""
    pad_top = [ZERO_SCALAR] * upper.dim
    pad_bottom = [ZERO_SCALAR] * lower.dim
    cols = [StateVec(list(c) + pad_bottom) for c in upper.columns]
    cols += [StateVec(pad_top + list(c)) for c in lower.columns]
    return ExactMatrix(cols)


def diagonal_phase(dim: int, index: int, exponent: int) -> ExactMatrix:
    """Identity with ω^exponent at (index, index)."""
    return ExactMatrix(
        StateVec.basis(dim, j) if j != index else StateVec(
            RingScalar(omega_mul(ONE, exponent)) if r == j else ZERO_SCALAR for r in range(dim)
        )
        for j in range(dim)
    )



def two_level_matrix(g: TwoLevelGate, dim: int) -> ExactMatrix:
    """Full matrix of a two-level generator on a `dim`-dimensional space."""
    return ExactMatrix(apply_two_level(g, StateVec.basis(dim, j)) for j in range(dim))
