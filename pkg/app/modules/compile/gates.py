"""Primitive gate constructors and the standard Clifford+T fragments."""

from typing import List

from app.schemas.common import PrimGate

# shortest spelling of T^m for m = 0..7
PHASE_POWER_NAMES = {
    0: (),
    1: ("T",),
    2: ("S",),
    3: ("S", "T"),
    4: ("Z",),
    5: ("Z", "T"),
    6: ("SDG",),
    7: ("TDG",),
}


def g1(kind: str, q: int) -> PrimGate:
    return PrimGate(kind=kind, qubits=(q,))


def cx(control: int, target: int) -> PrimGate:
    return PrimGate(kind="CNOT", qubits=(control, target))


def phase_power_gates(q: int, m: int) -> List[PrimGate]:
    """Gates realizing T^m on qubit q."""
    return [g1(name, q) for name in PHASE_POWER_NAMES[m % 8]]


def toffoli_gates(a: int, b: int, c: int) -> List[PrimGate]:
    """Seven-T Toffoli with controls a, b and target c."""
    return [
        g1("H", c),
        cx(b, c),
        g1("TDG", c),
        cx(a, c),
        g1("T", c),
        cx(b, c),
        g1("TDG", c),
        cx(a, c),
        g1("T", b),
        g1("T", c),
        g1("H", c),
        cx(a, b),
        g1("T", a),
        g1("TDG", b),
        cx(a, b),
    ]


def cs_gates(a: int, b: int) -> List[PrimGate]:
    """Controlled-S: phase i exactly when both a and b are 1."""
    return [g1("T", a), g1("T", b), cx(a, b), g1("TDG", b), cx(a, b)]


def k_gates(q: int) -> List[PrimGate]:
    """K = S·H·T in time order; K·X·K† = H."""
    return [g1("T", q), g1("H", q), g1("S", q)]


def k_adjoint_gates(q: int) -> List[PrimGate]:
    return [g1("SDG", q), g1("H", q), g1("TDG", q)]


def cch_gates(a: int, b: int, c: int) -> List[PrimGate]:
    """Doubly controlled H as K(c)·Toffoli·K†(c)."""
    return k_adjoint_gates(c) + toffoli_gates(a, b, c) + k_gates(c)
