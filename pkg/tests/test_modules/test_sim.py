"""Tests for the exact simulator and certified distances."""

from fractions import Fraction

import pytest

from app.modules.ring import ONE, OMEGA, ZERO, ComplexInterval, RingScalar, sqrt_lower, sqrt_upper
from app.modules.sim import (
    ExactMatrix,
    apply_gate,
    certified_distance,
    circuit_matrix,
    controlled_phase_bound,
    exact_equal,
    simulate,
    two_level_matrix,
)
from app.modules.synth import StateVec, TwoLevelGate
from app.modules.target import AngleSpec
from app.schemas.common import Circuit, PrimGate


def gate(kind, *qubits):
    return PrimGate(kind=kind, qubits=qubits)


def circuit(n, *gates):
    return Circuit(n_qubits=n, gates=list(gates))


def test_apply_gate_examples():
    h = RingScalar(ONE, 1)
    assert apply_gate(gate("H", 0), StateVec.basis(2, 0)) == StateVec([h, h])
    assert apply_gate(gate("T", 0), StateVec.basis(2, 1)) == StateVec([RingScalar(ZERO), RingScalar(OMEGA)])
    assert apply_gate(gate("CNOT", 0, 1), StateVec.basis(4, 2)) == StateVec.basis(4, 3)
    assert apply_gate(gate("X", 1), StateVec.basis(4, 0)) == StateVec.basis(4, 1)


def test_qubit_zero_is_most_significant():
    v = apply_gate(gate("X", 0), StateVec.basis(8, 0))
    assert v == StateVec.basis(8, 4)


def test_gate_out_of_range():
    with pytest.raises(ValueError):
        apply_gate(gate("H", 2), StateVec.basis(4, 0))


def test_circuit_matrix_examples():
    assert circuit_matrix(circuit(2)).is_identity()
    h = RingScalar(ONE, 1)
    hadamard = ExactMatrix.from_rows([[h, h], [h, -h]])
    assert circuit_matrix(circuit(1, gate("H", 0))) == hadamard


def test_exact_equal_examples():
    hh = circuit_matrix(circuit(1, gate("H", 0), gate("H", 0)))
    assert exact_equal(hh, ExactMatrix.identity(2))
    t8 = circuit_matrix(circuit(1, *[gate("T", 0)] * 8))
    assert exact_equal(t8, ExactMatrix.identity(2))
    v = StateVec.basis(4, 1)
    assert exact_equal(v, v)
    with pytest.raises(TypeError):
        exact_equal(v, hh)


def test_phase_gates_compose():
    s = circuit_matrix(circuit(1, gate("S", 0)))
    tt = circuit_matrix(circuit(1, gate("T", 0), gate("T", 0)))
    assert s == tt
    z = circuit_matrix(circuit(1, gate("Z", 0)))
    assert z == circuit_matrix(circuit(1, gate("S", 0), gate("S", 0)))
    assert circuit_matrix(circuit(1, gate("SDG", 0), gate("S", 0))).is_identity()
    assert circuit_matrix(circuit(1, gate("TDG", 0), gate("T", 0))).is_identity()


def test_matrices_are_unitary():
    c = circuit(3, gate("H", 0), gate("T", 1), gate("CNOT", 0, 2), gate("H", 2), gate("SDG", 1), gate("CNOT", 2, 1))
    m = circuit_matrix(c)
    assert m.is_unitary()
    assert (circuit_matrix(c.inverse()) @ m).is_identity()


def test_simulate_matches_matrix_column():
    c = circuit(2, gate("H", 0), gate("CNOT", 0, 1), gate("T", 1))
    assert simulate(c, StateVec.basis(4, 0)) == circuit_matrix(c).columns[0]


def test_two_level_matrix_is_identity_off_block():
    m = two_level_matrix(TwoLevelGate.htm(3, 1, 2), 4)
    assert m.columns[0] == StateVec.basis(4, 0)
    assert m.columns[3] == StateVec.basis(4, 3)
    assert m.is_unitary()


def test_certified_distance_examples():
    v = StateVec.basis(4, 0)
    assert certified_distance(list(v), list(v), 64) == 0
    d = certified_distance(list(StateVec.basis(2, 0)), list(StateVec.basis(2, 1)), 64)
    assert sqrt_lower(Fraction(2), 64) <= d <= sqrt_upper(Fraction(2), 64) + Fraction(1, 1 << 60)


def test_certified_distance_mixes_intervals():
    phase = AngleSpec.parse("pi/4").phase(96)
    omega = [RingScalar(OMEGA)]
    d = certified_distance(omega, [phase], 96)
    assert d < Fraction(1, 1 << 80)
    with pytest.raises(ValueError):
        certified_distance(omega, [phase, phase])


def test_controlled_phase_bound_for_exact_t():
    # T on the data wire of a 3-qubit register realizes Λ(ω) exactly
    m = circuit_matrix(circuit(3, gate("T", 0)))
    assert controlled_phase_bound(m, RingScalar(OMEGA)) == 0
    far = controlled_phase_bound(m, ComplexInterval.exact(Fraction(1)), 64)
    assert far > Fraction(3, 4)
