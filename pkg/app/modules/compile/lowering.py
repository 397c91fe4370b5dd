"""Lowering of two-level generator sequences to primitive circuits."""

import logging
from typing import Optional, Sequence

from app.modules.compile.catalog import Catalog, default_catalog
from app.modules.compile.conjugator import permutation_conjugator
from app.modules.synth import TwoLevelGate
from app.schemas.common import Circuit

logger = logging.getLogger(__name__)


def compile_two_level(g: TwoLevelGate, controlled: bool, catalog: Optional[Catalog] = None) -> Circuit:
    """
    Circuit for g on the ancilla pair, or for diag(I₄, g) when `controlled`.

    The catalog core acts on slots (2, 3); a permutation P moves (g.i, g.j)
    there and is undone afterwards. X and CNOT are self-inverse, so P† is P
    reversed.
    """
    if g.j >= 4:
        raise ValueError(f"{g} does not act on the ancilla pair")
    catalog = catalog or default_catalog()
    n_qubits = 3 if controlled else 2
    conj = permutation_conjugator(g.i, g.j, 4).widened(n_qubits, n_qubits - 2)
    core = catalog.core(g, controlled)
    return conj + core + conj.inverse()


def compile_sequence(seq: Sequence[TwoLevelGate], catalog: Optional[Catalog] = None) -> Circuit:
    """The 2-qubit circuit C = g_n ··· g_1 for seq = [g_1, ..., g_n]."""
    circuit = Circuit(n_qubits=2)
    for g in seq:
        circuit = circuit + compile_two_level(g, False, catalog)
    return circuit


def controlize(seq: Sequence[TwoLevelGate], catalog: Optional[Catalog] = None) -> Circuit:
    """3-qubit circuit equal to diag(I₄, C), qubit 0 being the control."""
    circuit = Circuit(n_qubits=3)
    for g in seq:
        circuit = circuit + compile_two_level(g, True, catalog)
    logger.debug("controlled %d generators into %d primitives", len(seq), len(circuit))
    return circuit
