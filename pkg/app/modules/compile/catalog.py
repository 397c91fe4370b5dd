"""Verified gate templates.

Every entry pairs an abstract matrix with a primitive circuit and is checked
for exact ring equality when built. The catalog is immutable afterwards.

Core templates act on slots (2, 3) of the two ancillae, i.e. they are
controlled by the high ancilla. Uncontrolled cores use qubits (0, 1) =
(high, low); controlled cores use (1, 2) with qubit 0 as the extra control.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

import attrs

from app.core.exceptions import CatalogCorruptError
from app.modules.compile.gates import (
    cch_gates,
    cs_gates,
    cx,
    g1,
    k_adjoint_gates,
    k_gates,
    phase_power_gates,
    toffoli_gates,
)
from app.modules.ring import ONE, RingScalar
from app.modules.sim import ExactMatrix, block_diagonal, circuit_matrix, diagonal_phase, two_level_matrix
from app.modules.synth import StateVec, TwoLevelGate
from app.schemas.common import Circuit, PrimGate

logger = logging.getLogger(__name__)


@attrs.frozen(slots=True)
class CatalogEntry:
    name: str
    matrix: ExactMatrix
    circuit: Circuit

    def check(self) -> bool:
        return circuit_matrix(self.circuit) == self.matrix


def verified_entry(name: str, matrix: ExactMatrix, gates: List[PrimGate], n_qubits: int) -> CatalogEntry:
    """
    Build an entry and check it exactly.

    Raises:
        CatalogCorruptError: the template does not simulate to `matrix`
    """
    entry = CatalogEntry(name, matrix, Circuit(n_qubits=n_qubits, gates=gates))
    if not entry.check():
        raise CatalogCorruptError(f"catalog entry {name} does not match its matrix")
    return entry


def _toffoli_matrix() -> ExactMatrix:
    cols = [StateVec.basis(8, j) for j in range(8)]
    cols[6], cols[7] = cols[7], cols[6]
    return ExactMatrix(cols)


def _cch_matrix() -> ExactMatrix:
    h = RingScalar(ONE, 1)
    zero = [RingScalar.from_int(0)] * 6
    cols = [StateVec.basis(8, j) for j in range(6)]
    cols.append(StateVec(zero + [h, h]))
    cols.append(StateVec(zero + [h, -h]))
    return ExactMatrix(cols)


def toffoli_template() -> CatalogEntry:
    return verified_entry("toffoli", _toffoli_matrix(), toffoli_gates(0, 1, 2), 3)


def cs_template() -> CatalogEntry:
    return verified_entry("cs", diagonal_phase(4, 3, 2), cs_gates(0, 1), 2)


def cch_template() -> CatalogEntry:
    return verified_entry("cch", _cch_matrix(), cch_gates(0, 1, 2), 3)


def core_gates(kind: str, param: int, controlled: bool) -> List[PrimGate]:
    """Primitive gates for a generator on slots (2, 3), in time order."""
    if controlled:
        hi, lo = 1, 2
        phase = cs_gates(0, hi)
        flip = toffoli_gates(0, hi, lo)
    else:
        hi, lo = 0, 1
        phase = [g1("S", hi)]
        flip = [cx(hi, lo)]

    if kind == "IX":
        return phase + flip
    if kind == "HTM":
        return (
            phase_power_gates(lo, param)
            + k_adjoint_gates(lo)
            + flip
            + k_gates(lo)
            + phase_power_gates(lo, -param)
            + phase
        )
    if kind == "WPOW":
        return flip + phase_power_gates(lo, param) + flip + phase_power_gates(lo, -param)
    raise ValueError(f"unknown generator kind {kind}")


def _core_name(kind: str, param: int, controlled: bool) -> str:
    name = kind.lower() if kind == "IX" else f"{kind.lower()}({param})"
    return f"c-{name}" if controlled else name


def _generators() -> Iterator[Tuple[str, int]]:
    yield "IX", 0
    for kind in ("HTM", "WPOW"):
        for param in range(8):
            yield kind, param


@attrs.frozen
class Catalog:
    entries: Dict[str, CatalogEntry]

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, name: str) -> CatalogEntry:
        return self.entries[name]

    def core(self, g: TwoLevelGate, controlled: bool) -> Circuit:
        """Template for g's kind and parameter moved to slots (2, 3), adjointed if g is."""
        circuit = self.entries[_core_name(g.kind, g.param, controlled)].circuit
        return circuit.inverse() if g.inverse else circuit


def build_catalog() -> Catalog:
    """Construct and exactly verify every template."""
    entries = {e.name: e for e in (toffoli_template(), cs_template(), cch_template())}
    upper = ExactMatrix.identity(4)
    for kind, param in _generators():
        block = two_level_matrix(TwoLevelGate(kind, 2, 3, param), 4)
        plain = _core_name(kind, param, False)
        entries[plain] = verified_entry(plain, block, core_gates(kind, param, False), 2)
        ctl = _core_name(kind, param, True)
        entries[ctl] = verified_entry(ctl, block_diagonal(upper, block), core_gates(kind, param, True), 3)
    logger.debug("catalog built with %d verified entries", len(entries))
    return Catalog(entries)


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    return build_catalog()
