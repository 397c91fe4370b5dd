"""Local rewrites that keep the exact circuit matrix.

Runs of diagonal phase gates on one wire are fused into the shortest T-power
spelling, and adjacent self-inverse pairs (H·H, X·X, CNOT·CNOT) cancel.
"""

from typing import Dict, List, Optional, Union

import attrs

from app.modules.compile.gates import phase_power_gates
from app.modules.sim.simulator import PHASE_EXPONENT
from app.schemas.common import Circuit, PrimGate


@attrs.define
class _PhaseRun:
    qubit: int
    exponent: int


Slot = Optional[Union[PrimGate, _PhaseRun]]


def peephole(circuit: Circuit) -> Circuit:
    slots: List[Slot] = []
    # indices into slots of the live gates on each wire, oldest first
    wires: Dict[int, List[int]] = {q: [] for q in range(circuit.n_qubits)}

    def top(q: int) -> Slot:
        while wires[q]:
            s = slots[wires[q][-1]]
            if isinstance(s, _PhaseRun) and s.exponent % 8 == 0:
                slots[wires[q].pop()] = None
                continue
            return s
        return None

    def drop(q_list) -> None:
        idx = wires[q_list[0]][-1]
        slots[idx] = None
        for q in q_list:
            wires[q].pop()

    for g in circuit.gates:
        if g.kind in PHASE_EXPONENT:
            q = g.qubits[0]
            last = slots[wires[q][-1]] if wires[q] else None
            if isinstance(last, _PhaseRun):
                last.exponent = (last.exponent + PHASE_EXPONENT[g.kind]) % 8
                continue
            wires[q].append(len(slots))
            slots.append(_PhaseRun(q, PHASE_EXPONENT[g.kind]))
            continue

        tops = [top(q) for q in g.qubits]
        first = tops[0]
        if (
            isinstance(first, PrimGate)
            and first == g
            and all(t is first for t in tops)
            and len({wires[q][-1] for q in g.qubits}) == 1
        ):
            drop(list(g.qubits))
            continue
        for q in g.qubits:
            wires[q].append(len(slots))
        slots.append(g)

    gates: List[PrimGate] = []
    for s in slots:
        if isinstance(s, _PhaseRun):
            gates.extend(phase_power_gates(s.qubit, s.exponent))
        elif s is not None:
            gates.append(s)
    return Circuit(n_qubits=circuit.n_qubits, gates=gates)
