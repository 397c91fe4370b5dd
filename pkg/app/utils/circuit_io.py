"""Text format for circuits.

    # sqct v1
    # qubits 3
    # ancillae 1 2
    T 0
    CNOT 1 2

One gate per line, operands 0-indexed, CNOT control first, LF endings.
"""

from pathlib import Path
from typing import List, Sequence, Union

from pydantic import ValidationError

from app.core.config import settings
from app.core.exceptions import CircuitFormatError
from app.schemas.common import GATE_NAMES, Circuit, PrimGate

DEFAULT_ANCILLAE = (1, 2)


def emit_circuit(circuit: Circuit, ancillae: Sequence[int] = DEFAULT_ANCILLAE) -> str:
    lines = [
        f"# sqct {settings.CIRCUIT_FORMAT_VERSION}",
        f"# qubits {circuit.n_qubits}",
        " ".join(["# ancillae", *(str(a) for a in ancillae if a < circuit.n_qubits)]),
    ]
    lines.extend(str(g) for g in circuit.gates)
    return "\n".join(lines) + "\n"


def _header_value(line: str, key: str, lineno: int) -> List[str]:
    parts = line[1:].split()
    if not parts or parts[0] != key:
        raise CircuitFormatError(f"line {lineno}: expected '# {key} ...' header")
    return parts[1:]


def parse_circuit(text: str) -> Circuit:
    """
    Parse the text format.

    Raises:
        CircuitFormatError: bad header, unknown gate, wrong operands
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 3:
        raise CircuitFormatError("circuit file is missing its header")

    version = _header_value(lines[0], "sqct", 1)
    if version != [settings.CIRCUIT_FORMAT_VERSION]:
        raise CircuitFormatError(f"unsupported circuit format {' '.join(version)!r}")
    qubits = _header_value(lines[1], "qubits", 2)
    if len(qubits) != 1 or not qubits[0].isdigit():
        raise CircuitFormatError("line 2: qubit count must be one integer")
    n_qubits = int(qubits[0])
    ancillae = _header_value(lines[2], "ancillae", 3)
    if not all(a.isdigit() for a in ancillae):
        raise CircuitFormatError("line 3: ancillae must be nonnegative integers")
    wires = [int(a) for a in ancillae]
    if len(set(wires)) != len(wires) or any(w >= n_qubits for w in wires):
        raise CircuitFormatError(f"line 3: ancillae {ancillae} are not distinct wires below {n_qubits}")

    gates = []
    for lineno, line in enumerate(lines[3:], start=4):
        if line.startswith("#"):
            continue
        fields = line.split(" ")
        if fields[0] not in GATE_NAMES:
            raise CircuitFormatError(f"line {lineno}: unknown gate {fields[0]!r}")
        if not all(f.isdigit() for f in fields[1:]):
            raise CircuitFormatError(f"line {lineno}: operands must be nonnegative integers")
        try:
            gates.append(PrimGate(kind=fields[0], qubits=tuple(int(f) for f in fields[1:])))
        except ValidationError as exc:
            raise CircuitFormatError(f"line {lineno}: {exc.errors()[0]['msg']}") from exc
    try:
        return Circuit(n_qubits=n_qubits, gates=gates)
    except ValidationError as exc:
        raise CircuitFormatError(exc.errors()[0]["msg"]) from exc


def write_circuit(path: Union[str, Path], circuit: Circuit) -> None:
    Path(path).write_text(emit_circuit(circuit), encoding="utf-8", newline="\n")


def read_circuit(path: Union[str, Path]) -> Circuit:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CircuitFormatError(f"cannot read circuit {path}: {exc}") from exc
    return parse_circuit(text)
