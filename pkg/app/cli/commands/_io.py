"""Output helpers shared by the commands."""

import sys
from pathlib import Path
from typing import Any, Optional

from app.schemas.common import Circuit
from app.utils.circuit_io import emit_circuit, write_circuit
from app.utils.json_utils import json_dumps, write_json


def output_circuit(circuit: Circuit, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(emit_circuit(circuit))
    else:
        write_circuit(path, circuit)


def output_report(report: Any, path: Optional[Path], echo: bool) -> None:
    """Write the report to `path`, or to stdout when `echo` is set."""
    if path is not None:
        write_json(path, report)
    elif echo:
        sys.stdout.write(json_dumps(report))
