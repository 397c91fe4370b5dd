import argparse
import sys
from pathlib import Path

from app.cli.commands._io import output_report
from app.core.exceptions import CertificationError
from app.modules.orchestrator import SynthesisWorkflow
from app.utils.circuit_io import read_circuit

NAME = "verify"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="certify a circuit file against Λ(e^{iφ})")
    parser.add_argument("-c", "--circuit", required=True, type=Path)
    parser.add_argument("--phase", required=True)
    parser.add_argument("--eps", required=True)
    parser.add_argument("--report", type=Path, default=None)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    circuit = read_circuit(args.circuit)
    report = SynthesisWorkflow().verify(circuit, args.phase, args.eps)
    output_report(report, args.report, echo=True)
    if not report.certified:
        print(f"verify: certified bound {report.eps_certified} exceeds {report.eps_target}", file=sys.stderr)
        return CertificationError.exit_code
    return 0
