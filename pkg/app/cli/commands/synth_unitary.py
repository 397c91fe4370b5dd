import argparse
from pathlib import Path

from app.cli.commands._io import output_circuit, output_report
from app.core.config import settings
from app.core.exceptions import MatrixFormatError
from app.modules.orchestrator import SynthesisWorkflow

NAME = "synth-unitary"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="synthesize an arbitrary single-qubit unitary")
    parser.add_argument("--matrix", required=True, type=Path, help="file with U00 U01 U10 U11 as re/im pairs")
    parser.add_argument("--eps", required=True)
    parser.add_argument("--exact-phase", action="store_true", help="also realize the global phase")
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    parser.add_argument("-o", "--output", type=Path, default=None)
    parser.add_argument("--report", type=Path, default=None)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    try:
        text = args.matrix.read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFormatError(f"cannot read matrix {args.matrix}: {exc}") from exc
    result = SynthesisWorkflow().synthesize_unitary(text, args.eps, args.seed, exact_phase=args.exact_phase)
    output_circuit(result.circuit, args.output)
    output_report(result.report, args.report, echo=args.output is not None)
    return 0
