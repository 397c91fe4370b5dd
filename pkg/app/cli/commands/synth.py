import argparse
import logging
from pathlib import Path

from app.cli.commands._io import output_circuit, output_report
from app.core.config import settings
from app.modules.orchestrator import SynthesisWorkflow

logger = logging.getLogger(__name__)

NAME = "synth"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="synthesize the controlled phase Λ(e^{iφ})")
    parser.add_argument("--phase", required=True, help="pi, pi/INT, INT*pi/INT or decimal radians")
    parser.add_argument("--eps", required=True, help="target precision in (0, 1)")
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    parser.add_argument("-o", "--output", type=Path, default=None, help="circuit file (stdout if omitted)")
    parser.add_argument("--report", type=Path, default=None, help="JSON report file")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    result = SynthesisWorkflow().synthesize(args.phase, args.eps, args.seed)
    output_circuit(result.circuit, args.output)
    output_report(result.report, args.report, echo=args.output is not None)
    logger.info(
        "k=%d gates=%d T=%d certified=%s",
        result.report.k, result.report.total_gates, result.report.t_count, result.report.eps_certified,
    )
    return 0
