import argparse
import logging
import sys
from typing import Callable, List, Optional

from app.cli.commands import bench, catalog, four_squares, synth, synth_unitary, verify
from app.core.config import settings
from app.core.exceptions import InternalError, SqctError
from app.core.log_config import configure_logging

logger = logging.getLogger(__name__)

COMMANDS = (synth, synth_unitary, verify, bench, four_squares, catalog)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Certified Clifford+T circuits for controlled phases with two ancillae",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one subcommand and map failures to exit codes."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging("DEBUG" if args.verbose else None)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except SqctError as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"{args.command}: {exc}", file=sys.stderr)
        return exc.exit_code
    except Exception as exc:
        logger.exception("unexpected failure in %s", args.command)
        print(f"{args.command}: internal error: {exc}", file=sys.stderr)
        return InternalError.exit_code

