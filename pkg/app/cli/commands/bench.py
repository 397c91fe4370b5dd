import argparse
import asyncio
import csv
import sys
from pathlib import Path
from typing import List

from app.core.config import settings
from app.modules.orchestrator import SynthesisWorkflow
from app.schemas.report import BenchRow

NAME = "bench"
DEFAULT_EPS_LIST = "1e-2,1e-3,1e-4,1e-5,1e-6,1e-7,1e-8"
COLUMNS = list(BenchRow.model_fields)


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="measure gate counts and runtime over a list of precisions")
    parser.add_argument("--eps-list", default=DEFAULT_EPS_LIST, help="comma-separated precisions")
    parser.add_argument("--trials", type=int, default=1)
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--csv", type=Path, default=None, help="CSV file (stdout if omitted)")
    parser.set_defaults(handler=handle)


def write_rows(rows: List[BenchRow], stream) -> None:
    writer = csv.DictWriter(stream, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.model_dump())


def handle(args: argparse.Namespace) -> int:
    eps_list = [e.strip() for e in args.eps_list.split(",") if e.strip()]
    rows = asyncio.run(SynthesisWorkflow().bench(eps_list, args.trials, args.seed, args.workers))
    if args.csv is None:
        write_rows(rows, sys.stdout)
    else:
        with args.csv.open("w", encoding="utf-8", newline="") as fh:
            write_rows(rows, fh)
    return 0
