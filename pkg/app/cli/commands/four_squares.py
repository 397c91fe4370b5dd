import argparse

from app.core.config import settings
from app.core.exceptions import InputError
from app.modules.numtheory import RandomSource, four_squares

NAME = "four-squares"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="write M as a sum of four squares")
    parser.add_argument("m", type=int, metavar="M")
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    if args.m < 0:
        raise InputError(f"M must be nonnegative, got {args.m}")
    solution = four_squares(args.m, RandomSource(args.seed))
    a, b, c, d = solution.as_tuple()
    print(f"{args.m} = {a}^2 + {b}^2 + {c}^2 + {d}^2")
    print(f"trials {solution.trials}")
    return 0
