import argparse

from app.modules.compile import build_catalog

NAME = "catalog"


def register(subparsers) -> None:
    parser = subparsers.add_parser(NAME, help="list the verified gate templates")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    # built fresh so a corrupt template fails here and not behind a cache
    catalog = build_catalog()
    for entry in catalog:
        c = entry.circuit
        status = "exact" if entry.check() else "MISMATCH"
        print(f"{entry.name:<10} qubits={c.n_qubits} gates={len(c):<3} t={c.t_count:<3} {status}")
    return 0
