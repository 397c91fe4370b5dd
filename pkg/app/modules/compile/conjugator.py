"""Permutation circuits moving a pair of basis slots onto the last two."""

from collections import deque
from functools import lru_cache
from typing import Dict, List, Tuple

from app.modules.compile.gates import cx, g1
from app.schemas.common import Circuit, PrimGate

Perm = Tuple[int, ...]


def _gate_perm(g: PrimGate, n_qubits: int, dim: int) -> Perm:
    bits = [1 << (n_qubits - 1 - q) for q in g.qubits]
    if g.kind == "X":
        return tuple(x ^ bits[0] for x in range(dim))
    control, target = bits
    return tuple(x ^ target if x & control else x for x in range(dim))


def _generators(dim: int) -> List[PrimGate]:
    # on three qubits the data wire stays untouched
    if dim == 4:
        hi, lo = 0, 1
    elif dim == 8:
        hi, lo = 1, 2
    else:
        raise ValueError(f"conjugators exist for dim 4 or 8, got {dim}")
    return [g1("X", hi), g1("X", lo), cx(hi, lo), cx(lo, hi)]


@lru_cache(maxsize=None)
def _search(i: int, j: int, dim: int) -> Tuple[PrimGate, ...]:
    n_qubits = dim.bit_length() - 1
    moves = [(g, _gate_perm(g, n_qubits, dim)) for g in _generators(dim)]
    start: Perm = tuple(range(dim))
    parents: Dict[Perm, Tuple[Perm, PrimGate]] = {}
    queue = deque([start])
    seen = {start}
    while queue:
        perm = queue.popleft()
        if perm[i] == dim - 2 and perm[j] == dim - 1:
            path: List[PrimGate] = []
            while perm != start:
                perm, g = parents[perm]
                path.append(g)
            return tuple(reversed(path))
        for g, move in moves:
            nxt = tuple(move[x] for x in perm)
            if nxt not in seen:
                seen.add(nxt)
                parents[nxt] = (perm, g)
                queue.append(nxt)
    raise ValueError(f"slots ({i}, {j}) cannot be moved to ({dim - 2}, {dim - 1}) by ancilla permutations")


def permutation_conjugator(i: int, j: int, dim: int) -> Circuit:
    """
    Shortest X/CNOT circuit P on the ancilla pair with P·e_i = e_{dim-2} and
    P·e_j = e_{dim-1}.

    Args:
        i: slot sent to dim - 2
        j: slot sent to dim - 1
        dim: 4 for the bare ancilla pair, 8 when a data qubit leads the register

    Raises:
        ValueError: i == j, an index is out of range, or on dim 8 the slots
            differ in their data bit
    """
    if i == j or not (0 <= i < dim and 0 <= j < dim):
        raise ValueError(f"invalid slot pair ({i}, {j}) for dim {dim}")
    return Circuit(n_qubits=dim.bit_length() - 1, gates=list(_search(i, j, dim)))
