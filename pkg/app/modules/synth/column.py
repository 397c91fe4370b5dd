"""Exact column reduction of a D[ω] unit vector to e₀.

Each level lowers the least denominator exponent by one. Writing δ = 1 + ω
(δ² is √2 times a unit), entries of √2^m·v fall into three kinds: units (odd
coefficient sum), δ-exact (divisible by δ but not by √2), and multiples of
√2. Units are paired first, with ω^l chosen so that x + ω^l·y is divisible by
2 when the pair allows it and by δ³ otherwise; the second case leaves both
outputs δ-exact. The δ-exact entries are then paired, which always reaches
divisibility by 2.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from app.core.exceptions import SynthesisInvariantError
from app.modules.ring import ONE, RingInt, div_sqrt2, divisible_by_sqrt2, omega_mul
from app.modules.ring.zomega import divisible_by_delta, divisible_by_two
from app.modules.synth.state import StateVec
from app.modules.synth.two_level import TwoLevelGate, apply_sequence, apply_two_level

logger = logging.getLogger(__name__)


def _numerators(v: StateVec, m: int) -> List[RingInt]:
    return [e.rescaled(m) for e in v]


def _is_unit(z: RingInt) -> bool:
    return not divisible_by_delta(z)


def _is_delta_exact(z: RingInt) -> bool:
    return divisible_by_delta(z) and not divisible_by_sqrt2(z)


def _divisible_by_delta_cubed(z: RingInt) -> bool:
    return divisible_by_sqrt2(z) and divisible_by_delta(div_sqrt2(z))


def _pick_exponent(x: RingInt, y: RingInt, strong: bool) -> Optional[int]:
    """Smallest l making x + ω^l·y divisible by 2 (strong) or δ³, preferring a nonzero sum."""
    test = divisible_by_two if strong else _divisible_by_delta_cubed
    fallback = None
    for l in range(8):
        s = x + omega_mul(y, l)
        if test(s):
            if not s.is_zero():
                return l
            if fallback is None:
                fallback = l
    return fallback


def _pair_units(w: List[RingInt]) -> List[Tuple[int, int, int]]:
    """Greedy pairing of unit entries, preferring partners that allow the strong test."""
    pending = [idx for idx, z in enumerate(w) if _is_unit(z)]
    if len(pending) % 2:
        raise SynthesisInvariantError(f"odd number of unit entries at indices {pending}")
    pairs = []
    while pending:
        first = pending.pop(0)
        choice = None
        for pos, other in enumerate(pending):
            l = _pick_exponent(w[first], w[other], strong=True)
            if l is not None:
                choice = (pos, l)
                break
        if choice is None:
            l = _pick_exponent(w[first], w[pending[0]], strong=False)
            if l is None:
                raise SynthesisInvariantError(f"no reducing phase for units at {first}, {pending[0]}")
            choice = (0, l)
        pos, l = choice
        pairs.append((first, pending.pop(pos), l))
    return pairs


def _pair_delta_exact(w: List[RingInt]) -> List[Tuple[int, int, int]]:
    pending = [idx for idx, z in enumerate(w) if _is_delta_exact(z)]
    if len(pending) % 2:
        raise SynthesisInvariantError(f"odd number of δ-exact entries at indices {pending}")
    pairs = []
    for first, second in zip(pending[::2], pending[1::2]):
        l = _pick_exponent(w[first], w[second], strong=True)
        if l is None:
            raise SynthesisInvariantError(f"no reducing phase for δ-exact entries at {first}, {second}")
        pairs.append((first, second, l))
    return pairs


def reduce_step(v: StateVec) -> Tuple[List[TwoLevelGate], StateVec]:
    """
    Lower the least denominator exponent of v by one.

    Args:
        v: Exact unit vector with lde(v) >= 1

    Returns:
        The HTM gates applied, in order, and the resulting vector
    """
    m = v.lde()
    if m < 1:
        raise ValueError("reduce_step needs a vector with lde >= 1")
    gates: List[TwoLevelGate] = []
    for pairing in (_pair_units, _pair_delta_exact):
        for i, j, l in pairing(_numerators(v, m)):
            gate = TwoLevelGate.htm(l, i, j)
            v = apply_two_level(gate, v)
            gates.append(gate)
    if any(not divisible_by_sqrt2(z) for z in _numerators(v, m)):
        raise SynthesisInvariantError(f"level {m} left entries not divisible by √2")
    logger.debug("reduced level %d with %d gates", m, len(gates))
    return gates, v.normalized()


def _unit_exponent(z: RingInt) -> int:
    for l in range(8):
        if omega_mul(ONE, l) == z:
            return l
    raise SynthesisInvariantError(f"{z} is not a power of ω")


def _finish(v: StateVec) -> List[TwoLevelGate]:
    """Gates taking a vector with a single unit entry ω^l to e₀."""
    nonzero = [idx for idx, e in enumerate(v) if not e.is_zero()]
    if len(nonzero) != 1:
        raise SynthesisInvariantError(f"expected one nonzero entry at lde 0, found {len(nonzero)}")
    j = nonzero[0]
    l = _unit_exponent(v[j].u)
    gates = []
    if j != 0:
        gates.append(TwoLevelGate.ix(0, j))
        l += 2
    if l % 8:
        gates.append(TwoLevelGate.wpow(8 - l % 8, 0, 1))
    return gates


def column_reduce(v: StateVec) -> List[TwoLevelGate]:
    """Gates that map v to exactly e₀, global phase included, in application order."""
    if not v.is_unit():
        raise ValueError("column_reduce needs an exact unit vector")
    start = v
    gates: List[TwoLevelGate] = []
    m = v.lde()
    while m > 0:
        step, v = reduce_step(v)
        gates.extend(step)
        next_m = v.lde()
        if next_m >= m:
            raise SynthesisInvariantError(f"lde did not decrease from {m}")
        m = next_m
    gates.extend(_finish(v))
    if apply_sequence(gates, start) != StateVec.basis(start.dim):
        raise SynthesisInvariantError("reduction did not reach e₀")
    return gates


def prep_sequence(v: StateVec) -> List[TwoLevelGate]:
    """Adjoint of the reduction: applying it to e₀ yields exactly v."""
    return [g.adjoint() for g in reversed(column_reduce(v))]


def count_htm(gates: Sequence[TwoLevelGate]) -> int:
    return sum(1 for g in gates if g.kind == "HTM")
