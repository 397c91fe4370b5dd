"""Certified numeric distances between exact and interval-valued vectors."""

from fractions import Fraction
from typing import Optional, Sequence, Union

from app.core.config import settings
from app.modules.ring import ONE_SCALAR, ZERO_SCALAR, ComplexInterval, RingScalar, evaluate, sqrt_upper
from app.modules.sim.simulator import ExactMatrix

Entry = Union[RingScalar, ComplexInterval]


def _enclose(x: Entry, bits: int) -> ComplexInterval:
    return x if isinstance(x, ComplexInterval) else evaluate(x, bits)


def squared_distance_upper(a: Sequence[Entry], b: Sequence[Entry], precision_bits: Optional[int] = None) -> Fraction:
    """Upper bound on ‖a - b‖²; exact pairs are subtracted before evaluation."""
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    bits = precision_bits or settings.PRECISION_BITS
    total = Fraction(0)
    for x, y in zip(a, b):
        if isinstance(x, RingScalar) and isinstance(y, RingScalar):
            diff = x - y
            if diff.is_zero():
                continue
            total += evaluate(diff, bits).abs_sq_upper()
        else:
            total += (_enclose(x, bits) - _enclose(y, bits)).abs_sq_upper()
    return total


def certified_distance(a: Sequence[Entry], b: Sequence[Entry], precision_bits: Optional[int] = None) -> Fraction:
    """Certified upper bound on the 2-norm ‖a - b‖."""
    bits = precision_bits or settings.PRECISION_BITS
    return sqrt_upper(squared_distance_upper(a, b, bits), bits)


def controlled_phase_bound(
    matrix: ExactMatrix, phase: Entry, precision_bits: Optional[int] = None
) -> Fraction:
    """
    Bound on the distance between a data+ancilla circuit and Λ(e^{iφ}) ⊗ I
    restricted to ancillae starting in |00⟩.

    With U the circuit matrix, the distance on input (α|0⟩ + β|1⟩)|00⟩ is at
    most |α|·‖Ue₀ - e₀‖ + |β|·‖Ue₄ - e^{iφ}e₄‖, bounded by the root of the
    squared sum of both terms.
    """
    bits = precision_bits or settings.PRECISION_BITS
    dim = matrix.dim
    half = dim // 2
    expected_low = [ONE_SCALAR] + [ZERO_SCALAR] * (dim - 1)
    expected_high = [ZERO_SCALAR] * half + [phase] + [ZERO_SCALAR] * (half - 1)
    low = squared_distance_upper(list(matrix.columns[0]), expected_low, bits)
    high = squared_distance_upper(list(matrix.columns[half]), expected_high, bits)
    return sqrt_upper(low + high, bits)
