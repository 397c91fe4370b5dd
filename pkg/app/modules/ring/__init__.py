"""Exact arithmetic over Z[ω] and D[ω] plus certified numeric evaluation."""

from app.modules.ring.interval import ComplexInterval, evaluate, sqrt_lower, sqrt_upper
from app.modules.ring.scalar import ONE_SCALAR, ZERO_SCALAR, RingScalar, is_unit_vector, norm_squared
from app.modules.ring.zomega import (
    I_UNIT,
    OMEGA,
    ONE,
    SQRT2,
    ZERO,
    ResidueClass,
    RingInt,
    RingReal,
    class_of,
    conj,
    div_sqrt2,
    divisible_by_sqrt2,
    mul,
    norm_of,
    omega_mul,
)

__all__ = [
    "ComplexInterval",
    "I_UNIT",
    "OMEGA",
    "ONE",
    "ONE_SCALAR",
    "ResidueClass",
    "RingInt",
    "RingReal",
    "RingScalar",
    "SQRT2",
    "ZERO",
    "ZERO_SCALAR",
    "class_of",
    "conj",
    "div_sqrt2",
    "divisible_by_sqrt2",
    "evaluate",
    "is_unit_vector",
    "mul",
    "norm_of",
    "norm_squared",
    "omega_mul",
    "sqrt_lower",
    "sqrt_upper",
]
