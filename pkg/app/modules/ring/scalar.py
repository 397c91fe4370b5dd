"""Elements of D[ω]: a Z[ω] numerator over a power of √2."""

from __future__ import annotations

from typing import Iterable, Tuple, Union

import attrs

from app.modules.ring.zomega import (
    ONE,
    ZERO,
    RingInt,
    RingReal,
    conj,
    div_sqrt2,
    divisible_by_sqrt2,
    mul_sqrt2_pow,
    norm_of,
    omega_mul,
)


def _check_exponent(instance: "RingScalar", attribute: attrs.Attribute, value: int) -> None:
    if value < 0:
        raise ValueError(f"denominator exponent must be nonnegative, got {value}")


@attrs.frozen(slots=True, eq=False)
class RingScalar:
    """u / √2^k.

    k is kept lazily: products and sums may leave it larger than necessary and
    `normalize` brings it down to the least denominator exponent.
    """

    u: RingInt
    k: int = attrs.field(default=0, validator=_check_exponent)

    @classmethod
    def from_int(cls, n: int) -> "RingScalar":
        return cls(RingInt.from_int(n), 0)

    @classmethod
    def omega_power(cls, m: int) -> "RingScalar":
        return cls(omega_mul(ONE, m), 0)

    def normalize(self) -> "RingScalar":
        u, k = self.u, self.k
        if u.is_zero():
            return ZERO_SCALAR
        while k > 0 and divisible_by_sqrt2(u):
            u = div_sqrt2(u)
            k -= 1
        if k == self.k:
            return self
        return RingScalar(u, k)

    def lde(self) -> int:
        return self.normalize().k

    def is_zero(self) -> bool:
        return self.u.is_zero()

    def rescaled(self, k: int) -> RingInt:
        """Numerator over √2^k; k must not be below this scalar's own exponent."""
        if k < self.k:
            raise ValueError(f"cannot express exponent {self.k} over √2^{k}")
        return mul_sqrt2_pow(self.u, k - self.k)

    def __add__(self, other: "RingScalar") -> "RingScalar":
        if not isinstance(other, RingScalar):
            return NotImplemented
        k = max(self.k, other.k)
        return RingScalar(self.rescaled(k) + other.rescaled(k), k)

    def __neg__(self) -> "RingScalar":
        return RingScalar(-self.u, self.k)

    def __sub__(self, other: "RingScalar") -> "RingScalar":
        if not isinstance(other, RingScalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["RingScalar", RingInt, int]) -> "RingScalar":
        if isinstance(other, RingScalar):
            return RingScalar(self.u * other.u, self.k + other.k)
        if isinstance(other, (RingInt, int)):
            return RingScalar(self.u * other, self.k)
        return NotImplemented

    __rmul__ = __mul__

    def conj(self) -> "RingScalar":
        return RingScalar(conj(self.u), self.k)

    def omega_mul(self, m: int) -> "RingScalar":
        return RingScalar(omega_mul(self.u, m), self.k)

    def div_sqrt2(self) -> "RingScalar":
        return RingScalar(self.u, self.k + 1)

    def abs_squared(self) -> Tuple[RingReal, int]:
        """|self|² as (numerator, e) meaning numerator / 2^e."""
        return norm_of(self.u), self.k

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingScalar):
            return NotImplemented
        k = max(self.k, other.k)
        return self.rescaled(k) == other.rescaled(k)

    def __hash__(self) -> int:
        n = self.normalize()
        return hash((n.u, n.k))

    def __repr__(self) -> str:
        return f"RingScalar({self.u}, k={self.k})"


ZERO_SCALAR = RingScalar(ZERO, 0)
ONE_SCALAR = RingScalar(ONE, 0)


def norm_squared(entries: Iterable[RingScalar]) -> Tuple[RingReal, int]:
    """Σ|x_j|² as (numerator, e) meaning numerator / 2^e, over the common exponent."""
    entries = list(entries)
    big_k = max((e.k for e in entries), default=0)
    total = RingReal(0, 0)
    for e in entries:
        numerator, k = e.abs_squared()
        total = total + numerator * (1 << (big_k - k))
    return total, big_k


def is_unit_vector(entries: Iterable[RingScalar]) -> bool:
    """Exact test of Σ|x_j|² = 1 as an identity in Z[√2]."""
    entries = list(entries)
    if not entries:
        return False
    total, big_k = norm_squared(entries)
    return total == RingReal(1 << big_k, 0)
