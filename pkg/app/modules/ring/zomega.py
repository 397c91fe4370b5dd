"""Exact arithmetic in Z[ω] (ω = e^{iπ/4}) and Z[√2].

Elements of Z[ω] are stored in the basis {1, ω, ω², ω³} with ω⁴ = −1, so the
representation is unique and structural equality is value equality. i is ω²
and √2 is ω − ω³.
"""

from __future__ import annotations

from typing import Tuple, Union

import attrs


def _to_int(value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"ring coefficients must be int, got {type(value).__name__}")
    return value


@attrs.frozen(slots=True)
class ResidueClass:
    """Residue of a Z[ω] element modulo √2: r1 = (a+c) mod 2, r2 = (b+d) mod 2."""

    r1: int
    r2: int

    def __xor__(self, other: "ResidueClass") -> "ResidueClass":
        return ResidueClass(self.r1 ^ other.r1, self.r2 ^ other.r2)

    @property
    def is_zero(self) -> bool:
        return self.r1 == 0 and self.r2 == 0

    def as_tuple(self) -> Tuple[int, int]:
        return (self.r1, self.r2)


@attrs.frozen(slots=True)
class RingReal:
    """x + y√2 with integer x, y."""

    x: int = attrs.field(converter=_to_int)
    y: int = attrs.field(default=0, converter=_to_int)

    def __add__(self, other: Union["RingReal", int]) -> "RingReal":
        if isinstance(other, int):
            other = RingReal(other)
        if not isinstance(other, RingReal):
            return NotImplemented
        return RingReal(self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __neg__(self) -> "RingReal":
        return RingReal(-self.x, -self.y)

    def __sub__(self, other: Union["RingReal", int]) -> "RingReal":
        if isinstance(other, int):
            other = RingReal(other)
        if not isinstance(other, RingReal):
            return NotImplemented
        return RingReal(self.x - other.x, self.y - other.y)

    def __mul__(self, other: Union["RingReal", int]) -> "RingReal":
        if isinstance(other, int):
            return RingReal(self.x * other, self.y * other)
        if not isinstance(other, RingReal):
            return NotImplemented
        return RingReal(
            self.x * other.x + 2 * self.y * other.y,
            self.x * other.y + self.y * other.x,
        )

    __rmul__ = __mul__

    def sign(self) -> int:
        """Exact sign of x + y√2."""
        x, y = self.x, self.y
        if x >= 0 and y >= 0:
            return 0 if x == 0 and y == 0 else 1
        if x <= 0 and y <= 0:
            return -1
        # opposite signs: compare x² with 2y²
        if x > 0:
            return 1 if x * x > 2 * y * y else -1
        return 1 if 2 * y * y > x * x else -1

    def __lt__(self, other: Union["RingReal", int]) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Union["RingReal", int]) -> bool:
        return (self - other).sign() <= 0

    def __str__(self) -> str:
        return f"{self.x}{self.y:+}√2"


@attrs.frozen(slots=True)
class RingInt:
    """a + bω + cω² + dω³ with arbitrary-precision integer coefficients."""

    a: int = attrs.field(default=0, converter=_to_int)
    b: int = attrs.field(default=0, converter=_to_int)
    c: int = attrs.field(default=0, converter=_to_int)
    d: int = attrs.field(default=0, converter=_to_int)

    @classmethod
    def from_int(cls, n: int) -> "RingInt":
        return cls(n, 0, 0, 0)

    @classmethod
    def from_gaussian(cls, re: int, im: int) -> "RingInt":
        return cls(re, 0, im, 0)

    @property
    def coefs(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def __add__(self, other: Union["RingInt", int]) -> "RingInt":
        if isinstance(other, int):
            other = RingInt.from_int(other)
        if not isinstance(other, RingInt):
            return NotImplemented
        return RingInt(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self) -> "RingInt":
        return RingInt(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: Union["RingInt", int]) -> "RingInt":
        if isinstance(other, int):
            other = RingInt.from_int(other)
        if not isinstance(other, RingInt):
            return NotImplemented
        return RingInt(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __rsub__(self, other: int) -> "RingInt":
        return (-self) + other

    def __mul__(self, other: Union["RingInt", int]) -> "RingInt":
        if isinstance(other, int):
            return RingInt(self.a * other, self.b * other, self.c * other, self.d * other)
        if not isinstance(other, RingInt):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c}, {self.d})"


ZERO = RingInt(0, 0, 0, 0)
ONE = RingInt(1, 0, 0, 0)
OMEGA = RingInt(0, 1, 0, 0)
I_UNIT = RingInt(0, 0, 1, 0)
SQRT2 = RingInt(0, 1, 0, -1)


def mul(z: RingInt, w: RingInt) -> RingInt:
    """Product in Z[ω], reducing with ω⁴ = −1."""
    x = z.coefs
    y = w.coefs
    out = [0, 0, 0, 0]
    for i in range(4):
        if x[i] == 0:
            continue
        for j in range(4):
            if i + j >= 4:
                out[i + j - 4] -= x[i] * y[j]
            else:
                out[i + j] += x[i] * y[j]
    return RingInt(*out)


def conj(z: RingInt) -> RingInt:
    return RingInt(z.a, -z.d, -z.c, -z.b)


def norm_of(z: RingInt) -> RingReal:
    """|z|² = z·conj(z) as x + y√2."""
    a, b, c, d = z.coefs
    return RingReal(a * a + b * b + c * c + d * d, a * b + b * c + c * d - a * d)


def class_of(z: RingInt) -> ResidueClass:
    return ResidueClass((z.a + z.c) % 2, (z.b + z.d) % 2)


def divisible_by_sqrt2(z: RingInt) -> bool:
    return (z.a - z.c) % 2 == 0 and (z.b - z.d) % 2 == 0


def div_sqrt2(z: RingInt) -> RingInt:
    """y with √2·y = z."""
    if not divisible_by_sqrt2(z):
        raise ValueError(f"{z} is not divisible by √2")
    a, b, c, d = z.coefs
    return RingInt((b - d) // 2, (a + c) // 2, (b + d) // 2, (c - a) // 2)


def divisible_by_delta(z: RingInt) -> bool:
    """Divisibility by δ = 1 + ω, whose square is √2 up to a unit."""
    return (z.a + z.b + z.c + z.d) % 2 == 0


def divisible_by_two(z: RingInt) -> bool:
    return z.a % 2 == 0 and z.b % 2 == 0 and z.c % 2 == 0 and z.d % 2 == 0


def omega_mul(z: RingInt, m: int) -> RingInt:
    """ω^m·z for any integer m."""
    a, b, c, d = z.coefs
    for _ in range(m % 8):
        a, b, c, d = -d, a, b, c
    return RingInt(a, b, c, d)


def mul_sqrt2_pow(z: RingInt, n: int) -> RingInt:
    """√2^n·z for n >= 0."""
    if n < 0:
        raise ValueError("negative power of √2")
    scaled = z * (1 << (n // 2)) if n >= 2 else z
    if n % 2:
        scaled = mul(scaled, SQRT2)
    return scaled
