"""Outward-rounded complex intervals with exact dyadic endpoints.

Endpoints are `Fraction`s, so no step of a certification depends on binary
float rounding. Enclosures of √2 come from integer square roots.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Tuple

import attrs

from app.modules.ring.scalar import RingScalar

Bounds = Tuple[Fraction, Fraction]


def _ordered(instance: "ComplexInterval", attribute: attrs.Attribute, value: Fraction) -> None:
    if attribute.name == "re_hi" and value < instance.re_lo:
        raise ValueError("empty real interval")
    if attribute.name == "im_hi" and value < instance.im_lo:
        raise ValueError("empty imaginary interval")


@attrs.frozen(slots=True)
class ComplexInterval:
    """Axis-aligned box [re_lo, re_hi] + i[im_lo, im_hi]."""

    re_lo: Fraction = attrs.field(converter=Fraction)
    re_hi: Fraction = attrs.field(converter=Fraction, validator=_ordered)
    im_lo: Fraction = attrs.field(converter=Fraction)
    im_hi: Fraction = attrs.field(converter=Fraction, validator=_ordered)

    @classmethod
    def exact(cls, re: Fraction, im: Fraction = Fraction(0)) -> "ComplexInterval":
        return cls(re, re, im, im)

    @classmethod
    def from_bounds(cls, re: Bounds, im: Bounds) -> "ComplexInterval":
        return cls(re[0], re[1], im[0], im[1])

    @property
    def re(self) -> Bounds:
        return (self.re_lo, self.re_hi)

    @property
    def im(self) -> Bounds:
        return (self.im_lo, self.im_hi)

    def width(self) -> Fraction:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    def contains(self, re: Fraction, im: Fraction) -> bool:
        return self.re_lo <= re <= self.re_hi and self.im_lo <= im <= self.im_hi

    def __add__(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(
            self.re_lo + other.re_lo,
            self.re_hi + other.re_hi,
            self.im_lo + other.im_lo,
            self.im_hi + other.im_hi,
        )

    def __neg__(self) -> "ComplexInterval":
        return ComplexInterval(-self.re_hi, -self.re_lo, -self.im_hi, -self.im_lo)

    def __sub__(self, other: "ComplexInterval") -> "ComplexInterval":
        return self + (-other)

    def __mul__(self, other: "ComplexInterval") -> "ComplexInterval":
        rr = interval_mul(self.re, other.re)
        ii = interval_mul(self.im, other.im)
        ri = interval_mul(self.re, other.im)
        ir = interval_mul(self.im, other.re)
        return ComplexInterval(rr[0] - ii[1], rr[1] - ii[0], ri[0] + ir[0], ri[1] + ir[1])

    def conj(self) -> "ComplexInterval":
        return ComplexInterval(self.re_lo, self.re_hi, -self.im_hi, -self.im_lo)

    def abs_sq_upper(self) -> Fraction:
        """Upper bound on |z|² over the box."""
        return _abs_max(self.re) ** 2 + _abs_max(self.im) ** 2


def interval_mul(x: Bounds, y: Bounds) -> Bounds:
    products = (x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1])
    return (min(products), max(products))


def _abs_max(x: Bounds) -> Fraction:
    return max(abs(x[0]), abs(x[1]))


def sqrt2_bounds(n: int) -> Bounds:
    """[s/2^n, (s+1)/2^n] ∋ √2."""
    s = isqrt(2 << (2 * n))
    return (Fraction(s, 1 << n), Fraction(s + 1, 1 << n))


def sqrt_upper(x: Fraction, bits: int) -> Fraction:
    """Smallest multiple of 2^-bits that is >= √x (0 for x <= 0)."""
    if x <= 0:
        return Fraction(0)
    scaled = x * (1 << (2 * bits))
    floor_scaled = scaled.numerator // scaled.denominator
    r = isqrt(floor_scaled)
    if r * r == scaled:
        return Fraction(r, 1 << bits)
    return Fraction(r + 1, 1 << bits)


def sqrt_lower(x: Fraction, bits: int) -> Fraction:
    """Largest multiple of 2^-bits that is <= √x (0 for x <= 0)."""
    if x <= 0:
        return Fraction(0)
    scaled = x * (1 << (2 * bits))
    return Fraction(isqrt(scaled.numerator // scaled.denominator), 1 << bits)


def _enclose(p: int, q: int, shift: int, bits: int) -> Bounds:
    """Bounds on (p + q√2) / 2^shift."""
    n = bits + abs(q).bit_length() + 2
    lo, hi = sqrt2_bounds(n)
    q_lo, q_hi = (q * lo, q * hi) if q >= 0 else (q * hi, q * lo)
    scale = Fraction(1, 1 << shift)
    return ((p + q_lo) * scale, (p + q_hi) * scale)


def evaluate(s: RingScalar, precision_bits: int) -> ComplexInterval:
    """Interval certainly containing the complex value of `s`."""
    if precision_bits < 16:
        raise ValueError(f"precision_bits must be at least 16, got {precision_bits}")
    a, b, c, d = s.u.coefs
    m, odd = divmod(s.k, 2)
    if odd:
        # (a√2 + (b-d)) / 2^{m+1} and (c√2 + (b+d)) / 2^{m+1}
        re = _enclose(b - d, a, m + 1, precision_bits)
        im = _enclose(b + d, c, m + 1, precision_bits)
    else:
        re = _enclose(2 * a, b - d, m + 1, precision_bits)
        im = _enclose(2 * c, b + d, m + 1, precision_bits)
    return ComplexInterval.from_bounds(re, im)
