"""Gaussian-integer gcd and the two-square split of primes ≡ 1 mod 4."""

from typing import Tuple

from app.core.exceptions import CompositeModulusError
from app.modules.numtheory.primes import sqrt_minus_one
from app.modules.numtheory.rng import RandomSource

Gaussian = Tuple[int, int]


def _rounddiv(x: int, n: int) -> int:
    """Nearest integer to x/n for n > 0, halves rounded up."""
    return (2 * x + n) // (2 * n)


def gauss_mul(z: Gaussian, w: Gaussian) -> Gaussian:
    return (z[0] * w[0] - z[1] * w[1], z[0] * w[1] + z[1] * w[0])


def gauss_gcd(z: Gaussian, w: Gaussian) -> Gaussian:
    """Euclid's algorithm in Z[i] with rounded quotients."""
    if z == (0, 0) and w == (0, 0):
        raise ValueError("gcd(0, 0) is undefined")
    while w != (0, 0):
        n = w[0] * w[0] + w[1] * w[1]
        # z * conj(w)
        num = (z[0] * w[0] + z[1] * w[1], z[1] * w[0] - z[0] * w[1])
        q = (_rounddiv(num[0], n), _rounddiv(num[1], n))
        qw = gauss_mul(q, w)
        z, w = w, (z[0] - qw[0], z[1] - qw[1])
    return z


def two_squares(p: int, rng: RandomSource) -> Tuple[int, int]:
    """(c, d) with c² + d² = p and c >= d >= 0, for p = 1, 2 or a prime ≡ 1 mod 4.

    Raises:
        CompositeModulusError: p turned out not to be prime
    """
    if p == 1:
        return (1, 0)
    if p == 2:
        return (1, 1)
    t = sqrt_minus_one(p, rng)
    g = gauss_gcd((p, 0), (t, 1))
    c, d = abs(g[0]), abs(g[1])
    if c * c + d * d != p:
        raise CompositeModulusError(f"gcd split of {p} failed the sum check")
    return (max(c, d), min(c, d))
