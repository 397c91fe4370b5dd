"""Randomized four-square decomposition with a brute-force oracle."""

import logging
from math import isqrt
from typing import Optional, Tuple

import attrs

from app.core.config import settings
from app.core.exceptions import CompositeModulusError
from app.modules.numtheory.gaussian import two_squares
from app.modules.numtheory.primes import is_probable_prime
from app.modules.numtheory.rng import RandomSource

logger = logging.getLogger(__name__)

BRUTEFORCE_MAX = 10 ** 6


@attrs.frozen(slots=True)
class QuadSolution:
    """a² + b² + c² + d² = value; trials counts the random samples spent."""

    a: int
    b: int
    c: int
    d: int
    trials: int = attrs.field(default=0, eq=False)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def value(self) -> int:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d


def four_squares_bruteforce(m: int) -> QuadSolution:
    """Greedy enumeration: the largest a, then b, c, d, with a >= b >= c >= d >= 0."""
    if m < 0 or m > BRUTEFORCE_MAX:
        raise ValueError(f"brute force covers 0 <= M <= {BRUTEFORCE_MAX}, got {m}")
    for a in range(isqrt(m), -1, -1):
        rest_a = m - a * a
        for b in range(min(a, isqrt(rest_a)), -1, -1):
            rest_b = rest_a - b * b
            for c in range(min(b, isqrt(rest_b)), -1, -1):
                rest_c = rest_b - c * c
                d = isqrt(rest_c)
                if d <= c and d * d == rest_c:
                    return QuadSolution(a, b, c, d)
    raise AssertionError(f"no four-square decomposition of {m}")  # Lagrange


def _random_with_parity(rng: RandomSource, bound: int, parity: int, modulus: int = 2) -> Optional[int]:
    """Uniform x in [0, bound] with x ≡ parity (mod modulus), or None if there is none."""
    if bound < parity:
        return None
    return parity + modulus * rng.randint(0, (bound - parity) // modulus)


def _sample(m: int, rng: RandomSource) -> Optional[Tuple[int, int, int, int]]:
    """One random attempt on odd-part m; None means draw again."""
    residue = m % 8
    x2 = 0
    if residue == 7:
        x2 = _random_with_parity(rng, isqrt(m), 2, 4)
        if x2 is None:
            return None
        residue = 3

    rest = m - x2 * x2
    if residue == 3:
        x1 = _random_with_parity(rng, isqrt(rest), 1)
        if x1 is None:
            return None
        q = (rest - x1 * x1) // 2
        if q != 1 and not is_probable_prime(q, rng):
            return None
        c, d = two_squares(q, rng)
        return (x1, c + d, abs(c - d), x2)

    # m ≡ 1 (mod 4): both even; m ≡ 2 (mod 4): x1 odd, x2 even
    x1 = _random_with_parity(rng, isqrt(rest), 1 if m % 4 == 2 else 0)
    if x1 is None:
        return None
    x2 = _random_with_parity(rng, isqrt(rest - x1 * x1), 0)
    p = rest - x1 * x1 - x2 * x2
    if p != 1 and not is_probable_prime(p, rng):
        return None
    c, d = two_squares(p, rng)
    return (x1, x2, c, d)


def four_squares(m: int, rng: RandomSource, bruteforce_limit: Optional[int] = None) -> QuadSolution:
    """
    Solve a² + b² + c² + d² = m for any m >= 0.

    Factors of 4 are stripped first and the solution rescaled by 2 per factor.
    Small odd parts go to the brute-force oracle; larger ones loop over random
    trials until one splits into a verified decomposition.

    Args:
        m: Nonnegative integer to decompose
        rng: Randomness for sampling and primality tests
        bruteforce_limit: Enumerate below this value (settings default)

    Returns:
        QuadSolution sorted descending, with the number of random trials used
    """
    if m < 0:
        raise ValueError(f"cannot write negative {m} as a sum of squares")
    limit = settings.FOUR_SQUARES_BRUTEFORCE_LIMIT if bruteforce_limit is None else bruteforce_limit
    if m == 0:
        return QuadSolution(0, 0, 0, 0)

    shift = 0
    odd_part = m
    while odd_part % 4 == 0:
        odd_part //= 4
        shift += 1

    trials = 0
    if odd_part < min(limit, BRUTEFORCE_MAX + 1):
        parts = four_squares_bruteforce(odd_part).as_tuple()
    else:
        while True:
            trials += 1
            try:
                parts = _sample(odd_part, rng)
            except CompositeModulusError as exc:
                logger.warning("primality false positive during four-square solve: %s", exc)
                continue
            if parts is None:
                continue
            if sum(x * x for x in parts) != odd_part:
                logger.warning("discarding four-square candidate %s for %d", parts, odd_part)
                continue
            break

    scaled = sorted((abs(x) << shift for x in parts), reverse=True)
    solution = QuadSolution(*scaled, trials=trials)
    if solution.value != m:
        raise AssertionError(f"four-square solution {solution} does not sum to {m}")
    logger.debug("four_squares(%d) -> %s after %d trials", m, solution.as_tuple(), trials)
    return solution
