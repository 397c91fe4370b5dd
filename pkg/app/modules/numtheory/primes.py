"""Miller-Rabin testing and square roots of -1 modulo primes."""

import logging

from app.core.exceptions import CompositeModulusError
from app.modules.numtheory.rng import RandomSource

logger = logging.getLogger(__name__)

MILLER_RABIN_ROUNDS = 40
SQRT_MINUS_ONE_ATTEMPTS = 64

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def is_probable_prime(n: int, rng: RandomSource, rounds: int = MILLER_RABIN_ROUNDS) -> bool:
    """
    Miller-Rabin test with random bases.

    Args:
        n: Integer to test
        rng: Source of the witness bases
        rounds: Number of independent witnesses

    Returns:
        False only if n is certainly composite
    """
    if n < 2:
        return False
    for p in SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        a = rng.randint(2, n - 2)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sqrt_minus_one(p: int, rng: RandomSource, attempts: int = SQRT_MINUS_ONE_ATTEMPTS) -> int:
    """t with t² ≡ -1 (mod p) for a prime p ≡ 1 (mod 4).

    Raises:
        CompositeModulusError: no root found, so p was not prime after all
    """
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 mod 4")
    exponent = (p - 1) // 4
    for _ in range(attempts):
        t = pow(rng.randint(2, p - 2), exponent, p)
        if t * t % p == p - 1:
            return t
    logger.warning("no square root of -1 modulo %d after %d attempts", p, attempts)
    raise CompositeModulusError(f"{p} has no square root of -1; it is composite")
