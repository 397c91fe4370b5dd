from app.modules.numtheory.four_squares import QuadSolution, four_squares, four_squares_bruteforce
from app.modules.numtheory.gaussian import gauss_gcd, two_squares
from app.modules.numtheory.primes import is_probable_prime, sqrt_minus_one
from app.modules.numtheory.rng import RandomSource

__all__ = [
    "QuadSolution",
    "RandomSource",
    "four_squares",
    "four_squares_bruteforce",
    "gauss_gcd",
    "is_probable_prime",
    "sqrt_minus_one",
    "two_squares",
]
