"""Single-qubit unitaries as Λ blocks and Hadamards.

U = e^{iα}·Rz(β)·H·Rz(γ)·H·Rz(δ) and Rz(θ) = e^{-iθ/2}·Λ(e^{iθ}), so up to the
phase e^{iα'} with α' = α - (β+γ+δ)/2 the circuit is Λ(δ), H, Λ(γ), H, Λ(β)
in time order.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

import attrs
from mpmath import MPContext

from app.core.config import settings
from app.core.exceptions import MatrixFormatError, NonUnitaryError
from app.modules.target import AngleSpec, exponent_too_large
from app.schemas.report import EulerDecomposition
from app.utils.json_utils import decimal_string, mpf_fraction

logger = logging.getLogger(__name__)

ANGLE_DIGITS = 60
# decimal rendering of an angle in [0, 2π) is off by less than this
ANGLE_ROUNDING = Fraction(1, 10 ** (ANGLE_DIGITS - 2))


def working_context(bits: int = 0) -> MPContext:
    ctx = MPContext()
    ctx.prec = bits or settings.PRECISION_BITS
    return ctx


def parse_matrix(text: str, ctx: MPContext) -> List[List]:
    """
    Read U00 U01 U10 U11, each as a `re im` pair of decimals.

    Raises:
        MatrixFormatError: not exactly eight decimals
    """
    tokens = []
    for line in text.splitlines():
        tokens.extend(line.split("#", 1)[0].replace(",", " ").split())
    if len(tokens) != 8:
        raise MatrixFormatError(f"expected 8 numbers (4 complex entries), got {len(tokens)}")
    if any(exponent_too_large(t) for t in tokens):
        raise MatrixFormatError("matrix entry exponent out of range")
    try:
        values = [ctx.mpf(Fraction(t).numerator) / Fraction(t).denominator for t in tokens]
    except (ValueError, ZeroDivisionError) as exc:
        raise MatrixFormatError(f"bad matrix entry: {exc}") from exc
    entries = [ctx.mpc(values[2 * n], values[2 * n + 1]) for n in range(4)]
    return [entries[0:2], entries[2:4]]


def check_unitary(u: List[List], tolerance: Fraction, ctx: MPContext) -> None:
    """
    Raises:
        NonUnitaryError: some entry of U†U - I exceeds `tolerance` in modulus
    """
    for i in range(2):
        for j in range(2):
            g = ctx.conj(u[0][i]) * u[0][j] + ctx.conj(u[1][i]) * u[1][j] - (1 if i == j else 0)
            if ctx.fabs(g) > ctx.mpf(tolerance.numerator) / tolerance.denominator:
                raise NonUnitaryError(f"matrix is not unitary: |(U†U - I)[{i}][{j}]| = {ctx.nstr(ctx.fabs(g), 5)}")


def _rz(theta, ctx: MPContext) -> List[List]:
    return [[ctx.expj(-theta / 2), 0], [0, ctx.expj(theta / 2)]]


def _mul(a: List[List], b: List[List]) -> List[List]:
    return [[a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)] for i in range(2)]


def _hadamard(ctx: MPContext) -> List[List]:
    h = 1 / ctx.sqrt(2)
    return [[h, h], [h, -h]]


def _reconstruct(beta, gamma, delta, ctx: MPContext) -> List[List]:
    if gamma == 0:
        return _mul(_rz(beta, ctx), _rz(delta, ctx))
    h = _hadamard(ctx)
    return _mul(_rz(beta, ctx), _mul(h, _mul(_rz(gamma, ctx), _mul(h, _rz(delta, ctx)))))


@attrs.frozen
class EulerAngles:
    alpha: object
    beta: object
    gamma: object
    delta: object
    residual: Fraction

    @property
    def diagonal(self) -> bool:
        return self.gamma == 0

    def phase_offset(self, ctx: MPContext):
        """α' = α - (β+γ+δ)/2 reduced to [0, 2π)."""
        return (self.alpha - (self.beta + self.gamma + self.delta) / 2) % (2 * ctx.pi)

    def as_report(self) -> EulerDecomposition:
        return EulerDecomposition(
            alpha=decimal_string(self.alpha),
            beta=decimal_string(self.beta),
            gamma=decimal_string(self.gamma),
            delta=decimal_string(self.delta),
        )


def _fit(u: List[List], beta, gamma, delta, ctx: MPContext):
    """(α, ‖U - e^{iα}·R(β, γ, δ)‖_F) for the best global phase α."""
    r = _reconstruct(beta, gamma, delta, ctx)
    if ctx.fabs(r[0][0]) >= ctx.fabs(r[1][0]):
        alpha = ctx.arg(u[0][0] / r[0][0])
    else:
        alpha = ctx.arg(u[1][0] / r[1][0])
    alpha = alpha % (2 * ctx.pi)
    phase = ctx.expj(alpha)
    frob = ctx.sqrt(sum(ctx.fabs(u[i][j] - phase * r[i][j]) ** 2 for i in range(2) for j in range(2)))
    return alpha, frob


def euler_decompose(u: List[List], ctx: MPContext) -> EulerAngles:
    """
    Angles with β, δ, α in [0, 2π) and γ in [0, π].

    Diagonal and antidiagonal U fix γ to 0 or π and set δ = 0. Otherwise the
    halved phase sums fix (β, δ) only up to a joint shift by π, which flips
    the sign of γ; the candidate that reconstructs U is kept.
    """
    two_pi = 2 * ctx.pi
    tiny = ctx.ldexp(1, -(ctx.prec // 2))
    a, b = ctx.fabs(u[0][0]), ctx.fabs(u[1][0])
    if b <= tiny:
        gamma = ctx.mpf(0)
        candidates = [(ctx.arg(u[1][1] / u[0][0]), ctx.mpf(0))]
    elif a <= tiny:
        gamma = +ctx.pi
        candidates = [(ctx.arg(u[1][0] / u[0][1]), ctx.mpf(0))]
    else:
        gamma = 2 * ctx.atan2(b, a)
        s, d = ctx.arg(u[1][1] / u[0][0]), ctx.arg(u[1][0] / u[0][1])
        beta, delta = (s + d) / 2, (s - d) / 2
        candidates = [(beta, delta), (beta + ctx.pi, delta + ctx.pi)]

    best = None
    for beta, delta in candidates:
        beta, delta = beta % two_pi, delta % two_pi
        alpha, frob = _fit(u, beta, gamma, delta, ctx)
        if best is None or frob < best[-1]:
            best = (alpha, beta, delta, frob)
    alpha, beta, delta, frob = best

    # floating slack of the reconstruction itself
    residual = mpf_fraction(frob)
    if residual:
        residual += Fraction(1, 1 << (ctx.prec - 8))
    logger.debug("euler angles a=%s b=%s g=%s d=%s residual=%s", alpha, beta, gamma, delta, residual)
    return EulerAngles(alpha, beta, gamma, delta, residual)


def snap_angle(theta, tolerance: Fraction, ctx: MPContext) -> Tuple[AngleSpec, Fraction]:
    """
    Angle spec for θ and the error it introduces.

    θ within `tolerance` of a multiple of π/4 becomes that exact multiple;
    otherwise θ is written as a decimal.
    """
    quarter = ctx.pi / 4
    j = int(ctx.nint(theta / quarter))
    gap = ctx.fabs(theta - j * quarter)
    if gap <= ctx.mpf(tolerance.numerator) / tolerance.denominator:
        err = mpf_fraction(gap) + Fraction(1, 1 << (ctx.prec - 8)) if gap else Fraction(0)
        if err:
            logger.warning("snapped angle %s to %d*pi/4", ctx.nstr(theta, 12), j)
        return AngleSpec.pi_fraction(Fraction(j, 4)), err
    text = decimal_string(theta, ANGLE_DIGITS)
    return AngleSpec(kind="radians", text=text), ANGLE_ROUNDING
