"""Two-level generators iX, T^{-m}(iH)T^m and W^l acting on a pair of basis slots."""

from typing import Literal, Tuple

import attrs

from app.modules.ring import ONE, ZERO, RingScalar, omega_mul
from app.modules.synth.state import StateVec

GateKind = Literal["IX", "HTM", "WPOW"]
Block = Tuple[Tuple[RingScalar, RingScalar], Tuple[RingScalar, RingScalar]]

_ZERO = RingScalar(ZERO, 0)


def _omega(m: int, k: int = 0) -> RingScalar:
    return RingScalar(omega_mul(ONE, m), k)


def _check_indices(instance: "TwoLevelGate", attribute: attrs.Attribute, value: int) -> None:
    if not 0 <= instance.i < instance.j:
        raise ValueError(f"two-level gate needs 0 <= i < j, got ({instance.i}, {instance.j})")


def _check_param(instance: "TwoLevelGate", attribute: attrs.Attribute, value: int) -> None:
    if not 0 <= value < 8:
        raise ValueError(f"gate parameter must lie in 0..7, got {value}")
    if instance.kind == "IX" and value != 0:
        raise ValueError("IX takes no parameter")


@attrs.frozen(slots=True)
class TwoLevelGate:
    """
    A generator on slots (i, j), identity elsewhere.

    IX is [[0, i], [i, 0]], HTM(m) is (i/√2)·[[1, ω^m], [ω^-m, -1]] and
    WPOW(l) is diag(ω^l, ω^-l). `inverse` selects the adjoint.
    """

    kind: GateKind = attrs.field(validator=attrs.validators.in_(("IX", "HTM", "WPOW")))
    i: int
    j: int = attrs.field(validator=_check_indices)
    param: int = attrs.field(default=0, validator=_check_param)
    inverse: bool = False

    @classmethod
    def ix(cls, i: int, j: int) -> "TwoLevelGate":
        return cls("IX", i, j)

    @classmethod
    def htm(cls, m: int, i: int, j: int) -> "TwoLevelGate":
        return cls("HTM", i, j, m % 8)

    @classmethod
    def wpow(cls, l: int, i: int, j: int) -> "TwoLevelGate":
        return cls("WPOW", i, j, l % 8)

    def adjoint(self) -> "TwoLevelGate":
        return attrs.evolve(self, inverse=not self.inverse)

    def block(self) -> Block:
        """The 2x2 action on (slot i, slot j)."""
        if self.kind == "IX":
            b = ((_ZERO, _omega(2)), (_omega(2), _ZERO))
        elif self.kind == "HTM":
            m = self.param
            b = ((_omega(2, 1), _omega(m + 2, 1)), (_omega(2 - m, 1), _omega(6, 1)))
        else:
            b = ((_omega(self.param), _ZERO), (_ZERO, _omega(-self.param)))
        if self.inverse:
            b = ((b[0][0].conj(), b[1][0].conj()), (b[0][1].conj(), b[1][1].conj()))
        return b

    def __str__(self) -> str:
        name = self.kind if self.kind == "IX" else f"{self.kind}({self.param})"
        dagger = "†" if self.inverse else ""
        return f"{name}{dagger}[{self.i},{self.j}]"


def apply_two_level(g: TwoLevelGate, v: StateVec) -> StateVec:
    """Exact action of g on v."""
    if g.j >= v.dim:
        raise ValueError(f"{g} does not fit a vector of dimension {v.dim}")
    (b00, b01), (b10, b11) = g.block()
    x, y = v[g.i], v[g.j]
    return v.with_entries(
        {
            g.i: (b00 * x + b01 * y).normalize(),
            g.j: (b10 * x + b11 * y).normalize(),
        }
    )


def apply_sequence(gates, v: StateVec) -> StateVec:
    for g in gates:
        v = apply_two_level(g, v)
    return v
