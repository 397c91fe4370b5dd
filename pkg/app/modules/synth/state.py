"""Exact state vectors over D[ω]."""

from typing import Iterable, Tuple

import attrs

from app.modules.ring import ONE_SCALAR, ZERO_SCALAR, RingScalar, is_unit_vector


def _check_dim(instance: "StateVec", attribute: attrs.Attribute, value: Tuple[RingScalar, ...]) -> None:
    n = len(value)
    if n < 2 or n & (n - 1):
        raise ValueError(f"state dimension must be a power of two >= 2, got {n}")


@attrs.frozen(slots=True)
class StateVec:
    entries: Tuple[RingScalar, ...] = attrs.field(converter=tuple, validator=_check_dim)

    @classmethod
    def basis(cls, dim: int, index: int = 0) -> "StateVec":
        return cls(ONE_SCALAR if i == index else ZERO_SCALAR for i in range(dim))

    @classmethod
    def of(cls, entries: Iterable[RingScalar]) -> "StateVec":
        """Vector with every entry brought to its least denominator exponent."""
        return cls(e.normalize() for e in entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> RingScalar:
        return self.entries[index]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def normalized(self) -> "StateVec":
        return StateVec.of(self.entries)

    def lde(self) -> int:
        """Least k such that √2^k times every entry lies in Z[ω]."""
        return max(e.lde() for e in self.entries)

    def is_unit(self) -> bool:
        return is_unit_vector(self.entries)

    def with_entries(self, updates: dict) -> "StateVec":
        """Copy with the given index -> value replacements."""
        return StateVec(updates.get(i, e) for i, e in enumerate(self.entries))
