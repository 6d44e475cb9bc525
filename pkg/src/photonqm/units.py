"""Unit records. Computations run in natural units; SI factors enter only at I/O."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import scipy.constants as const


@dataclass(frozen=True)
class Units:
    hbar: float = 1.0
    eps0: float = 1.0
    c: float = 1.0

    @classmethod
    def natural(cls) -> "Units":
        return cls()

    @classmethod
    def si(cls) -> "Units":
        return cls(const.hbar, const.epsilon_0, const.c)

    @property
    def potential_scale(self) -> float:
        """``sqrt(hbar / eps0)`` multiplying the synthesized potential and field."""
        return (self.hbar / self.eps0) ** 0.5

    @property
    def mu0(self) -> float:
        return 1.0 / (self.eps0 * self.c**2)

    def as_dict(self) -> dict:
        return asdict(self)
