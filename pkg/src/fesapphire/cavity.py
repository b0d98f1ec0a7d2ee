"""Whispering-gallery mode field amplitude and Rabi frequency.

The circulating field of a mode storing ``Q*P`` is estimated as

    H = sqrt(Q * P / (mu0 * f0 * V_eff))

and the Rabi frequency as ``chi = (gamma/2) * amplitude * field`` with the
free-spin factor gamma = 28 GHz/T.  Feeding that factor the flux density B
(``Convention.SI_Tesla``) is dimensionally consistent and gives ~2 MHz for the
reference pump numbers.  Feeding it H in A/m (``Convention.PaperLiteral``)
reproduces the ~1 THz ball-park figure often quoted for the same numbers.
Both are kept; reports always show which one was used.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

MU0 = 4e-7 * math.pi
GAMMA_FREE_SPIN = 28e9  # Hz per tesla

__all__ = [
    "MU0",
    "GAMMA_FREE_SPIN",
    "WgMode",
    "Transition",
    "Field",
    "Convention",
    "CONVENTION_NOTE",
    "field_amplitude",
    "rabi_frequency",
    "q_from_linewidth",
    "linewidth_from_q",
]

CONVENTION_NOTE = (
    "PaperLiteral inserts H in A/m into the 28 GHz/T factor; "
    "SI_Tesla uses B = mu0*H and is dimensionally consistent"
)


class Convention(str, enum.Enum):
    SI_Tesla = "SI_Tesla"
    PaperLiteral = "PaperLiteral"


@dataclass(frozen=True)
class WgMode:
    f0: float
    q_loaded: float
    v_eff: float
    coupling_beta: float | None = None

    def __post_init__(self):
        for name in ("f0", "q_loaded", "v_eff"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.coupling_beta is not None and self.coupling_beta < 0:
            raise ValueError("coupling_beta must be non-negative")

    @property
    def linewidth(self) -> float:
        return self.f0 / self.q_loaded


@dataclass(frozen=True)
class Transition:
    amplitude: float  # sqrt(sigma sigma*) in free-spin units
    f_transition: float

    def __post_init__(self):
        if self.amplitude < 0:
            raise ValueError("transition amplitude must be non-negative")
        if self.amplitude > 1:
            warnings.warn(f"transition amplitude {self.amplitude} exceeds 1 free-spin unit", stacklevel=2)


class Field(NamedTuple):
    h: float  # A/m
    b: float  # T


def field_amplitude(mode: WgMode, p_circ: float) -> Field:
    """Magnetic field amplitude of ``mode`` driven with power ``p_circ`` (W)."""
    if p_circ < 0:
        raise ValueError("power must be non-negative")
    h = math.sqrt(mode.q_loaded * p_circ / (MU0 * mode.f0 * mode.v_eff))
    return Field(h=h, b=MU0 * h)


def rabi_frequency(tr: Transition, field: Field, convention: Convention | str = Convention.SI_Tesla) -> float:
    convention = Convention(convention)
    component = field.b if convention is Convention.SI_Tesla else field.h
    return 0.5 * GAMMA_FREE_SPIN * tr.amplitude * component


def q_from_linewidth(f: float, linewidth: float) -> float:
    if not (f > 0 and linewidth > 0):
        raise ValueError("frequency and linewidth must be positive")
    return f / linewidth


def linewidth_from_q(f: float, q: float) -> float:
    if not (f > 0 and q > 0):
        raise ValueError("frequency and Q must be positive")
    return f / q
