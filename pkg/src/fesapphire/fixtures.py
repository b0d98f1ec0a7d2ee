"""Resonator fixtures (Léonard and Basile) shipped with the package."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .cavity import WgMode, q_from_linewidth
from .maser import ThreeLevelSystem

__all__ = ["FixtureError", "Resonator", "load_resonators", "get_resonator", "DEFAULT_SIGNAL_V_EFF"]

# no measured signal-mode volume is available; same order as the pump-mode estimate
DEFAULT_SIGNAL_V_EFF = 5e-6


class FixtureError(LookupError):
    pass


@dataclass(frozen=True)
class Resonator:
    key: str
    name: str
    diameter_mm: float
    height_mm: float
    annealing: str
    pump_freq_hz: float
    signal_freqs_hz: tuple[float, ...]
    linewidths_hz: tuple[float, ...]
    output_dbm: tuple[float, ...]
    flags: tuple[str, ...] = ()

    @property
    def tag(self) -> str:
        return f"[resonators:{self.key}]"

    def signal_mode(self, index: int = 0, v_eff: float = DEFAULT_SIGNAL_V_EFF) -> WgMode:
        f = self.signal_freqs_hz[index]
        return WgMode(f0=f, q_loaded=q_from_linewidth(f, self.linewidths_hz[index]), v_eff=v_eff)

    def three_level_system(self, index: int = 0) -> ThreeLevelSystem:
        return ThreeLevelSystem.from_signal_pump(self.signal_freqs_hz[index], self.pump_freq_hz)


def load_resonators() -> dict[str, Resonator]:
    raw = json.loads(resources.files("fesapphire.data").joinpath("resonators.json").read_text(encoding="utf-8"))
    out = {}
    for key, d in raw.items():
        out[key] = Resonator(
            key=key,
            name=d["name"],
            diameter_mm=d["diameter_mm"],
            height_mm=d["height_mm"],
            annealing=d["annealing"],
            pump_freq_hz=d["pump_freq_hz"],
            signal_freqs_hz=tuple(d["signal_freqs_hz"]),
            linewidths_hz=tuple(d["linewidths_hz"]),
            output_dbm=tuple(d["output_dbm"]),
            flags=tuple(d.get("flags", ())),
        )
    return out


def get_resonator(key: str) -> Resonator:
    resonators = load_resonators()
    try:
        return resonators[key.lower()]
    except KeyError:
        raise FixtureError(f"unknown resonator fixture {key!r}; available: {', '.join(sorted(resonators))}") from None
