"""Three-level zero-field maser: populations, inversion, threshold, output
power, and inference of the active Fe3+ concentration from output power.

Model (every constant lives in :class:`MaserModel` or :class:`MaserConfig`):

* Levels E1 = 0 < E2 = h*f_signal < E3 = h*f_pump, thermal populations by
  Boltzmann statistics.
* Ideal pump saturation equalises levels 1 and 3; the per-ion signal
  inversion is then ``n2 - (n1 + n3)/2``.
* Threshold: the magnetic Q of the inverted spins equals the loaded Q,

      dN_th = hbar / (mu0 * mu12**2 * t2 * Q_L * eta),
      mu12  = amplitude * h * gamma / 2,

  i.e. the peak susceptibility ``mu0*dN*mu12**2*t2/hbar`` times the filling
  factor ``eta`` balances ``1/Q_L``.
* Output: each inverted ion above threshold releases one signal photon per
  ``2*t1``,  ``P = (dN - dN_th) * h * f_signal * V_eff / (2 * t1)``.

The numbers this produces are order-of-magnitude estimates, not a
coefficient-for-coefficient copy of a textbook maser treatment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy import constants, optimize

from .cavity import GAMMA_FREE_SPIN, MU0, WgMode

__all__ = [
    "AL_SITE_DENSITY",
    "ThreeLevelSystem",
    "MaserModel",
    "MaserConfig",
    "ConcentrationEstimate",
    "MasingRange",
    "boltzmann_populations",
    "saturated_inversion",
    "threshold_inversion_density",
    "threshold_ion_density",
    "output_power",
    "infer_concentration",
    "ion_density_for_cutoff",
    "masing_range_check",
    "dark_matter_ratio",
    "ppb_to_ion_density",
    "ion_density_to_ppb",
    "with_ion_density",
]

# Al sites per m^3 in corundum: 3.98 g/cm^3, 101.96 g/mol, 2 Al per Al2O3
AL_SITE_DENSITY = 4.70e28

H = constants.h
HBAR = constants.hbar
K_B = constants.k


@dataclass(frozen=True)
class ThreeLevelSystem:
    f_signal: float  # 1 <-> 2
    f_idler: float  # 2 <-> 3
    f_pump: float  # 1 <-> 3

    def __post_init__(self):
        if not (self.f_signal > 0 and self.f_idler > 0 and self.f_pump > 0):
            raise ValueError("transition frequencies must be positive")
        if abs(self.f_pump - (self.f_signal + self.f_idler)) > 1.0:
            raise ValueError("f_pump must equal f_signal + f_idler within 1 Hz")

    @classmethod
    def from_signal_pump(cls, f_signal: float, f_pump: float) -> "ThreeLevelSystem":
        return cls(f_signal=f_signal, f_idler=f_pump - f_signal, f_pump=f_pump)


@dataclass(frozen=True)
class MaserModel:
    signal_amplitude: float = 1.0  # free-spin units
    filling_factor: float = 1.0

    def __post_init__(self):
        if not (self.signal_amplitude > 0 and 0 < self.filling_factor <= 1):
            raise ValueError("signal_amplitude must be > 0 and filling_factor in (0, 1]")

    @property
    def dipole_moment(self) -> float:
        return self.signal_amplitude * H * GAMMA_FREE_SPIN / 2.0


@dataclass(frozen=True)
class MaserConfig:
    system: ThreeLevelSystem
    signal_mode: WgMode
    temperature: float
    ion_density: float
    t1: float
    t2: float
    participation: float = 1.0
    model: MaserModel = field(default_factory=MaserModel)
    t1_table: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        if not self.temperature > 0:
            raise ValueError("temperature must be positive")
        if self.ion_density < 0:
            raise ValueError("ion_density must be non-negative")
        if not (self.t1 > 0 and self.t2 > 0):
            raise ValueError("t1 and t2 must be positive")
        if not 0 <= self.participation <= 1:
            raise ValueError("participation must lie in [0, 1]")

    def t1_at(self, temperature: float) -> float:
        if self.t1_table is None:
            return self.t1
        ts, t1s = zip(*sorted(self.t1_table))
        return float(np.interp(temperature, ts, t1s))


@dataclass(frozen=True)
class ConcentrationEstimate:
    ppb: float
    ion_density: float
    upper_bound: bool  # True when the output was zero: only a ceiling is known


@dataclass(frozen=True)
class MasingRange:
    temperature: float
    flagged: bool  # no sign change inside [t_min, t_max]; a band edge is returned


def boltzmann_populations(system: ThreeLevelSystem, temperature: float) -> tuple[float, float, float]:
    if not temperature > 0:
        raise ValueError("temperature must be positive")
    beta = H / (K_B * temperature)
    w = np.exp(-beta * np.array([0.0, system.f_signal, system.f_pump]))
    n = w / w.sum()
    return float(n[0]), float(n[1]), float(n[2])


def saturated_inversion(system: ThreeLevelSystem, temperature: float) -> float:
    """Per-ion signal inversion with the pump transition fully saturated.

    Positive only while f_signal < f_pump/2 and kT is not far below
    h*f_signal (for the 12/31 GHz pair it changes sign near 1.5 K).
    """
    n1, n2, n3 = boltzmann_populations(system, temperature)
    return n2 - 0.5 * (n1 + n3)


def threshold_inversion_density(signal_mode: WgMode, t2: float, model: MaserModel = MaserModel()) -> float:
    """Inverted-ion density (m^-3) at which spin gain equals cavity loss."""
    if not t2 > 0:
        raise ValueError("t2 must be positive")
    mu = model.dipole_moment
    return HBAR / (MU0 * mu * mu * t2 * signal_mode.q_loaded * model.filling_factor)


def threshold_ion_density(config: MaserConfig) -> float:
    """Active-ion density needed to reach threshold at the config temperature."""
    dn = saturated_inversion(config.system, config.temperature)
    if dn <= 0:
        return math.inf
    return threshold_inversion_density(config.signal_mode, config.t2, config.model) / dn


def _gain_margin(config: MaserConfig, temperature: float) -> float:
    dn = saturated_inversion(config.system, temperature)
    n_active = config.ion_density * config.participation
    return n_active * dn - threshold_inversion_density(config.signal_mode, config.t2, config.model)


def _photon_energy_rate(config: MaserConfig, temperature: float) -> float:
    # W per unit inverted density above threshold
    return H * config.system.f_signal * config.signal_mode.v_eff / (2.0 * config.t1_at(temperature))


def output_power(config: MaserConfig, pump_saturated: bool = True) -> float:
    """Steady-state signal output (W); zero below threshold or unpumped."""
    if not pump_saturated:
        return 0.0
    margin = _gain_margin(config, config.temperature)
    return max(0.0, margin) * _photon_energy_rate(config, config.temperature)


def ion_density_to_ppb(n: float) -> float:
    return n / AL_SITE_DENSITY * 1e9


def ppb_to_ion_density(ppb: float) -> float:
    return ppb * 1e-9 * AL_SITE_DENSITY


def infer_concentration(p_out: float, config: MaserConfig) -> ConcentrationEstimate:
    """Invert :func:`output_power` for the Fe3+ concentration.

    ``config.ion_density`` is ignored.  Zero output yields the threshold
    concentration flagged as an upper bound.
    """
    if p_out < 0:
        raise ValueError("output power must be non-negative")
    if config.participation == 0:
        raise ValueError("participation is zero; output power does not determine concentration")
    dn = saturated_inversion(config.system, config.temperature)
    if dn <= 0:
        raise ValueError(f"no inversion at {config.temperature} K; concentration not invertible")
    inverted = p_out / _photon_energy_rate(config, config.temperature) + threshold_inversion_density(
        config.signal_mode, config.t2, config.model
    )
    n = inverted / (dn * config.participation)
    return ConcentrationEstimate(ppb=ion_density_to_ppb(n), ion_density=n, upper_bound=p_out == 0)


def ion_density_for_cutoff(config: MaserConfig, t_cutoff: float) -> float:
    """Ion density that puts the highest masing temperature at ``t_cutoff``."""
    dn = saturated_inversion(config.system, t_cutoff)
    if dn <= 0 or config.participation == 0:
        raise ValueError("no inversion at the requested cutoff")
    return threshold_inversion_density(config.signal_mode, config.t2, config.model) / (dn * config.participation)


def masing_range_check(config: MaserConfig, t_min: float, t_max: float, xtol: float = 1e-4) -> MasingRange:
    """Highest temperature in [t_min, t_max] at which the maser still oscillates."""
    if not 0 < t_min < t_max:
        raise ValueError("require 0 < t_min < t_max")
    lo, hi = _gain_margin(config, t_min), _gain_margin(config, t_max)
    if lo > 0 and hi > 0:
        return MasingRange(t_max, flagged=True)
    if lo <= 0 and hi <= 0:
        return MasingRange(t_min, flagged=True)
    if lo <= 0 < hi:
        # inversion rising with T only occurs below the inversion peak
        return MasingRange(t_max, flagged=True)
    t = optimize.bisect(lambda T: _gain_margin(config, T), t_min, t_max, xtol=xtol)
    return MasingRange(float(t), flagged=False)


def dark_matter_ratio(assay_ppb: float, inferred_ppb: float) -> float:
    """Total assayed iron over the maser-active Fe3+ concentration."""
    if not inferred_ppb > 0:
        raise ValueError("inferred concentration must be positive")
    return assay_ppb / inferred_ppb


def with_ion_density(config: MaserConfig, ion_density: float) -> MaserConfig:
    return replace(config, ion_density=ion_density)
