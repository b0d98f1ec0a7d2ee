"""Pound frequency lock of the pump loop.

The interrogating signal is treated as three spectral lines (carrier and the
two phase-modulation sidebands at +-f_if) instead of a sampled 45 kHz
waveform; servo dynamics of interest are a few Hz, so the simulation step is
set by ``sample_rate`` alone.

Reflected field::

    E(t) = c*G(fc) + s*G(fc + f_if)*exp(i W t) - s*G(fc - f_if)*exp(-i W t)

A negative square-law detector (``V = -K |E|^2``) followed by a mixer with
local oscillator ``cos(W t + phase)`` and a low-pass gives

    error = -K * Re[C * exp(-i phase)],
    C = c*s*(conj(G0)*G+ - G0*conj(G-)),

which is odd in the carrier detuning and vanishes on resonance.
"""

from __future__ import annotations

import csv
import math
import re
from dataclasses import dataclass, field, replace

import numpy as np
from scipy import signal

from .stability import ThermalCurve

__all__ = [
    "ResonatorModel",
    "PoundConfig",
    "ServoState",
    "ServoTrace",
    "IF_FREQUENCY_DEFAULT",
    "parse_if_frequency",
    "reflection",
    "pound_error",
    "discriminator_slope",
    "actuator_hz_per_volt",
    "loop_rate",
    "settling_time",
    "step",
    "simulate",
    "error_spectrum",
    "dominant_peak",
    "write_trace",
]

IF_FREQUENCY_DEFAULT = 45189.5


def parse_if_frequency(text: str) -> float:
    """Read the IF in any of its printed spellings.

    ``"45.19 kHz"``, ``"45,189.5 kHz"`` and ``"45.189.47 kHz"`` all occur;
    commas and repeated points are read as European thousand separators, so
    the last two give 45.1895 kHz and 45.18947 kHz.
    """
    m = re.fullmatch(r"\s*([0-9.,]+)\s*(Hz|kHz|MHz)\s*", text)
    if m is None:
        raise ValueError(f"cannot read IF frequency {text!r}")
    digits, unit = m.groups()
    scale = {"Hz": 1.0, "kHz": 1e3, "MHz": 1e6}[unit]
    parts = re.split(r"[.,]", digits)
    # the first separator is the decimal point, later ones are dropped
    value = float(parts[0] + ("." + "".join(parts[1:]) if len(parts) > 1 else ""))
    return value * scale


@dataclass(frozen=True)
class ResonatorModel:
    f_r: float
    q_loaded: float
    beta: float = 1.0

    def __post_init__(self):
        if not (self.f_r > 0 and self.q_loaded > 0):
            raise ValueError("f_r and q_loaded must be positive")
        if self.beta < 0:
            raise ValueError("beta must be non-negative")

    @property
    def linewidth(self) -> float:
        return self.f_r / self.q_loaded

    @property
    def q_unloaded(self) -> float:
        return self.q_loaded * (1.0 + self.beta)


@dataclass(frozen=True)
class PoundConfig:
    f_if: float = IF_FREQUENCY_DEFAULT
    sideband_level_dbc: float = -15.0
    detector_sensitivity: float = 400.0  # V/W
    demod_phase: float = -math.pi / 2  # gives a negative discriminator slope
    actuator_gain: float = 12.0  # deg/V
    residual_am: float = 0.3  # dB/V
    integrator_gain: float = 2e6  # 1/s
    sample_rate: float = 1000.0
    incident_power: float = 1e-6  # W
    pull_hz_per_deg: float | None = None  # None: f_r/(2 Q_L) per radian
    residual_am_enabled: bool = True
    am_leakage: float = 1e-3
    lock_max_temperature: float = 20.0
    detector_noise: float = 0.0  # V/sqrt(Hz)
    seed: int = 0

    def __post_init__(self):
        if not self.sideband_level_dbc < 0:
            raise ValueError("sideband level must be below the carrier")
        if not (self.f_if > 0 and self.sample_rate > 0 and self.incident_power > 0):
            raise ValueError("f_if, sample_rate and incident_power must be positive")
        if self.detector_noise < 0:
            raise ValueError("detector_noise must be non-negative")


@dataclass(frozen=True)
class ServoState:
    v_act: float = 0.0  # integrator output, V
    correction: float = 0.0  # loop frequency pull, Hz


@dataclass
class ServoTrace:
    time: np.ndarray
    error_v: np.ndarray
    loop_freq: np.ndarray
    temperature: np.ndarray
    resonance: np.ndarray
    locked: bool
    lock_time: float | None = None
    meta: dict = field(default_factory=dict)


def _gamma(model: ResonatorModel, detuning: float) -> complex:
    x = 2.0 * model.q_unloaded * detuning / model.f_r
    return complex(model.beta - 1.0, -x) / complex(model.beta + 1.0, x)


def reflection(model: ResonatorModel, f: float) -> complex:
    """One-port reflection coefficient.  With ``Q0 = Q_L(1 + beta)``,
    ``G = (beta - 1 - 2i Q0 d)/(beta + 1 + 2i Q0 d)``, ``d = (f - f_r)/f_r``."""
    return _gamma(model, f - model.f_r)


def _line_amplitudes(cfg: PoundConfig) -> tuple[float, float]:
    r = 10.0 ** (cfg.sideband_level_dbc / 20.0)
    c = math.sqrt(cfg.incident_power / (1.0 + 2.0 * r * r))
    return c, r * c


def _error_at(model: ResonatorModel, cfg: PoundConfig, detuning: float) -> float:
    c, s = _line_amplitudes(cfg)
    g0 = _gamma(model, detuning)
    gp = _gamma(model, detuning + cfg.f_if)
    gm = _gamma(model, detuning - cfg.f_if)
    cross = c * s * (g0.conjugate() * gp - g0 * gm.conjugate())
    lo = complex(math.cos(cfg.demod_phase), -math.sin(cfg.demod_phase))
    return -cfg.detector_sensitivity * (cross * lo).real


def pound_error(model: ResonatorModel, cfg: PoundConfig, f_carrier: float) -> float:
    """Demodulated error voltage for a carrier at ``f_carrier``."""
    return _error_at(model, cfg, f_carrier - model.f_r)


def discriminator_slope(model: ResonatorModel, cfg: PoundConfig) -> float:
    """Error slope at resonance in V/Hz (central difference, +-linewidth/100)."""
    h = model.linewidth / 100.0
    return (_error_at(model, cfg, h) - _error_at(model, cfg, -h)) / (2.0 * h)


def actuator_hz_per_volt(model: ResonatorModel, cfg: PoundConfig) -> float:
    """Loop-frequency pull per volt on the phase shifter.

    A loop phase change dphi moves a resonator-stabilised loop oscillator by
    ``dphi * f_r / (2 Q_L)``; override with ``pull_hz_per_deg``.
    """
    pull = cfg.pull_hz_per_deg
    if pull is None:
        pull = model.f_r / (2.0 * model.q_loaded) * math.pi / 180.0
    return cfg.actuator_gain * pull


def loop_rate(model: ResonatorModel, cfg: PoundConfig) -> float:
    """Closed-loop decay rate (1/s) of a frequency offset."""
    return -cfg.integrator_gain * actuator_hz_per_volt(model, cfg) * discriminator_slope(model, cfg)


def settling_time(model: ResonatorModel, cfg: PoundConfig, fraction: float = 0.01) -> float:
    return math.log(1.0 / fraction) / loop_rate(model, cfg)


def step(state: ServoState, error: float, dt: float, model: ResonatorModel, cfg: PoundConfig) -> ServoState:
    """Advance the integrating servo by ``dt`` with input ``error``."""
    if not dt > 0:
        raise ValueError("dt must be positive")
    v = state.v_act + cfg.integrator_gain * error * dt
    return ServoState(v_act=v, correction=actuator_hz_per_volt(model, cfg) * v)


def _am_offset(cfg: PoundConfig, v_act: float) -> float:
    if not cfg.residual_am_enabled:
        return 0.0
    frac = 10.0 ** (cfg.residual_am * v_act / 10.0) - 1.0
    return -cfg.detector_sensitivity * cfg.incident_power * frac * cfg.am_leakage


def simulate(
    model: ResonatorModel,
    cfg: PoundConfig,
    duration: float,
    temperature: np.ndarray | None = None,
    curve: ThermalCurve | None = None,
    initial_offset: float = 0.0,
) -> ServoTrace:
    """Run the locked loop for ``duration`` seconds.

    ``temperature`` (sampled at ``cfg.sample_rate``) pulls the resonance by
    ``curve.curvature * (T - curve.t_turnover)**2`` about ``model.f_r``.
    ``initial_offset`` is the free-running loop detuning in Hz.
    """
    if not duration > 0:
        raise ValueError("duration must be positive")
    dt = 1.0 / cfg.sample_rate
    n = int(round(duration * cfg.sample_rate))
    if temperature is None:
        t_ref = curve.t_turnover if curve is not None else 0.0
        temperature = np.full(n, t_ref)
    temperature = np.asarray(temperature, dtype=float)
    if temperature.size < n:
        raise ValueError("temperature series shorter than the requested duration")
    temperature = temperature[:n]
    if curve is None:
        fr_offset = np.zeros(n)
    else:
        fr_offset = curve.curvature * (temperature - curve.t_turnover) ** 2

    rng = np.random.default_rng(cfg.seed)
    noise = (
        rng.normal(0.0, cfg.detector_noise * math.sqrt(cfg.sample_rate / 2.0), n)
        if cfg.detector_noise > 0
        else np.zeros(n)
    )
    gate = temperature < cfg.lock_max_temperature
    hz_per_volt = actuator_hz_per_volt(model, cfg)

    err = np.empty(n)
    loop_offset = np.empty(n)
    v_act = 0.0
    for k in range(n):
        offset = initial_offset + hz_per_volt * v_act
        loop_offset[k] = offset
        e = _error_at(model, cfg, offset - fr_offset[k]) + _am_offset(cfg, v_act) + noise[k]
        err[k] = e
        if gate[k]:
            v_act += cfg.integrator_gain * e * dt

    within = np.abs(loop_offset - fr_offset) < model.linewidth / 10.0
    outside = np.flatnonzero(~within)
    first_locked = 0 if outside.size == 0 else int(outside[-1]) + 1
    locked = first_locked < n
    time = np.arange(n) * dt
    return ServoTrace(
        time=time,
        error_v=err,
        loop_freq=model.f_r + loop_offset,
        temperature=temperature,
        resonance=model.f_r + fr_offset,
        locked=locked,
        lock_time=float(time[first_locked]) if locked else None,
        meta={"loop_rate": loop_rate(model, cfg), "hz_per_volt": hz_per_volt},
    )


def error_spectrum(trace: ServoTrace) -> tuple[np.ndarray, np.ndarray]:
    """One-sided periodogram of the error voltage (mean removed)."""
    fs = 1.0 / (trace.time[1] - trace.time[0])
    return signal.periodogram(trace.error_v, fs=fs, detrend="constant", window="hann")


def dominant_peak(trace: ServoTrace, f_min: float = 0.5, f_max: float | None = None) -> tuple[float, float]:
    """Frequency of the strongest error line and its SNR in dB over the
    median periodogram level in ``[f_min, f_max]``."""
    f, p = error_spectrum(trace)
    band = (f >= f_min) & (f <= (f_max if f_max is not None else f[-1]))
    fb, pb = f[band], p[band]
    i = int(np.argmax(pb))
    return float(fb[i]), float(10.0 * np.log10(pb[i] / np.median(pb)))


def write_trace(trace: ServoTrace, stream) -> None:
    writer = csv.writer(stream, lineterminator="\r\n")
    writer.writerow(["time_s", "error_v", "loop_freq_hz", "temperature_k"])
    for row in zip(trace.time, trace.error_v, trace.loop_freq, trace.temperature):
        writer.writerow([repr(float(v)) for v in row])


def with_resonance(model: ResonatorModel, f_r: float) -> ResonatorModel:
    return replace(model, f_r=f_r)
