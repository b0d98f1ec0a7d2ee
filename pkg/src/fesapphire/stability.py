"""Frequency-temperature turnover, cryocooler temperature disturbance and
Allan deviation.

Near its turnover the resonator frequency is quadratic in temperature,
``f(T) = f_turnover + curvature * (T - t_turnover)**2``, so a sinusoidal
temperature wobble about the turnover shows up at twice the wobble frequency.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy import signal

__all__ = [
    "ThermalCurve",
    "Waveform",
    "YoYo",
    "FracFreqSeries",
    "BASILE_CURVE",
    "frequency_at_temperature",
    "temperature_series",
    "thermal_lag",
    "adev",
    "thermal_adev_pipeline",
    "read_counter_log",
    "write_adev_table",
]


@dataclass(frozen=True)
class ThermalCurve:
    f_turnover: float
    t_turnover: float
    curvature: float  # Hz/K^2

    def __post_init__(self):
        if not self.t_turnover > 0:
            raise ValueError("turnover temperature must be positive")


# Basile WGH17 signal mode
BASILE_CURVE = ThermalCurve(f_turnover=12.0267126e9, t_turnover=8.72, curvature=-11.85)


class Waveform(str, enum.Enum):
    Sinusoid = "Sinusoid"
    Asymmetric = "Asymmetric"


@dataclass(frozen=True)
class YoYo:
    """Periodic temperature excursion; ``amplitude`` is the peak (not
    peak-to-peak) excursion.  ``duty`` is the rising fraction of each cycle
    for the asymmetric (triangular) waveform."""

    amplitude: float
    cycle_freq: float
    setpoint: float
    waveform: Waveform = Waveform.Sinusoid
    duty: float = 0.5

    def __post_init__(self):
        if self.amplitude < 0:
            raise ValueError("amplitude must be non-negative")
        if not self.cycle_freq > 0:
            raise ValueError("cycle_freq must be positive")
        if not 0 < self.duty < 1:
            raise ValueError("duty must lie in (0, 1)")


@dataclass(frozen=True)
class FracFreqSeries:
    tau0: float
    y: np.ndarray

    def __post_init__(self):
        if not self.tau0 > 0:
            raise ValueError("tau0 must be positive")
        object.__setattr__(self, "y", np.asarray(self.y, dtype=float))
        if self.y.ndim != 1 or self.y.size < 2:
            raise ValueError("need a 1-D series of at least two samples")


def frequency_at_temperature(curve: ThermalCurve, t):
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise ValueError("temperature must be positive")
    out = curve.f_turnover + curve.curvature * (t - curve.t_turnover) ** 2
    return float(out) if out.ndim == 0 else out


def _waveform(yoyo: YoYo, phase: np.ndarray) -> np.ndarray:
    if yoyo.waveform is Waveform.Sinusoid:
        return np.sin(phase)
    # triangle rising for `duty` of each cycle, zero mean, peaks at +-1
    u = np.mod(phase / (2 * np.pi), 1.0)
    d = yoyo.duty
    return np.where(u < d, -1.0 + 2.0 * u / d, 1.0 - 2.0 * (u - d) / (1.0 - d))


def temperature_series(yoyo: YoYo, duration: float, tau0: float) -> tuple[np.ndarray, np.ndarray]:
    """Sample times and temperatures ``setpoint + amplitude * waveform``."""
    if not tau0 > 0 or not duration > 0:
        raise ValueError("duration and tau0 must be positive")
    if not tau0 < 1.0 / (2.0 * yoyo.cycle_freq):
        raise ValueError(f"tau0={tau0} s undersamples a {yoyo.cycle_freq} Hz cycle")
    n = int(round(duration / tau0))
    t = np.arange(n) * tau0
    temp = yoyo.setpoint + yoyo.amplitude * _waveform(yoyo, 2 * np.pi * yoyo.cycle_freq * t)
    return t, temp


def thermal_lag(temp: np.ndarray, tau0: float, time_constant: float | None) -> np.ndarray:
    """First-order low-pass between can sensor and crystal (off when None)."""
    if time_constant is None:
        return np.asarray(temp, dtype=float)
    a = math.exp(-tau0 / time_constant)
    zi = signal.lfilter_zi([1 - a], [1, -a]) * temp[0]
    out, _ = signal.lfilter([1 - a], [1, -a], temp, zi=zi)
    return out


def adev(series: FracFreqSeries, tau: float, overlapping: bool = True) -> float:
    """Allan deviation of fractional-frequency data at averaging time ``tau``.

    ``tau`` must be an integer multiple ``m`` of ``tau0``; the series needs at
    least ``2m + 1`` samples (two second-difference terms).
    """
    ratio = tau / series.tau0
    m = int(round(ratio))
    if m < 1 or abs(ratio - m) > 1e-9 * max(1.0, ratio):
        raise ValueError(f"tau={tau} is not an integer multiple of tau0={series.tau0}")
    y = series.y
    n = y.size
    if n < 2 * m + 1:
        raise ValueError(f"series too short for tau={tau}: need {2 * m + 1} samples, have {n}")
    # phase as time error, x_k = tau0 * sum(y[:k]); the estimator ignores a
    # constant offset, so drop y[0] first to keep cumsum roundoff down
    x = np.concatenate(([0.0], np.cumsum(y - y[0]))) * series.tau0
    step = 1 if overlapping else m
    d2 = x[2 * m :: step] - 2 * x[m:-m:step] + x[: -2 * m : step]
    if d2.size < 1:
        raise ValueError("not enough data")
    return float(np.sqrt(np.mean(d2 * d2) / (2.0 * tau * tau)))


def thermal_adev_pipeline(
    curve: ThermalCurve,
    yoyo: YoYo,
    f_nominal: float,
    duration: float,
    tau_list: Sequence[float],
    tau0: float = 0.01,
    lag_time_constant: float | None = None,
) -> list[tuple[float, float]]:
    """Allan deviation of the thermally driven fractional frequency."""
    _, temp = temperature_series(yoyo, duration, tau0)
    temp = thermal_lag(temp, tau0, lag_time_constant)
    # offset form keeps sub-Hz excursions clear of the 1e10 Hz carrier's rounding
    offset = (curve.f_turnover - f_nominal) + curve.curvature * (temp - curve.t_turnover) ** 2
    y = offset / f_nominal
    series = FracFreqSeries(tau0, y)
    return [(float(tau), adev(series, tau)) for tau in tau_list]


def read_counter_log(stream: Iterable[str], f_nominal: float) -> FracFreqSeries:
    """Two-column ``time,frequency`` counter log -> fractional frequency.

    A header row is skipped if present; samples must be evenly spaced.
    """
    rows = []
    for rec in csv.reader(stream):
        if not rec or rec[0].strip().startswith("#"):
            continue
        try:
            rows.append((float(rec[0]), float(rec[1])))
        except ValueError:
            if rows:
                raise
    if len(rows) < 2:
        raise ValueError("counter log needs at least two samples")
    t, f = np.array(rows).T
    dt = np.diff(t)
    tau0 = float(np.median(dt))
    if np.max(np.abs(dt - tau0)) > 1e-6 * tau0:
        raise ValueError("counter log is not evenly sampled")
    return FracFreqSeries(tau0, (f - f_nominal) / f_nominal)


def write_adev_table(rows: Iterable[tuple[float, float]], stream) -> None:
    writer = csv.writer(stream, lineterminator="\r\n")
    writer.writerow(["tau_s", "adev"])
    for tau, sigma in rows:
        writer.writerow([repr(float(tau)), repr(float(sigma))])
