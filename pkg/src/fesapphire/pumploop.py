"""Pump-loop gain budget, DC power budget and mode-selection filters.

Filters are ideal lumped prototypes (Butterworth or equiripple Chebyshev)
mapped onto a narrow passband with the arithmetic detuning

    x = x_3dB * 2 * (f - center) / bandwidth_3db

so the response is exactly symmetric about the centre and the half-power
points fall exactly at ``center +- bandwidth_3db/2``.  Responses are
referenced to the centre, which always sits at ``-insertion_loss_db``.

Loop phase is not modelled: a candidate pump mode oscillates when its net
loop gain clears the threshold, the phase being trimmed by hand.
"""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

from numpy.polynomial import chebyshev

__all__ = [
    "ComponentSpec",
    "BandpassFilter",
    "BOM_COLUMNS",
    "chain_gain",
    "stage_ledger",
    "dc_power_budget",
    "filter_response",
    "select_pump_modes",
    "read_bom",
    "write_bom",
    "load_table2_bom",
]

BOM_COLUMNS = (
    "name",
    "gain_db",
    "volts",
    "amps",
    "filter_center_hz",
    "filter_bw_hz",
    "poles",
    "il_db",
    "shape",
    "comment",
)

_CHEBYSHEV = re.compile(r"^Chebyshev\(([0-9.eE+-]+)\)$")


@dataclass(frozen=True)
class BandpassFilter:
    center: float
    bandwidth_3db: float
    poles: int
    insertion_loss_db: float = 0.0
    shape: str = "Butterworth"  # or "Chebyshev"
    ripple_db: float = 0.1

    def __post_init__(self):
        if not 0 < self.bandwidth_3db < self.center:
            raise ValueError("require 0 < bandwidth_3db < center")
        if not 1 <= self.poles <= 12:
            raise ValueError("poles must be between 1 and 12")
        if self.insertion_loss_db < 0:
            raise ValueError("insertion_loss_db must be non-negative")
        if self.shape not in ("Butterworth", "Chebyshev"):
            raise ValueError(f"unknown filter shape {self.shape!r}")
        if self.shape == "Chebyshev" and not 0 < self.ripple_db < 3:
            raise ValueError("Chebyshev ripple must lie in (0, 3) dB")

    @property
    def shape_label(self) -> str:
        return self.shape if self.shape == "Butterworth" else f"Chebyshev({self.ripple_db!r})"


@dataclass(frozen=True)
class ComponentSpec:
    name: str
    gain_db: float
    volts: float | None = None
    amps: float | None = None
    filter: BandpassFilter | None = None
    comment: str = ""

    def __post_init__(self):
        if not math.isfinite(self.gain_db):
            raise ValueError(f"{self.name}: gain_db must be finite")
        if (self.volts is None) != (self.amps is None):
            raise ValueError(f"{self.name}: give both volts and amps, or neither")
        if self.volts is not None and (self.volts < 0 or self.amps < 0):
            raise ValueError(f"{self.name}: DC supply must be non-negative")

    def gain_at(self, f: float) -> float:
        return self.gain_db if self.filter is None else filter_response(self.filter, f)

    @property
    def dc_power(self) -> float:
        return 0.0 if self.volts is None else self.volts * self.amps


def _prototype_attenuation(filt: BandpassFilter, x: float) -> float:
    """Power attenuation factor (>= 1 at band centre) of the low-pass prototype."""
    n = filt.poles
    if filt.shape == "Butterworth":
        return 1.0 + x ** (2 * n)
    eps2 = 10.0 ** (filt.ripple_db / 10.0) - 1.0
    tn = chebyshev.Chebyshev.basis(n)
    return (1.0 + eps2 * tn(x) ** 2) / (1.0 + eps2 * tn(0.0) ** 2)


def _half_power_abscissa(filt: BandpassFilter) -> float:
    if filt.shape == "Butterworth":
        return 1.0
    n = filt.poles
    eps2 = 10.0 ** (filt.ripple_db / 10.0) - 1.0
    t0 = chebyshev.Chebyshev.basis(n)(0.0)
    tn_sq = (1.0 + 2.0 * eps2 * t0 * t0) / eps2
    return math.cosh(math.acosh(math.sqrt(tn_sq)) / n)


def filter_response(filt: BandpassFilter, f: float) -> float:
    """Transmission in dB (negative) at frequency ``f``."""
    if not f > 0:
        raise ValueError("frequency must be positive")
    x = _half_power_abscissa(filt) * 2.0 * (f - filt.center) / filt.bandwidth_3db
    return -filt.insertion_loss_db - 10.0 * math.log10(_prototype_attenuation(filt, x))


def chain_gain(components: Iterable[ComponentSpec], f: float) -> float:
    """Net loop gain in dB at ``f``; filter stages contribute their response."""
    return math.fsum(c.gain_at(f) for c in components)


def stage_ledger(components: Iterable[ComponentSpec], f: float) -> list[tuple[str, float, float]]:
    """Per-stage ``(name, gain_db, cumulative_db)`` at ``f``."""
    rows, total = [], 0.0
    for c in components:
        g = c.gain_at(f)
        total += g
        rows.append((c.name, g, total))
    return rows


def dc_power_budget(components: Iterable[ComponentSpec]) -> float:
    return math.fsum(c.dc_power for c in components)


def select_pump_modes(
    candidates: Sequence[float], chain: Sequence[ComponentSpec], threshold_db: float = 0.0
) -> list[tuple[float, float]]:
    """Candidate pump frequencies whose loop gain exceeds ``threshold_db``,
    as ``(frequency, gain_db)`` pairs ordered by descending gain."""
    if not any(c.filter is not None for c in chain):
        raise ValueError("mode selection needs at least one filter in the chain")
    scored = [(f, chain_gain(chain, f)) for f in candidates]
    kept = [item for item in scored if item[1] > threshold_db]
    return sorted(kept, key=lambda item: -item[1])


# --- bill of materials files ----------------------------------------------


def _opt_float(text: str) -> float | None:
    return float(text) if text.strip() else None


def _fmt(x) -> str:
    return "" if x is None else repr(x)


def read_bom(stream: Iterable[str]) -> list[ComponentSpec]:
    reader = csv.DictReader(stream)
    missing = set(BOM_COLUMNS[:8]) - set(reader.fieldnames or ())
    if missing:
        raise ValueError(f"bill of materials lacks columns: {sorted(missing)}")
    out = []
    for row in reader:
        filt = None
        if (row.get("filter_center_hz") or "").strip():
            shape, ripple = "Butterworth", 0.1
            m = _CHEBYSHEV.match((row.get("shape") or "").strip())
            if m:
                shape, ripple = "Chebyshev", float(m.group(1))
            elif (row.get("shape") or "Butterworth").strip() not in ("", "Butterworth"):
                raise ValueError(f"{row['name']}: unknown filter shape {row['shape']!r}")
            filt = BandpassFilter(
                center=float(row["filter_center_hz"]),
                bandwidth_3db=float(row["filter_bw_hz"]),
                poles=int(row["poles"]),
                insertion_loss_db=float(row["il_db"]),
                shape=shape,
                ripple_db=ripple,
            )
        out.append(
            ComponentSpec(
                name=row["name"],
                gain_db=float(row["gain_db"]),
                volts=_opt_float(row["volts"]),
                amps=_opt_float(row["amps"]),
                filter=filt,
                comment=row.get("comment") or "",
            )
        )
    return out


def write_bom(components: Iterable[ComponentSpec], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(BOM_COLUMNS)
    for c in components:
        f = c.filter
        writer.writerow(
            [
                c.name,
                _fmt(c.gain_db),
                _fmt(c.volts),
                _fmt(c.amps),
                _fmt(f.center) if f else "",
                _fmt(f.bandwidth_3db) if f else "",
                _fmt(f.poles) if f else "",
                _fmt(f.insertion_loss_db) if f else "",
                f.shape_label if f else "",
                c.comment,
            ]
        )


def load_table2_bom() -> list[ComponentSpec]:
    """Default pump-loop bill of materials."""
    text = resources.files("fesapphire.data").joinpath("pump_loop_bom.csv").read_text(encoding="utf-8")
    return read_bom(io.StringIO(text))
