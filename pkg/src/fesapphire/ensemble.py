"""Spin-ensemble broadening, saturation and the relaxation-time catalog.

Linewidths are full widths in Hz, ``1/(pi*T)`` for a time constant ``T``.
Saturation follows the Bloch-theory power broadening law

    delta_f = sqrt(1 + S**2) / (pi * t2),   S = chi * sqrt(t1 * t2)

with the Rabi frequency ``chi`` in Hz.
"""

from __future__ import annotations

import csv
import enum
import io
import math
import warnings
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, NamedTuple

__all__ = [
    "RelaxationParams",
    "CatalogEntry",
    "Concentration",
    "SaturationState",
    "Property",
    "ModePair",
    "DEFAULT_T2_LOW_POWER",
    "DEFAULT_HOMOGENEOUS_LINEWIDTH",
    "homogeneous_linewidth",
    "scale_t2",
    "saturation",
    "intensity_broadened_linewidth",
    "saturation_state",
    "classify_mode_pair",
    "participation_fraction",
    "load_catalog",
    "read_catalog",
    "write_catalog",
    "catalog_query",
    "wt_percent_to_ppm",
]

# low-power ball-park figures for HEMEX
DEFAULT_T2_LOW_POWER = 80e-6
DEFAULT_HOMOGENEOUS_LINEWIDTH = 4e3

CATALOG_COLUMNS = (
    "property",
    "technique",
    "material",
    "concentration",
    "conc_unit",
    "value",
    "value_unit",
    "uncertainty",
    "source",
)


def _positive(name: str, value: float) -> None:
    if not value > 0 or not math.isfinite(value):
        raise ValueError(f"{name} must be positive and finite, got {value!r}")


class Property(str, enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T2star = "T2star"
    sqrtT1T2 = "sqrtT1T2"
    T2_Al27_frozen_core = "T2_Al27_frozen_core"
    T2_Al27_bulk = "T2_Al27_bulk"
    cross_relax = "cross_relax"
    spectral_diffusion = "spectral_diffusion"
    inhomog_linewidth = "inhomog_linewidth"

    @classmethod
    def parse(cls, value: "Property | str") -> "Property":
        try:
            return cls(value)
        except ValueError:
            valid = ", ".join(p.value for p in cls)
            raise ValueError(f"unknown property {value!r}; valid: {valid}") from None


class ModePair(str, enum.Enum):
    Coexist = "Coexist"
    Compete = "Compete"


class Concentration(NamedTuple):
    """A dopant concentration tagged with its unit ('ppm', 'ppb' or 'wt%')."""

    value: float
    unit: str


@dataclass(frozen=True)
class RelaxationParams:
    t1: float
    t2: float
    t2_star: float | None = None
    t_d: float | None = None

    def __post_init__(self):
        for name in ("t1", "t2", "t2_star", "t_d"):
            v = getattr(self, name)
            if v is not None:
                _positive(name, v)
        if self.t2_star is not None and not (self.t2_star <= self.t2 <= self.t1):
            warnings.warn(
                f"relaxation times out of order: t2*={self.t2_star}, t2={self.t2}, t1={self.t1}",
                stacklevel=2,
            )


@dataclass(frozen=True)
class SaturationState:
    s: float
    chi: float
    delta_f: float


@dataclass(frozen=True)
class CatalogEntry:
    """One literature value.  ``concentration`` keeps the text as printed
    (e.g. ``"100-200"``); ``value`` and ``uncertainty`` are SI (s or Hz)."""

    property: Property
    technique: str
    material: str
    concentration: str
    conc_unit: str
    value: float
    value_unit: str
    uncertainty: float | None
    source: str

    def __post_init__(self):
        _positive("value", self.value)
        if self.uncertainty is not None and self.uncertainty < 0:
            raise ValueError("uncertainty must be non-negative")

    def concentration_bounds(self) -> tuple[float, float] | None:
        if not self.concentration:
            return None
        lo, sep, hi = self.concentration.partition("-")
        return (float(lo), float(hi)) if sep else (float(lo), float(lo))


def homogeneous_linewidth(t2: float) -> float:
    """Full width of a single spin packet, ``1/(pi*t2)``."""
    _positive("t2", t2)
    return 1.0 / (math.pi * t2)


def scale_t2(t2_ref: float, conc_ref: Concentration, conc: Concentration) -> float:
    """Rescale T2 with the square-root concentration law, T2 ~ 1/sqrt(conc).

    Both concentrations must carry the same unit; convert explicitly with
    :func:`wt_percent_to_ppm` first if they do not.
    """
    conc_ref, conc = Concentration(*conc_ref), Concentration(*conc)
    if conc_ref.unit != conc.unit:
        raise ValueError(
            f"concentration units differ ({conc_ref.unit!r} vs {conc.unit!r}); convert explicitly"
        )
    _positive("t2_ref", t2_ref)
    _positive("conc_ref", conc_ref.value)
    _positive("conc", conc.value)
    return t2_ref * math.sqrt(conc_ref.value / conc.value)


def wt_percent_to_ppm(conc: Concentration, molar_mass_ratio: float) -> Concentration:
    """Convert a weight-percent concentration to atomic ppm.

    ``molar_mass_ratio`` is M(host per dopant site) / M(dopant); for Cr or Fe
    on the Al site of sapphire that is M(Al2O3)/2 over M(Cr) or M(Fe).
    """
    conc = Concentration(*conc)
    if conc.unit != "wt%":
        raise ValueError(f"expected a wt% concentration, got {conc.unit!r}")
    _positive("molar_mass_ratio", molar_mass_ratio)
    return Concentration(conc.value * 1e4 * molar_mass_ratio, "ppm")


def saturation(chi: float, t1: float, t2: float) -> float:
    """Degree of saturation ``S = chi * sqrt(t1 * t2)``."""
    if chi < 0:
        raise ValueError("Rabi frequency must be non-negative")
    _positive("t1", t1)
    _positive("t2", t2)
    return chi * math.sqrt(t1 * t2)


def intensity_broadened_linewidth(s: float, t2: float) -> float:
    if s < 0:
        raise ValueError("saturation must be non-negative")
    _positive("t2", t2)
    return math.sqrt(1.0 + s * s) / (math.pi * t2)


def saturation_state(chi: float, t1: float, t2: float, diffusion_factor: float = 1.0) -> SaturationState:
    """Saturation and broadened width for a drive ``chi``.

    ``diffusion_factor`` multiplies the power-broadened excess width; values
    below 1 stand in for spin-diffusion suppression of power broadening.
    """
    if not 0 < diffusion_factor <= 1:
        raise ValueError("diffusion_factor must lie in (0, 1]")
    s = saturation(chi, t1, t2)
    hom = homogeneous_linewidth(t2)
    full = intensity_broadened_linewidth(s, t2)
    return SaturationState(s=s, chi=chi, delta_f=hom + diffusion_factor * (full - hom))


def classify_mode_pair(separation: float, delta_f_eff: float) -> ModePair:
    """Two modes compete for the same inversion when they sit within one
    effective homogeneous linewidth; a tie counts as competing."""
    _positive("separation", separation)
    _positive("delta_f_eff", delta_f_eff)
    return ModePair.Compete if separation <= delta_f_eff else ModePair.Coexist


def participation_fraction(params: RelaxationParams, f_inhom: float, f_hom: float) -> float:
    """Fraction of the inhomogeneous line that feeds one spectral hole.

    A packet of width ``f_hom`` is refilled by spectral diffusion ``t1/t_d``
    times per spin-lattice lifetime, so it draws on

        min(1, (f_hom / f_inhom) * (1 + t1 / t_d))

    of the line.  Reduces to ``f_hom/f_inhom`` without diffusion.
    """
    if params.t_d is None:
        raise ValueError(
            "participation_fraction needs the spectral-diffusion time t_d "
            "(catalog value: catalog_query('spectral_diffusion') -> 14 us)"
        )
    _positive("f_inhom", f_inhom)
    _positive("f_hom", f_hom)
    if f_hom > f_inhom:
        raise ValueError("homogeneous width exceeds the inhomogeneous width")
    return min(1.0, (f_hom / f_inhom) * (1.0 + params.t1 / params.t_d))


# --- catalog -------------------------------------------------------------


def _fmt(x: float | None) -> str:
    return "" if x is None else repr(float(x))


def read_catalog(stream: Iterable[str]) -> list[CatalogEntry]:
    reader = csv.DictReader(stream)
    if tuple(reader.fieldnames or ()) != CATALOG_COLUMNS:
        raise ValueError(f"catalog header must be {','.join(CATALOG_COLUMNS)}")
    entries = []
    for row in reader:
        entries.append(
            CatalogEntry(
                property=Property.parse(row["property"]),
                technique=row["technique"],
                material=row["material"],
                concentration=row["concentration"],
                conc_unit=row["conc_unit"],
                value=float(row["value"]),
                value_unit=row["value_unit"],
                uncertainty=float(row["uncertainty"]) if row["uncertainty"] else None,
                source=row["source"],
            )
        )
    return entries


def write_catalog(entries: Iterable[CatalogEntry], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CATALOG_COLUMNS)
    for e in entries:
        writer.writerow(
            [
                e.property.value,
                e.technique,
                e.material,
                e.concentration,
                e.conc_unit,
                _fmt(e.value),
                e.value_unit,
                _fmt(e.uncertainty),
                e.source,
            ]
        )


def catalog_text() -> str:
    return resources.files("fesapphire.data").joinpath("relaxation_catalog.csv").read_text(encoding="utf-8")


def load_catalog() -> list[CatalogEntry]:
    """The shipped literature catalog of relaxation times and linewidths."""
    return read_catalog(io.StringIO(catalog_text()))


def catalog_query(
    property: Property | str,
    material: str | None = None,
    concentration: Concentration | tuple[float, str] | None = None,
    catalog: list[CatalogEntry] | None = None,
) -> list[CatalogEntry]:
    """Entries matching exactly; nothing is interpolated.

    A concentration matches an entry with the same unit whose printed value
    (or range) contains it.
    """
    prop = Property.parse(property)
    if catalog is None:
        catalog = load_catalog()
    if concentration is not None:
        concentration = Concentration(*concentration)
    out = []
    for e in catalog:
        if e.property is not prop:
            continue
        if material is not None and e.material != material:
            continue
        if concentration is not None:
            bounds = e.concentration_bounds()
            if bounds is None or e.conc_unit != concentration.unit:
                continue
            lo, hi = bounds
            tol = 1e-9 * max(abs(lo), abs(hi))
            if not lo - tol <= concentration.value <= hi + tol:
                continue
        out.append(e)
    return out
