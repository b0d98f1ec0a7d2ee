"""UV power delivered to the sapphire ring through lamp, window and lenses."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from importlib import resources

__all__ = [
    "OpticalElement",
    "OpticalPath",
    "aged_intensity",
    "transmission",
    "delivered_power",
    "aperture_power",
    "fiber_loss",
    "db_to_transmitted_fraction",
    "load_table4_elements",
    "path_from_elements",
    "PEN_RAY_INTENSITY",
]

PEN_RAY_INTENSITY = 4.5  # mW/cm^2 over the 254 nm line at 0.75 in
AGED_FRACTION = 0.70
AGING_HOURS = 2000.0


def _fraction(name: str, x: float) -> None:
    if not 0 <= x < 1:
        raise ValueError(f"{name} must lie in [0, 1)")


@dataclass(frozen=True)
class OpticalElement:
    key: str
    function: str
    make_model: str
    surfaces: int
    bulk_path_mm: float
    notes: str = ""


@dataclass(frozen=True)
class OpticalPath:
    source_intensity: float  # mW/cm^2 at the reference distance
    aging_fraction: float  # fraction of output lost to aging
    surfaces: int
    reflection_loss: float  # per surface
    bulk_path_mm: float
    absorption_per_mm: float
    projected_aperture_diameter: float  # cm

    def __post_init__(self):
        _fraction("aging_fraction", self.aging_fraction)
        _fraction("reflection_loss", self.reflection_loss)
        _fraction("absorption_per_mm", self.absorption_per_mm)
        if not self.projected_aperture_diameter > 0:
            raise ValueError("aperture diameter must be positive")
        if self.surfaces < 0 or self.bulk_path_mm < 0 or self.source_intensity < 0:
            raise ValueError("surfaces, path length and intensity must be non-negative")


def aged_intensity(i0: float, hours: float) -> float:
    """Lamp output after ``hours``: linear fall to 70 % at 2000 h, flat after."""
    if hours < 0:
        raise ValueError("hours must be non-negative")
    frac = 1.0 - (1.0 - AGED_FRACTION) * min(hours, AGING_HOURS) / AGING_HOURS
    return i0 * frac


def transmission(surfaces: int, r: float, path_mm: float, a: float) -> float:
    """Compounded ``(1 - r)**surfaces * (1 - a)**path_mm``."""
    _fraction("r", r)
    _fraction("a", a)
    if surfaces < 0 or path_mm < 0:
        raise ValueError("surfaces and path_mm must be non-negative")
    return (1.0 - r) ** surfaces * (1.0 - a) ** path_mm


def delivered_power(path: OpticalPath) -> float:
    """Power (mW) through the projected aperture after all losses."""
    intensity = path.source_intensity * (1.0 - path.aging_fraction)
    t = transmission(path.surfaces, path.reflection_loss, path.bulk_path_mm, path.absorption_per_mm)
    return aperture_power(path.projected_aperture_diameter, intensity, t)


def aperture_power(diameter_cm: float, intensity: float, transmitted: float) -> float:
    """``pi (d/2)^2 * intensity * transmitted`` in mW for d in cm, intensity in mW/cm^2."""
    if not diameter_cm > 0:
        raise ValueError("diameter must be positive")
    return math.pi * (diameter_cm / 2.0) ** 2 * intensity * transmitted


def fiber_loss(atten_db_per_km: float, length_m: float) -> float:
    if atten_db_per_km < 0 or length_m < 0:
        raise ValueError("attenuation and length must be non-negative")
    return atten_db_per_km * length_m / 1000.0


def db_to_transmitted_fraction(loss_db: float) -> float:
    return 10.0 ** (-loss_db / 10.0)


def load_table4_elements() -> list[OpticalElement]:
    text = resources.files("fesapphire.data").joinpath("uv_optics.csv").read_text(encoding="utf-8")
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        out.append(
            OpticalElement(
                key=row["key"],
                function=row["function"],
                make_model=row["make_model"],
                surfaces=int(row["surfaces"]),
                bulk_path_mm=float(row["bulk_path_mm"]),
                notes=row["notes"],
            )
        )
    return out


def path_from_elements(
    elements: list[OpticalElement],
    source_intensity: float = PEN_RAY_INTENSITY,
    aging_fraction: float = 0.0,
    reflection_loss: float = 0.0337,
    absorption_per_mm: float = 0.005,
    projected_aperture_diameter: float = 0.9525,
) -> OpticalPath:
    """Collapse the transmissive elements into an :class:`OpticalPath`."""
    return OpticalPath(
        source_intensity=source_intensity,
        aging_fraction=aging_fraction,
        surfaces=sum(e.surfaces for e in elements),
        reflection_loss=reflection_loss,
        bulk_path_mm=math.fsum(e.bulk_path_mm for e in elements),
        absorption_per_mm=absorption_per_mm,
        projected_aperture_diameter=projected_aperture_diameter,
    )
