"""Unit-suffixed quantity parsing and decibel conversions.

Scenario files carry every physical quantity as a string with an explicit
unit suffix ("80 us", "31.34 GHz", "-47 dBm").  ``parse_quantity`` turns such
a string into an SI float and checks its dimension, so a value given in the
wrong kind of unit is rejected instead of silently misread.
"""

from __future__ import annotations

import math
import re

__all__ = [
    "UnitError",
    "parse_quantity",
    "dbm_to_watts",
    "watts_to_dbm",
    "db_to_power_ratio",
    "power_ratio_to_db",
]


class UnitError(ValueError):
    """Raised for a missing, unknown or dimensionally wrong unit suffix."""


# suffix -> (SI factor, dimension)
_UNITS: dict[str, tuple[float, str]] = {
    # time
    "s": (1.0, "time"),
    "ms": (1e-3, "time"),
    "us": (1e-6, "time"),
    "µs": (1e-6, "time"),
    "μs": (1e-6, "time"),
    "ns": (1e-9, "time"),
    "h": (3600.0, "time"),
    "hr": (3600.0, "time"),
    # frequency
    "Hz": (1.0, "frequency"),
    "kHz": (1e3, "frequency"),
    "MHz": (1e6, "frequency"),
    "GHz": (1e9, "frequency"),
    # rates
    "1/s": (1.0, "rate"),
    # length
    "m": (1.0, "length"),
    "cm": (1e-2, "length"),
    "mm": (1e-3, "length"),
    "in": (0.0254, "length"),
    # volume
    "m3": (1.0, "volume"),
    "cm3": (1e-6, "volume"),
    "mm3": (1e-9, "volume"),
    # power
    "W": (1.0, "power"),
    "mW": (1e-3, "power"),
    "uW": (1e-6, "power"),
    "µW": (1e-6, "power"),
    "nW": (1e-9, "power"),
    # temperature
    "K": (1.0, "temperature"),
    "mK": (1e-3, "temperature"),
    # electrical
    "V": (1.0, "voltage"),
    "mV": (1e-3, "voltage"),
    "A": (1.0, "current"),
    "mA": (1e-3, "current"),
    # angles
    "rad": (1.0, "angle"),
    "deg": (math.pi / 180.0, "angle"),
    # compound
    "Hz/K2": (1.0, "curvature"),
    "Hz/K^2": (1.0, "curvature"),
    "V/W": (1.0, "sensitivity"),
    "mV/uW": (1e3, "sensitivity"),
    "mV/µW": (1e3, "sensitivity"),
    "deg/V": (1.0, "actuator"),
    "Hz/deg": (1.0, "pull"),
    "dB/V": (1.0, "am_coefficient"),
    "dB/km": (1.0, "attenuation"),
    "mW/cm2": (1.0, "intensity"),
    "V/rtHz": (1.0, "noise_density"),
    "nV/rtHz": (1e-9, "noise_density"),
    "m-3": (1.0, "number_density"),
    # level-type quantities stay in their log unit
    "dB": (1.0, "db"),
    "dBc": (1.0, "dbc"),
    "dBm": (1.0, "dbm"),
    # concentrations, stored in the unit as given
    "ppm": (1.0, "ppm"),
    "ppb": (1.0, "ppb"),
    "wt%": (1.0, "wt%"),
}

_QUANTITY = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*(\S+)\s*$")


def parse_quantity(text: str | float | int, dimension: str | None = None) -> float:
    """Parse ``"<number> <unit>"`` into an SI float.

    Bare numbers are rejected: every physical field must carry its unit.
    If ``dimension`` is given the unit must belong to it.

    >>> parse_quantity("80 us", "time")
    8e-05
    """
    if not isinstance(text, str):
        raise UnitError(f"unitless value {text!r}; physical quantities need a unit suffix")
    m = _QUANTITY.match(text)
    if m is None:
        raise UnitError(f"cannot parse quantity {text!r}; expected '<number> <unit>'")
    number, unit = float(m.group(1)), m.group(2)
    if unit not in _UNITS:
        raise UnitError(f"unknown unit {unit!r} in {text!r}")
    factor, dim = _UNITS[unit]
    if dimension is not None and dim != dimension:
        raise UnitError(f"{text!r} has dimension {dim!r}, expected {dimension!r}")
    return number * factor


def unit_dimension(unit: str) -> str:
    try:
        return _UNITS[unit][1]
    except KeyError:
        raise UnitError(f"unknown unit {unit!r}") from None


def dbm_to_watts(dbm: float) -> float:
    """0 dBm is exactly 1 mW."""
    return 10.0 ** (dbm / 10.0) * 1e-3


def watts_to_dbm(watts: float) -> float:
    if watts <= 0:
        raise ValueError("power must be positive to express in dBm")
    return 10.0 * math.log10(watts / 1e-3)


def db_to_power_ratio(db: float) -> float:
    return 10.0 ** (db / 10.0)


def power_ratio_to_db(ratio: float) -> float:
    if ratio <= 0:
        raise ValueError("power ratio must be positive")
    return 10.0 * math.log10(ratio)
