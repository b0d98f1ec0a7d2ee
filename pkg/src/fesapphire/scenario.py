"""Scenario files: TOML with a unit suffix on every physical quantity.

Example::

    [resonator]
    fixture = "basile"

    [ensemble]
    t2 = "80 us"

    [stability]
    setpoint = "8.72 K"
    amplitude = "0.1 K"

Sections and keys not listed in ``SCHEMA`` are rejected, as are bare numbers
for physical fields.  Missing entries take the defaults below.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .units import UnitError, parse_quantity

__all__ = ["ScenarioError", "Scenario", "SCHEMA", "load_scenario", "parse_scenario", "builtin_scenario"]


class ScenarioError(ValueError):
    pass


# kind is a dimension name for parse_quantity, or one of
# "number", "int", "str", "bool", "list:<dimension>"
SCHEMA: dict[str, dict[str, tuple[str, Any]]] = {
    "resonator": {
        "fixture": ("str", "basile"),
        "signal_index": ("int", 0),
        "signal_v_eff": ("volume", "5 cm3"),
    },
    "ensemble": {
        "t1": ("time", "7 ms"),
        "t2": ("time", "80 us"),
        "t2_star": ("time", "10 ns"),
        "t_d": ("time", "14 us"),
        "diffusion_factor": ("number", 1.0),
        "coexist_separation": ("frequency", "8 MHz"),
        "compete_separation": ("frequency", "10 kHz"),
    },
    "cavity": {
        "pump_power": ("power", "1 mW"),
        "q_loaded": ("number", 1e9),
        "v_eff": ("volume", "5 cm3"),
        "f0": ("frequency", "31.3 GHz"),
        "amplitude": ("number", 0.05),
        "convention": ("str", "SI_Tesla"),
    },
    "maser": {
        "temperature": ("temperature", "8.72 K"),
        "signal_amplitude": ("number", 1.0),
        "filling_factor": ("number", 1.0),
        "output": ("dbm", "-47 dBm"),
        "use_fixture_output": ("bool", True),
        "assay": ("ppm", "2 ppm"),
        "t_min": ("temperature", "4 K"),
        "t_max": ("temperature", "300 K"),
        "cutoff": ("temperature", "29.5 K"),
    },
    "pumploop": {
        "bom": ("str", "table2"),
        "threshold": ("db", "0 dB"),
        "candidates": ("list:frequency", []),
    },
    "servo": {
        "q_loaded": ("number", 6e7),
        "beta": ("number", 1.0),
        "f_if": ("frequency", "45.1895 kHz"),
        "sideband_level": ("dbc", "-15 dBc"),
        "detector_sensitivity": ("sensitivity", "0.4 mV/uW"),
        "demod_phase": ("angle", "-90 deg"),
        "actuator_gain": ("actuator", "12 deg/V"),
        "residual_am": ("am_coefficient", "0.3 dB/V"),
        "residual_am_enabled": ("bool", True),
        "integrator_gain": ("rate", "2e6 1/s"),
        "sample_rate": ("frequency", "1 kHz"),
        "incident_power": ("power", "1 uW"),
        "detector_noise": ("noise_density", "0.8 nV/rtHz"),
        "seed": ("int", 0),
        "duration": ("time", "20 s"),
        "initial_offset": ("frequency", "0 Hz"),
        "lock_max_temperature": ("temperature", "20 K"),
    },
    "stability": {
        "f_turnover": ("frequency", "12.0267126 GHz"),
        "t_turnover": ("temperature", "8.72 K"),
        "curvature": ("curvature", "-11.85 Hz/K2"),
        "setpoint": ("temperature", "8.72 K"),
        "amplitude": ("temperature", "0.1 K"),
        "cycle_freq": ("frequency", "1.4 Hz"),
        "waveform": ("str", "Sinusoid"),
        "duty": ("number", 0.5),
        "f_nominal": ("frequency", "12.0267126 GHz"),
        "duration": ("time", "400 s"),
        "tau0": ("time", "10 ms"),
        "lag_time_constant": ("time", None),
        "tau": ("list:time", ["1 s", "10 s", "100 s"]),
    },
    "optics": {
        "source_intensity": ("intensity", "4.5 mW/cm2"),
        "lamp_hours": ("time", "2000 h"),
        "reflection_loss": ("number", 0.0337),
        "absorption_per_mm": ("number", 0.005),
        "aperture_diameter": ("length", "9.525 mm"),
        "fiber_attenuation": ("attenuation", "700 dB/km"),
        "fiber_length": ("length", "1.2 m"),
    },
}


# dimensions whose values must be strictly positive
_POSITIVE = {"time", "temperature", "volume", "power", "length", "intensity", "rate", "sensitivity", "frequency"}
_EXEMPT_KEYS = {("servo", "initial_offset"), ("optics", "lamp_hours"), ("optics", "fiber_length")}


def _convert(section: str, key: str, kind: str, raw: Any) -> Any:
    where = f"[{section}].{key}"
    if raw is None:
        return None
    try:
        if kind == "str":
            if not isinstance(raw, str):
                raise ScenarioError(f"{where} must be a string")
            return raw
        if kind == "bool":
            if not isinstance(raw, bool):
                raise ScenarioError(f"{where} must be true or false")
            return raw
        if kind == "int":
            if isinstance(raw, bool) or not isinstance(raw, int):
                raise ScenarioError(f"{where} must be an integer")
            return raw
        if kind == "number":
            if isinstance(raw, bool) or not isinstance(raw, (int, float)):
                raise ScenarioError(f"{where} must be a plain number")
            return float(raw)
        if kind.startswith("list:"):
            if not isinstance(raw, list):
                raise ScenarioError(f"{where} must be a list")
            dim = kind[5:]
            vals = [parse_quantity(x, dim) for x in raw]
        else:
            dim = kind
            vals = [parse_quantity(raw, kind)]
        if dim in _POSITIVE and (section, key) not in _EXEMPT_KEYS and any(v <= 0 for v in vals):
            raise ScenarioError(f"{where} must be positive")
        return vals if kind.startswith("list:") else vals[0]
    except UnitError as exc:
        raise ScenarioError(f"{where}: {exc}") from None


@dataclass(frozen=True)
class Scenario:
    values: dict[str, dict[str, Any]]
    source: str = "<defaults>"
    overridden: frozenset = field(default_factory=frozenset)

    def __getitem__(self, section: str) -> dict[str, Any]:
        return self.values[section]

    def is_set(self, section: str, key: str) -> bool:
        return (section, key) in self.overridden


def parse_scenario(data: dict[str, Any], source: str = "<string>") -> Scenario:
    unknown = set(data) - set(SCHEMA)
    if unknown:
        raise ScenarioError(f"unknown scenario sections: {sorted(unknown)}")
    values: dict[str, dict[str, Any]] = {}
    overridden = set()
    for section, fields in SCHEMA.items():
        given = data.get(section, {})
        if not isinstance(given, dict):
            raise ScenarioError(f"[{section}] must be a table")
        extra = set(given) - set(fields)
        if extra:
            raise ScenarioError(f"unknown keys in [{section}]: {sorted(extra)}")
        values[section] = {}
        for key, (kind, default) in fields.items():
            if key in given:
                overridden.add((section, key))
            raw = given.get(key, default)
            values[section][key] = _convert(section, key, kind, raw)
    return Scenario(values=values, source=source, overridden=frozenset(overridden))


def load_scenario(path: str | Path | None) -> Scenario:
    if path is None:
        return parse_scenario({}, "<defaults>")
    path = Path(path)
    if not path.exists():
        builtin = builtin_scenario(str(path))
        if builtin is not None:
            return builtin
        raise ScenarioError(f"scenario file {str(path)!r} not found")
    try:
        data = tomllib.loads(path.read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as exc:
        raise ScenarioError(f"malformed scenario {str(path)!r}: {exc}") from None
    return parse_scenario(data, str(path))


def builtin_scenario(name: str) -> Scenario | None:
    """Shipped scenarios by stem, e.g. ``"turnover"`` or ``"turnover.cfg"``."""
    stem = Path(name).stem
    res = resources.files("fesapphire.data").joinpath("scenarios", f"{stem}.toml")
    if not res.is_file():
        return None
    return parse_scenario(tomllib.loads(res.read_text(encoding="utf-8")), f"builtin:{stem}")
