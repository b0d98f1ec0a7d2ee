"""Command-line front end.

    fesapphire <command> [--scenario FILE] [--fixture NAME] [--out DIR]
               [--format csv|json] [--tau LIST] [--bom NAME|FILE] [--stamp]

Commands: linewidth, rabi, maser, loop-budget, servo-sim, adev, uv.
Exit status: 0 success, 2 invalid input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from . import __version__
from . import cavity, ensemble, maser, optics, pumploop, servo, stability
from .fixtures import FixtureError, get_resonator
from .scenario import Scenario, ScenarioError, load_scenario
from .units import UnitError, dbm_to_watts

EXIT_OK, EXIT_INVALID, EXIT_NUMERIC = 0, 2, 3


@dataclass
class Result:
    command: str
    lines: list[str] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)
    tables: dict[str, tuple[list[str], list[list[float]]]] = field(default_factory=dict)

    def add(self, label: str, value: Any, unit: str = "", tag: str = "", key: str | None = None) -> None:
        if isinstance(value, float):
            shown = f"{value:.6g}"
        else:
            shown = str(value)
        text = f"{label}: {shown}{' ' + unit if unit else ''}"
        if tag:
            text += f"  {tag}"
        self.lines.append(text)
        if key is not None:
            self.data[key] = value

    def note(self, text: str) -> None:
        self.lines.append(text)


def _eng_hz(x: float) -> str:
    for scale, prefix in ((1e12, "THz"), (1e9, "GHz"), (1e6, "MHz"), (1e3, "kHz")):
        if abs(x) >= scale:
            return f"{x / scale:.3g} {prefix}"
    return f"{x:.3g} Hz"


# --- shared builders --------------------------------------------------------


def _resonator(scn: Scenario, args):
    return get_resonator(args.fixture or scn["resonator"]["fixture"])


def _relaxation(scn: Scenario) -> ensemble.RelaxationParams:
    e = scn["ensemble"]
    return ensemble.RelaxationParams(t1=e["t1"], t2=e["t2"], t2_star=e["t2_star"], t_d=e["t_d"])


def _pump_mode(scn: Scenario) -> cavity.WgMode:
    c = scn["cavity"]
    return cavity.WgMode(f0=c["f0"], q_loaded=c["q_loaded"], v_eff=c["v_eff"], coupling_beta=1.0)


def _rabi_both(scn: Scenario) -> dict[str, float]:
    c = scn["cavity"]
    fld = cavity.field_amplitude(_pump_mode(scn), c["pump_power"])
    tr = cavity.Transition(amplitude=c["amplitude"], f_transition=c["f0"])
    return {
        "h": fld.h,
        "b": fld.b,
        "SI_Tesla": cavity.rabi_frequency(tr, fld, cavity.Convention.SI_Tesla),
        "PaperLiteral": cavity.rabi_frequency(tr, fld, cavity.Convention.PaperLiteral),
    }


def _operating_state(scn: Scenario) -> ensemble.SaturationState:
    e = scn["ensemble"]
    conv = scn["cavity"]["convention"]
    chi = _rabi_both(scn)[cavity.Convention(conv).value]
    return ensemble.saturation_state(chi, e["t1"], e["t2"], e["diffusion_factor"])


def _participation(scn: Scenario, at_operating_point: bool = True) -> float:
    params = _relaxation(scn)
    f_inhom = ensemble.homogeneous_linewidth(params.t2_star)
    if at_operating_point:
        f_hom = min(_operating_state(scn).delta_f, f_inhom)
    else:
        f_hom = ensemble.homogeneous_linewidth(params.t2)
    return ensemble.participation_fraction(params, f_inhom, f_hom)


def _maser_config(scn: Scenario, args, participation: float | None = None) -> maser.MaserConfig:
    res = _resonator(scn, args)
    r, m, e = scn["resonator"], scn["maser"], scn["ensemble"]
    idx = r["signal_index"]
    if not 0 <= idx < len(res.signal_freqs_hz):
        raise ScenarioError(f"[resonator].signal_index {idx} out of range for {res.key}")
    return maser.MaserConfig(
        system=res.three_level_system(idx),
        signal_mode=res.signal_mode(idx, v_eff=r["signal_v_eff"]),
        temperature=m["temperature"],
        ion_density=0.0,
        t1=e["t1"],
        t2=e["t2"],
        participation=_participation(scn) if participation is None else participation,
        model=maser.MaserModel(signal_amplitude=m["signal_amplitude"], filling_factor=m["filling_factor"]),
    )


def _bom(scn: Scenario, args) -> tuple[list[pumploop.ComponentSpec], str]:
    name = args.bom or scn["pumploop"]["bom"]
    if name == "table2":
        return pumploop.load_table2_bom(), "[bom:table2]"
    path = Path(name)
    if not path.is_file():
        raise FixtureError(f"unknown bill of materials {name!r} (use 'table2' or a CSV path)")
    with path.open(newline="", encoding="utf-8") as fh:
        return pumploop.read_bom(fh), f"[bom:{path.name}]"


def _curve(scn: Scenario) -> stability.ThermalCurve:
    s = scn["stability"]
    return stability.ThermalCurve(f_turnover=s["f_turnover"], t_turnover=s["t_turnover"], curvature=s["curvature"])


def _yoyo(scn: Scenario) -> stability.YoYo:
    s = scn["stability"]
    try:
        waveform = stability.Waveform(s["waveform"])
    except ValueError:
        raise ScenarioError(f"[stability].waveform must be one of {[w.value for w in stability.Waveform]}") from None
    return stability.YoYo(
        amplitude=s["amplitude"], cycle_freq=s["cycle_freq"], setpoint=s["setpoint"], waveform=waveform, duty=s["duty"]
    )


# --- commands ---------------------------------------------------------------


def cmd_linewidth(scn: Scenario, args) -> Result:
    res = Result("linewidth")
    e = scn["ensemble"]
    params = _relaxation(scn)
    hom = ensemble.homogeneous_linewidth(params.t2)
    inhom = ensemble.homogeneous_linewidth(params.t2_star)
    res.add("low-power T2", params.t2, "s", "[default:ball-park]", key="t2_s")
    res.add("homogeneous linewidth 1/(pi T2)", hom, "Hz", key="homogeneous_linewidth_hz")
    res.add("T2*", params.t2_star, "s", "[default:ball-park]", key="t2_star_s")
    res.add("inhomogeneous linewidth 1/(pi T2*)", inhom, "Hz", key="inhomogeneous_linewidth_hz")
    for entry in ensemble.catalog_query("inhomog_linewidth"):
        unc = f" +- {entry.uncertainty:.3g}" if entry.uncertainty is not None else ""
        res.note(f"  catalog: {entry.value:.3g}{unc} Hz, {entry.material} {entry.concentration} {entry.conc_unit}  [catalog:{entry.source}]")
    state = _operating_state(scn)
    res.add("Rabi frequency at operating point", state.chi, f"Hz ({scn['cavity']['convention']})", key="chi_hz")
    res.add("saturation S", state.s, key="saturation")
    res.add("effective linewidth", state.delta_f, "Hz", key="delta_f_eff_hz")
    res.add("spin-diffusion factor on power broadening", e["diffusion_factor"], key="diffusion_factor")
    for label, sep in (("coexist", e["coexist_separation"]), ("compete", e["compete_separation"])):
        verdict = ensemble.classify_mode_pair(sep, state.delta_f).value
        res.add(f"mode pair at {sep:.6g} Hz", verdict, tag=f"[observation:{label}]", key=f"pair_{label}")
    p_low = _participation(scn, at_operating_point=False)
    p_op = _participation(scn, at_operating_point=True)
    res.add("participation fraction (low-power width)", p_low, key="participation_low_power")
    res.add("participation fraction (operating point)", p_op, key="participation_operating")
    return res


def cmd_rabi(scn: Scenario, args) -> Result:
    res = Result("rabi")
    c, e = scn["cavity"], scn["ensemble"]
    rb = _rabi_both(scn)
    res.add("pump mode", f"f0={c['f0']:.6g} Hz, Q={c['q_loaded']:.3g}, V_eff={c['v_eff']:.3g} m3, P={c['pump_power']:.3g} W",
            tag="[default:pump-estimate]")
    res.add("field amplitude H", rb["h"], "A/m", key="h_a_per_m")
    res.add("flux density B", rb["b"], "T", key="b_tesla")
    sqrt_entry = ensemble.catalog_query("sqrtT1T2")[0]
    for conv in cavity.Convention:
        chi = rb[conv.value]
        s = ensemble.saturation(chi, e["t1"], e["t2"])
        s_bist = chi * sqrt_entry.value
        res.add(f"Rabi frequency [{conv.value}]", chi, f"Hz ({_eng_hz(chi)})", key=f"chi_{conv.value}_hz")
        res.add(f"  S with T1={e['t1']:.3g} s, T2={e['t2']:.3g} s", s, key=f"s_{conv.value}")
        res.add(f"  S with sqrt(T1 T2)={sqrt_entry.value:.3g} s", s_bist, tag=f"[catalog:{sqrt_entry.source}]",
                key=f"s_bistability_{conv.value}")
    res.note(f"convention caveat: {cavity.CONVENTION_NOTE}")
    res.data["convention_note"] = cavity.CONVENTION_NOTE
    return res


def cmd_maser(scn: Scenario, args) -> Result:
    out = Result("maser")
    m = scn["maser"]
    rsn = _resonator(scn, args)
    cfg = _maser_config(scn, args)
    out.add("resonator", rsn.name, tag=rsn.tag, key="fixture")
    for flag in rsn.flags:
        out.note(f"  flag: {flag}  {rsn.tag}")
    out.add("signal frequency", cfg.system.f_signal, "Hz", rsn.tag, key="f_signal_hz")
    out.add("pump frequency", cfg.system.f_pump, "Hz", rsn.tag, key="f_pump_hz")
    out.add("signal-mode loaded Q", cfg.signal_mode.q_loaded, tag=rsn.tag, key="q_signal")
    out.add("model: signal amplitude", cfg.model.signal_amplitude, "free-spin units", key="model_signal_amplitude")
    out.add("model: filling factor", cfg.model.filling_factor, key="model_filling_factor")
    out.add("model: signal V_eff", cfg.signal_mode.v_eff, "m3", key="model_signal_v_eff_m3")
    out.add("operating temperature", cfg.temperature, "K", key="temperature_k")
    out.add("participation fraction", cfg.participation, key="participation")
    out.add("saturated inversion per ion", maser.saturated_inversion(cfg.system, cfg.temperature), key="inversion_per_ion")
    dn_th = maser.threshold_inversion_density(cfg.signal_mode, cfg.t2, cfg.model)
    out.add("threshold inversion density", dn_th, "m^-3", key="threshold_inversion_density")
    n_th = maser.threshold_ion_density(cfg)
    out.add("threshold ion density", n_th, "m^-3", key="threshold_ion_density")
    dbm = rsn.output_dbm[0] if m["use_fixture_output"] else m["output"]
    tag = rsn.tag if m["use_fixture_output"] else "[scenario]"
    p_out = dbm_to_watts(dbm)
    out.add("maser output", dbm, "dBm", tag, key="output_dbm")
    est = maser.infer_concentration(p_out, cfg)
    out.add("inferred Fe3+ concentration", est.ppb, "ppb" + (" (upper bound)" if est.upper_bound else ""),
            key="inferred_ppb")
    out.data["inferred_ion_density"] = est.ion_density
    out.data["inferred_is_upper_bound"] = est.upper_bound
    assay_ppb = m["assay"] * 1e3
    ratio = maser.dark_matter_ratio(assay_ppb, est.ppb)
    out.add("assayed total iron", m["assay"], "ppm", "[scenario:assay]", key="assay_ppm")
    out.add("dark-matter ratio (assay / ESR-active)", ratio, key="dark_matter_ratio")
    low = _maser_config(scn, args, participation=_participation(scn, at_operating_point=False))
    est_low = maser.infer_concentration(p_out, low)
    out.add("  sensitivity: low-power participation", low.participation, key="participation_low_power")
    out.add("  sensitivity: inferred concentration", est_low.ppb, "ppb", key="inferred_ppb_low_power")
    live = maser.with_ion_density(cfg, est.ion_density)
    rng = maser.masing_range_check(live, m["t_min"], m["t_max"])
    out.add("highest masing temperature (inferred density)", rng.temperature,
            "K" + (" (band edge)" if rng.flagged else ""), key="masing_cutoff_k")
    n_cut = maser.ion_density_for_cutoff(cfg, m["cutoff"])
    out.add(f"ion density for a {m['cutoff']:.4g} K cutoff", maser.ion_density_to_ppb(n_cut), "ppb",
            "[observation:cutoff]", key="cutoff_fit_ppb")
    return out


def cmd_loop_budget(scn: Scenario, args) -> Result:
    out = Result("loop-budget")
    bom, tag = _bom(scn, args)
    filters = [c.filter for c in bom if c.filter is not None]
    if not filters:
        raise ScenarioError("bill of materials contains no filter")
    f_eval = min(filters, key=lambda f: f.bandwidth_3db).center
    out.add("evaluation frequency (narrowest filter centre)", f_eval, "Hz", tag, key="f_eval_hz")
    rows = []
    for name, g, cum in pumploop.stage_ledger(bom, f_eval):
        out.note(f"  {name:45s} {g:+8.3f} dB  cumulative {cum:+8.3f} dB  {tag}")
        rows.append([name, g, cum])
    out.tables["stages"] = (["name", "gain_db", "cumulative_db"], rows)
    out.add("net loop gain", pumploop.chain_gain(bom, f_eval), "dB", tag, key="net_gain_db")
    out.add("DC power", pumploop.dc_power_budget(bom), "W", tag, key="dc_power_w")
    candidates = scn["pumploop"]["candidates"]
    if not candidates:
        from .fixtures import load_resonators

        candidates = [r.pump_freq_hz for r in load_resonators().values()]
    threshold = scn["pumploop"]["threshold"]
    selected = pumploop.select_pump_modes(candidates, bom, threshold)
    kept = {f for f, _ in selected}
    cand_rows = []
    for f in candidates:
        g = pumploop.chain_gain(bom, f)
        verdict = "oscillates" if f in kept else "rejected"
        out.note(f"  pump candidate {f:.9g} Hz: loop gain {g:+.3f} dB -> {verdict}")
        cand_rows.append([f, g, 1 if f in kept else 0])
    out.tables["pump_candidates"] = (["frequency_hz", "gain_db", "selected"], cand_rows)
    out.data["selected_hz"] = [f for f, _ in selected]
    out.data["threshold_db"] = threshold
    return out


def _servo_setup(scn: Scenario, args):
    s = scn["servo"]
    rsn = _resonator(scn, args)
    model = servo.ResonatorModel(f_r=rsn.pump_freq_hz, q_loaded=s["q_loaded"], beta=s["beta"])
    cfg = servo.PoundConfig(
        f_if=s["f_if"],
        sideband_level_dbc=s["sideband_level"],
        detector_sensitivity=s["detector_sensitivity"],
        demod_phase=s["demod_phase"],
        actuator_gain=s["actuator_gain"],
        residual_am=s["residual_am"],
        residual_am_enabled=s["residual_am_enabled"],
        integrator_gain=s["integrator_gain"],
        sample_rate=s["sample_rate"],
        incident_power=s["incident_power"],
        detector_noise=s["detector_noise"],
        seed=s["seed"],
        lock_max_temperature=s["lock_max_temperature"],
    )
    return rsn, model, cfg


def cmd_servo_sim(scn: Scenario, args) -> Result:
    out = Result("servo-sim")
    s = scn["servo"]
    rsn, model, cfg = _servo_setup(scn, args)
    curve, yoyo = _curve(scn), _yoyo(scn)
    _, temp = stability.temperature_series(yoyo, s["duration"], 1.0 / cfg.sample_rate)
    trace = servo.simulate(model, cfg, s["duration"], temp, curve, initial_offset=s["initial_offset"])
    out.add("pump resonance", model.f_r, "Hz", rsn.tag, key="f_r_hz")
    out.add("resonator linewidth", model.linewidth, "Hz", key="linewidth_hz")
    out.add("IF", cfg.f_if, "Hz", "[bom:pound-servo]", key="f_if_hz")
    out.add("discriminator slope", servo.discriminator_slope(model, cfg), "V/Hz", key="slope_v_per_hz")
    out.add("loop rate", servo.loop_rate(model, cfg), "1/s", key="loop_rate")
    out.add("1% settling time", servo.settling_time(model, cfg), "s", key="settling_time_s")
    out.add("yo-yo", f"{yoyo.amplitude:.3g} K at {yoyo.cycle_freq:.3g} Hz about {yoyo.setpoint:.4g} K",
            tag="[observation:yo-yo]")
    out.add("locked", trace.locked, key="locked")
    out.data["lock_time_s"] = trace.lock_time
    f_peak, snr = servo.dominant_peak(trace)
    out.add("dominant error-signal line", f_peak, "Hz", key="peak_hz")
    out.add("  line SNR over median floor", snr, "dB", key="peak_snr_db")
    rows = [[t, e, f, T] for t, e, f, T in zip(trace.time, trace.error_v, trace.loop_freq, trace.temperature)]
    out.tables["servo_trace"] = (["time_s", "error_v", "loop_freq_hz", "temperature_k"], rows)
    return out


def cmd_adev(scn: Scenario, args) -> Result:
    out = Result("adev")
    s = scn["stability"]
    taus = args.tau if args.tau is not None else s["tau"]
    if args.log:
        with open(args.log, newline="", encoding="utf-8") as fh:
            series = stability.read_counter_log(fh, s["f_nominal"])
        rows = [(tau, stability.adev(series, tau)) for tau in taus]
        out.add("source", args.log, tag="[counter-log]")
    else:
        curve, yoyo = _curve(scn), _yoyo(scn)
        rows = stability.thermal_adev_pipeline(
            curve, yoyo, s["f_nominal"], s["duration"], taus, tau0=s["tau0"], lag_time_constant=s["lag_time_constant"]
        )
        out.add("turnover", f"{curve.t_turnover:.4g} K, curvature {curve.curvature:.4g} Hz/K^2",
                tag="[observation:turnover]")
        out.add("yo-yo", f"{yoyo.amplitude:.3g} K peak at {yoyo.cycle_freq:.3g} Hz, setpoint {yoyo.setpoint:.4g} K",
                tag="[observation:yo-yo]")
        out.note("  amplitude read as peak excursion; thermal path only (vibration not modelled)")
    for tau, sigma in rows:
        out.note(f"  sigma_y({tau:g} s) = {sigma:.4g}")
    out.tables["adev"] = (["tau_s", "adev"], [[t, v] for t, v in rows])
    out.data["adev"] = {repr(float(t)): v for t, v in rows}
    return out


def cmd_uv(scn: Scenario, args) -> Result:
    out = Result("uv")
    o = scn["optics"]
    elements = optics.load_table4_elements()
    lamp = [e for e in elements if e.key in ("C", "D", "E", "F", "G")]
    hours = o["lamp_hours"] / 3600.0
    aged = optics.aged_intensity(o["source_intensity"], hours)
    out.add("lamp intensity (new)", o["source_intensity"], "mW/cm2", "[uv_optics:C]", key="intensity_new")
    out.add(f"lamp intensity after {hours:g} h", aged, "mW/cm2", "[uv_optics:C]", key="intensity_aged")
    path = optics.path_from_elements(
        lamp,
        source_intensity=aged,
        reflection_loss=o["reflection_loss"],
        absorption_per_mm=o["absorption_per_mm"],
        projected_aperture_diameter=o["aperture_diameter"] * 100.0,
    )
    t = optics.transmission(path.surfaces, path.reflection_loss, path.bulk_path_mm, path.absorption_per_mm)
    out.add("surfaces / silica path", f"{path.surfaces} / {path.bulk_path_mm:g} mm", tag="[uv_optics:D,E,G]")
    out.add("transmission", t, key="transmission")
    out.add("delivered 254 nm power", optics.delivered_power(path), "mW", key="delivered_mw")
    rounded = optics.aperture_power(path.projected_aperture_diameter, 3.0, 0.76)
    out.add("  with intensity rounded to 3 mW/cm2 and 24 % loss", rounded, "mW", "[uv_optics:worked]",
            key="delivered_rounded_mw")
    loss = optics.fiber_loss(o["fiber_attenuation"], o["fiber_length"])
    out.add("light-pipe loss", loss, "dB", "[uv_optics:B]", key="fiber_loss_db")
    out.add("  transmitted fraction", optics.db_to_transmitted_fraction(loss), key="fiber_transmitted")
    return out


COMMANDS: dict[str, Callable[[Scenario, Any], Result]] = {
    "linewidth": cmd_linewidth,
    "rabi": cmd_rabi,
    "maser": cmd_maser,
    "loop-budget": cmd_loop_budget,
    "servo-sim": cmd_servo_sim,
    "adev": cmd_adev,
    "uv": cmd_uv,
}


# --- output -----------------------------------------------------------------


def _clean(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def render(result: Result, fmt: str, scenario: Scenario, stamp: bool = False) -> dict[str, str]:
    """File name -> content for every artefact of ``result``."""
    base = result.command.replace("-", "_")
    header = [f"fesapphire {__version__} {result.command}", f"scenario: {scenario.source}"]
    if stamp:
        header.append("generated: " + _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"))
    files = {"report.txt": "\n".join(header + [""] + result.lines) + "\n"}
    if fmt == "json":
        payload = {"command": result.command, "scenario": scenario.source, "results": result.data}
        payload["tables"] = {k: {"columns": h, "rows": r} for k, (h, r) in result.tables.items()}
        files[f"{base}.json"] = json.dumps(_clean(payload), indent=2, sort_keys=True) + "\n"
    else:
        scalars = [[k, v] for k, v in sorted(result.data.items()) if not isinstance(v, (dict, list))]
        files[f"{base}_summary.csv"] = _csv_text(["key", "value"], scalars)
        for name, (h, r) in result.tables.items():
            files[f"{name}.csv"] = _csv_text(h, r)
    return files


def _tau_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--tau expects comma-separated seconds, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fesapphire", description="Fe3+:sapphire maser design analysis")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--scenario", help="TOML scenario file or builtin name (e.g. turnover)")
        p.add_argument("--fixture", help="resonator fixture: leonard or basile")
        p.add_argument("--out", help="directory for report.txt and machine-readable output")
        p.add_argument("--format", choices=("csv", "json"), default="json")
        p.add_argument("--tau", type=_tau_list, help="averaging times in seconds, e.g. 1,10,100")
        p.add_argument("--bom", help="bill of materials: table2 or a CSV path")
        p.add_argument("--log", help="adev: two-column time,frequency counter log")
        p.add_argument("--stamp", action="store_true", help="add a timestamp to report.txt")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        scn = load_scenario(args.scenario)
        if args.fixture:
            get_resonator(args.fixture)
    except (ScenarioError, UnitError, FixtureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        result = COMMANDS[args.command](scn, args)
    except (ScenarioError, UnitError, FixtureError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    files = render(result, args.format, scn, stamp=args.stamp)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for name, text in files.items():
            (out / name).write_text(text, encoding="utf-8", newline="")
    sys.stdout.write(files["report.txt"])
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
