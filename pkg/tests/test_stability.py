import io
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fesapphire import stability as stab
from fesapphire.stability import BASILE_CURVE, FracFreqSeries, ThermalCurve, Waveform, YoYo

F_NOM = 12.0267126e9


def _sinusoid_adev(y0, f_m, tau):
    x = math.pi * f_m * tau
    return y0 * math.sin(x) ** 2 / x


def test_frequency_at_temperature():
    assert stab.frequency_at_temperature(BASILE_CURVE, 8.72) == BASILE_CURVE.f_turnover
    diff = stab.frequency_at_temperature(BASILE_CURVE, 9.72) - stab.frequency_at_temperature(BASILE_CURVE, 8.72)
    assert diff == pytest.approx(-11.85, abs=1e-5)
    with pytest.raises(ValueError):
        stab.frequency_at_temperature(BASILE_CURVE, 0.0)


@given(st.floats(0.0, 8.0))
def test_turnover_symmetry(x):
    c = ThermalCurve(0.0, 8.72, -11.85)
    assert stab.frequency_at_temperature(c, 8.72 + x) == pytest.approx(stab.frequency_at_temperature(c, 8.72 - x + 1e-300), abs=1e-9)


def test_temperature_series():
    _, flat = stab.temperature_series(YoYo(0.0, 1.4, 8.72), 10.0, 0.01)
    assert np.all(flat == 8.72)
    _, temp = stab.temperature_series(YoYo(0.1, 1.0, 8.72), 10.0, 0.01)
    assert temp.max() - temp.min() == pytest.approx(0.2, rel=1e-9)
    assert abs(temp.mean() - 8.72) < 1e-12
    with pytest.raises(ValueError, match="undersamples"):
        stab.temperature_series(YoYo(0.1, 1.4, 8.72), 10.0, 0.5)


def test_asymmetric_waveform():
    yoyo = YoYo(0.1, 1.0, 8.72, Waveform.Asymmetric, duty=0.2)
    _, temp = stab.temperature_series(yoyo, 10.0, 0.001)
    assert temp.max() == pytest.approx(8.82, abs=1e-3)
    assert temp.min() == pytest.approx(8.62, abs=1e-12)
    assert abs(temp.mean() - 8.72) < 1e-4


def test_adev_constant_and_drift():
    assert stab.adev(FracFreqSeries(1.0, np.full(100, 3e-12)), 10.0) == 0.0
    d = 1e-14
    t = np.arange(1000) * 0.1
    assert stab.adev(FracFreqSeries(0.1, d * t), 10.0) == pytest.approx(d * 10 / math.sqrt(2), rel=0.01)
    assert stab.adev(FracFreqSeries(0.1, d * t), 10.0) == pytest.approx(7.07e-14, rel=0.01)


def test_adev_sinusoid_oracle():
    tau, y0 = 1.0, 1e-12
    f_m = 1 / (2 * tau)
    tau0 = 0.01
    t = np.arange(int(200 / f_m / tau0)) * tau0
    y = y0 * np.sin(2 * np.pi * f_m * t + 0.3)
    assert stab.adev(FracFreqSeries(tau0, y), tau) == pytest.approx(0.6366 * y0, rel=0.02)
    # a second tau off the special point
    assert stab.adev(FracFreqSeries(tau0, y), 0.3) == pytest.approx(_sinusoid_adev(y0, f_m, 0.3), rel=0.02)


def test_adev_errors():
    s = FracFreqSeries(0.1, np.zeros(50))
    with pytest.raises(ValueError, match="integer multiple"):
        stab.adev(s, 0.25)
    with pytest.raises(ValueError, match="too short"):
        stab.adev(s, 3.0)
    with pytest.raises(ValueError):
        FracFreqSeries(0.0, np.zeros(5))
    with pytest.raises(ValueError):
        FracFreqSeries(1.0, np.zeros(1))


@given(st.floats(-1e-9, 1e-9), st.floats(0.1, 1e3))
def test_adev_offset_and_scale(offset, scale):
    rng = np.random.default_rng(3)
    y = rng.normal(0, 1e-13, 400)
    base = stab.adev(FracFreqSeries(1.0, y), 4.0)
    assert stab.adev(FracFreqSeries(1.0, y + offset), 4.0) == pytest.approx(base, rel=1e-3)
    assert stab.adev(FracFreqSeries(1.0, scale * y), 4.0) == pytest.approx(scale * base, rel=1e-12)


def test_non_overlapping_flag():
    rng = np.random.default_rng(1)
    s = FracFreqSeries(1.0, rng.normal(size=10000))
    a, b = stab.adev(s, 10.0), stab.adev(s, 10.0, overlapping=False)
    assert a == pytest.approx(b, rel=0.1)
    assert a != b


def test_pipeline_zero_amplitude():
    rows = stab.thermal_adev_pipeline(BASILE_CURVE, YoYo(0.0, 1.4, 8.72), F_NOM, 100.0, [1.0, 10.0])
    assert [s for _, s in rows] == [0.0, 0.0]


def test_pipeline_turnover_configuration():
    rows = dict(stab.thermal_adev_pipeline(BASILE_CURVE, YoYo(0.1, 1.4, 8.72), F_NOM, 400.0, [1.0, 10.0, 100.0]))
    assert rows[10.0] <= 1e-13
    # squared term: y = -(0.5 * 11.85 * 0.01 / f) * (1 - cos(2*pi*2.8*t))
    y0 = 0.5 * 11.85 * 0.1 ** 2 / F_NOM
    assert y0 == pytest.approx(4.93e-12, rel=1e-3)
    assert rows[1.0] == pytest.approx(_sinusoid_adev(y0, 2.8, 1.0), rel=0.02)


def test_pipeline_off_turnover_ratio():
    # 1.43 Hz keeps tau = 10 s off an integer number of cycles
    on = dict(stab.thermal_adev_pipeline(BASILE_CURVE, YoYo(0.1, 1.43, 8.72), F_NOM, 400.0, [10.0]))[10.0]
    off = dict(stab.thermal_adev_pipeline(BASILE_CURVE, YoYo(0.1, 1.43, 9.22), F_NOM, 400.0, [10.0]))[10.0]
    assert off / on >= 5
    # analytic: linear term 2*|c|*dT*A at f, squared term |c|*A^2/2 at 2f
    lin = _sinusoid_adev(2 * 11.85 * 0.5 * 0.1 / F_NOM, 1.43, 10.0)
    assert off == pytest.approx(lin, rel=0.05)


def test_turnover_energy_at_twice_cycle_frequency():
    tau0, dur = 0.01, 100.0
    _, temp = stab.temperature_series(YoYo(0.1, 1.4, 8.72), dur, tau0)
    y = (stab.frequency_at_temperature(BASILE_CURVE, temp) - F_NOM) / F_NOM
    spec = np.abs(np.fft.rfft(y - y.mean()))
    f = np.fft.rfftfreq(y.size, tau0)
    at = lambda fx: spec[np.argmin(np.abs(f - fx))]
    assert at(2.8) > 1e6 * at(1.4)


def test_thermal_lag():
    temp = np.r_[np.zeros(10), np.ones(1000)]
    out = stab.thermal_lag(temp, 0.01, 1.0)
    assert out[0] == 0.0
    assert out[10 + 100] == pytest.approx(1 - math.exp(-1.0), rel=0.02)
    assert np.array_equal(stab.thermal_lag(temp, 0.01, None), temp)


def test_counter_log_round_trip():
    lines = ["time_s,frequency_hz"] + [f"{k * 0.5},{F_NOM + 1e-3 * k}" for k in range(20)]
    s = stab.read_counter_log(io.StringIO("\n".join(lines)), F_NOM)
    assert s.tau0 == 0.5
    assert s.y[3] == pytest.approx(3e-3 / F_NOM, rel=1e-3)
    with pytest.raises(ValueError, match="evenly"):
        stab.read_counter_log(io.StringIO("0,1\n1,1\n3,1\n"), 1.0)


def test_adev_table_csv():
    buf = io.StringIO()
    stab.write_adev_table([(1.0, 2e-13), (10.0, 5e-14)], buf)
    assert buf.getvalue() == "tau_s,adev\r\n1.0,2e-13\r\n10.0,5e-14\r\n"
