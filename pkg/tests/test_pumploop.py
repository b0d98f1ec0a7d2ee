import io
import itertools
from importlib import resources

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import signal

from fesapphire import pumploop as pl
from fesapphire.pumploop import BandpassFilter, ComponentSpec

MODE_PICKER = BandpassFilter(center=31.33522815e9, bandwidth_3db=17.4e6, poles=3, insertion_loss_db=11.3)
BASILE_PUMP = 31.340330e9
LEONARD_PUMP = 31.312570e9


def _flat(*gains):
    return [ComponentSpec(f"g{i}", g) for i, g in enumerate(gains)]


def test_chain_gain_basics():
    assert pl.chain_gain([], 1e9) == 0.0
    assert pl.chain_gain(_flat(18.5), 1e9) == 18.5
    # driver, phase shifter, HMC499, prefilter and mode-picker at centre
    assert pl.chain_gain(_flat(18.5, -13.5, 13.0, -3.0, -11.3), 1e9) == pytest.approx(3.7, abs=1e-12)


@given(st.lists(st.floats(-60, 60), min_size=1, max_size=6), st.randoms())
def test_chain_gain_permutation_invariant(gains, rnd):
    chain = _flat(*gains)
    shuffled = list(chain)
    rnd.shuffle(shuffled)
    assert pl.chain_gain(shuffled, 1e9) == pytest.approx(pl.chain_gain(chain, 1e9), abs=1e-9)
    assert pl.chain_gain(chain + chain, 1e9) == pytest.approx(2 * pl.chain_gain(chain, 1e9), abs=1e-9)


def test_dc_power():
    bom = pl.load_table2_bom()
    assert pl.dc_power_budget(bom) == pytest.approx(6.5, abs=1e-12)
    assert pl.dc_power_budget(_flat(-3.0, -11.3)) == 0.0
    assert ComponentSpec("HMC635", 18.5, volts=5.0, amps=0.28).dc_power == pytest.approx(1.4)
    amps = [c for c in bom if c.volts is not None]
    assert len(amps) == 5
    assert sum(c.amps for c in amps) == pytest.approx(1.3)


def test_mode_picker_response():
    assert pl.filter_response(MODE_PICKER, 31.33522815e9) == -11.3
    for sign in (+1, -1):
        assert pl.filter_response(MODE_PICKER, MODE_PICKER.center + sign * 8.7e6) == pytest.approx(-14.3, abs=0.1)


def test_butterworth_against_scipy_prototype():
    # n = 3 analog Butterworth low-pass, |H(j k)|^2 at k = 3 half-bandwidths
    n, k = 3, 3.0
    b, a = signal.butter(n, 1.0, analog=True)
    _, hw = signal.freqs(b, a, worN=[k])
    oracle = 10 * np.log10(np.abs(hw[0]) ** 2)
    filt = BandpassFilter(center=1e9, bandwidth_3db=2e6, poles=n)
    got = pl.filter_response(filt, 1e9 + k * 1e6)
    assert got == pytest.approx(oracle, abs=1e-9)
    assert got == pytest.approx(-10 * np.log10(1 + k ** (2 * n)), abs=1e-12)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_odd_chebyshev_against_scipy_prototype(n):
    ripple = 0.5
    filt = BandpassFilter(center=1e9, bandwidth_3db=2e6, poles=n, shape="Chebyshev", ripple_db=ripple)
    b, a = signal.cheby1(n, ripple, 1.0, analog=True)
    x3 = pl._half_power_abscissa(filt)
    for off in (0.2e6, 0.9e6, 1e6, 2.5e6):
        _, hw = signal.freqs(b, a, worN=[x3 * off / 1e6])
        assert pl.filter_response(filt, 1e9 + off) == pytest.approx(10 * np.log10(np.abs(hw[0]) ** 2), abs=1e-9)


@pytest.mark.parametrize(
    "filt",
    [
        MODE_PICKER,
        BandpassFilter(31.34e9, 50e6, 6, 3.0, "Chebyshev", 0.1),
        BandpassFilter(1e9, 1e6, 4, 1.0, "Chebyshev", 1.0),
        BandpassFilter(1e9, 1e6, 12),
    ],
)
def test_filter_calibration_and_symmetry(filt):
    f0, half = filt.center, filt.bandwidth_3db / 2
    assert pl.filter_response(filt, f0) == -filt.insertion_loss_db
    for sign in (+1, -1):
        assert pl.filter_response(filt, f0 + sign * half) == pytest.approx(-filt.insertion_loss_db - 3.0103, abs=1e-3)
    for off in np.linspace(0, 5 * half, 23):
        assert pl.filter_response(filt, f0 + off) == pytest.approx(pl.filter_response(filt, f0 - off), abs=1e-9)
    # monotone outside the pass band
    outside = [pl.filter_response(filt, f0 + half * r) for r in np.linspace(1.0, 6.0, 30)]
    assert np.all(np.diff(outside) < 0)


def test_more_poles_steeper():
    f = MODE_PICKER.center + 20e6
    resp = [pl.filter_response(BandpassFilter(MODE_PICKER.center, 17.4e6, n, 11.3), f) for n in range(1, 8)]
    assert np.all(np.diff(resp) < 0)


def test_filter_validation():
    with pytest.raises(ValueError):
        BandpassFilter(1e9, 2e9, 3)
    with pytest.raises(ValueError):
        BandpassFilter(1e9, 1e6, 13)
    with pytest.raises(ValueError):
        pl.filter_response(MODE_PICKER, 0.0)


def test_select_pump_modes():
    bom = pl.load_table2_bom()
    picked = pl.select_pump_modes([LEONARD_PUMP, BASILE_PUMP], bom)
    assert [f for f, _ in picked] == [BASILE_PUMP]
    assert abs(BASILE_PUMP - MODE_PICKER.center) < MODE_PICKER.bandwidth_3db / 2
    assert pl.chain_gain(bom, LEONARD_PUMP) < -20
    assert pl.select_pump_modes([], bom) == []
    with pytest.raises(ValueError, match="filter"):
        pl.select_pump_modes([BASILE_PUMP], _flat(20.0))


@given(st.lists(st.floats(31.30e9, 31.37e9), max_size=8))
def test_select_subset_sorted(cands):
    bom = pl.load_table2_bom()
    out = pl.select_pump_modes(cands, bom)
    assert all(f in cands for f, _ in out)
    gains = [g for _, g in out]
    assert gains == sorted(gains, reverse=True)
    assert out == pl.select_pump_modes(cands, bom)


def test_stage_ledger_sums():
    bom = pl.load_table2_bom()
    rows = pl.stage_ledger(bom, MODE_PICKER.center)
    assert rows[-1][2] == pytest.approx(pl.chain_gain(bom, MODE_PICKER.center), abs=1e-12)
    assert [r[1] for r in itertools.islice(rows, 3)] == [18.5, -13.5, 13.0]


def test_bom_round_trip():
    text = resources.files("fesapphire.data").joinpath("pump_loop_bom.csv").read_text(encoding="utf-8")
    bom = pl.read_bom(io.StringIO(text))
    buf = io.StringIO()
    pl.write_bom(bom, buf)
    assert buf.getvalue() == text
    assert pl.read_bom(io.StringIO(buf.getvalue())) == bom


def test_bom_missing_columns():
    with pytest.raises(ValueError, match="lacks columns"):
        pl.read_bom(io.StringIO("name,gain_db\nx,1\n"))
