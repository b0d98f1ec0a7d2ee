import io
import math
import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fesapphire import ensemble as ens
from fesapphire.ensemble import Concentration, ModePair, RelaxationParams


def test_homogeneous_linewidth():
    assert ens.homogeneous_linewidth(80e-6) == pytest.approx(3978.87, rel=1e-6)
    assert ens.homogeneous_linewidth(1 / math.pi) == pytest.approx(1.0, rel=1e-15)
    assert ens.homogeneous_linewidth(10e-9) == pytest.approx(31.83e6, rel=1e-3)
    for bad in (0.0, -1.0):
        with pytest.raises(ValueError):
            ens.homogeneous_linewidth(bad)


def test_scale_t2():
    wt = lambda x: Concentration(x, "wt%")
    assert ens.scale_t2(1.5e-6, wt(0.005), wt(0.02)) == pytest.approx(0.75e-6, rel=1e-12)
    assert ens.scale_t2(80e-6, wt(0.01), wt(0.01)) == 80e-6
    assert ens.scale_t2(80e-6, wt(0.01), wt(0.04)) == pytest.approx(40e-6, rel=1e-12)
    with pytest.raises(ValueError, match="unit"):
        ens.scale_t2(80e-6, wt(0.01), Concentration(50, "ppm"))
    with pytest.raises(ValueError):
        ens.scale_t2(80e-6, wt(0.0), wt(0.01))


@given(
    st.floats(1e-9, 1e-2),
    st.floats(1e-4, 10.0),
    st.floats(1e-4, 10.0),
)
def test_scale_t2_round_trip(t2, a, b):
    ca, cb = Concentration(a, "ppm"), Concentration(b, "ppm")
    back = ens.scale_t2(ens.scale_t2(t2, ca, cb), cb, ca)
    assert back == pytest.approx(t2, rel=1e-12)


def test_saturation():
    assert ens.saturation(0.0, 7e-3, 80e-6) == 0.0
    t1, t2 = 7e-3, 80e-6
    assert ens.saturation(1 / math.sqrt(t1 * t2), t1, t2) == pytest.approx(1.0, rel=1e-14)
    # sqrt(T1 T2) = 4.6 us as a single product: hand multiplication
    assert 1.98e6 * 4.6e-6 == pytest.approx(9.108)
    with pytest.raises(ValueError):
        ens.saturation(-1.0, t1, t2)


def test_intensity_broadened_linewidth():
    t2 = 80e-6
    assert ens.intensity_broadened_linewidth(0.0, t2) == ens.homogeneous_linewidth(t2)
    assert ens.intensity_broadened_linewidth(1482.0, t2) == pytest.approx(5.90e6, rel=2e-3)
    assert ens.intensity_broadened_linewidth(math.sqrt(3.0), 1e-3) == pytest.approx(2 / (math.pi * 1e-3), rel=1e-15)


@given(st.floats(0.0, 1e4), st.floats(1e-3, 10.0), st.floats(1e-8, 1e-2))
def test_broadening_monotone(s, ds, t2):
    base = ens.intensity_broadened_linewidth(s, t2)
    assert ens.intensity_broadened_linewidth(s + ds, t2) > base
    assert ens.intensity_broadened_linewidth(s, t2 * 1.5) < base


@given(st.floats(10.0, 1e6), st.floats(1e-8, 1e-2))
def test_broadening_asymptote(s, t2):
    df = ens.intensity_broadened_linewidth(s, t2)
    assert abs(df - s / (math.pi * t2)) / df < 0.005


def test_classify_mode_pair():
    assert ens.classify_mode_pair(8e6, 5.90e6) is ModePair.Coexist
    assert ens.classify_mode_pair(10e3, 5.90e6) is ModePair.Compete
    assert ens.classify_mode_pair(5.9e6, 5.9e6) is ModePair.Compete


@given(st.floats(1.0, 1e8), st.floats(0.0, 1.0), st.floats(1.0, 1e8))
def test_classify_monotone(d, frac, width):
    if ens.classify_mode_pair(d, width) is ModePair.Compete:
        assert ens.classify_mode_pair(max(d * frac, 1e-3), width) is ModePair.Compete


def test_participation_fraction():
    p = RelaxationParams(t1=7e-3, t2=80e-6, t2_star=10e-9, t_d=14e-6)
    assert ens.participation_fraction(p, 31.8e6, 4e3) == pytest.approx(0.063, abs=5e-4)
    # slow diffusion limit
    slow = RelaxationParams(t1=1e-9, t2=1e-9, t_d=1e3)
    assert ens.participation_fraction(slow, 31.8e6, 4e3) == pytest.approx(4e3 / 31.8e6, rel=1e-9)
    assert ens.participation_fraction(p, 31.8e6, 31.8e6) == 1.0
    with pytest.raises(ValueError, match="14 us"):
        ens.participation_fraction(RelaxationParams(7e-3, 80e-6), 31.8e6, 4e3)


@given(st.floats(1e-6, 1e-1), st.floats(1e-6, 1e-1))
def test_participation_monotone_in_t1(t1a, t1b):
    lo, hi = sorted((t1a, t1b))
    mk = lambda t1: RelaxationParams(t1=t1, t2=1e-9, t_d=14e-6)
    assert ens.participation_fraction(mk(lo), 3e7, 4e3) <= ens.participation_fraction(mk(hi), 3e7, 4e3)


def test_relaxation_order_warning():
    with pytest.warns(UserWarning, match="out of order"):
        RelaxationParams(t1=1e-6, t2=1e-3, t2_star=1e-9)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        RelaxationParams(t1=7e-3, t2=80e-6, t2_star=10e-9)
    with pytest.raises(ValueError):
        RelaxationParams(t1=-1.0, t2=1e-6)


def test_saturation_state_diffusion_factor():
    full = ens.saturation_state(1.98e6, 7e-3, 80e-6)
    half = ens.saturation_state(1.98e6, 7e-3, 80e-6, diffusion_factor=0.5)
    hom = ens.homogeneous_linewidth(80e-6)
    assert half.delta_f - hom == pytest.approx(0.5 * (full.delta_f - hom))
    assert full.delta_f >= hom


def test_catalog_queries():
    (t1,) = ens.catalog_query("T1", "Fe3+", (50, "ppm"))
    assert (t1.value, t1.uncertainty, t1.source) == (7e-3, 2e-3, "Bogle1959")
    (core,) = ens.catalog_query("T2_Al27_frozen_core")
    assert core.value == 1e-3
    (sd,) = ens.catalog_query(ens.Property.spectral_diffusion)
    assert sd.value == 14e-6
    # range containment: 150 ppm falls inside the "100-200" row
    assert [e.source for e in ens.catalog_query("inhomog_linewidth", "Fe3+", (150, "ppm"))] == ["Kornienko1961"]
    # wrong unit never matches
    assert ens.catalog_query("T1", "Fe3+", (50, "wt%")) == []


def test_catalog_unknown_property():
    with pytest.raises(ValueError, match="valid: T1, T2"):
        ens.catalog_query("T3")


def test_catalog_round_trip_bit_identical():
    text = ens.catalog_text()
    entries = ens.read_catalog(io.StringIO(text))
    buf = io.StringIO()
    ens.write_catalog(entries, buf)
    assert buf.getvalue() == text
    assert ens.read_catalog(io.StringIO(buf.getvalue())) == entries


def test_catalog_bad_header():
    with pytest.raises(ValueError, match="header"):
        ens.read_catalog(io.StringIO("a,b\n1,2\n"))
