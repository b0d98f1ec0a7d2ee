import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fesapphire import optics


def test_aged_intensity():
    assert optics.aged_intensity(4.5, 0) == 4.5
    assert optics.aged_intensity(4.5, 2000) == pytest.approx(3.15)
    assert optics.aged_intensity(4.5, 5000) == pytest.approx(3.15)
    assert optics.aged_intensity(2.0, 1000) == pytest.approx(0.85 * 2.0)
    with pytest.raises(ValueError):
        optics.aged_intensity(4.5, -1)


def test_transmission():
    assert optics.transmission(6, 0.0337, 14, 0.005) == pytest.approx(0.759, abs=0.002)
    assert optics.transmission(0, 0.0337, 0, 0.005) == 1.0
    with pytest.raises(ValueError):
        optics.transmission(1, 1.2, 0, 0.0)


@given(st.integers(0, 20), st.floats(0, 0.2), st.integers(0, 50), st.floats(0, 0.05))
def test_transmission_bernoulli_and_monotone(n, r, length, a):
    t = optics.transmission(n, r, length, a)
    assert 0 < t <= 1
    assert t >= 1 - (n * r + length * a) - 1e-12
    assert optics.transmission(n + 1, r, length, a) <= t
    assert optics.transmission(n, r, length + 1, a) <= t


def test_delivered_power_worked_example():
    assert optics.aperture_power(0.9525, 3.0, 0.76) == pytest.approx(1.63, abs=0.01)
    # the formula's 0.9535 cm variant lands within the same rounding
    assert optics.aperture_power(0.9535, 3.0, 0.76) == pytest.approx(1.63, abs=0.01)


def test_delivered_power_scaling():
    path = optics.OpticalPath(3.0, 0.0, 6, 0.0337, 14, 0.005, 0.9525)
    p = optics.delivered_power(path)
    assert p == pytest.approx(math.pi * 0.9525 ** 2 / 4 * 3.0 * optics.transmission(6, 0.0337, 14, 0.005))
    zero = optics.OpticalPath(0.0, 0.0, 6, 0.0337, 14, 0.005, 0.9525)
    assert optics.delivered_power(zero) == 0.0
    wide = optics.OpticalPath(3.0, 0.0, 6, 0.0337, 14, 0.005, 2 * 0.9525)
    assert optics.delivered_power(wide) == pytest.approx(4 * p)
    aged = optics.OpticalPath(3.0, 0.3, 6, 0.0337, 14, 0.005, 0.9525)
    assert optics.delivered_power(aged) == pytest.approx(0.7 * p)


def test_path_validation():
    with pytest.raises(ValueError):
        optics.OpticalPath(3.0, 1.0, 6, 0.0337, 14, 0.005, 0.9525)
    with pytest.raises(ValueError):
        optics.OpticalPath(3.0, 0.0, 6, 0.0337, 14, 0.005, 0.0)


def test_fiber_loss():
    assert optics.fiber_loss(700, 1.2) == 0.84
    assert optics.fiber_loss(700, 0) == 0.0
    assert optics.db_to_transmitted_fraction(0.84) == pytest.approx(10 ** -0.084)
    assert optics.db_to_transmitted_fraction(0.84) == pytest.approx(0.824, abs=5e-4)


def test_table4_fixture():
    elements = optics.load_table4_elements()
    assert [e.key for e in elements] == list("ABCDEFG")
    path = optics.path_from_elements([e for e in elements if e.key in "CDEFG"], source_intensity=3.0)
    assert (path.surfaces, path.bulk_path_mm) == (6, 14.0)
    assert optics.delivered_power(path) == pytest.approx(1.63, abs=0.01)
