import math
import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mirrorbounce.exceptions import ValidityWarning
from mirrorbounce.field import make_mirror_field
from mirrorbounce.spectra import (
    DEGENERATE_BOUND,
    FrequencyVariant,
    QuantumState,
    bounce_frequency,
    bounce_level_energy,
    degeneracy,
    landau_energy,
    magnetic_moment,
    max_bounce_level,
)

OSC, PAPER = FrequencyVariant.OSCILLATOR, FrequencyVariant.PAPER

fields = st.builds(
    lambda B0, a, zm: make_mirror_field(B0, a, 1 + a * zm * zm),
    st.floats(0.05, 20.0),
    st.floats(1e-5, 0.5),
    st.floats(0.1, 10.0),
)
levels = st.integers(0, 200)


@pytest.fixture(autouse=True)
def _quiet():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        yield


@pytest.mark.parametrize("B0, L, expected", [(1, 0, 0.5), (1, 3, 3.5), (2, 0, 1.0)])
def test_landau_energy(B0, L, expected):
    assert landau_energy(make_mirror_field(B0, 0, 1), L) == expected


@pytest.mark.parametrize("B0, L, expected", [(1, 0, 0.5), (4, 1, 1.5), (1, 10, 10.5)])
def test_magnetic_moment(B0, L, expected):
    assert magnetic_moment(make_mirror_field(B0, 0.01, 1.04), L) == expected


@pytest.mark.parametrize("L", [-1, 1.5, True])
def test_bad_levels(mirror, L):
    with pytest.raises(ValueError):
        landau_energy(mirror, L)


def test_bounce_frequency_examples(mirror, flat):
    assert bounce_frequency(mirror, 0, PAPER) == pytest.approx(math.sqrt(0.005), rel=1e-15)
    assert bounce_frequency(mirror, 0, PAPER) == pytest.approx(0.0707107, abs=5e-8)
    assert bounce_frequency(mirror, 0, OSC) == pytest.approx(0.1, rel=1e-15)
    for L in range(5):
        assert bounce_frequency(flat, L, PAPER) == 0
        assert bounce_frequency(flat, L, "oscillator") == 0


def test_bounce_level_energy_examples(mirror, flat):
    assert bounce_level_energy(mirror, 0, 0, OSC) == pytest.approx(0.05, rel=1e-15)
    assert bounce_level_energy(flat, 3, 7, OSC) == 0
    spacing = bounce_level_energy(mirror, 2, 1, PAPER) - bounce_level_energy(mirror, 2, 0, PAPER)
    assert spacing == pytest.approx(bounce_frequency(mirror, 2, PAPER), rel=1e-14)


def test_max_bounce_level_examples(mirror):
    # omega_c / omega_par = 1 / sqrt(0.015) = 8.1649...
    assert max_bounce_level(mirror, 1, PAPER) == 8
    assert max_bounce_level(mirror, 0) is DEGENERATE_BOUND
    with pytest.raises(ValueError):
        max_bounce_level(make_mirror_field(1, 0, 1), 1)


def test_max_bounce_level_grows_as_a_vanishes():
    bounds = [max_bounce_level(make_mirror_field(1, a, 1 + a), 1) for a in (1e-2, 1e-4, 1e-8)]
    assert bounds[0] < bounds[1] < bounds[2]
    assert bounds[2] == 8164  # 1/sqrt(1.5e-8) = 8164.97


def test_max_bounce_level_is_strict():
    # a chosen so that L omega_c / omega_par is exactly 4 for L = 1 (paper variant)
    f = make_mirror_field(1.0, 1 / 24, 1 + 1 / 24)
    assert bounce_frequency(f, 1, PAPER) == pytest.approx(0.25, rel=1e-15)
    assert max_bounce_level(f, 1) == 3


def test_quantum_state(mirror):
    s = QuantumState(1, 8, 1.0)
    assert s.check_admissible(mirror) is s
    with pytest.raises(ValueError):
        QuantumState(1, 9).check_admissible(mirror)
    QuantumState(0, 50).check_admissible(mirror)
    with pytest.raises(ValueError):
        QuantumState(-1, 0)
    assert QuantumState(0, 0).energy(mirror, OSC) == pytest.approx(0.55)


def test_degeneracy_examples():
    f = make_mirror_field(1, 0.01, 1.04)
    lam = f.lambda_flux
    assert degeneracy(f, 10 * lam, geometry="mirror") == pytest.approx(10)
    assert degeneracy(f, lam, lam, "homogeneous") == pytest.approx(1)
    assert degeneracy(f, 3.7, lam, "homogeneous") == pytest.approx(degeneracy(f, 3.7))
    with pytest.raises(ValueError):
        degeneracy(f, -1.0)
    with pytest.raises(ValueError):
        degeneracy(f, 1.0, None, "homogeneous")
    with pytest.raises(ValueError):
        degeneracy(f, 1.0, 1.0, "dipole")


@given(fields, levels)
def test_landau_levels_equally_spaced(f, L):
    assert landau_energy(f, L + 1) - landau_energy(f, L) == pytest.approx(f.omega_c, rel=1e-12)


@given(fields, levels)
def test_variant_ratio_is_sqrt2(f, L):
    ratio = bounce_frequency(f, L, OSC) / bounce_frequency(f, L, PAPER)
    assert ratio == pytest.approx(math.sqrt(2), rel=1e-14)


@given(fields, levels, st.sampled_from(list(FrequencyVariant)))
def test_frequency_grows_as_sqrt_of_level(f, L, variant):
    ratio = bounce_frequency(f, L, variant) / bounce_frequency(f, 0, variant)
    assert ratio == pytest.approx(math.sqrt(2 * L + 1), rel=1e-12)


@given(fields, levels, st.integers(0, 100))
def test_bounce_energy_linear_in_half_integer(f, L, ell):
    w = bounce_frequency(f, L, PAPER)
    assert bounce_level_energy(f, L, ell, PAPER) == pytest.approx((ell + 0.5) * w, rel=1e-14)


def test_validity_warning():
    f = make_mirror_field(1.0, 0.05, 1.2)
    with pytest.warns(ValidityWarning):
        bounce_frequency(f, 2, OSC)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        bounce_frequency(make_mirror_field(1.0, 1e-4, 1.01), 2, OSC)
