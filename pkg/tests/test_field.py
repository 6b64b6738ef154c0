import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mirrorbounce.exceptions import DomainError, MirrorFieldError
from mirrorbounce.field import (
    MirrorField,
    field_profile,
    magnetic_field,
    make_mirror_field,
    transverse_field,
    vector_potential,
)
from mirrorbounce.units import UnitSystem

fields = st.builds(
    lambda B0, a, zm: make_mirror_field(B0, a, 1 + a * zm * zm),
    st.floats(0.05, 20.0),
    st.floats(1e-4, 1.0),
    st.floats(0.1, 10.0),
)


def test_homogeneous_limit():
    f = make_mirror_field(1, 0, 1)
    assert f.z_m == math.inf
    assert f.omega_c == 1.0
    assert f.lambda_gauge == 1.0
    assert f.homogeneous


def test_mirror_length(mirror):
    assert mirror.z_m == pytest.approx(2.0, rel=1e-14)


@pytest.mark.parametrize(
    "B0, a, R",
    [(1, 0.01, 0.9), (0, 0.01, 1.04), (-1, 0.01, 1.04), (1, -0.01, 1.04),
     (1, 0.01, 1.0), (1, 0.0, 1.5), (math.nan, 0.01, 1.04)],
)
def test_rejects_bad_parameters(B0, a, R):
    with pytest.raises(MirrorFieldError):
        make_mirror_field(B0, a, R)


def test_natural_unit_lengths():
    f = make_mirror_field(4.0, 0.01, 1.04)
    assert f.omega_c == 4.0
    assert f.lambda_gauge == pytest.approx(0.5)
    assert f.lambda_flux == pytest.approx(math.sqrt(2 * math.pi / 4.0))


@given(fields)
def test_flux_to_gauge_length_ratio(f):
    assert f.lambda_flux / f.lambda_gauge == pytest.approx(math.sqrt(2 * math.pi), rel=1e-14)


def test_field_profile_examples(mirror):
    assert field_profile(mirror, 0.0) == 1.0
    assert field_profile(mirror, mirror.z_m) == pytest.approx(1.04, rel=1e-15)
    assert field_profile(make_mirror_field(2, 0.01, 1.04), 1.0) == pytest.approx(2.02)


@given(fields)
def test_field_at_mirror_point_is_R_B0(f):
    assert field_profile(f, f.z_m) == pytest.approx(f.R * f.B0, rel=1e-13)


def test_out_of_range_z(mirror):
    for fn in (field_profile, lambda f, z: vector_potential(f, 1.0, z),
               lambda f, z: transverse_field(f, 1.0, z)):
        with pytest.raises(DomainError):
            fn(mirror, 2.1)


def test_vector_potential_examples(mirror, flat):
    np.testing.assert_array_equal(vector_potential(flat, 1.0, 123.0), [-1.0, 0.0, 0.0])
    # -1 * (1 + 0.01 * 4) * 1
    np.testing.assert_allclose(vector_potential(mirror, 1.0, 2.0), [-1.04, 0, 0], rtol=1e-14)
    np.testing.assert_array_equal(vector_potential(mirror, 0.0, 1.3), [0.0, 0.0, 0.0])


def test_transverse_field_examples(mirror, flat):
    assert transverse_field(mirror, 0.0, 1.5).B_y == 0
    assert transverse_field(mirror, 0.7, 0.0).B_y == 0
    by, fd = transverse_field(mirror, 1.0, 1.0)
    assert by == pytest.approx(-0.02, rel=1e-14)
    assert fd == pytest.approx(-0.02, rel=1e-8)
    assert transverse_field(flat, 3.0, 5.0).B_y == 0


@given(fields, st.floats(-5, 5), st.floats(-1, 1))
def test_curl_consistency(f, y, s):
    z = s * f.z_m
    by, fd = transverse_field(f, y, z)
    # relative to the largest |B_y| on this line of constant y
    scale = max(abs(by), 2 * f.B0 * f.a * abs(y) * f.z_m, 1e-300)
    assert abs(fd - by) <= 1e-8 * scale


@given(st.floats(0.05, 20), st.floats(-5, 5), st.floats(-50, 50))
def test_a_to_zero_reduces_to_landau_gauge(B0, y, z):
    f = make_mirror_field(B0, 0.0, 1.0)
    np.testing.assert_array_equal(vector_potential(f, y, z), [-B0 * y, 0.0, 0.0])
    assert field_profile(f, z) == B0


def test_magnetic_field_is_divergence_free(mirror):
    rng = np.random.default_rng(1)
    p = rng.uniform(-1.5, 1.5, size=(20, 3))
    h = 1e-4
    for q in p:
        div = 0.0
        for axis in range(3):
            e = np.zeros(3)
            e[axis] = h
            div += (magnetic_field(mirror, q + e)[axis] - magnetic_field(mirror, q - e)[axis]) / (2 * h)
        assert abs(div) < 1e-10


def test_dict_roundtrip(mirror):
    assert MirrorField.from_dict(mirror.to_dict()) == mirror
    with pytest.raises(MirrorFieldError):
        MirrorField.from_dict({"B0": 1, "a": 0.01})


@pytest.mark.parametrize(
    "dimension",
    ["time", "frequency", "length", "wavenumber", "curvature", "velocity", "energy",
     "field", "magnetic_moment", "volume", "density"],
)
@given(value=st.floats(1e-30, 1e30))
def test_si_roundtrip(dimension, value):
    units = UnitSystem(reference_field=2.5)
    back = units.from_si(units.to_si(value, dimension), dimension)
    assert back == pytest.approx(value, rel=1e-12)


def test_unit_scales_are_consistent():
    from scipy import constants

    u = UnitSystem(reference_field=1.0)
    # cyclotron frequency of an electron in 1 T, in rad/s
    assert u.to_si(1.0, "frequency") == pytest.approx(constants.e / constants.m_e)
    # hbar omega_c: the energy unit equals hbar times the frequency unit
    assert u.energy_unit == pytest.approx(constants.hbar * u.scale("frequency"))
    # magnetic length sqrt(hbar / eB) for 1 T is about 25.66 nm
    assert u.length_unit == pytest.approx(25.656e-9, rel=1e-3)
    assert u.temperature_to_si(u.temperature_to_natural(300.0)) == pytest.approx(300.0)


def test_from_si():
    f = MirrorField.from_si(2.0, 1e6, 1.5)
    assert f.B0 == pytest.approx(1.0)
    assert f.z_m == pytest.approx(math.sqrt(0.5 / f.a))


def test_unit_system_validation():
    with pytest.raises(ValueError):
        UnitSystem(convention="cgs")
    with pytest.raises(ValueError):
        UnitSystem(reference_field=0)
    with pytest.raises(ValueError):
        UnitSystem().scale("charge")
