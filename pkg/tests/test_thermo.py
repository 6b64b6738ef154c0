import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mirrorbounce.exceptions import ValidityWarning
from mirrorbounce.field import make_mirror_field
from mirrorbounce.spectra import FrequencyVariant
from mirrorbounce.thermo import (
    ThermoInput,
    bounce_susceptibility,
    log_partition_bounce,
    second_difference,
)

UNIT = ThermoInput(N=1.0, V=1.0, T=1.0, L=0)


def test_example():
    # paper variant: omega^2 = a mu B0 = 0.02 * 0.5 = 0.01
    f = make_mirror_field(1.0, 0.02, 1.08)
    assert log_partition_bounce(UNIT, f) == pytest.approx(1 - 0.01 / 24, rel=1e-15)
    assert log_partition_bounce(UNIT, f) == pytest.approx(0.9995833, abs=1e-7)


def test_oscillator_variant_doubles_correction():
    f = make_mirror_field(1.0, 0.02, 1.08)
    corr_p = 1 - log_partition_bounce(UNIT, f, FrequencyVariant.PAPER)
    corr_o = 1 - log_partition_bounce(UNIT, f, FrequencyVariant.OSCILLATOR)
    assert corr_o == pytest.approx(2 * corr_p, rel=1e-13)


def test_homogeneous(flat):
    inp = ThermoInput(N=3.0, V=2.5, T=0.7, L=4)
    assert log_partition_bounce(inp, flat) == 7.5
    assert bounce_susceptibility(inp, flat) == 0.0


def test_classical_limit(mirror):
    values = [log_partition_bounce(ThermoInput(2.0, 3.0, T), mirror) for T in (1e2, 1e4, 1e6)]
    assert abs(values[-1] - 6.0) < 1e-12
    assert np.all(np.diff(values) > 0)


def test_decreases_with_bounce_frequency():
    values = [log_partition_bounce(UNIT, make_mirror_field(1.0, a, 1.0 + a)) for a in (0.001, 0.01, 0.1, 0.5)]
    assert np.all(np.diff(values) < 0)


@pytest.mark.parametrize("h", [0.01, 0.005])
def test_susceptibility_vanishes(mirror, h):
    assert abs(bounce_susceptibility(UNIT, mirror, h=h)) < 1e-10


@given(
    B0=st.floats(0.1, 10.0),
    a=st.floats(1e-4, 0.1),
    T=st.floats(0.5, 50.0),
    L=st.integers(0, 5),
    variant=st.sampled_from(list(FrequencyVariant)),
)
def test_susceptibility_vanishes_everywhere(B0, a, T, L, variant):
    f = make_mirror_field(B0, a, 1.0 + a)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        chi = bounce_susceptibility(ThermoInput(1.0, 1.0, T, L), f, variant)
    assert abs(chi) < 1e-10


def test_differencer_self_test():
    assert second_difference(lambda b: b * b, 1.0, 0.01) == pytest.approx(2.0, abs=1e-6)
    # a nonlinear function of B0 is not mistaken for zero
    assert second_difference(np.sqrt, 1.0, 0.01) == pytest.approx(-0.25, rel=1e-3)


def test_step_range(mirror):
    for h in (0.0, -0.01, 0.1, 0.5):
        with pytest.raises(ValueError):
            bounce_susceptibility(UNIT, mirror, h=h)


def test_truncation_warning():
    f = make_mirror_field(1.0, 0.5, 2.0)
    with pytest.warns(ValidityWarning):
        log_partition_bounce(ThermoInput(1.0, 1.0, 0.1), f)


@pytest.mark.parametrize("kwargs", [dict(N=0, V=1, T=1), dict(N=1, V=-1, T=1), dict(N=1, V=1, T=0), dict(N=1, V=1, T=1, L=-1), dict(N=1, V=1, T=1, L=0.5)])
def test_input_validation(kwargs):
    with pytest.raises(ValueError):
        ThermoInput(**kwargs)
