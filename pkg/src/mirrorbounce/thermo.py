"""Bounce contribution to the partition function and to the susceptibility.

log Z_b = N V [1 - (hbar omega_par / T)^2 / 24]. Because omega_par^2 is
linear in B0, the second B0-derivative of log Z_b vanishes identically and
bouncing electrons add nothing to the diamagnetic susceptibility.
"""

import warnings
from dataclasses import dataclass

from .exceptions import ValidityWarning
from .field import MirrorField
from .spectra import FrequencyVariant, bounce_frequency

__all__ = ["ThermoInput", "log_partition_bounce", "second_difference", "bounce_susceptibility"]


@dataclass(frozen=True)
class ThermoInput:
    """Density N, volume V, temperature T (k_B = 1) and the Landau level L."""

    N: float
    V: float
    T: float
    L: int = 0

    def __post_init__(self):
        for name in ("N", "V", "T"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if int(self.L) != self.L or self.L < 0:
            raise ValueError("L must be a non-negative integer")


def _quantum_correction(inp, f, variant):
    """N V (hbar omega_par / T)^2 / 24, warning when the ratio reaches 1."""
    ratio = bounce_frequency(f, inp.L, variant, warn=False) / inp.T
    if ratio >= 1:
        warnings.warn(
            f"hbar omega_par / T = {ratio:.3g} >= 1; the quadratic truncation "
            "of log Z_b is not meaningful",
            ValidityWarning,
            stacklevel=3,
        )
    return inp.N * inp.V * ratio**2 / 24.0


def log_partition_bounce(inp, f, variant=FrequencyVariant.PAPER):
    """N V [1 - (hbar omega_par(L) / T)^2 / 24]."""
    return inp.N * inp.V - _quantum_correction(inp, f, variant)


def second_difference(func, x, h):
    """Central second difference (func(x+h) - 2 func(x) + func(x-h)) / h^2."""
    return (func(x + h) - 2.0 * func(x) + func(x - h)) / (h * h)


def bounce_susceptibility(inp, f, variant=FrequencyVariant.PAPER, h=None):
    """d^2 log Z_b / dB0^2 at fixed a, T, N, V and L, by central differences.

    ``h`` defaults to B0/100 and must satisfy 0 < h < B0/10. The mirror
    ratio is held fixed while B0 is varied. Only the B0-dependent
    correction is differenced: the constant N V has an exactly zero second
    difference but would set a rounding floor of about eps N V / h^2.
    """
    if h is None:
        h = f.B0 / 100.0
    if not 0 < h < f.B0 / 10.0:
        raise ValueError(f"field step must lie in (0, B0/10), got {h}")

    def log_z(b0):
        return -_quantum_correction(inp, MirrorField(b0, f.a, f.R), variant)

    return second_difference(log_z, f.B0, h)
