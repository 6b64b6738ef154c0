"""Closed-form Landau and bounce spectra.

Two readings of the bounce frequency coexist and are both exposed:

* ``paper``      omega = sqrt(a mu B0 / m_e)
* ``oscillator`` omega = sqrt(2 a mu B0 / m_e), the textbook frequency of
  the potential mu B0 a z^2 and the value that the classical bounce period
  and the finite-difference eigensolver reproduce.

They differ by exactly sqrt(2). Neither is singled out as correct.
"""

import enum
import math
import warnings
from dataclasses import dataclass

from .exceptions import ValidityWarning

__all__ = [
    "FrequencyVariant",
    "QuantumState",
    "DEGENERATE_BOUND",
    "VALIDITY_RATIO",
    "landau_energy",
    "magnetic_moment",
    "bounce_frequency",
    "bounce_level_energy",
    "max_bounce_level",
    "degeneracy",
]

# omega_par / omega_c above this emits a ValidityWarning
VALIDITY_RATIO = 0.1


class FrequencyVariant(str, enum.Enum):
    PAPER = "paper"
    OSCILLATOR = "oscillator"


class _DegenerateBound:
    """Marker for the ell bound at L = 0, where ell/L < omega_c/omega_par is undefined."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "DEGENERATE_BOUND"

    def __reduce__(self):
        return (_DegenerateBound, ())


DEGENERATE_BOUND = _DegenerateBound()


def _check_level(L, name="L"):
    if isinstance(L, bool) or int(L) != L or L < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {L!r}")
    return int(L)


def landau_energy(f, L):
    """Perpendicular energy hbar omega_c (L + 1/2)."""
    L = _check_level(L)
    return f.omega_c * (L + 0.5)


def magnetic_moment(f, L):
    """mu(L) = landau_energy / B0 (equals L + 1/2 in natural units)."""
    return landau_energy(f, L) / f.B0


def bounce_frequency(f, L, variant=FrequencyVariant.PAPER, warn=True):
    """Quantum bounce frequency of Landau level ``L``.

    Returns 0 for a homogeneous field. Emits :class:`ValidityWarning` when
    the ratio to the cyclotron frequency exceeds :data:`VALIDITY_RATIO`.
    """
    variant = FrequencyVariant(variant)
    mu = magnetic_moment(f, L)
    factor = 2.0 if variant is FrequencyVariant.OSCILLATOR else 1.0
    omega = math.sqrt(factor * f.a * mu * f.B0)
    if warn and omega / f.omega_c > VALIDITY_RATIO:
        warnings.warn(
            f"bounce/cyclotron frequency ratio {omega / f.omega_c:.3g} exceeds "
            f"{VALIDITY_RATIO}; the separation of time scales is marginal",
            ValidityWarning,
            stacklevel=2,
        )
    return omega


def bounce_level_energy(f, L, ell, variant=FrequencyVariant.PAPER, warn=True):
    """Bounce energy (ell + 1/2) hbar omega_par(L), measured from mu B0."""
    ell = _check_level(ell, "ell")
    return (ell + 0.5) * bounce_frequency(f, L, variant, warn=warn)


def max_bounce_level(f, L, variant=FrequencyVariant.PAPER):
    """Largest integer ell with ell < L omega_c / omega_par.

    Returns :data:`DEGENERATE_BOUND` for L = 0, where the inequality would
    demand ell < 0.
    """
    L = _check_level(L)
    if f.a == 0:
        raise ValueError("the bounce-level bound is undefined for a homogeneous field")
    if L == 0:
        return DEGENERATE_BOUND
    limit = L * f.omega_c / bounce_frequency(f, L, variant, warn=False)
    return math.ceil(limit) - 1


@dataclass(frozen=True)
class QuantumState:
    """Composite Landau-bounce label (L, ell, k_x)."""

    L: int
    ell: int
    k_x: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "L", _check_level(self.L))
        object.__setattr__(self, "ell", _check_level(self.ell, "ell"))
        object.__setattr__(self, "k_x", float(self.k_x))

    def check_admissible(self, f, variant=FrequencyVariant.PAPER):
        """Raise ValueError if ell violates the bounce-level bound for ``f``.

        Nothing is enforced for a homogeneous field or for L = 0, where the
        bound is degenerate.
        """
        if f.a == 0:
            return self
        bound = max_bounce_level(f, self.L, variant)
        if bound is not DEGENERATE_BOUND and self.ell > bound:
            raise ValueError(
                f"ell = {self.ell} exceeds the admissible maximum {bound} "
                f"for L = {self.L}"
            )
        return self

    def energy(self, f, variant=FrequencyVariant.PAPER):
        """Total energy: Landau level plus bounce level."""
        return landau_energy(f, self.L) + bounce_level_energy(f, self.L, self.ell, variant)


def degeneracy(f, r_x, r_z=None, geometry="mirror"):
    """Number of states per Landau level for a sample of the given extent.

    ``homogeneous``: r_x r_z / lambda_flux^2. ``mirror``: r_x / lambda_flux,
    bouncing having lifted the degeneracy along the field.
    """
    if not r_x > 0:
        raise ValueError("r_x must be positive")
    if geometry == "homogeneous":
        if r_z is None or not r_z > 0:
            raise ValueError("r_z must be positive for the homogeneous count")
        return r_x * r_z / f.lambda_flux**2
    if geometry == "mirror":
        return r_x / f.lambda_flux
    raise ValueError(f"unknown geometry {geometry!r}")
