"""Parabolic magnetic mirror: B(z) = B0 (1 + a z^2) near the field minimum.

The field points along z with a weak transverse component B_y generated by
the z dependence of the Landau-gauge potential A_x = -B0 (1 + a z^2) y.
All quantities are in natural units (hbar = m_e = e = 1), see
:mod:`mirrorbounce.units`.
"""

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .exceptions import DomainError, MirrorFieldError
from .units import UnitSystem

__all__ = [
    "MirrorField",
    "TransverseField",
    "make_mirror_field",
    "field_profile",
    "vector_potential",
    "transverse_field",
    "magnetic_field",
]


@dataclass(frozen=True)
class MirrorField:
    """Validated parabolic mirror field.

    Parameters
    ----------
    B0 : float
        Field strength at the minimum.
    a : float
        Curvature of the field along z, in 1/length^2.
    R : float
        Mirror ratio B(z_m) / B0.

    Attributes
    ----------
    z_m : float
        Mirror-point coordinate sqrt((R - 1)/a); ``math.inf`` for a = 0.
    omega_c : float
        Cyclotron frequency at the minimum, e B0 / m_e.
    lambda_gauge : float
        Magnetic length sqrt(hbar / e B0).
    lambda_flux : float
        Flux-quantum length sqrt(2 pi hbar / e B0).
    """

    B0: float
    a: float
    R: float
    z_m: float = field(init=False)
    omega_c: float = field(init=False)
    lambda_gauge: float = field(init=False)
    lambda_flux: float = field(init=False)

    def __post_init__(self):
        B0, a, R = float(self.B0), float(self.a), float(self.R)
        for name, value in (("B0", B0), ("a", a), ("R", R)):
            if not math.isfinite(value):
                raise MirrorFieldError(f"{name} must be finite, got {value!r}")
        if B0 <= 0:
            raise MirrorFieldError(f"B0 must be positive, got {B0}")
        if a < 0:
            raise MirrorFieldError(f"curvature a must be non-negative, got {a}")
        if R < 1:
            raise MirrorFieldError(f"mirror ratio R must be >= 1, got {R}")
        if (a == 0) != (R == 1):
            raise MirrorFieldError(
                f"inconsistent mirror: a = {a} and R = {R}; "
                "a homogeneous field needs a = 0 and R = 1 together"
            )
        set_ = object.__setattr__
        set_(self, "B0", B0)
        set_(self, "a", a)
        set_(self, "R", R)
        set_(self, "z_m", math.sqrt((R - 1) / a) if a > 0 else math.inf)
        set_(self, "omega_c", B0)
        set_(self, "lambda_gauge", 1 / math.sqrt(B0))
        set_(self, "lambda_flux", math.sqrt(2 * math.pi / B0))

    @property
    def homogeneous(self):
        return self.a == 0

    def to_dict(self):
        return {"B0": self.B0, "a": self.a, "R": self.R}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(float(data["B0"]), float(data["a"]), float(data["R"]))
        except KeyError as exc:
            raise MirrorFieldError(f"missing field parameter {exc.args[0]!r}") from None

    @classmethod
    def from_si(cls, B0_tesla, a_per_m2, R, units=None):
        """Build a field from SI inputs, scaled by ``units.reference_field``."""
        units = units or UnitSystem(reference_field=B0_tesla)
        return cls(
            units.from_si(B0_tesla, "field"),
            units.from_si(a_per_m2, "curvature"),
            R,
        )


def make_mirror_field(B0, a, R):
    """Validate (B0, a, R) and return the populated :class:`MirrorField`."""
    return MirrorField(B0, a, R)


def _check_z(f, z):
    if np.any(np.abs(z) > f.z_m):
        raise DomainError(
            f"|z| exceeds the mirror point z_m = {f.z_m:g}; "
            "the parabolic expansion does not apply there"
        )


def field_profile(f, z):
    """Field strength B0 (1 + a z^2) for |z| <= z_m."""
    _check_z(f, z)
    return f.B0 * (1 + f.a * np.square(z))


def _potential_x(f, y, z):
    return -f.B0 * (1 + f.a * np.square(z)) * np.asarray(y, dtype=float)


def vector_potential(f, y, z):
    """Landau-gauge potential (A_x, 0, 0) with A_x = -B0 (1 + a z^2) y."""
    _check_z(f, z)
    ax = _potential_x(f, y, z)
    return np.array([ax, np.zeros_like(ax), np.zeros_like(ax)], dtype=float)


class TransverseField(NamedTuple):
    B_y: float
    curl_check: float


def transverse_field(f, y, z, h=1e-3):
    """Transverse component B_y = dA_x/dz = -2 B0 a y z.

    The second element of the returned pair is the same derivative taken as a
    central difference of A_x in z with step ``h``, the curl-consistency
    check. The differencing stencil may straddle z_m; only the requested
    point is range checked.
    """
    _check_z(f, z)
    by = -2.0 * f.B0 * f.a * y * z
    dadz = (_potential_x(f, y, z + h) - _potential_x(f, y, z - h)) / (2 * h)
    return TransverseField(by, dadz)


def magnetic_field(f, position):
    """Field vector (0, B_y, B_z) at ``position`` (shape (3,) or (n, 3)).

    No range check: used by the trajectory integrator, which handles escape
    itself.
    """
    p = np.asarray(position, dtype=float)
    y, z = p[..., 1], p[..., 2]
    out = np.zeros_like(p)
    out[..., 1] = -2.0 * f.B0 * f.a * y * z
    out[..., 2] = f.B0 * (1 + f.a * z * z)
    return out
