"""Natural units (hbar = m_e = e = 1) and conversion to SI.

Every computation in the package runs in natural units. Fixing
hbar = m_e = e = 1 still leaves one free scale, chosen here as a
reference magnetic field ``B_ref`` (tesla). With it

    time   = m_e / (e B_ref)
    length = sqrt(hbar / (e B_ref))
    energy = hbar e B_ref / m_e
    field  = B_ref

so a field ``B0 = 1`` has cyclotron frequency 1 and Landau spacing 1.
"""

from dataclasses import dataclass

from scipy import constants

_BASE = {
    # (time, length, energy, field) exponents
    "dimensionless": (0, 0, 0, 0),
    "time": (1, 0, 0, 0),
    "frequency": (-1, 0, 0, 0),
    "length": (0, 1, 0, 0),
    "wavenumber": (0, -1, 0, 0),
    "curvature": (0, -2, 0, 0),
    "velocity": (-1, 1, 0, 0),
    "energy": (0, 0, 1, 0),
    "field": (0, 0, 0, 1),
    "magnetic_moment": (0, 0, 1, -1),
    "volume": (0, 3, 0, 0),
    "density": (0, -3, 0, 0),
}


@dataclass(frozen=True)
class UnitSystem:
    """Conversion between natural units and SI.

    Parameters
    ----------
    reference_field : float
        The SI field strength (tesla) that maps to 1 in natural units.
    convention : str
        Convention of the values handed to the package at the boundary,
        ``"natural"`` or ``"SI"``.
    """

    reference_field: float = 1.0
    convention: str = "natural"

    def __post_init__(self):
        if self.convention not in ("natural", "SI"):
            raise ValueError(f"unknown unit convention {self.convention!r}")
        if not self.reference_field > 0:
            raise ValueError("reference_field must be positive")

    @property
    def time_unit(self):
        return constants.m_e / (constants.e * self.reference_field)

    @property
    def length_unit(self):
        return (constants.hbar / (constants.e * self.reference_field)) ** 0.5

    @property
    def energy_unit(self):
        return constants.hbar * constants.e * self.reference_field / constants.m_e

    def scale(self, dimension):
        """SI value of one natural unit of ``dimension``."""
        try:
            pt, pl, pe, pb = _BASE[dimension]
        except KeyError:
            raise ValueError(f"unknown dimension {dimension!r}") from None
        return (
            self.time_unit**pt
            * self.length_unit**pl
            * self.energy_unit**pe
            * self.reference_field**pb
        )

    def to_si(self, value, dimension):
        return value * self.scale(dimension)

    def from_si(self, value, dimension):
        return value / self.scale(dimension)

    def temperature_to_natural(self, kelvin):
        """Temperature in kelvin to an energy in natural units (k_B absorbed)."""
        return constants.k * kelvin / self.energy_unit

    def temperature_to_si(self, energy):
        return energy * self.energy_unit / constants.k


NATURAL = UnitSystem()
