"""Electrons in a parabolic magnetic mirror.

Landau levels, quantized bounce motion, the bounce-induced shift of Landau
levels, classical bounce dynamics and the bounce partition function, each
paired with an independent numerical check.
"""

from .classical import (
    Trajectory,
    bounce_time,
    bounce_time_closed_form,
    integrate_trajectory,
    measure_bounce_frequency,
    mirror_initial_state,
)
from .exceptions import (
    ConvergenceError,
    DomainError,
    EscapeError,
    GridError,
    MirrorFieldError,
    ValidityWarning,
)
from .field import (
    MirrorField,
    field_profile,
    magnetic_field,
    make_mirror_field,
    transverse_field,
    vector_potential,
)
from .oracle import (
    EigenResult,
    GridSpec,
    gauss_hermite_rule,
    hermite_function,
    solve_bounce_1d,
    solve_coupled_2d,
    symmetric_eigs,
)
from .perturbation import (
    ShiftReport,
    f_factor,
    landau_shift_paper,
    matrix_element_quadrature,
    shift_report,
)
from .spectra import (
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
from .thermo import ThermoInput, bounce_susceptibility, log_partition_bounce
from .units import NATURAL, UnitSystem

__version__ = "0.1.0"
