"""Bouncing adds nothing to the diamagnetic susceptibility.

omega_par^2 is linear in B0, so log Z_b is too and its second derivative
vanishes. The second difference confirms it to rounding.
Run: python3 demos/susceptibility.py
"""

import numpy as np

from mirrorbounce import make_mirror_field
from mirrorbounce.thermo import (
    ThermoInput,
    bounce_susceptibility,
    log_partition_bounce,
    second_difference,
)

inp = ThermoInput(N=1.0, V=1.0, T=1.0, L=0)

# %% log Z_b along B0 at fixed curvature: a straight line.
for b0 in np.linspace(0.5, 2.0, 4):
    f = make_mirror_field(b0, 0.02, 1.08)
    print(f"B0={b0:4.2f}: log Z_b = {log_partition_bounce(inp, f):.10f}")

# %% The second difference, for two steps. No h^2 trend means no curvature.
f = make_mirror_field(1.0, 0.01, 1.04)
for h in (0.01, 0.005):
    print(f"h={h}: chi_b = {bounce_susceptibility(inp, f, h=h):.2e}")

# %% The same differencer does see curvature when there is some.
print(f"d2/dB0^2 of B0^2: {second_difference(lambda b: b * b, 1.0, 0.01):.9f}")
