"""A classical electron bouncing between the mirror points.

Boris integration of the full orbit next to the quadrature bounce period.
Run: python3 demos/classical_bounce.py
"""

import math

import numpy as np

from mirrorbounce import FrequencyVariant, bounce_frequency, make_mirror_field
from mirrorbounce.classical import (
    bounce_time,
    integrate_trajectory,
    measure_bounce_frequency,
    mirror_initial_state,
)

from _plotting import plt, save

f = make_mirror_field(1.0, 0.01, 1.04)
mu = 0.5

# %% Bounce period from the mirror-point integral (no closed form used).
tau_b = bounce_time(f, mu)
print(f"tau_b = {tau_b:.10f}  (20 pi = {20 * math.pi:.10f})")

# %% Ten bounce periods with 50 steps per gyration.
q0, v0 = mirror_initial_state(f, mu)
dt = 2 * math.pi / f.omega_c / 50
traj = integrate_trajectory(f, q0, v0, dt=dt, n_steps=int(10 * tau_b / dt))
e = traj.energy_series
print(f"steps: {len(traj) - 1}")
print(f"energy drift: {np.max(np.abs(e - e[0])) / e[0]:.2e}")
print(f"mu excursion: {np.max(np.abs(traj.mu_series - mu)) / mu:.4f}")
print(f"max |z| / z_m: {np.max(np.abs(traj.positions[:, 2])) / f.z_m:.4f}")
w = measure_bounce_frequency(traj)
print(f"measured omega_b = {w:.5f}; oscillator {bounce_frequency(f, 0, FrequencyVariant.OSCILLATOR):.5f},"
      f" paper {bounce_frequency(f, 0, FrequencyVariant.PAPER):.5f}")

if plt is not None:
    fig, (ax1, ax2) = plt.subplots(2, 1, sharex=True, figsize=(6, 5))
    ax1.plot(traj.times, traj.positions[:, 2])
    ax1.axhline(f.z_m, color="k", lw=0.6)
    ax1.axhline(-f.z_m, color="k", lw=0.6)
    ax1.set_ylabel("z")
    ax2.plot(traj.times, traj.mu_series)
    ax2.set_ylabel("mu")
    ax2.set_xlabel("t")
    save(fig, "classical_bounce.png")
