"""Landau bands and the bounce ladders nested inside them.

Solves the 1D bounce problem in the lowest Landau band by finite
differences and compares it with both readings of the bounce frequency.
Run: python3 demos/bounce_spectrum.py
"""

import numpy as np

from mirrorbounce import FrequencyVariant, bounce_frequency, landau_energy, make_mirror_field
from mirrorbounce.oracle import GridSpec, solve_bounce_1d
from mirrorbounce.spectra import max_bounce_level

from _plotting import plt, save

# %% A gentle mirror: B(z) = B0 (1 + a z^2), with the box spanning six
# bounce lengths of the L = 0 band so the walls barely matter.
a = 0.01
bounce_length = (2 * a * 0.5) ** -0.25
f = make_mirror_field(1.0, a, 1 + a * (6 * bounce_length) ** 2)
print(f"z_m = {f.z_m:.3f}, omega_c = {f.omega_c}")

# %% Finite-difference eigenvalues, measured from mu B0.
res = solve_bounce_1d(f, 0, GridSpec(f.z_m, 2048), k_levels=5)
w_paper = bounce_frequency(f, 0, FrequencyVariant.PAPER)
w_osc = bounce_frequency(f, 0, FrequencyVariant.OSCILLATOR)
print(f"{'ell':>3} {'FD':>10} {'osc':>10} {'paper':>10}")
for ell, e in enumerate(res.values):
    print(f"{ell:3d} {e:10.6f} {(ell + 0.5) * w_osc:10.6f} {(ell + 0.5) * w_paper:10.6f}")
# The FD ladder sits on sqrt(2 a mu B0); the paper reading is lower by sqrt(2).

# %% How many bounce levels fit below the next Landau level?
for L in range(1, 6):
    w = bounce_frequency(f, L, warn=False)
    print(f"L={L}: eps_L={landau_energy(f, L):.1f}, omega_par={w:.4f}, ell_max={max_bounce_level(f, L)}")

# %% Wavefunctions, if matplotlib is around.
if plt is not None:
    grid = res.grid
    fig, ax = plt.subplots(figsize=(6, 4))
    for ell, (e, v) in enumerate(zip(res.values, res.vectors)):
        ax.plot(grid.z, e + 0.02 * v / np.max(np.abs(v)), label=f"ell={ell}")
    ax.plot(grid.z, a * 0.5 * grid.z**2, "k--", lw=0.8, label="mu B0 a z^2")
    ax.set_xlim(-4 * bounce_length, 4 * bounce_length)
    ax.set_ylim(0, 0.5)
    ax.set_xlabel("z")
    ax.set_ylabel("energy above mu B0")
    ax.legend(fontsize=8)
    save(fig, "bounce_spectrum.png")
