"""Three estimates of the first-order Landau-level shift.

The closed form carries an explicit k_x^2 factor. Averaging the
perturbation over the Landau state centred at y0 = k_x / omega_c removes
it, and the 2D eigensolver sides with the average.
Run: python3 demos/landau_shift.py
"""

import numpy as np

from mirrorbounce import make_mirror_field, shift_report
from mirrorbounce.perturbation import f_factor_inner

from _plotting import plt, save

f = make_mirror_field(1.0, 0.01, 1.04)

# %% Side by side for the lowest bands.
print(f"{'L':>2} {'closed':>10} {'quadrature':>11} {'eigensolver':>12} {'closed/quad':>11}")
for L in range(4):
    rep = shift_report(f, 1.0, L, with_eigensolver=True)
    print(f"{L:2d} {rep.paper_value:10.6f} {rep.quadrature_value:11.6f} "
          f"{rep.eigensolver_value:12.6f} {rep.paper_value / rep.quadrature_value:11.3f}")

# %% k_x dependence: the quadrature is flat, the closed form is not.
ks = np.array([0.5, 1.0, 2.0, 4.0])
for k in ks:
    rep = shift_report(f, k, 0)
    print(f"k_x={k:3.1f}: closed {rep.paper_value:.5f}  quadrature {rep.quadrature_value:.5f}")

# %% The L-dependent correction inside the form factor falls off like 5/(4L),
# so by L = 50 it is still about 5% of its L = 3 value.
Ls = np.arange(2, 51)
inner = np.array([f_factor_inner(L) for L in Ls])
print(f"inner(50)/inner(3) = {inner[-1] / inner[1]:.4f}, 50*inner(50) = {50 * inner[-1]:.4f}")

if plt is not None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.loglog(Ls, inner, "o", ms=3, label="inner term")
    ax.loglog(Ls, 1.25 / Ls, "k--", lw=0.8, label="5/(4L)")
    ax.set_xlabel("L")
    ax.legend()
    save(fig, "landau_shift_inner.png")
