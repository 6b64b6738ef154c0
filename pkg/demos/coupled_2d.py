"""The coupled (y, z) problem on a grid.

Two forms of the Hamiltonian: the first-order expansion in a, and the
unexpanded (k_x - omega_c (1 + a z^2) y)^2 / 2. Only the latter reproduces
the composite Landau-plus-bounce ladder: at k_x = 1 the expansion leaves an
a^2 z^4 term that softens the bounce well.
Run: python3 demos/coupled_2d.py
"""

from mirrorbounce import make_mirror_field
from mirrorbounce.oracle import classify_state, default_grid, solve_coupled_2d
from mirrorbounce.verify import born_oppenheimer_levels

from _plotting import plt, save

a, k_x = 0.01, 1.0
bounce_length = (2 * a * 0.5) ** -0.25
f = make_mirror_field(1.0, a, 1 + a * (8 * bounce_length) ** 2)
grid = default_grid(f, k_x, n_y=256, n_z=256)

ref = born_oppenheimer_levels(f, 6)
results = {form: solve_coupled_2d(f, k_x, grid, 6, form=form) for form in ("expanded", "exact")}

# %% Eigenvalues with their (y-nodes, z-nodes) labels.
print(f"{'composite':>10} {'expanded':>18} {'exact':>18}")
for i, (e_ref, L, ell) in enumerate(ref):
    cells = []
    for form in ("expanded", "exact"):
        res = results[form]
        cells.append(f"{res.values[i]:.5f} {classify_state(res.vectors[i])}")
    print(f"{e_ref:10.5f} {cells[0]:>18} {cells[1]:>18}")

if plt is not None:
    fig, axes = plt.subplots(2, 3, figsize=(9, 5), sharex=True, sharey=True)
    vecs = results["exact"].vectors
    for ax, v, e in zip(axes.flat, vecs, results["exact"].values):
        ax.pcolormesh(grid.z, grid.y, v, shading="auto", cmap="RdBu_r")
        ax.set_title(f"E = {e:.4f}", fontsize=9)
        ax.set_ylim(grid.y_center - 4, grid.y_center + 4)
        ax.set_xlim(-5 * bounce_length, 5 * bounce_length)
    save(fig, "coupled_2d.png")
