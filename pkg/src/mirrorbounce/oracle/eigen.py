"""Finite-difference Schrödinger eigensolvers for the bounce problem.

Second-order central differences on uniform interior grids with Dirichlet
walls. The 1D bounce Hamiltonian is tridiagonal and solved densely; the
coupled (y, z) Hamiltonian is a sparse Kronecker sum solved by shift-invert
Lanczos from a seeded starting vector, so repeated solves are bit-identical.
"""

import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from scipy.linalg import eigh, eigh_tridiagonal

from ..exceptions import ConvergenceError, GridError
from ..spectra import FrequencyVariant, bounce_frequency, magnetic_moment

__all__ = [
    "GridSpec",
    "EigenResult",
    "symmetric_eigs",
    "bounce_hamiltonian_1d",
    "coupled_hamiltonian_2d",
    "solve_bounce_1d",
    "solve_coupled_2d",
    "default_grid",
    "count_nodes",
    "classify_state",
]

_DENSE_LIMIT = 400


@dataclass(frozen=True)
class GridSpec:
    """Uniform interior grid on [-halfwidth, halfwidth] per axis.

    ``n_y`` and ``n_z`` count interior points; the Dirichlet walls sit one
    spacing beyond the outermost points. The y axis is centred on
    ``y_center`` and ignored by the 1D solver.
    """

    z_halfwidth: float
    n_z: int
    y_halfwidth: float = 8.0
    n_y: int = 128
    y_center: float = 0.0
    boundary: str = "dirichlet"

    def __post_init__(self):
        if self.n_z < 16 or self.n_y < 16:
            raise GridError("grids need at least 16 points per axis")
        if not (self.z_halfwidth > 0 and self.y_halfwidth > 0):
            raise GridError("grid halfwidths must be positive")
        if not (math.isfinite(self.z_halfwidth) and math.isfinite(self.y_halfwidth)):
            raise GridError("grid halfwidths must be finite")
        if self.boundary != "dirichlet":
            raise GridError(f"unsupported boundary {self.boundary!r}")

    @property
    def h_z(self):
        return 2.0 * self.z_halfwidth / (self.n_z + 1)

    @property
    def h_y(self):
        return 2.0 * self.y_halfwidth / (self.n_y + 1)

    @property
    def z(self):
        return -self.z_halfwidth + self.h_z * np.arange(1, self.n_z + 1)

    @property
    def y(self):
        return self.y_center - self.y_halfwidth + self.h_y * np.arange(1, self.n_y + 1)

    def refined(self, factor=2):
        """Same box with ``factor`` times the number of intervals per axis."""
        return GridSpec(
            self.z_halfwidth,
            factor * (self.n_z + 1) - 1,
            self.y_halfwidth,
            factor * (self.n_y + 1) - 1,
            self.y_center,
            self.boundary,
        )

    def to_dict(self):
        return asdict(self)


@dataclass
class EigenResult:
    """Lowest eigenpairs of a grid Hamiltonian.

    ``vectors`` has shape (k, *grid shape) and is normalized under the grid
    measure (sum |v|^2 dV = 1). ``residuals`` are ||H v - lambda v|| for unit
    Euclidean vectors.
    """

    values: np.ndarray
    residuals: np.ndarray
    vectors: Optional[np.ndarray] = None
    grid: Optional[GridSpec] = None
    norm_estimate: float = float("nan")

    def to_dict(self):
        return {
            "values": [float(v) for v in self.values],
            "residuals": [float(r) for r in self.residuals],
            "grid": self.grid.to_dict() if self.grid is not None else None,
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    def dump_vectors(self, stem):
        """Write vectors as little-endian float64 ``stem.bin`` plus ``stem.json``."""
        if self.vectors is None:
            raise ValueError("no eigenvectors stored")
        stem = Path(stem)
        data = np.ascontiguousarray(self.vectors, dtype="<f8")
        stem.with_suffix(".bin").write_bytes(data.tobytes(order="C"))
        sidecar = {
            "dtype": "<f8",
            "order": "C",
            "shape": list(data.shape),
            "axes": ["level"] + (["y", "z"] if data.ndim == 3 else ["z"]),
            "grid": self.grid.to_dict() if self.grid is not None else None,
            "values": [float(v) for v in self.values],
        }
        stem.with_suffix(".json").write_text(json.dumps(sidecar, indent=2))
        return stem.with_suffix(".bin"), stem.with_suffix(".json")


def _norm_estimate(H):
    if sp.issparse(H):
        return float(abs(H).sum(axis=1).max())
    if isinstance(H, np.ndarray):
        return float(np.abs(H).sum(axis=1).max())
    return float("nan")


def symmetric_eigs(H, k, tol=1e-8, sigma=None, seed=0, maxiter=None):
    """The ``k`` algebraically smallest eigenpairs of a symmetric operator.

    ``H`` may be a dense array, a sparse matrix or a LinearOperator. Small
    problems are solved densely; large ones with Lanczos (ARPACK), in
    shift-invert mode about ``sigma`` when given (``sigma`` must lie below
    the wanted eigenvalues). The starting vector is drawn from ``seed``.
    Raises :class:`ConvergenceError` if any residual exceeds
    ``tol * max(1, ||H||)``.
    """
    n = H.shape[0]
    if H.shape != (n, n):
        raise ValueError("operator must be square")
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    norm = _norm_estimate(H)

    if n <= _DENSE_LIMIT and not isinstance(H, spla.LinearOperator):
        dense = H.toarray() if sp.issparse(H) else np.asarray(H, dtype=float)
        if not np.allclose(dense, dense.T, rtol=0, atol=1e-12 * max(1.0, norm)):
            raise ValueError("operator is not symmetric")
        values, vecs = eigh(dense, subset_by_index=(0, k - 1))
    else:
        if k >= n - 1:
            raise ValueError("Lanczos needs k < n - 1; use a dense matrix")
        v0 = np.random.default_rng(seed).standard_normal(n)
        try:
            if sigma is None:
                values, vecs = spla.eigsh(H, k=k, which="SA", v0=v0, maxiter=maxiter)
            else:
                values, vecs = spla.eigsh(
                    sp.csc_matrix(H), k=k, sigma=sigma, which="LM", v0=v0, maxiter=maxiter
                )
        except spla.ArpackNoConvergence as exc:
            raise ConvergenceError(
                f"Lanczos did not converge: {len(exc.eigenvalues)} of {k} pairs found"
            ) from exc
        order = np.argsort(values)
        values, vecs = values[order], vecs[:, order]

    residuals = np.linalg.norm(H @ vecs - vecs * values, axis=0)
    limit = tol * max(1.0, norm if math.isfinite(norm) else float(np.max(np.abs(values))))
    if np.any(residuals > limit):
        raise ConvergenceError(
            f"eigenpair residual {residuals.max():.3e} above {limit:.3e}",
            achieved=float(residuals.max()),
        )
    return EigenResult(values, residuals, vecs.T.copy(), None, norm)


def _laplacian_1d(n, h):
    main = np.full(n, 1.0 / h**2)
    off = np.full(n - 1, -0.5 / h**2)
    return main, off


def _bounce_stiffness(f, L):
    # effective potential mu(L) B0 a z^2
    return magnetic_moment(f, L) * f.B0 * f.a


def bounce_hamiltonian_1d(f, L, grid):
    """Diagonal and off-diagonal of p_z^2/2 + mu(L) B0 a z^2 on ``grid``."""
    main, off = _laplacian_1d(grid.n_z, grid.h_z)
    return main + _bounce_stiffness(f, L) * grid.z**2, off


def _bounce_length(f, L):
    omega = bounce_frequency(f, L, FrequencyVariant.OSCILLATOR, warn=False)
    return 1.0 / math.sqrt(omega)


def _required_z_halfwidth(f, L, k_levels):
    return _bounce_length(f, L) * max(6.0, math.sqrt(max(2 * k_levels - 1, 0)) + 2.5)


def solve_bounce_1d(f, L, grid, k_levels=5, drift_tol=None):
    """Lowest ``k_levels`` eigenpairs of the gyro-averaged bounce Hamiltonian.

    Solves p_z^2/2 + mu(L) B0 a z^2 (energies measured from mu B0). With
    ``drift_tol`` set, the solve is repeated on a grid with twice as many
    intervals and :class:`GridError` is raised if any eigenvalue moves by
    more than ``drift_tol`` relative.
    """
    if not f.a > 0:
        raise ValueError("the bounce problem needs a mirror field (a > 0)")
    if k_levels < 1 or k_levels > grid.n_z:
        raise ValueError("k_levels out of range")
    need = _required_z_halfwidth(f, L, k_levels)
    if grid.z_halfwidth < need:
        raise GridError(
            f"z_halfwidth {grid.z_halfwidth:g} too small for {k_levels} bounce "
            f"levels; need at least {need:g}"
        )
    main, off = bounce_hamiltonian_1d(f, L, grid)
    values, vecs = eigh_tridiagonal(main, off, select="i", select_range=(0, k_levels - 1))
    Hv = main[:, None] * vecs
    Hv[:-1] += off[:, None] * vecs[1:]
    Hv[1:] += off[:, None] * vecs[:-1]
    residuals = np.linalg.norm(Hv - vecs * values, axis=0)
    norm = float(np.max(np.abs(main)) + 2 * np.max(np.abs(off)))
    result = EigenResult(values, residuals, vecs.T / math.sqrt(grid.h_z), grid, norm)

    if drift_tol is not None:
        finer = solve_bounce_1d(f, L, grid.refined(), k_levels)
        drift = np.max(np.abs(finer.values - values) / np.abs(finer.values))
        if drift > drift_tol:
            raise GridError(f"eigenvalues drift by {drift:.2e} under grid doubling")
    return result


def coupled_hamiltonian_2d(f, k_x, grid, form="expanded"):
    """Sparse Hamiltonian on the (y, z) grid and its potential array.

    ``expanded``: (p_y^2 + p_z^2)/2 + omega_c^2 (y - y0)^2 / 2
    - omega_c a z^2 y (k_x - omega_c y), the first-order form in a.
    ``exact``: (p_y^2 + p_z^2)/2 + (k_x - omega_c (1 + a z^2) y)^2 / 2,
    the unexpanded minimal-coupling form.
    """
    wc = f.omega_c
    Y, Z = np.meshgrid(grid.y, grid.z, indexing="ij")
    if form == "expanded":
        y0 = k_x / wc
        V = 0.5 * wc**2 * (Y - y0) ** 2 - wc * f.a * Z**2 * Y * (k_x - wc * Y)
    elif form == "exact":
        V = 0.5 * (k_x - wc * (1 + f.a * Z**2) * Y) ** 2
    else:
        raise ValueError(f"unknown Hamiltonian form {form!r}")
    my, oy = _laplacian_1d(grid.n_y, grid.h_y)
    mz, oz = _laplacian_1d(grid.n_z, grid.h_z)
    Ty = sp.diags([oy, my, oy], [-1, 0, 1])
    Tz = sp.diags([oz, mz, oz], [-1, 0, 1])
    H = (
        sp.kron(Ty, sp.identity(grid.n_z))
        + sp.kron(sp.identity(grid.n_y), Tz)
        + sp.diags(V.ravel())
    )
    return H.tocsr(), V


def solve_coupled_2d(
    f, k_x, grid, k_levels=6, form="expanded", check_grid=True, seed=0, tol=1e-8
):
    """Lowest ``k_levels`` eigenpairs of the coupled Landau-bounce Hamiltonian.

    No confining potential is added in z: in the ``expanded`` form the
    confinement comes from the perturbation itself. ``check_grid`` enforces
    y_halfwidth >= 6 oscillator lengths and, for a > 0, z_halfwidth >= 6
    bounce lengths of the lowest band.
    """
    if check_grid:
        y_need = 6.0 / math.sqrt(f.omega_c)
        if grid.y_halfwidth < y_need:
            raise GridError(f"y_halfwidth {grid.y_halfwidth:g} below {y_need:g}")
        if f.a > 0:
            z_need = _required_z_halfwidth(f, 0, 0)
            if grid.z_halfwidth < z_need:
                raise GridError(f"z_halfwidth {grid.z_halfwidth:g} below {z_need:g}")
    H, V = coupled_hamiltonian_2d(f, k_x, grid, form)
    # the discrete Laplacian is positive definite, so min(V) bounds the spectrum
    vmin = float(V.min())
    sigma = vmin - 1e-6 * max(1.0, abs(vmin))
    res = symmetric_eigs(H, k_levels, tol=tol, sigma=sigma, seed=seed)
    res.vectors = res.vectors.reshape(k_levels, grid.n_y, grid.n_z) / math.sqrt(
        grid.h_y * grid.h_z
    )
    res.grid = grid
    return res


def default_grid(f, k_x=0.0, L=0, k_levels=6, n_y=128, n_z=128):
    """Grid sized for the lowest levels of band ``L``.

    y is centred on the Landau centre k_x/omega_c and spans
    max(8, sqrt(2L + 1) + 6) oscillator lengths each side; z spans
    min(z_m, 8 bounce lengths), or 8 magnetic lengths for a homogeneous field.
    """
    osc = 1.0 / math.sqrt(f.omega_c)
    y_half = osc * max(8.0, math.sqrt(2 * L + 1) + 6.0)
    if f.a > 0:
        z_half = min(f.z_m, 8.0 * _bounce_length(f, L))
    else:
        z_half = 8.0 * osc
    return GridSpec(z_half, n_z, y_half, n_y, k_x / f.omega_c)


def count_nodes(line, threshold=1e-3):
    """Sign changes along ``line``, ignoring samples below ``threshold`` * max."""
    line = np.asarray(line, dtype=float)
    keep = line[np.abs(line) > threshold * np.max(np.abs(line))]
    return int(np.count_nonzero(np.signbit(keep[1:]) != np.signbit(keep[:-1])))


def classify_state(vector):
    """(y nodes, z nodes) of a 2D eigenvector, read through its largest lobe.

    For a Landau-bounce product state these are the Landau index L and the
    bounce index ell.
    """
    v = np.asarray(vector)
    iy, iz = np.unravel_index(np.argmax(np.abs(v)), v.shape)
    return count_nodes(v[:, iz]), count_nodes(v[iy, :])
