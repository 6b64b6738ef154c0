"""Classical bounce motion between the mirror points.

The bounce period is the time integral of 1/v_par from mirror point to mirror
point and back,

    tau_b = sqrt(2 m_e / eps) * int_{-z_m}^{z_m} dz / sqrt(1 - B(z)/B(z_m)),

with eps = mu B0 R the total energy of a particle that mirrors at z_m. The
integrand has inverse square-root singularities at both ends; substituting
z = z_m sin(theta) makes it smooth. Full orbits are integrated with the Boris
scheme for an electron (charge -e).
"""

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import EscapeError
from .field import field_profile, magnetic_field

__all__ = [
    "Trajectory",
    "bounce_time",
    "bounce_time_closed_form",
    "mirror_initial_state",
    "integrate_trajectory",
    "measure_bounce_frequency",
]

CHARGE = -1.0  # electron, natural units
MASS = 1.0


def _check_mirror(f, mu):
    if not f.a > 0:
        raise ValueError("no mirror points in a homogeneous field (a = 0)")
    if not mu > 0:
        raise ValueError("magnetic moment must be positive")


def bounce_time_closed_form(f, mu):
    """pi sqrt(2 m_e / (mu B0 a)) for the parabolic mirror."""
    _check_mirror(f, mu)
    return math.pi * math.sqrt(2.0 * MASS / (mu * f.B0 * f.a))


def _theta_rule(n_nodes, panels):
    x, w = np.polynomial.legendre.leggauss(n_nodes)
    edges = np.linspace(-0.5 * math.pi, 0.5 * math.pi, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    theta = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return theta, weights


def bounce_time(f, mu, n_nodes=64, panels=1):
    """Bounce period by quadrature over theta with z = z_m sin(theta).

    ``n_nodes`` Gauss-Legendre points on each of ``panels`` equal panels in
    (-pi/2, pi/2). The field is sampled through :func:`field_profile`, so
    the closed form is never used here.
    """
    _check_mirror(f, mu)
    energy = mu * f.B0 * f.R
    theta, w = _theta_rule(n_nodes, panels)
    z = f.z_m * np.sin(theta)
    b_mirror = field_profile(f, f.z_m)
    # 1 - B(z)/B(z_m) vanishes like cos^2(theta) at the ends, as does dz^2
    integrand = f.z_m * np.cos(theta) / np.sqrt(1.0 - field_profile(f, z) / b_mirror)
    return math.sqrt(2.0 * MASS / energy) * float(np.sum(w * integrand))


@dataclass
class Trajectory:
    """Sampled classical orbit; all arrays share the first dimension."""

    times: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray
    mu_series: np.ndarray
    energy_series: np.ndarray

    def __len__(self):
        return len(self.times)

    def to_csv(self, path=None):
        """CSV with columns t, x, y, z, vx, vy, vz, mu, energy at 15 significant digits."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["t", "x", "y", "z", "vx", "vy", "vz", "mu", "energy"])
        table = np.column_stack(
            [self.times, self.positions, self.velocities, self.mu_series, self.energy_series]
        )
        for row in table:
            writer.writerow([f"{v:.15g}" for v in row])
        text = buf.getvalue()
        if path is not None:
            with open(path, "w", newline="") as fh:
                fh.write(text)
        return text


def mirror_initial_state(f, mu, gyrophase=0.0, guiding_center=(0.0, 0.0)):
    """Position and velocity at z = 0 for an electron mirroring exactly at z_m.

    v_perp = sqrt(2 mu B0) and v_par = sqrt(2 mu B0 (R - 1)), so that the total
    energy is mu B0 R. The particle sits one gyroradius off the guiding
    centre, placed for the electron's sense of gyration.
    """
    _check_mirror(f, mu)
    v_perp = math.sqrt(2.0 * mu * f.B0 / MASS)
    v_par = math.sqrt(2.0 * mu * f.B0 * (f.R - 1.0) / MASS)
    r_c = MASS * v_perp / (abs(CHARGE) * f.B0)
    c, s = math.cos(gyrophase), math.sin(gyrophase)
    x0, y0 = guiding_center
    q0 = np.array([x0 + r_c * s, y0 - r_c * c, 0.0])
    v0 = np.array([v_perp * c, v_perp * s, v_par])
    return q0, v0


def _rotate(v, b, dt):
    """Boris rotation of velocities ``v`` in field ``b`` over ``dt``."""
    t = (CHARGE / MASS) * 0.5 * dt * b
    v_prime = v + np.cross(v, t)
    s = 2.0 * t / (1.0 + np.dot(t, t))
    return v + np.cross(v_prime, s)


def integrate_trajectory(f, q0, v0, dt=None, n_steps=1000, escape_margin=0.05):
    """Boris integration of m dv/dt = -e v x B in the mirror field.

    Velocities are kept at half steps and synchronized to the sample times
    by a half rotation, which preserves |v| exactly. ``dt`` defaults to
    tau_c/50 and may not exceed tau_c/20. :class:`EscapeError` is raised at
    the first step with |z| > (1 + escape_margin) z_m.
    """
    tau_c = 2.0 * math.pi / f.omega_c
    if dt is None:
        dt = tau_c / 50.0
    if not 0 < dt <= tau_c / 20.0:
        raise ValueError(f"dt must be in (0, tau_c/20 = {tau_c / 20:.6g}], got {dt}")
    if int(n_steps) != n_steps or n_steps < 1:
        raise ValueError("n_steps must be a positive integer")
    n_steps = int(n_steps)
    z_limit = f.z_m * (1.0 + escape_margin)

    q = np.array(q0, dtype=float)
    v_half = _rotate(np.array(v0, dtype=float), magnetic_field(f, q), -0.5 * dt)
    positions = np.empty((n_steps + 1, 3))
    velocities = np.empty((n_steps + 1, 3))
    fields = np.empty((n_steps + 1, 3))
    for n in range(n_steps + 1):
        if abs(q[2]) > z_limit:
            raise EscapeError(f"|z| = {abs(q[2]):.6g} beyond mirror point at step {n}", n)
        b = magnetic_field(f, q)
        positions[n] = q
        fields[n] = b
        velocities[n] = _rotate(v_half, b, 0.5 * dt)
        if n == n_steps:
            break
        v_half = _rotate(v_half, b, dt)
        q = q + dt * v_half

    b_mag = np.linalg.norm(fields, axis=1)
    v_par = np.einsum("ij,ij->i", velocities, fields) / b_mag
    speed2 = np.einsum("ij,ij->i", velocities, velocities)
    mu = 0.5 * MASS * (speed2 - v_par**2) / b_mag
    energy = 0.5 * MASS * speed2
    times = dt * np.arange(n_steps + 1)
    return Trajectory(times, positions, velocities, mu, energy)


def _crossings(t, v, threshold):
    """Upward zero crossings of ``v`` with hysteresis at +-threshold."""
    ups = []
    armed = False
    last_neg = None
    for i in range(1, len(v)):
        if v[i] < -threshold:
            armed = True
        if v[i - 1] < 0 <= v[i]:
            # linear interpolation of the zero
            last_neg = t[i - 1] + (t[i] - t[i - 1]) * (-v[i - 1]) / (v[i] - v[i - 1])
        if armed and v[i] > threshold and last_neg is not None:
            ups.append(last_neg)
            armed = False
    return np.array(ups)


def measure_bounce_frequency(traj, hysteresis=0.5):
    """2 pi over the mean period between successive upward v_z zero crossings.

    Successive upward crossings are one double bounce apart. Gyration
    ripples near the turning points are rejected by requiring v_z to swing
    beyond ``hysteresis`` * max|v_z| between counted crossings.
    """
    vz = traj.velocities[:, 2]
    amp = np.max(np.abs(vz))
    if amp == 0:
        raise ValueError("v_z never changes sign; no bounce to measure")
    ups = _crossings(traj.times, vz, hysteresis * amp)
    if len(ups) < 4:
        raise ValueError(
            f"need at least 3 full bounce oscillations, found {max(len(ups) - 1, 0)}"
        )
    period = (ups[-1] - ups[0]) / (len(ups) - 1)
    return 2.0 * math.pi / period
