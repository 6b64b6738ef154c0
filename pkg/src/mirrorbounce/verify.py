"""Acceptance checklist: every closed form against its numerical oracle.

Each ``check_*`` function runs one criterion and returns a :class:`Check`;
:func:`run_acceptance` runs them all in order. Runtime limits are part of
each criterion.
"""

import itertools
import math
import time
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classical import (
    bounce_time,
    bounce_time_closed_form,
    integrate_trajectory,
    measure_bounce_frequency,
    mirror_initial_state,
)
from .exceptions import ValidityWarning
from .field import make_mirror_field
from .oracle import (
    GridSpec,
    classify_state,
    default_grid,
    gauss_hermite_rule,
    hermite_functions,
    solve_bounce_1d,
    solve_coupled_2d,
)
from .perturbation import (
    f_factor_inner,
    landau_shift_paper,
    matrix_element_quadrature,
    shift_report,
)
from .spectra import (
    FrequencyVariant,
    bounce_frequency,
    bounce_level_energy,
    degeneracy,
    landau_energy,
    magnetic_moment,
)
from .thermo import ThermoInput, bounce_susceptibility, log_partition_bounce, second_difference

__all__ = ["Check", "CHECKS", "run_acceptance"]

class _Skipped:
    """Returned in place of ``passed`` by a check that did not run; truthy so
    that a skip never fails the run."""

    def __bool__(self):
        return True

    def __repr__(self):
        return "SKIPPED"


SKIPPED = _Skipped()

OSC = FrequencyVariant.OSCILLATOR
PAPER = FrequencyVariant.PAPER


@dataclass
class Check:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float = 0.0
    limit: float = math.inf
    skipped: bool = False

    def line(self):
        mark = "SKIP" if self.skipped else "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d}. {self.name}: {self.detail} ({self.elapsed:.2f}s)"


def _timed(number, name, limit):
    def wrap(fn):
        def run(**kwargs):
            start = time.perf_counter()
            passed, detail = fn(**kwargs)
            elapsed = time.perf_counter() - start
            if elapsed > limit:
                passed = False
                detail += f"; runtime {elapsed:.2f}s over the {limit:g}s limit"
            return Check(number, name, bool(passed), detail, elapsed, limit,
                         skipped=passed is SKIPPED)

        run.number = number
        run.name = name
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


def _bounce_length(a, mu, B0=1.0):
    return 1.0 / math.sqrt(math.sqrt(2.0 * a * mu * B0))


@_timed(1, "bounce-spectrum oracle", 5.0)
def check_bounce_spectrum(**_):
    """1D eigenvalues vs (ell + 1/2) sqrt(2 a mu B0), 1e-5 absolute at n_z = 2048."""
    a = 0.01
    z_half = 6.0 * _bounce_length(a, 0.5)
    f = make_mirror_field(1.0, a, 1.0 + a * z_half**2)
    res = solve_bounce_1d(f, 0, GridSpec(f.z_m, 2048), 5)
    expected = np.array([0.05, 0.15, 0.25, 0.35, 0.45])
    err = float(np.max(np.abs(res.values - expected)))
    return err < 1e-5, f"max |E - (ell+1/2) 0.1| = {err:.2e} (tol 1e-5)"


@_timed(2, "frequency-variant ledger", 1.0)
def check_frequency_variants(frequency=bounce_frequency, **_):
    """oscillator/paper = sqrt(2) and 2 pi / closed-form period = oscillator, 1e-12."""
    rng = np.random.default_rng(20240611)
    worst_ratio = worst_link = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        for _ in range(20):
            B0 = rng.uniform(0.1, 10.0)
            a = rng.uniform(1e-4, 0.1)
            R = 1.0 + a * rng.uniform(0.5, 50.0)
            L = int(rng.integers(0, 40))
            f = make_mirror_field(B0, a, R)
            osc = frequency(f, L, OSC)
            pap = frequency(f, L, PAPER)
            worst_ratio = max(worst_ratio, abs(osc / pap / math.sqrt(2.0) - 1.0))
            w_b = 2.0 * math.pi / bounce_time_closed_form(f, magnetic_moment(f, L))
            worst_link = max(worst_link, abs(w_b / osc - 1.0))
    ok = worst_ratio < 1e-12 and worst_link < 1e-12
    return ok, (
        f"sqrt(2) ratio rel err {worst_ratio:.1e}, "
        f"period-to-oscillator rel err {worst_link:.1e} (tol 1e-12)"
    )


@_timed(3, "bounce-time quadrature", 1.0)
def check_bounce_time(**_):
    f = make_mirror_field(1.0, 0.01, 1.04)
    tau = bounce_time(f, 0.5, n_nodes=64)
    err = abs(tau - 20.0 * math.pi)
    return err < 1e-8, f"|tau_b - 20 pi| = {err:.2e} (tol 1e-8)"


def born_oppenheimer_levels(f, count, l_max=None):
    """Lowest ``count`` composite levels omega_c (L + 1/2) + omega_eff(L)(ell + 1/2)."""
    l_max = count if l_max is None else l_max
    levels = []
    for L in range(l_max + 1):
        w = bounce_frequency(f, L, OSC, warn=False)
        for ell in range(count):
            levels.append((landau_energy(f, L) + w * (ell + 0.5), L, ell))
    levels.sort()
    return levels[:count]


@_timed(4, "coupled 2D spectrum", 120.0)
def check_coupled_2d(quick=False, form="expanded", **_):
    """Six lowest states of the expanded Hamiltonian vs the composite levels, 2%."""
    if quick:
        return SKIPPED, "skipped (--quick)"
    a, k_x = 0.01, 1.0
    z_half = 8.0 * _bounce_length(a, 0.5)
    f = make_mirror_field(1.0, a, 1.0 + a * z_half**2)
    grid = default_grid(f, k_x, n_y=256, n_z=256)
    res = solve_coupled_2d(f, k_x, grid, 6, form=form)
    ref = born_oppenheimer_levels(f, 6)
    worst = 0.0
    bands_ok = True
    parts = []
    for value, vec, (e_ref, L, ell) in zip(res.values, res.vectors, ref):
        offset_ref = e_ref - landau_energy(f, L)
        offset = value - landau_energy(f, L)
        rel = abs(offset - offset_ref) / offset_ref
        worst = max(worst, rel)
        band = classify_state(vec)[0]
        bands_ok &= band == L
        parts.append(f"{offset:.4f}/{offset_ref:.4f}")
    ok = worst < 0.02 and bands_ok
    return ok, (
        f"{form} form offsets (computed/reference) {', '.join(parts)}; "
        f"worst rel err {worst:.3f} (tol 0.02); bands {'ok' if bands_ok else 'WRONG'}"
    )


@_timed(5, "shift triangulation", 5.0)
def check_shift(quick=False, **_):
    f = make_mirror_field(1.0, 0.01, 1.04)
    a, zm2 = Fraction(1, 100), Fraction(4)
    ok = True
    parts = []
    for L in range(4):
        report = shift_report(f, 1.0, L, with_eigensolver=not quick)
        expected_quad = 0.01 * 4.0 / 3.0 * (L + 0.5)
        q_err = abs(report.quadrature_value - expected_quad) / expected_quad
        if L < 2:
            inner = Fraction(0)
        else:
            inner = Fraction(1, 2) * Fraction(math.factorial(L - 2), math.factorial(L)) * (
                Fraction(5 * L, 2) - Fraction(L + 2, 2**L) - 1
            )
        hand = float(Fraction(1, 3) * a * zm2 * (1 + (1 + inner)))
        p_err = abs(report.paper_value - hand) / hand
        ok &= q_err < 1e-8 and report.paper_value > 0 and p_err < 1e-12
        disc = report.rel_discrepancy["paper_vs_quadrature"]
        parts.append(f"L={L}: quad err {q_err:.0e}, paper err {p_err:.0e}, paper/quad disc {disc:.3f}")
    return ok, "; ".join(parts)


@_timed(6, "f(L) asymptotics", 1.0)
def check_f_asymptotics(**_):
    """Inner L-term strictly decreasing on 3..50 and below 1e-3 of its L=3 value at 50."""
    inner = [f_factor_inner(L) for L in range(3, 51)]
    decreasing = all(b < a for a, b in zip(inner, inner[1:]))
    ratio = inner[-1] / inner[0]
    ok = decreasing and ratio < 1e-3
    return ok, (
        f"strictly decreasing: {decreasing}; inner(50)/inner(3) = {ratio:.4f} (tol 1e-3)"
    )


@_timed(7, "susceptibility null", 1.0)
def check_susceptibility(**_):
    worst = 0.0
    for B0, a, T in itertools.product((0.5, 1.0, 3.0), (0.001, 0.01, 0.05), (0.5, 1.0, 5.0)):
        f = make_mirror_field(B0, a, 1.0 + 4.0 * a)
        for variant in (PAPER, OSC):
            chi = bounce_susceptibility(ThermoInput(1.0, 1.0, T), f, variant)
            worst = max(worst, abs(chi))
    self_test = second_difference(lambda b: b * b, 1.0, 0.01)
    ok = worst < 1e-10 and abs(self_test - 2.0) < 1e-6
    return ok, f"max |chi_b| = {worst:.1e} (tol 1e-10); d2(B0^2) = {self_test:.9f}"


@_timed(8, "classical adiabaticity", 30.0)
def check_classical(**_):
    f = make_mirror_field(1.0, 0.01, 1.04)
    mu = 0.5
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        w_osc = bounce_frequency(f, 0, OSC)
    q0, v0 = mirror_initial_state(f, mu)
    dt = 2.0 * math.pi / f.omega_c / 50.0
    n_steps = int(math.ceil(10 * 2.0 * math.pi / w_osc / dt))
    traj = integrate_trajectory(f, q0, v0, dt, n_steps)
    e = traj.energy_series
    e_err = float(np.max(np.abs(e - e[0])) / e[0])
    mu_bar = traj.mu_series.mean()
    mu_exc = float(np.max(np.abs(traj.mu_series - mu_bar)) / mu_bar)
    z = traj.positions[:, 2]
    vz = traj.velocities[:, 2]
    turn = np.nonzero(np.signbit(vz[1:]) != np.signbit(vz[:-1]))[0]
    # gyration ripple gives clusters of sign flips near each turning point
    turn_z = np.abs(z[turn])
    turn_z = turn_z[turn_z > 0.5 * f.z_m]
    t_err = float(np.max(np.abs(turn_z - f.z_m)) / f.z_m)
    w_meas = measure_bounce_frequency(traj)
    w_err = abs(w_meas - w_osc) / w_osc
    ok = e_err < 1e-10 and mu_exc < 0.2 and t_err < 0.02 and w_err < 0.02
    return ok, (
        f"energy drift {e_err:.1e}, mu excursion {mu_exc:.3f}, "
        f"turning-point err {t_err:.4f}, omega_b {w_meas:.5f} vs {w_osc:.5f} ({w_err:.4f})"
    )


@_timed(9, "homogeneous limits", 1.0)
def check_homogeneous(**_):
    f = make_mirror_field(2.0, 0.0, 1.0)
    zeros = []
    for L in range(5):
        for variant in (PAPER, OSC):
            zeros.append(bounce_frequency(f, L, variant))
            zeros.append(bounce_level_energy(f, L, 3, variant))
            zeros.append(bounce_susceptibility(ThermoInput(1.0, 1.0, 1.0, L), f, variant))
        zeros.append(landau_shift_paper(f, 1.0, L))
        zeros.append(matrix_element_quadrature(f, 1.0, L))
        report = shift_report(f, 1.0, L, with_eigensolver=True)
        zeros += [report.paper_value, report.quadrature_value, report.eigensolver_value]
        zeros += list(report.rel_discrepancy.values())
    all_zero = all(v == 0 for v in zeros)
    landau_ok = all(landau_energy(f, L) == 2.0 * (L + 0.5) for L in range(10))
    logz_ok = log_partition_bounce(ThermoInput(3.0, 2.0, 0.7), f) == 6.0
    r_x, r_z = 7.0, 3.0
    g = degeneracy(f, r_x, r_z, "homogeneous")
    g_ok = abs(g - r_x * r_z / (2 * math.pi / 2.0)) < 1e-12 * g
    ok = all_zero and landau_ok and logz_ok and g_ok
    return ok, (
        f"{len(zeros)} bounce/shift/susceptibility values exactly zero: {all_zero}; "
        f"Landau ladder {landau_ok}; log Z_b = NV {logz_ok}; degeneracy {g_ok}"
    )


@_timed(10, "numerical kernels", 10.0)
def check_kernels(**_):
    x, w = gauss_hermite_rule(32)
    p = hermite_functions(20, x, gaussian=False)
    gram = (p * w) @ p.T
    ortho = float(np.max(np.abs(gram - np.eye(21))))
    x, w = gauss_hermite_rule(20)
    moment = float(np.sum(w * x**38))
    mom_err = abs(moment / math.gamma(19.5) - 1.0)
    a = 0.01
    f = make_mirror_field(1.0, a, 1.0 + a * (8.0 * _bounce_length(a, 0.5)) ** 2)
    sizes = (127, 255, 511, 1023)
    errs, hs = [], []
    for n in sizes:
        grid = GridSpec(f.z_m, n)
        res = solve_bounce_1d(f, 0, grid, 5)
        errs.append(abs(res.values[4] - 0.45))
        hs.append(grid.h_z)
    slope = float(np.polyfit(np.log(hs), np.log(errs), 1)[0])
    ok = ortho < 1e-10 and mom_err < 1e-12 and abs(slope - 2.0) <= 0.2
    return ok, (
        f"Hermite orthonormality {ortho:.1e} (tol 1e-10), x^38 moment rel err "
        f"{mom_err:.1e} (tol 1e-12), FD convergence slope {slope:.3f} (2.0 +- 0.2)"
    )


CHECKS = [
    check_bounce_spectrum,
    check_frequency_variants,
    check_bounce_time,
    check_coupled_2d,
    check_shift,
    check_f_asymptotics,
    check_susceptibility,
    check_classical,
    check_homogeneous,
    check_kernels,
]


def run_acceptance(quick=False, report=print):
    """Run every check, calling ``report`` with one line each; return the results."""
    results = []
    for check in CHECKS:
        result = check(quick=quick)
        if report is not None:
            report(result.line())
        results.append(result)
    return results
