"""Normalized Hermite functions and Gauss-Hermite quadrature.

The Hermite functions psi_n(xi) = (2^n n! sqrt(pi))^(-1/2) H_n(xi) exp(-xi^2/2)
are evaluated by the three-term recurrence on the normalized functions
themselves, with a running log-scale so neither the polynomial growth nor
the Gaussian underflow loses the result.
"""

import math
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from ..exceptions import ConvergenceError

__all__ = ["hermite_function", "hermite_functions", "gauss_hermite_rule"]

_LOG_PI_QUARTER = 0.25 * math.log(math.pi)
_RESCALE = 1e150


def _recurrence(nmax, xi, gaussian):
    """Yield psi_0..psi_nmax as (mantissa, log-scale) pairs.

    With ``gaussian`` False the exp(-xi^2/2) factor is left out, giving the
    polynomials p_n orthonormal under the weight exp(-xi^2).
    """
    xi = np.asarray(xi, dtype=float)
    logscale = np.full(xi.shape, -_LOG_PI_QUARTER)
    if gaussian:
        logscale = logscale - 0.5 * xi * xi
    prev = np.zeros_like(xi)
    cur = np.ones_like(xi)
    yield cur, logscale
    for n in range(nmax):
        nxt = math.sqrt(2.0 / (n + 1)) * xi * cur - math.sqrt(n / (n + 1)) * prev
        prev, cur = cur, nxt
        big = np.abs(cur) > _RESCALE
        if np.any(big):
            s = np.where(big, np.abs(cur), 1.0)
            cur = cur / s
            prev = prev / s
            logscale = logscale + np.log(s)
        yield cur, logscale


def _finish(mantissa, logscale):
    with np.errstate(over="ignore", under="ignore"):
        return mantissa * np.exp(logscale)


def hermite_function(n, xi):
    """Orthonormal harmonic-oscillator eigenfunction psi_n at ``xi``.

    Examples
    --------
    >>> round(float(hermite_function(0, 0.0)), 7)
    0.7511255
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for mantissa, logscale in _recurrence(n, xi, True):
        pass
    out = _finish(mantissa, logscale)
    return out if out.ndim else float(out)


def hermite_functions(nmax, xi, gaussian=True):
    """Array of psi_0..psi_nmax at ``xi``, shape (nmax + 1,) + xi.shape."""
    return np.array([_finish(m, s) for m, s in _recurrence(nmax, xi, gaussian)])


@lru_cache(maxsize=64)
def _rule(n):
    # Golub-Welsch guess, Newton polish on psi_n, Christoffel weights
    k = np.arange(1, n)
    guess = eigh_tridiagonal(np.zeros(n), np.sqrt(k / 2.0), eigvals_only=True)
    x = np.sort(guess)
    for _ in range(100):
        p = hermite_functions(n, x, gaussian=False)
        # p_n' = sqrt(2n) p_{n-1} for the weight-orthonormal polynomials
        dx = p[n] / (math.sqrt(2.0 * n) * p[n - 1])
        x = x - dx
        if np.max(np.abs(dx)) <= 4 * np.finfo(float).eps * max(1.0, np.max(np.abs(x))):
            break
    else:
        raise ConvergenceError(
            f"Gauss-Hermite node iteration failed for n = {n}",
            achieved=float(np.max(np.abs(dx))),
        )
    # symmetrize to kill rounding asymmetry
    x = 0.5 * (x - x[::-1])
    p = hermite_functions(n - 1, x, gaussian=False)
    w = 1.0 / np.sum(p * p, axis=0)
    w = 0.5 * (w + w[::-1])
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gauss_hermite_rule(n):
    """Nodes and weights integrating exp(-x^2) p(x) exactly for deg p <= 2n - 1.

    The returned arrays are cached and read-only; copy before modifying.
    """
    n = int(n)
    if n < 1:
        raise ValueError("a Gauss-Hermite rule needs at least one node")
    if n == 1:
        return np.zeros(1), np.array([math.sqrt(math.pi)])
    return _rule(n)
