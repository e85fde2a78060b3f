"""Orthonormal Jacobi polynomials and Legendre-Gauss-Lobatto nodes.

The polynomials are normalized to unit L2 norm on [-1, 1] with respect to
the weight (1-x)^alpha (1+x)^beta, which is what the three-term recurrence
below produces directly.
"""

import math

import numpy as np

from .errors import ConvergenceError

__all__ = [
    "jacobi_eval",
    "jacobi_eval_batch",
    "jacobi_table",
    "jacobi_deriv",
    "lgl_nodes",
]

MAX_ORDER = 40  # LGL degree cap; well beyond the p <= 10 production range


def _check_params(alpha: int, beta: int, n: int) -> None:
    if alpha < 0 or beta < 0 or n < 0:
        raise ValueError(f"invalid Jacobi parameters alpha={alpha} beta={beta} n={n}")


def _p0(alpha: int, beta: int) -> float:
    # exact rational under the square root for integer alpha, beta
    num = math.factorial(alpha + beta + 1)
    den = 2 ** (alpha + beta + 1) * math.factorial(alpha) * math.factorial(beta)
    return math.sqrt(num / den)


def _a_coef(n: int, alpha: int, beta: int) -> float:
    s = 2 * n + alpha + beta
    return (2.0 / s) * math.sqrt(
        n * (n + alpha + beta) * (n + alpha) * (n + beta) / ((s - 1.0) * (s + 1.0))
    )


def _b_coef(n: int, alpha: int, beta: int) -> float:
    s = 2 * n + alpha + beta
    return -(alpha**2 - beta**2) / (s * (s + 2.0))


def jacobi_table(alpha: int, beta: int, nmax: int, x) -> np.ndarray:
    """Evaluate orthonormal Jacobi polynomials of degree 0..nmax at x.

    Returns an array of shape (nmax+1,) + x.shape with one row per degree,
    computed by a single forward sweep of the three-term recurrence.
    """
    _check_params(alpha, beta, nmax)
    x = np.asarray(x, dtype=float)
    out = np.empty((nmax + 1,) + x.shape)
    out[0] = _p0(alpha, beta)
    if nmax == 0:
        return out
    out[1] = (
        0.5
        * out[0]
        * math.sqrt((alpha + beta + 3) / ((alpha + 1) * (beta + 1)))
        * ((alpha + beta + 2) * x + (alpha - beta))
    )
    a_prev = _a_coef(1, alpha, beta)
    for n in range(1, nmax):
        a_next = _a_coef(n + 1, alpha, beta)
        b_n = _b_coef(n, alpha, beta)
        out[n + 1] = (x * out[n] - a_prev * out[n - 1] - b_n * out[n]) / a_next
        a_prev = a_next
    return out


def jacobi_eval_batch(alpha: int, beta: int, n: int, xs) -> np.ndarray:
    """Orthonormal Jacobi polynomial of degree n at each point of xs."""
    xs = np.asarray(xs, dtype=float)
    if np.any(np.abs(xs) > 1.0 + 1e-12):
        raise ValueError("evaluation points must lie in [-1, 1]")
    return jacobi_table(alpha, beta, n, xs)[n]


def jacobi_eval(alpha: int, beta: int, n: int, x: float) -> float:
    """Orthonormal Jacobi polynomial of degree n at a single point."""
    return float(jacobi_eval_batch(alpha, beta, n, np.array([x]))[0])


def jacobi_deriv(alpha: int, beta: int, n: int, x) -> np.ndarray:
    """Derivative of the orthonormal Jacobi polynomial of degree n."""
    x = np.asarray(x, dtype=float)
    if n == 0:
        return np.zeros_like(x)
    scale = math.sqrt(n * (n + alpha + beta + 1))
    return scale * jacobi_table(alpha + 1, beta + 1, n - 1, x)[n - 1]


def lgl_nodes(p: int) -> np.ndarray:
    """Legendre-Gauss-Lobatto nodes of order p, ascending in [-1, 1].

    The p-1 interior nodes are the roots of P_{p-1}^{(1,1)}, found by Newton
    iteration from Chebyshev-Gauss-Lobatto initial guesses.  The returned
    array is exactly antisymmetric and has endpoints exactly +-1.
    """
    if not 1 <= p <= MAX_ORDER:
        raise ValueError(f"order must be in [1, {MAX_ORDER}], got {p}")
    if p == 1:
        return np.array([-1.0, 1.0])
    x = -np.cos(np.pi * np.arange(1, p) / p)
    for _ in range(100):
        f = jacobi_table(1, 1, p - 1, x)[p - 1]
        df = jacobi_deriv(1, 1, p - 1, x)
        dx = f / df
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    else:
        raise ConvergenceError(f"LGL Newton iteration did not converge for p={p}")
    x = 0.5 * (x - x[::-1])  # enforce exact antisymmetry
    return np.concatenate(([-1.0], x, [1.0]))
