"""Vandermonde systems and Lagrange basis evaluation.

V[i][j] = psi_j(r_i) connects the modal and nodal representations; the
Lagrange basis at any point solves V^T l = psi(r).  One LU factorization of
V^T serves every subsequent evaluation, which is the hot path of the
Lebesgue sweeps.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import lu_factor, lu_solve
from scipy.spatial import cKDTree

from .errors import SingularMatrixError
from .geometry import NodeSet, cart_to_bary, check_barycentric, node_count
from .modal import modal_matrix

__all__ = ["VandermondeSystem", "build_vandermonde", "lagrange_eval", "lagrange_eval_batch"]

DISTINCT_TOL = 1e-12
PIVOT_TOL = 1e-13


@dataclass(frozen=True)
class VandermondeSystem:
    """Immutable factorized Vandermonde system for one node set."""

    d: int
    p: int
    nodes: NodeSet
    matrix: np.ndarray  # (N, N), V[i][j] = psi_{j+1}(r_i)
    lu: np.ndarray  # LU factors of V^T
    piv: np.ndarray
    log_abs_det: float
    condition_estimate: float

    @property
    def abs_det(self) -> float:
        return float(np.exp(self.log_abs_det))

    @property
    def n(self) -> int:
        return len(self.matrix)


def _condition_estimate_1norm(lu, piv, a_norm1: float, n: int, iters: int = 5) -> float:
    """Hager-style 1-norm condition estimate using the stored factorization."""
    x = np.full(n, 1.0 / n)
    est = 0.0
    for _ in range(iters):
        y = lu_solve((lu, piv), x)
        est = max(est, float(np.abs(y).sum()))
        xi = np.sign(y)
        xi[xi == 0.0] = 1.0
        z = lu_solve((lu, piv), xi, trans=1)
        j = int(np.argmax(np.abs(z)))
        if np.abs(z[j]) <= z @ x:
            break
        x = np.zeros(n)
        x[j] = 1.0
    return est * a_norm1


def build_vandermonde(nodes: NodeSet) -> VandermondeSystem:
    """Build and factorize the Vandermonde system of a node set.

    Raises SingularMatrixError for duplicated nodes or a pivot breakdown.
    """
    expected = node_count(nodes.d, nodes.p)
    if len(nodes) != expected:
        raise ValueError(f"node set has {len(nodes)} nodes, expected {expected}")
    dist, _ = cKDTree(nodes.cart).query(nodes.cart, k=2)
    if dist[:, 1].min() <= DISTINCT_TOL:
        raise SingularMatrixError(
            f"duplicate nodes (min pairwise distance {dist[:, 1].min():.2e})"
        )
    V = modal_matrix(nodes.d, nodes.p, nodes.bary)
    lu, piv = lu_factor(V.T)
    diag = np.abs(np.diag(lu))
    vmax = np.abs(V).max()
    if diag.min() < PIVOT_TOL * vmax:
        raise SingularMatrixError(
            f"pivot {diag.min():.2e} below {PIVOT_TOL:.0e} * max|V|; node set is degenerate"
        )
    log_abs_det = float(np.log(diag).sum())
    cond = _condition_estimate_1norm(lu, piv, float(np.abs(V.T).sum(axis=0).max()), len(V))
    return VandermondeSystem(
        d=nodes.d,
        p=nodes.p,
        nodes=nodes,
        matrix=V,
        lu=lu,
        piv=piv,
        log_abs_det=log_abs_det,
        condition_estimate=cond,
    )


def _as_bary_block(d: int, rs) -> np.ndarray:
    """Accept (n, d+1) barycentric or (n, d) reference-Cartesian points."""
    rs = np.atleast_2d(np.asarray(rs, dtype=float))
    if rs.shape[1] == d + 1:
        return check_barycentric(rs, d)
    if rs.shape[1] == d:
        return cart_to_bary(d, rs)
    raise ValueError(f"points must have {d} (Cartesian) or {d + 1} (barycentric) columns")


def lagrange_eval_batch(system: VandermondeSystem, rs) -> np.ndarray:
    """Lagrange basis values at many points; rows ordered like the nodes.

    ``rs`` is (n, d+1) barycentric or (n, d) Cartesian in the reference
    element of the system's node set.
    """
    lam = _as_bary_block(system.d, rs)
    psi = modal_matrix(system.d, system.p, lam)
    return lu_solve((system.lu, system.piv), psi.T).T


def lagrange_eval(system: VandermondeSystem, r) -> np.ndarray:
    """Lagrange basis values at a single point (same path as the batch op)."""
    r = np.asarray(r, dtype=float)
    if r.ndim == 0:
        if system.d != 1:
            raise ValueError("scalar points are only valid for d=1")
        r = r[None]
    return lagrange_eval_batch(system, r[None, :])[0]
