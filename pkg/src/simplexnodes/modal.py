"""Collapsed coordinates and orthonormal modal bases on simplices, d = 1..4.

The modal basis lives on the bi-unit right simplex (the "modal domain"):
the interval [-1, 1], the triangle {r, s >= -1, r + s <= 0}, the
tetrahedron {r + s + t <= -1} and the pentatope {r + s + t + u <= -2}.
That is the unique domain on which the printed collapsed-coordinate maps
produce values in [-1, 1] and the basis is orthonormal.  Points are usually
supplied in barycentric form, which is shared with the equilateral
reference elements used for node generation.
"""

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .geometry import check_barycentric, lattice_multi_indices, node_count
from .jacobi import jacobi_table

__all__ = [
    "collapse",
    "collapsed_from_bary",
    "indexing_coefficients",
    "modal_index",
    "multi_indices",
    "modal_basis_eval",
    "modal_basis_vector",
    "modal_matrix",
    "modal_domain_vertices",
    "bary_to_modal",
    "modal_to_bary",
]

SINGULAR_TOL = 1e-10

# Modal-domain vertices, paired with barycentric indices exactly like the
# equilateral elements (geometry._PAIRING), so that lambda^1 always weights
# the collapse apex.
_MODAL_VERTICES = {
    1: np.array([[-1.0], [1.0]]),
    2: np.array([[-1.0, -1.0], [1.0, -1.0], [-1.0, 1.0]]),
    3: np.array(
        [[-1.0, -1.0, -1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]
    ),
    4: np.array(
        [
            [-1.0, -1.0, -1.0, -1.0],
            [1.0, -1.0, -1.0, -1.0],
            [-1.0, 1.0, -1.0, -1.0],
            [-1.0, -1.0, 1.0, -1.0],
            [-1.0, -1.0, -1.0, 1.0],
        ]
    ),
}
_PAIRING = {1: (0, 1), 2: (1, 2, 0), 3: (2, 3, 1, 0), 4: (3, 4, 2, 1, 0)}

# Leading normalization constant of the basis product per dimension.
_LEAD = {1: 1.0, 2: math.sqrt(2.0), 3: 2.0 * math.sqrt(2.0), 4: 8.0}


def modal_domain_vertices(d: int) -> np.ndarray:
    """Vertices of the modal-domain (right) simplex, rows v1..v_{d+1}."""
    if d not in _MODAL_VERTICES:
        raise ValueError(f"dimension must be 1..4, got {d}")
    return _MODAL_VERTICES[d]


@lru_cache(maxsize=None)
def _modal_weight_matrix(d: int) -> np.ndarray:
    M = np.empty((d + 1, d))
    for k in range(d + 1):
        M[_PAIRING[d][k]] = _MODAL_VERTICES[d][k]
    return M


@lru_cache(maxsize=None)
def _modal_affine_inverse(d: int) -> np.ndarray:
    M = np.empty((d + 1, d + 1))
    M[:d] = _modal_weight_matrix(d).T
    M[d] = 1.0
    return np.linalg.inv(M)


def bary_to_modal(d: int, lam) -> np.ndarray:
    """Map barycentric coordinates to modal-domain Cartesian coordinates."""
    lam = np.asarray(lam, dtype=float)
    single = lam.ndim == 1
    r = np.atleast_2d(lam) @ _modal_weight_matrix(d)
    return r[0] if single else r


def modal_to_bary(d: int, r) -> np.ndarray:
    """Barycentric coordinates of modal-domain Cartesian points."""
    r = np.asarray(r, dtype=float)
    single = r.ndim == 1
    r2 = np.atleast_2d(r)
    rhs = np.concatenate([r2, np.ones((len(r2), 1))], axis=1)
    lam = rhs @ _modal_affine_inverse(d).T
    return lam[0] if single else lam


def collapse(d: int, r) -> tuple:
    """Collapsed coordinates of a modal-domain point.

    Coordinates with a singular denominator (|den| < SINGULAR_TOL) take the
    limit value -1; the basis factors that multiply the affected Jacobi
    polynomial vanish there whenever its degree is positive.
    """
    r = np.asarray(r, dtype=float)
    if r.shape != (d,):
        raise ValueError(f"expected a {d}-dimensional point, got shape {r.shape}")

    def coord(num: float, den: float, sign: float) -> float:
        # whole collapsed coordinate takes the limit -1 at singular denominators
        if abs(den) < SINGULAR_TOL:
            return -1.0
        return sign * 2.0 * num / den - 1.0

    if d == 1:
        return (float(r[0]),)
    if d == 2:
        x, s = r
        return (coord(1.0 + x, 1.0 - s, +1.0), float(s))
    if d == 3:
        x, s, t = r
        a = coord(1.0 + x, s + t, -1.0)
        b = coord(1.0 + s, 1.0 - t, +1.0)
        return (a, b, float(t))
    if d == 4:
        x, s, t, u = r
        a = coord(1.0 + x, s + t + u + 1.0, -1.0)
        b = coord(1.0 + s, t + u, -1.0)
        c = coord(1.0 + t, 1.0 - u, +1.0)
        return (a, b, c, float(u))
    raise ValueError(f"dimension must be 1..4, got {d}")


def _guarded(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    out = np.full(num.shape, -1.0)
    ok = den > SINGULAR_TOL
    out[ok] = 2.0 * num[ok] / den[ok] - 1.0
    return out


def collapsed_from_bary(d: int, lam: np.ndarray) -> tuple:
    """Vectorized collapsed coordinates from barycentric blocks.

    Algebraically identical to mapping to the modal domain and applying
    collapse(); the barycentric form keeps the denominators nonnegative.
    """
    lam = np.atleast_2d(np.asarray(lam, dtype=float))
    if d == 1:
        return (2.0 * lam[:, 1] - 1.0,)
    if d == 2:
        a = _guarded(lam[:, 2], lam[:, 1] + lam[:, 2])
        return (a, 2.0 * lam[:, 0] - 1.0)
    if d == 3:
        a = _guarded(lam[:, 3], lam[:, 2] + lam[:, 3])
        b = _guarded(lam[:, 1], lam[:, 1] + lam[:, 2] + lam[:, 3])
        return (a, b, 2.0 * lam[:, 0] - 1.0)
    if d == 4:
        a = _guarded(lam[:, 4], lam[:, 3] + lam[:, 4])
        b = _guarded(lam[:, 2], lam[:, 2] + lam[:, 3] + lam[:, 4])
        c = _guarded(lam[:, 1], lam[:, 1] + lam[:, 2] + lam[:, 3] + lam[:, 4])
        return (a, b, c, 2.0 * lam[:, 0] - 1.0)
    raise ValueError(f"dimension must be 1..4, got {d}")


def indexing_coefficients(p: int) -> tuple:
    """The 15 coefficients C1..C15 of the 4D index formula, as Fractions."""
    if p < 1:
        raise ValueError(f"order must be >= 1, got {p}")
    return (
        Fraction(2 * p**3 + 15 * p**2 + 35 * p + 25, 12),
        Fraction(-(6 * p**2 + 30 * p + 35), 24),
        Fraction(2 * p + 5, 12),
        Fraction(-1, 24),
        Fraction(3 * p**2 + 12 * p + 11, 6),
        Fraction(-(p + 2)),
        Fraction(1, 2),
        Fraction(-(p + 2), 2),
        Fraction(1, 2),
        Fraction(1, 6),
        Fraction(2 * p + 3, 2),
        Fraction(-1),
        Fraction(-1),
        Fraction(-1, 2),
        Fraction(1),
    )


def _check_multi_index(d: int, p: int, mi) -> tuple:
    mi = tuple(int(v) for v in mi)
    if len(mi) < d or any(v != 0 for v in mi[d:]):
        raise IndexError(f"multi-index {mi} invalid for dimension {d}")
    mi = mi[:d]
    if any(v < 0 for v in mi) or sum(mi) > p:
        raise IndexError(f"multi-index {mi} out of bounds for p={p}")
    return mi


def modal_index(d: int, p: int, mi) -> int:
    """Scalar modal index m in [1, N_p] of a multi-index, 1-based.

    All arithmetic is done on integers (the 4D formula is premultiplied by
    24) so the map is exact at any order.
    """
    mi = _check_multi_index(d, p, mi)
    if d == 1:
        (i,) = mi
        return 1 + i
    if d == 2:
        i, j = mi
        twice = (2 * p + 3) * i - i * i + 2 * j
        assert twice % 2 == 0
        return 1 + twice // 2
    if d == 3:
        i, j, k = mi
        six = (
            (3 * p**2 + 12 * p + 11) * i
            - 3 * (p + 2) * i**2
            + i**3
            + 3 * (2 * p + 3) * j
            - 3 * j**2
            - 6 * i * j
            + 6 * k
        )
        assert six % 6 == 0
        return 1 + six // 6
    i, j, k, q = mi
    scaled = (
        2 * (2 * p**3 + 15 * p**2 + 35 * p + 25) * i
        - (6 * p**2 + 30 * p + 35) * i**2
        + 2 * (2 * p + 5) * i**3
        - i**4
        + 4 * (3 * p**2 + 12 * p + 11) * j
        - 24 * (p + 2) * i * j
        + 12 * i**2 * j
        - 12 * (p + 2) * j**2
        + 12 * i * j**2
        + 4 * j**3
        + 12 * (2 * p + 3) * k
        - 24 * i * k
        - 24 * j * k
        - 12 * k**2
        + 24 * q
    )
    assert scaled % 24 == 0, "24-scaled index sum must be an exact integer"
    return 1 + scaled // 24


def multi_indices(d: int, p: int) -> np.ndarray:
    """All admissible multi-indices in enumeration (= modal index) order."""
    return lattice_multi_indices(d, p)


def _as_bary_point(d: int, r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if r.shape == (d + 1,):
        return check_barycentric(r, d)[0]
    if r.shape == (d,):
        return modal_to_bary(d, r)
    raise ValueError(f"expected a barycentric ({d + 1},) or modal-domain ({d},) point")


def modal_basis_eval(d: int, p: int, mi, r) -> float:
    """One modal basis function at one point.

    ``r`` may be barycentric (d+1 values) or modal-domain Cartesian
    (d values).
    """
    mi = _check_multi_index(d, p, mi)
    lam = _as_bary_point(d, r)
    cc = [float(v[0]) for v in collapsed_from_bary(d, lam[None, :])]
    if d == 1:
        (i,) = mi
        return float(jacobi_table(0, 0, i, np.array(cc[0]))[i]) * _LEAD[1]
    if d == 2:
        i, j = mi
        a, b = cc
        val = jacobi_table(0, 0, i, np.array(a))[i] * jacobi_table(2 * i + 1, 0, j, np.array(b))[j]
        return float(_LEAD[2] * val * (1.0 - b) ** i)
    if d == 3:
        i, j, k = mi
        a, b, c = cc
        val = (
            jacobi_table(0, 0, i, np.array(a))[i]
            * jacobi_table(2 * i + 1, 0, j, np.array(b))[j]
            * jacobi_table(2 * i + 2 * j + 2, 0, k, np.array(c))[k]
        )
        return float(_LEAD[3] * val * (1.0 - b) ** i * (1.0 - c) ** (i + j))
    i, j, k, q = mi
    a, b, c, e = cc
    val = (
        jacobi_table(0, 0, i, np.array(a))[i]
        * jacobi_table(2 * i + 1, 0, j, np.array(b))[j]
        * jacobi_table(2 * i + 2 * j + 2, 0, k, np.array(c))[k]
        * jacobi_table(2 * (i + j + k) + 3, 0, q, np.array(e))[q]
    )
    return float(
        _LEAD[4] * val * (1.0 - b) ** i * (1.0 - c) ** (i + j) * (1.0 - e) ** (i + j + k)
    )


def _powers(base: np.ndarray, pmax: int) -> np.ndarray:
    """pow[k] = base**k for k = 0..pmax, shape (pmax+1, n)."""
    out = np.empty((pmax + 1, base.size))
    out[0] = 1.0
    for k in range(1, pmax + 1):
        out[k] = out[k - 1] * base
    return out


def modal_matrix(d: int, p: int, lam) -> np.ndarray:
    """All N_p modal basis functions at a block of barycentric points.

    Returns an (n, N_p) array whose column m-1 is psi_m; this is the hot
    path shared by Vandermonde assembly and Lebesgue sweeps.
    """
    lam = np.atleast_2d(np.asarray(lam, dtype=float))
    n = len(lam)
    mis = multi_indices(d, p)
    out = np.empty((n, len(mis)))
    cc = collapsed_from_bary(d, lam)
    if d == 1:
        A = jacobi_table(0, 0, p, cc[0])
        out[:] = A[mis[:, 0]].T
        return out
    if d == 2:
        a, b = cc
        A = jacobi_table(0, 0, p, a)
        B = {i: jacobi_table(2 * i + 1, 0, p - i, b) for i in range(p + 1)}
        pb = _powers(1.0 - b, p)
        for col, (i, j) in enumerate(mis):
            out[:, col] = _LEAD[2] * A[i] * B[i][j] * pb[i]
        return out
    if d == 3:
        a, b, c = cc
        A = jacobi_table(0, 0, p, a)
        B = {i: jacobi_table(2 * i + 1, 0, p - i, b) for i in range(p + 1)}
        C = {s: jacobi_table(2 * s + 2, 0, p - s, c) for s in range(p + 1)}
        pb = _powers(1.0 - b, p)
        pc = _powers(1.0 - c, p)
        for col, (i, j, k) in enumerate(mis):
            out[:, col] = _LEAD[3] * A[i] * B[i][j] * C[i + j][k] * pb[i] * pc[i + j]
        return out
    a, b, c, e = cc
    A = jacobi_table(0, 0, p, a)
    B = {i: jacobi_table(2 * i + 1, 0, p - i, b) for i in range(p + 1)}
    C = {s: jacobi_table(2 * s + 2, 0, p - s, c) for s in range(p + 1)}
    E = {s: jacobi_table(2 * s + 3, 0, p - s, e) for s in range(p + 1)}
    pb = _powers(1.0 - b, p)
    pc = _powers(1.0 - c, p)
    pe = _powers(1.0 - e, p)
    for col, (i, j, k, q) in enumerate(mis):
        s2 = i + j
        s3 = s2 + k
        out[:, col] = _LEAD[4] * A[i] * B[i][j] * C[s2][k] * E[s3][q] * pb[i] * pc[s2] * pe[s3]
    return out


def modal_basis_vector(d: int, p: int, r) -> np.ndarray:
    """All N_p modal basis values at one point, ordered by modal index."""
    lam = _as_bary_point(d, r)
    vec = modal_matrix(d, p, lam[None, :])[0]
    assert vec.shape == (node_count(d, p),)
    return vec
