"""Reference simplices of dimension 1-4 and equidistant node lattices.

The reference elements are the equilateral/equi-facetal simplices with all
edge lengths equal to 2.  Barycentric weights are paired with vertices in a
dimension-specific permuted order; the pairing is part of the published
construction and must not be "fixed", since the warp machinery and the node
tables depend on it.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import OutsideSimplexError

__all__ = [
    "ReferenceSimplex",
    "NodeSet",
    "reference_simplex",
    "node_count",
    "bary_to_cart",
    "cart_to_bary",
    "equidistant_nodes",
    "lattice_multi_indices",
    "barycentric_lattice_blocks",
    "check_barycentric",
]

_S3 = math.sqrt(3.0)
_S6 = math.sqrt(6.0)
_S10 = math.sqrt(10.0)

# Vertex coordinates of the reference simplices (rows are v1, v2, ...).
_VERTICES = {
    1: np.array([[-1.0], [1.0]]),
    2: np.array([[-1.0, -1.0 / _S3], [1.0, -1.0 / _S3], [0.0, 2.0 / _S3]]),
    3: np.array(
        [
            [-1.0, -1.0 / _S3, -1.0 / _S6],
            [1.0, -1.0 / _S3, -1.0 / _S6],
            [0.0, 2.0 / _S3, -1.0 / _S6],
            [0.0, 0.0, 3.0 / _S6],
        ]
    ),
    4: np.array(
        [
            [-1.0, -1.0 / _S3, -1.0 / _S6, -1.0 / _S10],
            [1.0, -1.0 / _S3, -1.0 / _S6, -1.0 / _S10],
            [0.0, 2.0 / _S3, -1.0 / _S6, -1.0 / _S10],
            [0.0, 0.0, 3.0 / _S6, -1.0 / _S10],
            [0.0, 0.0, 0.0, 4.0 / _S10],
        ]
    ),
}

# _PAIRING[d][k] = 0-based barycentric index that weights vertex v_{k+1}.
# 2D: r = l2*v1 + l3*v2 + l1*v3; 3D: r = l3*v1 + l4*v2 + l2*v3 + l1*v4;
# 4D: r = l4*v1 + l5*v2 + l3*v3 + l2*v4 + l1*v5.
_PAIRING = {
    1: (0, 1),
    2: (1, 2, 0),
    3: (2, 3, 1, 0),
    4: (3, 4, 2, 1, 0),
}

# Lattice slot maps: the loop indices (i, j, ...) fill these barycentric
# slots as i/p, j/p, ...; the remaining slot is the dependent coordinate.
_FREE_SLOTS = {1: (1,), 2: (0, 2), 3: (0, 1, 3), 4: (0, 1, 2, 4)}
_DEPENDENT_SLOT = {1: 0, 2: 1, 3: 2, 4: 3}

BARY_TOL = 1e-12


@dataclass(frozen=True)
class ReferenceSimplex:
    """Reference d-simplex with its barycentric-to-vertex pairing."""

    d: int
    vertices: np.ndarray  # (d+1, d), rows are v1..v_{d+1}
    pairing: tuple  # pairing[k] = barycentric index weighting vertex k

    @property
    def weight_matrix(self) -> np.ndarray:
        """(d+1, d) matrix M with row j = vertex weighted by lambda_j."""
        M = np.empty((self.d + 1, self.d))
        for k in range(self.d + 1):
            M[self.pairing[k]] = self.vertices[k]
        return M


@dataclass(frozen=True)
class NodeSet:
    """Ordered interpolation node set in barycentric and Cartesian form."""

    d: int
    p: int
    bary: np.ndarray  # (N, d+1)
    cart: np.ndarray  # (N, d)
    ordering: str = "lattice"
    alpha: float | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.bary)


@lru_cache(maxsize=None)
def reference_simplex(d: int) -> ReferenceSimplex:
    """The reference simplex of dimension d in {1, 2, 3, 4}."""
    if d not in _VERTICES:
        raise ValueError(f"dimension must be 1..4, got {d}")
    return ReferenceSimplex(d=d, vertices=_VERTICES[d], pairing=_PAIRING[d])


def node_count(d: int, p: int) -> int:
    """Number of nodes N_p = (1/d!) prod_{k=1..d} (p+k)."""
    if d not in _VERTICES:
        raise ValueError(f"dimension must be 1..4, got {d}")
    if p < 1:
        raise ValueError(f"order must be >= 1, got {p}")
    return math.comb(p + d, d)


def check_barycentric(lam, d: int, tol: float = BARY_TOL) -> np.ndarray:
    """Validate and return barycentric coordinates as a (n, d+1) array."""
    lam = np.atleast_2d(np.asarray(lam, dtype=float))
    if lam.shape[1] != d + 1:
        raise ValueError(f"expected {d + 1} barycentric coordinates, got {lam.shape[1]}")
    if np.any(lam < -tol) or np.any(lam > 1.0 + tol):
        raise OutsideSimplexError("barycentric coordinates outside [0, 1]")
    if np.max(np.abs(lam.sum(axis=1) - 1.0)) > tol:
        raise OutsideSimplexError("barycentric coordinates do not sum to 1")
    return lam


def bary_to_cart(d: int, lam) -> np.ndarray:
    """Map barycentric coordinates to reference Cartesian coordinates."""
    lam = np.asarray(lam, dtype=float)
    single = lam.ndim == 1
    lam2 = check_barycentric(lam, d)
    r = lam2 @ reference_simplex(d).weight_matrix
    return r[0] if single else r


@lru_cache(maxsize=None)
def _affine_system(d: int):
    M = np.empty((d + 1, d + 1))
    M[:d] = reference_simplex(d).weight_matrix.T
    M[d] = 1.0
    return np.linalg.inv(M)


def cart_to_bary(d: int, r, tol: float = 1e-9) -> np.ndarray:
    """Invert the affine map; raises OutsideSimplexError if any lambda < -tol."""
    r = np.asarray(r, dtype=float)
    single = r.ndim == 1
    r2 = np.atleast_2d(r)
    if r2.shape[1] != d:
        raise ValueError(f"expected {d}-dimensional points, got {r2.shape[1]}")
    rhs = np.concatenate([r2, np.ones((len(r2), 1))], axis=1)
    lam = rhs @ _affine_system(d).T
    if np.any(lam < -tol):
        raise OutsideSimplexError(f"point outside simplex: min lambda = {lam.min():.3e}")
    return lam[0] if single else lam


def _lattice_2d(n: int) -> np.ndarray:
    """(i, j) >= 0 with i + j <= n, loop order i then j."""
    counts = np.arange(n + 1, 0, -1)
    i = np.repeat(np.arange(n + 1), counts)
    starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
    j = np.arange(counts.sum()) - np.repeat(starts, counts)
    return np.stack([i, j], axis=1)


def _lattice_nd(d: int, n: int) -> np.ndarray:
    """Multi-indices of the d-dimensional lattice, nested-loop order."""
    if d == 1:
        return np.arange(n + 1)[:, None]
    if d == 2:
        return _lattice_2d(n)
    chunks = []
    for i in range(n + 1):
        sub = _lattice_nd(d - 1, n - i)
        chunk = np.empty((len(sub), d), dtype=sub.dtype)
        chunk[:, 0] = i
        chunk[:, 1:] = sub
        chunks.append(chunk)
    return np.concatenate(chunks, axis=0)


def lattice_multi_indices(d: int, n: int) -> np.ndarray:
    """All (i1..id) >= 0 with sum <= n, enumerated i1-outermost.

    This single enumeration order defines node ordering, modal-index
    ordering, and sample-grid ordering.
    """
    if d not in _VERTICES:
        raise ValueError(f"dimension must be 1..4, got {d}")
    if n < 0:
        raise ValueError("lattice size must be >= 0")
    return _lattice_nd(d, n)


def _bary_from_multi(d: int, mi: np.ndarray, n: int) -> np.ndarray:
    lam = np.zeros((len(mi), d + 1))
    for col, slot in enumerate(_FREE_SLOTS[d]):
        lam[:, slot] = mi[:, col] / n
    lam[:, _DEPENDENT_SLOT[d]] = 1.0 - lam.sum(axis=1)
    return lam


def barycentric_lattice_blocks(d: int, n: int, block_size: int):
    """Yield barycentric lattice points with spacing 1/n in fixed-size blocks.

    Blocks are (m, d+1) float arrays in enumeration order; all blocks except
    the last have exactly block_size rows, so block partitioning (and hence
    any parallel reduction over blocks) is deterministic.
    """
    if block_size < 1:
        raise ValueError("block_size must be >= 1")
    pending = []
    pending_rows = 0
    if d == 1:
        outer_sizes = [n + 1]
        chunks = iter([lattice_multi_indices(1, n)])
    else:
        def chunk_gen():
            for i in range(n + 1):
                sub = _lattice_nd(d - 1, n - i)
                chunk = np.empty((len(sub), d), dtype=sub.dtype)
                chunk[:, 0] = i
                chunk[:, 1:] = sub
                yield chunk
        chunks = chunk_gen()
    for chunk in chunks:
        pending.append(_bary_from_multi(d, chunk, n))
        pending_rows += len(chunk)
        if pending_rows >= block_size:
            buf = np.concatenate(pending, axis=0) if len(pending) > 1 else pending[0]
            full = (len(buf) // block_size) * block_size
            for s in range(0, full, block_size):
                yield buf[s:s + block_size]
            pending = [buf[full:]] if full < len(buf) else []
            pending_rows = len(buf) - full
    if pending_rows:
        yield np.concatenate(pending, axis=0) if len(pending) > 1 else pending[0]


def equidistant_nodes(d: int, p: int) -> NodeSet:
    """Equidistant lattice nodes for (d, p) in enumeration order."""
    if not 1 <= p <= 20:
        raise ValueError(f"order must be in [1, 20], got {p}")
    mi = lattice_multi_indices(d, p)
    lam = _bary_from_multi(d, mi, p)
    return NodeSet(d=d, p=p, bary=lam, cart=bary_to_cart(d, lam), ordering="lattice-nested")
