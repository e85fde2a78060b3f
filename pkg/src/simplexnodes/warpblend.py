"""Warp-and-blend node construction on simplices of dimension 1-4.

The 1D warp moves equidistant nodes onto Legendre-Gauss-Lobatto positions;
higher dimensions apply it along facet tangent frames, weighted by rational
blending functions, recursively: pentatope facets are warped by the
tetrahedron rule, tetrahedron faces by the triangle rule.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidNodeError, OutsideSimplexError
from .geometry import NodeSet, bary_to_cart, cart_to_bary, equidistant_nodes
from .jacobi import lgl_nodes

__all__ = [
    "WarpParams",
    "Warp1D",
    "warp_1d",
    "warp_1d_modified",
    "triangle_warp",
    "triangle_warp_components",
    "tet_warp",
    "tet_warp_components",
    "pentatope_warp",
    "simplex_warp",
    "shifted_nodes",
    "TRIANGLE_TANGENTS",
    "TET_TANGENT_FRAMES",
    "PENTATOPE_TANGENT_FRAMES",
]

# A coordinate below this is "on the facet" for blend purposes.
ONFACET_TOL = 1e-10

_S2 = math.sqrt(2.0)
_S3 = math.sqrt(3.0)


@dataclass(frozen=True)
class WarpParams:
    """Amplification parameters per dimension (triangle, tet, pentatope)."""

    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0 or self.gamma < 0:
            raise ValueError("warp parameters must be >= 0")

    @classmethod
    def tied(cls, value: float) -> "WarpParams":
        """Single-parameter mode: alpha = beta = gamma."""
        return cls(alpha=value, beta=value, gamma=value)

    @property
    def tied_value(self) -> float | None:
        if self.alpha == self.beta == self.gamma:
            return self.alpha
        return None


def _bary_weights(x: np.ndarray) -> np.ndarray:
    w = np.empty(len(x))
    for j in range(len(x)):
        w[j] = 1.0 / np.prod(x[j] - np.delete(x, j))
    return w


def _bary_interp(x: np.ndarray, w: np.ndarray, f: np.ndarray, r: np.ndarray) -> np.ndarray:
    """Barycentric-form Lagrange interpolation, exact at the nodes."""
    diff = r[:, None] - x[None, :]
    hit = diff == 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        k = w[None, :] / diff
        out = (k * f[None, :]).sum(axis=1) / k.sum(axis=1)
    rows = hit.any(axis=1)
    if rows.any():
        out[rows] = f[np.argmax(hit[rows], axis=1)]
    return out


class Warp1D:
    """Degree-p displacement from equidistant to LGL nodes, and its
    (1 - r^2)-deflated form.

    The deflated quotient is a polynomial of degree p-2 (the displacement
    vanishes at both endpoints); it is represented by interpolation through
    its exact values at the interior equidistant nodes, so the endpoint
    limits come out of the same formula.
    """

    def __init__(self, p: int):
        self.p = p
        self.equidistant = -1.0 + 2.0 * np.arange(p + 1) / p
        self.lgl = lgl_nodes(p)
        self.displacement = self.lgl - self.equidistant
        self._fw = _bary_weights(self.equidistant)
        if p >= 2:
            xi = self.equidistant[1:-1]
            self._qx = xi
            self._qv = self.displacement[1:-1] / (1.0 - xi * xi)
            self._qw = _bary_weights(xi)

    def warp(self, r) -> np.ndarray:
        r = np.atleast_1d(np.asarray(r, dtype=float))
        if self.p == 1:
            return np.zeros_like(r)
        return _bary_interp(self.equidistant, self._fw, self.displacement, r)

    def warp_mod(self, r) -> np.ndarray:
        r = np.atleast_1d(np.asarray(r, dtype=float))
        if self.p == 1:
            return np.zeros_like(r)
        return _bary_interp(self._qx, self._qw, self._qv, r)


@lru_cache(maxsize=None)
def _warp1d(p: int) -> Warp1D:
    return Warp1D(p)


def warp_1d(p: int, r):
    """Displacement polynomial w(r); w(r_i^e) = r_i^LGL - r_i^e."""
    out = _warp1d(p).warp(r)
    return float(out[0]) if np.isscalar(r) else out


def warp_1d_modified(p: int, r):
    """Deflated warp w(r) / (1 - r^2), finite at r = +-1."""
    out = _warp1d(p).warp_mod(r)
    return float(out[0]) if np.isscalar(r) else out


# Edge warp argument (a, b) per triangle edge: warp_mod(lambda_a - lambda_b).
_TRI_EDGE_ARGS = ((2, 1), (0, 2), (1, 0))

TRIANGLE_TANGENTS = np.array([[1.0, 0.0], [-0.5, _S3 / 2.0], [-0.5, -_S3 / 2.0]])

# Facet frames: TET_TANGENT_FRAMES[f] rows are t^{f+1,1}, t^{f+1,2}.
TET_TANGENT_FRAMES = np.array(
    [
        [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
        [[1.0, 0.0, 0.0], [0.0, 1.0 / 3.0, 4.0 / (3.0 * _S2)]],
        [[-0.5, 3.0 / (2.0 * _S3), 0.0], [-1.0 / (2.0 * _S3), -1.0 / 6.0, 4.0 / (3.0 * _S2)]],
        [[0.5, 3.0 / (2.0 * _S3), 0.0], [1.0 / (2.0 * _S3), -1.0 / 6.0, 4.0 / (3.0 * _S2)]],
    ]
)

# Barycentric argument order handed to the triangle warp, one row per face.
_TET_FACE_ARGS = ((1, 2, 3), (0, 2, 3), (0, 3, 1), (0, 2, 1))

PENTATOPE_TANGENT_FRAMES = np.array(
    [
        [[1.0, 0, 0, 0], [0, 1.0, 0, 0], [0, 0, 1.0, 0]],
        [[1.0, 0, 0, 0], [0, 1.0, 0, 0], [0, 0, 0.25, math.sqrt(15.0) / 4.0]],
        [
            [1.0, 0, 0, 0],
            [0, 1.0 / 3.0, 4.0 / (3.0 * _S2), 0],
            [0, 1.0 / math.sqrt(18.0), -1.0 / 12.0, math.sqrt(15.0) / 4.0],
        ],
        [
            [-0.5, 3.0 / (2.0 * _S3), 0, 0],
            [-1.0 / (2.0 * _S3), -1.0 / 6.0, 4.0 / (3.0 * _S2), 0],
            [-math.sqrt(6.0) / 12.0, -_S2 / 12.0, -1.0 / 12.0, math.sqrt(15.0) / 4.0],
        ],
        [
            [0.5, 3.0 / (2.0 * _S3), 0, 0],
            [1.0 / (2.0 * _S3), -1.0 / 6.0, 4.0 / (3.0 * _S2), 0],
            [math.sqrt(6.0) / 12.0, -_S2 / 12.0, -1.0 / 12.0, math.sqrt(15.0) / 4.0],
        ],
    ]
)

_PENTA_FACET_ARGS = ((1, 2, 3, 4), (0, 2, 3, 4), (0, 1, 3, 4), (0, 1, 4, 2), (0, 1, 3, 2))


def _as_lambda_block(lam, k: int) -> tuple[np.ndarray, bool]:
    lam = np.asarray(lam, dtype=float)
    single = lam.ndim == 1
    lam = np.atleast_2d(lam)
    if lam.shape[1] != k:
        raise ValueError(f"expected {k} barycentric coordinates, got {lam.shape[1]}")
    return lam, single


def _triangle_warp_block(w1: Warp1D, alpha: float, lam: np.ndarray) -> np.ndarray:
    g = np.zeros((len(lam), 2))
    for f, (a, b) in enumerate(_TRI_EDGE_ARGS):
        wt = w1.warp_mod(lam[:, a] - lam[:, b])
        blend = 4.0 * lam[:, a] * lam[:, b]
        amp = 1.0 + (alpha * lam[:, f]) ** 2
        g += (amp * blend * wt)[:, None] * TRIANGLE_TANGENTS[f]
    return g


def _facet_warp_block(d: int, w1: Warp1D, params: WarpParams, lam: np.ndarray) -> np.ndarray:
    """Combined warp for d in {3, 4}; lam is (n, d+1), result (n, d)."""
    frames = TET_TANGENT_FRAMES if d == 3 else PENTATOPE_TANGENT_FRAMES
    args = _TET_FACE_ARGS if d == 3 else _PENTA_FACET_ARGS
    theta = params.beta if d == 3 else params.gamma
    n = len(lam)
    nf = d + 1
    # tangential warp of every facet at every point, in the ambient frame
    wf = np.empty((nf, n, d))
    for f in range(nf):
        comp = _simplex_warp_block(d - 1, w1, params, lam[:, args[f]])
        wf[f] = comp @ frames[f]
    onfacet = lam < ONFACET_TOL
    nzero = onfacet.sum(axis=1)
    g = np.zeros((n, d))
    interior = nzero == 0
    if interior.any():
        gl = lam[interior]
        acc = np.zeros((int(interior.sum()), d))
        for f in range(nf):
            b = np.ones(len(gl))
            for a in range(nf):
                if a != f:
                    b *= 2.0 * gl[:, a] / (2.0 * gl[:, a] + gl[:, f])
            amp = 1.0 + (theta * gl[:, f]) ** 2
            acc += (amp * b)[:, None] * wf[f][interior]
        g[interior] = acc
    boundary = np.where(nzero > 0)[0]
    if len(boundary):
        # On facet f the blend b^f has limit 1 and every other blend
        # vanishes, so the point takes the full tangential warp w^f.  On a
        # ridge (>= 2 vanishing coordinates) the rational blends are 0/0;
        # all facets containing the ridge produce the same tangential warp
        # there, so the lowest-indexed one is used.
        fstar = np.argmax(onfacet[boundary], axis=1)
        for f in range(nf):
            rows = boundary[fstar == f]
            g[rows] = wf[f][rows]
    return g


def _simplex_warp_block(d: int, w1: Warp1D, params: WarpParams, lam: np.ndarray) -> np.ndarray:
    if d == 2:
        return _triangle_warp_block(w1, params.alpha, lam)
    return _facet_warp_block(d, w1, params, lam)


def simplex_warp(d: int, p: int, params: WarpParams, lam) -> np.ndarray:
    """Combined warp/blend displacement for d in {2, 3, 4}.

    ``lam`` is one barycentric tuple or an (n, d+1) block; the result is the
    displacement in the reference coordinates of the d-simplex.
    """
    if d not in (2, 3, 4):
        raise ValueError(f"combined warp is defined for d in 2..4, got {d}")
    lam, single = _as_lambda_block(lam, d + 1)
    g = _simplex_warp_block(d, _warp1d(p), params, lam)
    return g[0] if single else g


def triangle_warp(p: int, params: WarpParams, lam) -> np.ndarray:
    """Triangle warp/blend displacement (2-vector per point)."""
    return simplex_warp(2, p, params, lam)


def triangle_warp_components(p: int, params: WarpParams, lam) -> np.ndarray:
    """Scalar components (g1, g2) of the triangle warp in its own frame.

    The triangle's tangent frame is the identity in its reference
    coordinates, so the components coincide with triangle_warp.
    """
    return triangle_warp(p, params, lam)


def tet_warp(p: int, params: WarpParams, lam) -> np.ndarray:
    """Tetrahedron warp/blend displacement (3-vector per point)."""
    return simplex_warp(3, p, params, lam)


def tet_warp_components(p: int, params: WarpParams, lam) -> np.ndarray:
    """Scalar components (g1, g2, g3) of the tetrahedron warp in its frame."""
    return tet_warp(p, params, lam)


def pentatope_warp(p: int, params: WarpParams, lam) -> np.ndarray:
    """Pentatope warp/blend displacement (4-vector per point)."""
    return simplex_warp(4, p, params, lam)


def shifted_nodes(d: int, p: int, params: WarpParams | float = 0.0) -> NodeSet:
    """Warped-and-blended node set for (d, p).

    ``params`` may be a WarpParams or a single float, which ties
    alpha = beta = gamma.  For d=1 the construction reduces to the LGL
    distribution exactly.
    """
    if isinstance(params, (int, float)):
        params = WarpParams.tied(float(params))
    if d == 1:
        r = -1.0 + 2.0 * np.arange(p + 1) / p + _warp1d(p).displacement  # = LGL exactly
        lam = np.stack([(1.0 - r) / 2.0, (1.0 + r) / 2.0], axis=1)
        return NodeSet(d=1, p=p, bary=lam, cart=r[:, None], ordering="lattice-nested-warped",
                       alpha=params.tied_value)
    base = equidistant_nodes(d, p)
    shifted = base.cart + simplex_warp(d, p, params, base.bary)
    try:
        lam = cart_to_bary(d, shifted)
    except OutsideSimplexError as exc:
        raise InvalidNodeError(f"warped node left the simplex for d={d} p={p}: {exc}") from exc
    # snap facet zeros: the construction keeps boundary nodes on their
    # boundary, so sub-1e-13 residues are inversion roundoff
    lam[np.abs(lam) < 1e-13] = 0.0
    lam /= lam.sum(axis=1, keepdims=True)
    return NodeSet(d=d, p=p, bary=lam, cart=bary_to_cart(d, lam), ordering="lattice-nested-warped",
                   alpha=params.tied_value)
