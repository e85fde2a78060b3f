"""Symmetric, Lebesgue-optimized interpolation nodes on simplices (d = 1..4).

Warp-and-blend construction: equidistant lattices are displaced onto
Legendre-Gauss-Lobatto-seeded distributions by explicit geometric warping
and blending functions, then rated and optimized by their Lebesgue
constants.
"""

from .errors import (
    ConvergenceError,
    InvalidNodeError,
    NodesFileError,
    OutsideSimplexError,
    SimplexNodesError,
    SingularMatrixError,
)
from .geometry import (
    NodeSet,
    ReferenceSimplex,
    bary_to_cart,
    cart_to_bary,
    equidistant_nodes,
    node_count,
    reference_simplex,
)
from .jacobi import jacobi_eval, jacobi_eval_batch, lgl_nodes
from .lebesgue import (
    LebesgueReport,
    SampleGrid,
    lebesgue_constant,
    lebesgue_constant_many,
    lebesgue_function,
    sample_grid,
)
from .modal import (
    collapse,
    indexing_coefficients,
    modal_basis_eval,
    modal_basis_vector,
    modal_index,
    multi_indices,
)
from .nodal import VandermondeSystem, build_vandermonde, lagrange_eval, lagrange_eval_batch
from .optimize import OptimizationResult, evaluate_alpha, optimize_alpha
from .warpblend import (
    WarpParams,
    pentatope_warp,
    shifted_nodes,
    simplex_warp,
    tet_warp,
    tet_warp_components,
    triangle_warp,
    triangle_warp_components,
    warp_1d,
    warp_1d_modified,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "InvalidNodeError",
    "LebesgueReport",
    "NodeSet",
    "NodesFileError",
    "OptimizationResult",
    "OutsideSimplexError",
    "ReferenceSimplex",
    "SampleGrid",
    "SimplexNodesError",
    "SingularMatrixError",
    "VandermondeSystem",
    "WarpParams",
    "bary_to_cart",
    "build_vandermonde",
    "cart_to_bary",
    "collapse",
    "equidistant_nodes",
    "evaluate_alpha",
    "indexing_coefficients",
    "jacobi_eval",
    "jacobi_eval_batch",
    "lagrange_eval",
    "lagrange_eval_batch",
    "lebesgue_constant",
    "lebesgue_constant_many",
    "lebesgue_function",
    "lgl_nodes",
    "modal_basis_eval",
    "modal_basis_vector",
    "modal_index",
    "multi_indices",
    "node_count",
    "optimize_alpha",
    "pentatope_warp",
    "reference_simplex",
    "sample_grid",
    "shifted_nodes",
    "simplex_warp",
    "tet_warp",
    "tet_warp_components",
    "triangle_warp",
    "triangle_warp_components",
    "warp_1d",
    "warp_1d_modified",
]
