"""Exception types shared across the package."""


class SimplexNodesError(Exception):
    """Base class for all package-specific errors."""


class ConvergenceError(SimplexNodesError):
    """Newton iteration failed to converge (implementation bug, not user error)."""


class SingularMatrixError(SimplexNodesError):
    """Vandermonde matrix is numerically singular (degenerate node set)."""


class InvalidNodeError(SimplexNodesError):
    """A generated node left the simplex (bad warp parameter)."""


class OutsideSimplexError(SimplexNodesError):
    """Point lies outside the reference simplex."""


class NodesFileError(SimplexNodesError):
    """A nodes CSV file could not be parsed; message names the offending line."""
