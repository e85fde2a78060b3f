"""Self-verification against the embedded published reference data.

Each check returns a CheckResult; the CLI prints one line per check and
exits nonzero if any fails.  The quick level covers the exact/structural
checks plus low-order golden tables (seconds to run); the full level also
reproduces every Lebesgue table column by dense sweeps (the order-7..8
entries take minutes each on one core).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import numpy as np
from scipy.spatial import cKDTree

from . import golden
from .geometry import equidistant_nodes, node_count
from .jacobi import lgl_nodes
from .lebesgue import lebesgue_constant_many
from .modal import indexing_coefficients, modal_index, multi_indices
from .nodal import build_vandermonde, lagrange_eval_batch
from .warpblend import WarpParams, shifted_nodes, simplex_warp

__all__ = ["CheckResult", "run_checks", "QUICK", "FULL"]

QUICK = "quick"
FULL = "full"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail=detail)


def index_from_coefficients(p: int, mi, coeffs) -> int:
    """4D modal index evaluated directly from a coefficient 15-tuple."""
    i, j, k, q = (Fraction(int(v)) for v in mi)
    c = [Fraction(x) for x in coeffs]
    m = (
        1
        + c[0] * i + c[1] * i**2 + c[2] * i**3 + c[3] * i**4
        + c[4] * j + c[5] * i * j + c[6] * i**2 * j
        + c[7] * j**2 + c[8] * i * j**2 + c[9] * j**3
        + c[10] * k + c[11] * i * k + c[12] * j * k + c[13] * k**2
        + c[14] * q
    )
    return int(m) if m.denominator == 1 else float(m)


def check_indexing_coefficients() -> CheckResult:
    """Closed-form coefficients match the published table exactly."""
    for p, expected in golden.INDEXING_COEFFICIENTS_BY_ORDER.items():
        got = indexing_coefficients(p)
        if tuple(got) != tuple(expected):
            return _result("indexing-coefficients", False, f"mismatch at p={p}: {got}")
    return _result("indexing-coefficients", True, "orders 4-8, 75 values exact")


def check_index_bijectivity(p_max: int = 10, coeffs_by_p: dict | None = None) -> CheckResult:
    """Index map is a bijection onto 1..N_p agreeing with enumeration order."""
    for p in range(1, p_max + 1):
        seen = []
        for pos, mi in enumerate(multi_indices(4, p), start=1):
            if coeffs_by_p is None:
                m = modal_index(4, p, tuple(mi))
            else:
                m = index_from_coefficients(p, mi, coeffs_by_p[p])
            if m != pos:
                return _result(
                    "index-bijectivity", False,
                    f"p={p} mi={tuple(mi)}: index {m} != enumeration position {pos}",
                )
            seen.append(m)
        if sorted(seen) != list(range(1, node_count(4, p) + 1)):
            return _result("index-bijectivity", False, f"p={p}: not a bijection")
    return _result("index-bijectivity", True, f"d=4, p<=%d" % p_max)


def _set_distance(a: np.ndarray, b: np.ndarray) -> float:
    if len(a) != len(b):
        return math.inf
    d1, _ = cKDTree(b).query(a)
    d2, _ = cKDTree(a).query(b)
    return float(max(d1.max(), d2.max()))


def check_reference_node_tables(tol: float = 1e-12) -> CheckResult:
    """Generated 4D sets for p=1..4 match the published tables as sets."""
    worst = 0.0
    for p, rows in golden.REFERENCE_NODES_4D.items():
        ours = shifted_nodes(4, p, golden.LEBESGUE_TABLE[p].alpha)
        worst = max(worst, _set_distance(ours.bary, np.array(rows)))
    ok = worst < tol
    return _result("reference-node-tables", ok, f"worst set distance {worst:.2e}")


def check_lgl_reduction(p_max: int = 20) -> CheckResult:
    """1D shifted nodes are the LGL distribution."""
    worst = 0.0
    for p in range(1, p_max + 1):
        r = shifted_nodes(1, p).cart[:, 0]
        worst = max(worst, float(np.abs(r - lgl_nodes(p)).max()))
    s5 = 1.0 / math.sqrt(5.0)
    interior = shifted_nodes(1, 3).cart[1:3, 0]
    exact = float(np.abs(interior - np.array([-s5, s5])).max())
    ok = worst < 1e-13 and exact < 5e-16
    return _result("lgl-reduction", ok, f"worst {worst:.2e}, p=3 interior err {exact:.2e}")


def _fixed_point_candidates(d: int) -> np.ndarray:
    pts = list(np.eye(d + 1))  # vertices
    for a in range(d + 1):  # edge midpoints
        for b in range(a + 1, d + 1):
            lam = np.zeros(d + 1)
            lam[a] = lam[b] = 0.5
            pts.append(lam)
    pts.append(np.full(d + 1, 1.0 / (d + 1)))  # barycenter
    return np.array(pts)


def check_warp_fixed_points(p_max: int = 10, alphas=(0.0, 1.5, 3.0)) -> CheckResult:
    """Vertices, edge midpoints and barycenter never move."""
    worst = 0.0
    for d in (2, 3, 4):
        cand = _fixed_point_candidates(d)
        for p in range(1, p_max + 1):
            for a in alphas:
                g = simplex_warp(d, p, WarpParams.tied(a), cand)
                worst = max(worst, float(np.abs(g).max()))
    ok = worst < 1e-12
    return _result("warp-fixed-points", ok, f"worst displacement {worst:.2e}")


def check_symmetry(p_max: int = 10, alphas=(0.0, 1.5), tol: float = 1e-10) -> CheckResult:
    """Node sets are invariant under all barycentric permutations."""
    worst = 0.0
    for d in (1, 2, 3, 4):
        for p in range(1, p_max + 1):
            for a in alphas:
                lam = shifted_nodes(d, p, a).bary
                tree = cKDTree(lam)
                for perm in permutations(range(d + 1)):
                    dist, _ = tree.query(lam[:, perm])
                    worst = max(worst, float(dist.max()))
    ok = worst < tol
    return _result("symmetry", ok, f"worst permutation distance {worst:.2e}")


def check_cardinality(p_max: int = 4, tol: float = 1e-9) -> CheckResult:
    """Lagrange basis is cardinal at its own nodes."""
    worst = 0.0
    for d in (1, 2, 3, 4):
        for p in range(1, p_max + 1):
            for nodes in (equidistant_nodes(d, p), shifted_nodes(d, p, 1.0)):
                system = build_vandermonde(nodes)
                L = lagrange_eval_batch(system, nodes.bary)
                worst = max(worst, float(np.abs(L - np.eye(len(nodes))).max()))
    ok = worst < tol
    return _result("cardinality", ok, f"worst |L - I| = {worst:.2e}")


def check_lebesgue_spot(threads: int = 1) -> CheckResult:
    """Cheap sweep: order-2 equidistant value at a coarse spacing."""
    rep = lebesgue_constant_many([equidistant_nodes(4, 2)], 0.05, threads=threads)[0]
    ok = abs(rep.lambda_est - 2.2) < 1e-6
    return _result("lebesgue-spot", ok, f"order 2 at h=0.05: {rep.lambda_est:.6f}")


def _lebesgue_row_checks(threads: int = 1):
    """Full reproduction of the published Lebesgue table."""
    for p, row in golden.LEBESGUE_TABLE.items():
        rep = lebesgue_constant_many([equidistant_nodes(4, p)], row.stated_h, threads=threads)[0]
        rel = abs(rep.lambda_est - row.lambda_equidistant) / row.lambda_equidistant
        yield _result(
            f"lebesgue-equidistant-p{p}", rel < 5e-4,
            f"{rep.lambda_est:.4f} vs {row.lambda_equidistant} at h={row.stated_h}",
        )
        if row.lambda_equidistant_external is not None:
            rel = abs(rep.lambda_est - row.lambda_equidistant_external)
            rel /= row.lambda_equidistant_external
            yield _result(
                f"lebesgue-external-p{p}", rel < 0.02,
                f"{rep.lambda_est:.4f} vs independent {row.lambda_equidistant_external}",
            )
        sets = [shifted_nodes(4, p, 0.0)]
        if row.alpha != 0.0:
            sets.append(shifted_nodes(4, p, row.alpha))
        reps = lebesgue_constant_many(sets, row.effective_h, threads=threads)
        rel = abs(reps[0].lambda_est - row.lambda_alpha0) / row.lambda_alpha0
        yield _result(
            f"lebesgue-alpha0-p{p}", rel < 1e-3,
            f"{reps[0].lambda_est:.4f} vs {row.lambda_alpha0} at h={row.effective_h}",
        )
        opt = reps[-1].lambda_est
        rel = abs(opt - row.lambda_optimized) / row.lambda_optimized
        yield _result(
            f"lebesgue-optimized-p{p}", rel < 0.01,
            f"{opt:.4f} vs {row.lambda_optimized} at h={row.effective_h}",
        )


def run_checks(level: str = QUICK, threads: int = 1):
    """Yield CheckResults for the requested level."""
    yield check_indexing_coefficients()
    yield check_index_bijectivity()
    yield check_reference_node_tables()
    yield check_lgl_reduction()
    yield check_warp_fixed_points(p_max=6 if level == QUICK else 10)
    yield check_symmetry(p_max=6 if level == QUICK else 10)
    yield check_cardinality(p_max=4 if level == QUICK else 10)
    yield check_lebesgue_spot(threads=threads)
    if level == FULL:
        yield from _lebesgue_row_checks(threads=threads)
