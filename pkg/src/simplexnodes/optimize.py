"""Single-parameter warp optimization minimizing the Lebesgue constant.

The three warp parameters are tied (alpha = beta = gamma) and searched over
[0, 3]: a coarse equally-spaced scan brackets the minimum, then golden
section refines the bracket.  Objective values, not parameter values, are
the reproducible quantity; the landscape is flat near its minimum.
"""

import math
import time
from dataclasses import dataclass, field

from .lebesgue import lebesgue_constant
from .warpblend import WarpParams, shifted_nodes

__all__ = ["OptimizationResult", "TraceEntry", "evaluate_alpha", "optimize_alpha"]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

ALPHA_SPAN = (0.0, 3.0)
SCAN_POINTS = 13
ALPHA_TOL = 1e-3


@dataclass(frozen=True)
class TraceEntry:
    alpha: float
    lebesgue: float
    h: float


@dataclass(frozen=True)
class OptimizationResult:
    d: int
    p: int
    alpha_star: float
    lambda_star: float
    h: float
    search_h: float
    trace: list = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "d": self.d,
            "p": self.p,
            "alpha_star": self.alpha_star,
            "lambda_star": self.lambda_star,
            "h": self.h,
            "search_h": self.search_h,
            "trace": [{"alpha": t.alpha, "lambda": t.lebesgue, "h": t.h} for t in self.trace],
            "elapsed_seconds": self.elapsed,
        }


def evaluate_alpha(d: int, p: int, alpha: float, h: float, *, threads: int = 1) -> float:
    """Lebesgue constant of the warped node set with tied parameters."""
    nodes = shifted_nodes(d, p, WarpParams.tied(alpha))
    return lebesgue_constant(nodes, h, threads=threads).lambda_est


def optimize_alpha(
    d: int,
    p: int,
    h: float,
    budget: int = 60,
    *,
    search_h: float | None = None,
    threads: int = 1,
) -> OptimizationResult:
    """Minimize the Lebesgue constant over alpha in [0, 3].

    ``search_h`` may be coarser than ``h`` to cheapen the search; the
    reported lambda_star is always re-evaluated at the target spacing.
    Every objective evaluation is appended to the trace, so two runs with
    identical inputs produce identical traces.
    """
    if budget < 10:
        raise ValueError("budget must be >= 10 evaluations")
    if search_h is None:
        search_h = h
    t0 = time.perf_counter()
    trace: list[TraceEntry] = []
    cache: dict[float, float] = {}

    def objective(alpha: float) -> float:
        if alpha not in cache:
            cache[alpha] = evaluate_alpha(d, p, alpha, search_h, threads=threads)
            trace.append(TraceEntry(alpha=alpha, lebesgue=cache[alpha], h=search_h))
        return cache[alpha]

    lo, hi = ALPHA_SPAN
    n_scan = min(SCAN_POINTS, budget)
    scan = [lo + (hi - lo) * k / (n_scan - 1) for k in range(n_scan)]
    values = [objective(a) for a in scan]
    k_best = min(range(n_scan), key=lambda k: values[k])
    a = scan[max(0, k_best - 1)]
    b = scan[min(n_scan - 1, k_best + 1)]

    # golden-section refinement of the bracketing interval
    c = b - _INV_PHI * (b - a)
    e = a + _INV_PHI * (b - a)
    while (b - a) > ALPHA_TOL and len(cache) < budget:
        if objective(c) < objective(e):
            b, e = e, c
            c = b - _INV_PHI * (b - a)
        else:
            a, c = c, e
            e = a + _INV_PHI * (b - a)

    alpha_star = min(cache, key=cache.get)
    if search_h != h:
        nodes = shifted_nodes(d, p, WarpParams.tied(alpha_star))
        lambda_star = lebesgue_constant(nodes, h, threads=threads).lambda_est
        trace.append(TraceEntry(alpha=alpha_star, lebesgue=lambda_star, h=h))
    else:
        lambda_star = cache[alpha_star]
    return OptimizationResult(
        d=d,
        p=p,
        alpha_star=alpha_star,
        lambda_star=lambda_star,
        h=h,
        search_h=search_h,
        trace=trace,
        elapsed=time.perf_counter() - t0,
    )
