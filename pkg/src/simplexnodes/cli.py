"""Command-line front end.

Subcommands: nodes, lebesgue, optimize, plotdata, verify.  Exit codes:
0 success, 1 verification failure, 2 usage error (argparse default),
3 numerical degeneracy, 4 nodes-file parse error.
"""

import argparse
import json
import os
import sys
import time
from datetime import datetime, timezone
from importlib.metadata import version as pkg_version

import numpy as np

from .errors import InvalidNodeError, NodesFileError, SingularMatrixError
from .geometry import NodeSet, bary_to_cart, equidistant_nodes, node_count
from .lebesgue import lebesgue_constant
from .optimize import optimize_alpha
from .verify import FULL, QUICK, run_checks
from .warpblend import PENTATOPE_TANGENT_FRAMES, WarpParams, shifted_nodes

CLASS_NAMES = {4: "vertex", 3: "edge", 2: "face", 1: "facet", 0: "interior"}
ZERO_TOL = 1e-9

# One spacing per order, following the published table's spacing column.
DEFAULT_SPACING = {p: 0.01 for p in range(1, 6)} | {p: 0.02 for p in range(6, 10)} | {10: 0.04}


def _version() -> str:
    try:
        return pkg_version("simplexnodes")
    except Exception:
        return "unknown"


def fmt15(x: float) -> str:
    """Appendix-style cell: exact zeros as '0', else 15 decimal digits."""
    return "0" if x == 0.0 else f"{x:.15f}"


def _manifest(args: argparse.Namespace, elapsed: float, outputs: list, extra: dict | None = None):
    man = {
        "schema": 1,
        "command": args.command,
        "argv": sys.argv[1:],
        "version": _version(),
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "elapsed_seconds": elapsed,
        "outputs": [str(p) for p in outputs],
    }
    if extra:
        man.update(extra)
    return man


def _write_manifest(path: str, manifest: dict) -> None:
    with open(path + ".manifest.json", "w") as f:
        json.dump(manifest, f, indent=2)
        f.write("\n")


def _nodes_csv(nodes: NodeSet) -> str:
    header = ",".join(f"lambda{k + 1}" for k in range(nodes.d + 1))
    lines = [header]
    for row in nodes.bary:
        lines.append(",".join(fmt15(v) for v in row))
    return "\n".join(lines) + "\n"


def read_nodes_csv(path: str, d: int, p: int) -> NodeSet:
    """Parse a nodes CSV written by the nodes command."""
    try:
        with open(path) as f:
            lines = f.read().splitlines()
    except OSError as exc:
        raise NodesFileError(f"{path}: {exc}") from exc
    if not lines:
        raise NodesFileError(f"{path}: empty file")
    expected_header = ",".join(f"lambda{k + 1}" for k in range(d + 1))
    if lines[0].strip() != expected_header:
        raise NodesFileError(f"{path}: line 1: expected header '{expected_header}'")
    rows = []
    for ln, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cells = line.split(",")
        if len(cells) != d + 1:
            raise NodesFileError(f"{path}: line {ln}: expected {d + 1} columns, got {len(cells)}")
        try:
            row = [float(c) for c in cells]
        except ValueError as exc:
            raise NodesFileError(f"{path}: line {ln}: {exc}") from exc
        if abs(sum(row) - 1.0) > 1e-9 or min(row) < -1e-9:
            raise NodesFileError(f"{path}: line {ln}: not a barycentric point")
        rows.append(row)
    if len(rows) != node_count(d, p):
        raise NodesFileError(
            f"{path}: {len(rows)} rows, expected {node_count(d, p)} for d={d} p={p}"
        )
    bary = np.array(rows)
    return NodeSet(d=d, p=p, bary=bary, cart=bary_to_cart(d, bary), ordering="file")


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("SIMPLEX_NODES_THREADS")
    return int(env) if env else 1


def _build_params(args) -> WarpParams:
    if args.beta is not None or args.gamma is not None:
        return WarpParams(
            alpha=args.alpha,
            beta=args.beta if args.beta is not None else args.alpha,
            gamma=args.gamma if args.gamma is not None else args.alpha,
        )
    return WarpParams.tied(args.alpha)


def cmd_nodes(args) -> int:
    t0 = time.perf_counter()
    if args.equidistant:
        nodes = equidistant_nodes(args.dim, args.order)
    else:
        nodes = shifted_nodes(args.dim, args.order, _build_params(args))
    outputs = []
    if args.format == "csv":
        text = _nodes_csv(nodes)
        if args.out:
            with open(args.out, "w") as f:
                f.write(text)
            outputs.append(args.out)
        else:
            sys.stdout.write(text)
    else:
        payload = {
            "schema": 1,
            "d": nodes.d,
            "p": nodes.p,
            "alpha": nodes.alpha,
            "ordering": nodes.ordering,
            "barycentric": nodes.bary.tolist(),
            "cartesian": nodes.cart.tolist(),
            "manifest": _manifest(args, time.perf_counter() - t0, [args.out] if args.out else []),
        }
        text = json.dumps(payload, indent=2) + "\n"
        if args.out:
            with open(args.out, "w") as f:
                f.write(text)
            outputs.append(args.out)
        else:
            sys.stdout.write(text)
    if args.out and args.format == "csv":
        _write_manifest(args.out, _manifest(args, time.perf_counter() - t0, outputs))
    return 0


def _resolve_nodes(args) -> NodeSet:
    if args.nodes_file:
        return read_nodes_csv(args.nodes_file, args.dim, args.order)
    if args.equidistant:
        return equidistant_nodes(args.dim, args.order)
    return shifted_nodes(args.dim, args.order, _build_params(args))


def cmd_lebesgue(args) -> int:
    nodes = _resolve_nodes(args)
    h = args.grid_spacing if args.grid_spacing else DEFAULT_SPACING[min(args.order, 10)]
    report = lebesgue_constant(nodes, h, threads=_threads(args), refine=args.refine)
    print(f"dimension        : {report.d}")
    print(f"order            : {report.p}")
    print(f"grid spacing     : {report.h}")
    print(f"samples          : {report.samples}")
    print(f"lebesgue constant: {report.lambda_est:.6f}")
    print(f"argmax (bary)    : {', '.join(fmt15(v) for v in report.argmax_point)}")
    print(f"elapsed          : {report.elapsed:.2f} s")
    if args.json_out:
        payload = report.to_dict()
        payload["manifest"] = _manifest(args, report.elapsed, [args.json_out])
        with open(args.json_out, "w") as f:
            json.dump(payload, f, indent=2)
            f.write("\n")
    return 0


def cmd_optimize(args) -> int:
    h = args.grid_spacing if args.grid_spacing else DEFAULT_SPACING[min(args.order, 10)]
    search_h = None
    if args.coarse_search:
        # one published-table step coarser than the target spacing
        coarser = {0.01: 0.02, 0.02: 0.04, 0.04: 0.05}
        search_h = coarser.get(h, min(2 * h, 0.1))
    result = optimize_alpha(
        args.dim, args.order, h, budget=args.budget, search_h=search_h, threads=_threads(args)
    )
    print(f"dimension   : {result.d}")
    print(f"order       : {result.p}")
    print(f"alpha*      : {result.alpha_star:.6f}")
    print(f"lambda*     : {result.lambda_star:.6f}")
    print(f"evaluations : {len(result.trace)}")
    print(f"elapsed     : {result.elapsed:.2f} s")
    if args.out:
        payload = result.to_dict()
        payload["manifest"] = _manifest(args, result.elapsed, [args.out])
        with open(args.out, "w") as f:
            json.dump(payload, f, indent=2)
            f.write("\n")
    return 0


def _classify(bary: np.ndarray) -> list:
    zeros = (np.abs(bary) < ZERO_TOL).sum(axis=1)
    return [CLASS_NAMES[int(z)] for z in zeros]


def cmd_plotdata(args) -> int:
    t0 = time.perf_counter()
    if args.dim != 4:
        raise SystemExit(2)
    nodes = shifted_nodes(4, args.order, WarpParams.tied(args.alpha))
    labels = _classify(nodes.bary)
    outputs = []

    def write_csv(path, coords, idx):
        with open(path, "w") as f:
            f.write("x,y,z,class\n")
            for i in idx:
                f.write(",".join(fmt15(v) for v in coords[i]) + f",{labels[i]}\n")
        outputs.append(path)

    if args.projection == "full":
        write_csv(args.out, nodes.cart[:, :3], range(len(nodes)))
    else:
        base, ext = os.path.splitext(args.out)
        ext = ext or ".csv"
        for f_idx in range(5):
            on_facet = np.where(np.abs(nodes.bary[:, f_idx]) < ZERO_TOL)[0]
            local = nodes.cart @ PENTATOPE_TANGENT_FRAMES[f_idx].T
            write_csv(f"{base}_facet{f_idx + 1}{ext}", local, on_facet)
        interior = np.where((np.abs(nodes.bary) < ZERO_TOL).sum(axis=1) == 0)[0]
        write_csv(f"{base}_interior{ext}", nodes.cart[:, :3], interior)
    _write_manifest(args.out, _manifest(args, time.perf_counter() - t0, outputs))
    return 0


def cmd_verify(args) -> int:
    failed = 0
    for res in run_checks(args.level, threads=_threads(args)):
        status = "PASS" if res.passed else "FAIL"
        print(f"[{status}] {res.name}: {res.detail}")
        failed += 0 if res.passed else 1
    print(f"{'OK' if failed == 0 else 'FAILED'} ({failed} failing checks)")
    return 0 if failed == 0 else 1


def _add_common_node_flags(sp, with_equidistant=True):
    sp.add_argument("--dim", type=int, required=True, choices=(1, 2, 3, 4))
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--alpha", type=float, default=0.0)
    sp.add_argument("--beta", type=float, default=None)
    sp.add_argument("--gamma", type=float, default=None)
    if with_equidistant:
        sp.add_argument("--equidistant", action="store_true")
    sp.add_argument("--unsafe-order", action="store_true",
                    help="allow orders up to 20 instead of 10")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="simplexnodes",
                                 description="Lebesgue-optimized interpolation nodes on simplices")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("nodes", help="generate a node table")
    _add_common_node_flags(sp)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_nodes)

    sp = sub.add_parser("lebesgue", help="estimate a Lebesgue constant")
    _add_common_node_flags(sp)
    sp.add_argument("--grid-spacing", type=float, default=None)
    sp.add_argument("--nodes-file", default=None)
    sp.add_argument("--json-out", default=None)
    sp.add_argument("--refine", action="store_true")
    sp.add_argument("--threads", type=int, default=None)
    sp.set_defaults(func=cmd_lebesgue)

    sp = sub.add_parser("optimize", help="search the warp parameter")
    sp.add_argument("--dim", type=int, required=True, choices=(1, 2, 3, 4))
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--grid-spacing", type=float, default=None)
    sp.add_argument("--budget", type=int, default=60)
    sp.add_argument("--coarse-search", action="store_true")
    sp.add_argument("--out", default=None)
    sp.add_argument("--threads", type=int, default=None)
    sp.add_argument("--unsafe-order", action="store_true")
    sp.set_defaults(func=cmd_optimize)

    sp = sub.add_parser("plotdata", help="projected coordinates with class labels")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--alpha", type=float, default=0.0)
    sp.add_argument("--projection", choices=("full", "facet"), default="full")
    sp.add_argument("--out", required=True)
    sp.add_argument("--unsafe-order", action="store_true")
    sp.set_defaults(func=cmd_plotdata)

    sp = sub.add_parser("verify", help="run embedded verification checks")
    sp.add_argument("--level", choices=(QUICK, FULL), default=QUICK)
    sp.add_argument("--threads", type=int, default=None)
    sp.set_defaults(func=cmd_verify)
    return ap


def _check_order(args) -> None:
    limit = 20 if getattr(args, "unsafe_order", False) else 10
    order = getattr(args, "order", None)
    if order is not None and not 1 <= order <= limit:
        raise SystemExit(2)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _check_order(args)
    try:
        return args.func(args)
    except (SingularMatrixError, InvalidNodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NodesFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
