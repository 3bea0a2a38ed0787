"""Command-line front end: solve / eval / study / taylor.

All output artifacts are deterministic: identical invocations produce
byte-identical CSV and JSON (fixed-order reductions, shortest-roundtrip float
formatting, no timestamps).

Exit codes: 0 success, 2 domain/region violation, 3 I/O or unusable input,
4 numeric failure (aliasing, overflow).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

from .boundary_data import (
    BUILTIN_EXPRESSIONS,
    BoundaryData,
    DiskGeometry,
    boundary_expression,
    holder_seminorm_estimate,
    load_boundary_csv,
)
from .errors import (
    AliasingError,
    BoundaryDataError,
    BranchCutError,
    DomainError,
    EvalOverflowError,
    ExpansionUnsupportedError,
)
from .estimates import (
    JacksonConstants,
    maximum_principle_bounds,
    uniform_error_bound,
    uniform_error_bound_smooth,
)
from .fourier import FourierSpectrum, compute_spectrum, l1_boundary_norm
from .harmonic import HarmonicApproximant
from .oracle import poisson_eval
from .taylor import DEFAULT_ORDER, expand

CONFIG_ENV_VAR = "HARMODISK_CONFIG"

_CONFIG_DEFAULTS = {
    "gamma0": 3.0,
    "gamma_k": 3.0,
    "default_M": None,      # None -> max(4096, 8 n)
    "study_grid": 2048,
    "proxy_factor": 4,
}


def _fmt(value: float) -> str:
    """Shortest-roundtrip decimal form; deterministic across runs."""
    return repr(float(value))


def load_config(path: str | None) -> dict:
    cfg = dict(_CONFIG_DEFAULTS)
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR)
    if path:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
        for key in cfg:
            if key in data:
                cfg[key] = data[key]
    return cfg


def _resolve_boundary(args, geometry: DiskGeometry) -> BoundaryData:
    if args.boundary_expr:
        return boundary_expression(args.boundary_expr, geometry)
    return load_boundary_csv(args.boundary, geometry)


def _parse_pair(text: str, what: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"{what} must be two comma-separated numbers, got {text!r}")
    return float(parts[0]), float(parts[1])


def _read_points_csv(path) -> list:
    points = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [c.strip().lower() for c in header[:2]] != ["x", "y"]:
            raise BoundaryDataError(f"{path}: expected header 'x,y'")
        for row in reader:
            if not row:
                continue
            points.append((float(row[0]), float(row[1])))
    return points


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

def cmd_solve(args, cfg) -> int:
    geometry = DiskGeometry(args.R)
    b = _resolve_boundary(args, geometry)
    M = args.M if args.M is not None else cfg["default_M"]
    spectrum = compute_spectrum(b, args.n, M)
    spectrum.save(args.output)
    l1 = l1_boundary_norm(b, spectrum.M)
    gmin, gmax = maximum_principle_bounds(b, spectrum.M)
    print(f"spectrum written to {args.output}")
    print(f"center value a0/2      = {_fmt(spectrum.a[0] / 2.0)}")
    print(f"integral |f| d theta   = {_fmt(l1.angular)}")
    print(f"integral |g| ds        = {_fmt(l1.arclength)}")
    print(f"boundary range (g)     = [{_fmt(gmin)}, {_fmt(gmax)}]")
    return 0


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _write_monomials_csv(u: HarmonicApproximant, path) -> None:
    table = u.monomial_expansion()
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["i", "j", "coef"])
        for i in range(table.shape[0]):
            for j in range(table.shape[1] - i):
                if table[i, j] != 0.0:
                    writer.writerow([str(i), str(j), _fmt(table[i, j])])


def cmd_eval(args, cfg) -> int:
    spectrum = FourierSpectrum.load(args.spectrum)
    u = HarmonicApproximant(spectrum)
    R = spectrum.geometry.R
    if args.monomial_csv:
        _write_monomials_csv(u, args.monomial_csv)
        if args.points is None:
            return 0
    if args.points is None:
        raise BoundaryDataError("eval needs --points (or --monomial-csv alone)")
    points = _read_points_csv(args.points)
    deriv = _parse_pair(args.deriv, "--deriv") if args.deriv else None
    b = None
    if args.compare_oracle:
        if not (args.boundary_expr or args.boundary):
            raise BoundaryDataError("--compare-oracle needs --boundary-expr or --boundary")
        b = _resolve_boundary(args, spectrum.geometry)

    out = sys.stdout if args.output is None else open(args.output, "w", newline="")
    try:
        writer = csv.writer(out, lineterminator="\n")
        if args.compare_oracle:
            writer.writerow(["x", "y", "series_value", "poisson_value", "abs_diff"])
        elif deriv:
            writer.writerow(["x", "y", "d_value"])
        else:
            writer.writerow(["x", "y", "value"])
        for x, y in points:
            rho = math.hypot(x, y)
            if deriv:
                value = u.eval_derivative(x, y, int(deriv[0]), int(deriv[1]))
            else:
                value = u.eval(x, y)
            if args.compare_oracle:
                if rho >= R:
                    print(f"point ({x}, {y}) not strictly inside the disk; "
                          "oracle skipped", file=sys.stderr)
                    writer.writerow([_fmt(x), _fmt(y), _fmt(value), "nan", "nan"])
                else:
                    pv = poisson_eval(b, x, y, args.oracle_nodes)
                    writer.writerow([_fmt(x), _fmt(y), _fmt(value), _fmt(pv),
                                     _fmt(abs(value - pv))])
            else:
                if rho > R:
                    print(f"point ({x}, {y}) outside the closed disk of radius {R}",
                          file=sys.stderr)
                writer.writerow([_fmt(x), _fmt(y), _fmt(value)])
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# study
# ---------------------------------------------------------------------------

def _study_bound(b: BoundaryData, n: int, r: float, gamma: JacksonConstants):
    """Bound report for one (n, r) cell, or None when no regularity is declared."""
    sm = b.smoothness
    if sm is None:
        return None
    if sm.seminorm is not None:
        seminorm, source = sm.seminorm, "declared"
    else:
        seminorm, source = holder_seminorm_estimate(b, sm.alpha), "estimated"
    point = (r, 0.0)
    R = b.geometry.R
    if sm.k == 0:
        return uniform_error_bound(seminorm, sm.alpha, n, point, R,
                                   gamma.gamma0, source)
    return uniform_error_bound_smooth(seminorm, sm.k, sm.alpha, n, point, R,
                                      gamma.gamma_k(sm.k), source)


def run_study(b: BoundaryData, ns, radii, gamma: JacksonConstants | None = None,
              grid: int = 2048, proxy_factor: int = 4, M: int | None = None):
    """Convergence study against a converged proxy.

    For each requested degree n and radius r, measures the sup difference on
    the circle of radius r between u_n and the proxy u_N with
    N = proxy_factor * max(ns), plus the computable bound when the boundary
    data declares a regularity class.  Returns (rows, reports); each row is
    (n, r, measured_sup_err, bound_value, applicable, slope_estimate) with the
    per-radius log-log slope repeated on each of its rows.
    """
    ns = sorted(set(int(n) for n in ns))
    if len(ns) < 2:
        raise ValueError("study needs at least 2 values of n")
    gamma = gamma or JacksonConstants()
    R = b.geometry.R
    n_proxy = proxy_factor * max(ns)
    if M is None:
        M = max(4096, 8 * n_proxy)
    spectrum = compute_spectrum(b, n_proxy, M)
    u_proxy = HarmonicApproximant(spectrum)
    theta = -np.pi + 2.0 * np.pi * np.arange(grid) / grid

    errors = {}
    for r in radii:
        if not 0.0 <= r <= R:
            raise DomainError(f"study radius {r} outside [0, R]")
        xs, ys = r * np.cos(theta), r * np.sin(theta)
        proxy_vals = u_proxy.eval(xs, ys)
        for n in ns:
            u_n = HarmonicApproximant(spectrum.truncate(n))
            errors[(n, r)] = float(np.max(np.abs(proxy_vals - u_n.eval(xs, ys))))

    slopes = {}
    for r in radii:
        pts = [(math.log(n), math.log(errors[(n, r)]))
               for n in ns if errors[(n, r)] > 0.0]
        if len(pts) >= 2:
            lx = np.array([p[0] for p in pts])
            ly = np.array([p[1] for p in pts])
            slopes[r] = float(np.polyfit(lx, ly, 1)[0])
        else:
            slopes[r] = float("nan")

    rows, reports = [], []
    for n in ns:
        for r in radii:
            report = _study_bound(b, n, r, gamma)
            if report is not None:
                reports.append(report)
            rows.append((n, r, errors[(n, r)],
                         report.value if report else None,
                         report.applicable if report else False,
                         slopes[r]))
    return rows, reports


def cmd_study(args, cfg) -> int:
    geometry = DiskGeometry(args.R)
    b = _resolve_boundary(args, geometry)
    ns = [int(v) for v in args.ns.split(",")]
    radii = [float(v) for v in args.radii.split(",")]
    gamma0 = args.gamma0 if args.gamma0 is not None else cfg["gamma0"]
    gamma_k = args.gamma_k if args.gamma_k is not None else cfg["gamma_k"]
    gamma = JacksonConstants((gamma0,) + (gamma_k,) * 7)
    grid = args.grid if args.grid is not None else cfg["study_grid"]
    M = args.M if args.M is not None else cfg["default_M"]
    rows, reports = run_study(b, ns, radii, gamma, grid=grid,
                              proxy_factor=cfg["proxy_factor"], M=M)
    with open(args.output_table, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["n", "r", "measured_sup_err", "bound_value",
                         "applicable", "slope_estimate"])
        for n, r, err, bound, applicable, slope in rows:
            writer.writerow([
                str(n), _fmt(r), _fmt(err),
                "" if bound is None else _fmt(bound),
                "true" if applicable else "false",
                _fmt(slope),
            ])
    with open(args.output_reports, "w") as fh:
        json.dump([rep.to_dict() for rep in reports], fh, indent=1)
        fh.write("\n")
    print(f"study table written to {args.output_table} "
          f"({len(rows)} rows); reports to {args.output_reports}")
    return 0


# ---------------------------------------------------------------------------
# taylor
# ---------------------------------------------------------------------------

def cmd_taylor(args, cfg) -> int:
    spectrum = FourierSpectrum.load(args.spectrum)
    u = HarmonicApproximant(spectrum)
    center = _parse_pair(args.center, "--center")
    h = _parse_pair(args.h, "--h")
    t = expand(u, center, args.order)
    if args.coeffs_csv:
        with open(args.coeffs_csv, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["a1", "a2", "coef"])
            for i in range(t.order):
                for j in range(t.order - i):
                    writer.writerow([str(i), str(j), _fmt(t.coeffs[i, j])])
    value, report = t.eval_series(h, force=args.force)
    true_value = u.eval(center[0] + h[0], center[1] + h[1])
    payload = {
        "center": [center[0], center[1]],
        "h": [h[0], h[1]],
        "order": args.order,
        "L": t.L,
        "kappa": math.hypot(*h) / t.L,
        "l1_circle": t.l1_circle,
        "partial_sum": value,
        "eval_value": float(true_value),
        "abs_error": abs(float(true_value) - value),
        "remainder_bound": report.to_dict() if report else None,
    }
    text = json.dumps(payload, indent=1)
    if args.output:
        Path(args.output).write_text(text + "\n")
    print(text)
    return 0


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def _add_boundary_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--boundary", help="CSV file with header theta,value")
    p.add_argument("--boundary-expr",
                   help="named closed-form boundary (see list in main --help)")


def build_parser() -> argparse.ArgumentParser:
    epilog = "built-in boundary expressions:\n  " + "\n  ".join(BUILTIN_EXPRESSIONS)
    parser = argparse.ArgumentParser(
        prog="harmodisk",
        description="Dirichlet problem on a disk via explicit harmonic polynomials",
        epilog=epilog, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--config", help=f"TOML config file (or ${CONFIG_ENV_VAR})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute and store the boundary spectrum")
    _add_boundary_args(p)
    p.add_argument("--R", type=float, default=1.0)
    p.add_argument("--n", type=int, required=True, help="highest retained harmonic")
    p.add_argument("--M", type=int, help="quadrature nodes (default max(4096, 8n))")
    p.add_argument("--output", default="spectrum.json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("eval", help="evaluate the approximant on a point set")
    p.add_argument("--spectrum", required=True, help="spectrum JSON from solve")
    p.add_argument("--points", help="CSV with header x,y")
    p.add_argument("--deriv", help="a1,a2 derivative order")
    p.add_argument("--monomial-csv", help="also export the monomial table as i,j,coef")
    p.add_argument("--compare-oracle", action="store_true",
                   help="add Poisson-integral column (needs boundary spec)")
    p.add_argument("--oracle-nodes", type=int, help="Poisson quadrature nodes")
    _add_boundary_args(p)
    p.add_argument("--output", help="output CSV (default stdout)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("study", help="convergence study with bound reports")
    _add_boundary_args(p)
    p.add_argument("--R", type=float, default=1.0)
    p.add_argument("--ns", required=True, help="comma list of degrees, e.g. 8,16,32")
    p.add_argument("--radii", required=True, help="comma list of radii")
    p.add_argument("--M", type=int)
    p.add_argument("--grid", type=int, help="angular test-grid size")
    p.add_argument("--gamma0", type=float)
    p.add_argument("--gamma-k", dest="gamma_k", type=float)
    p.add_argument("--output-table", default="study.csv")
    p.add_argument("--output-reports", default="reports.json")
    p.set_defaults(func=cmd_study)

    p = sub.add_parser("taylor", help="Taylor partial sum with remainder certificate")
    p.add_argument("--spectrum", required=True)
    p.add_argument("--center", required=True, help="x0,y0 inside the open disk")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--h", required=True, help="h1,h2 displacement")
    p.add_argument("--force", action="store_true",
                   help="evaluate outside the certified region (no certificate)")
    p.add_argument("--coeffs-csv", help="export the coefficient table as a1,a2,coef")
    p.add_argument("--output", help="write the certificate JSON to a file too")
    p.set_defaults(func=cmd_taylor)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.command in ("solve", "study") and not (args.boundary_expr or args.boundary):
            parser.error(f"{args.command} needs --boundary or --boundary-expr")
        return args.func(args, cfg)
    except (DomainError, BranchCutError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, BoundaryDataError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (AliasingError, EvalOverflowError, ExpansionUnsupportedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
