"""Command-line front end: point evaluations and the sweeps behind the
density-ratio, momentum-profile, transition-line and condensed-fraction
figures, emitted as CSV or JSON.

Output is deterministic: floats are printed with 17 significant digits in
lowercase scientific notation, rows in grid order.
"""
import argparse
import json
import sys

import numpy as np

from .errors import RelBecError
from .limits import Dimension, ddim_critical_temperature, ur_critical_temperature, ur_density_ratio
from .oracle import mode_sum, suggest_cutoff
from .quadrature import QuadratureConfig, thermal_charge_density
from .solver import (SolverConfig, critical_temperature, condensed_solution,
                     density_ratio, solve_mu, universal_curves)
from .statistics import momentum_profile
from .types import BoxSpec, PhasePoint

DEFAULT_Q_FAMILY = [0.01, 0.1, 1.0, 10.0]


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.16e}"
    return str(v)


def _emit(rows, columns, fmt, out_path):
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_fmt(row[c]) for c in columns) for row in rows)
        text = "\n".join(lines) + "\n"
    else:
        payload = [{c: row[c] for c in columns} for row in rows]
        text = json.dumps(payload, indent=2) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _configs(args):
    quad = QuadratureConfig(rel_tol=args.tol_quad)
    solver = SolverConfig(mu_tol=args.tol_mu, t_tol=args.tol_tc, quad=quad)
    return quad, solver


def _cmd_mu(args):
    _, solver = _configs(args)
    mu = solve_mu(args.q, args.t, solver)
    return [{"q_over_m3": args.q, "t_over_m": args.t, "mu_over_m": mu}], \
        ["q_over_m3", "t_over_m", "mu_over_m"]


def _cmd_tc(args):
    _, solver = _configs(args)
    tc = critical_temperature(args.q, solver)
    return [{"q_over_m3": args.q, "tc_over_m": tc}], ["q_over_m3", "tc_over_m"]


def _cmd_ddim_tc(args):
    tc = ddim_critical_temperature(args.q_over_m, Dimension(args.dim))
    return [{"q_over_m": args.q_over_m, "dim": args.dim, "tc_over_m": tc}], \
        ["q_over_m", "dim", "tc_over_m"]


def _cmd_ratio_sweep(args):
    _, solver = _configs(args)
    rows = []
    for q in args.q:
        tc = critical_temperature(q, solver)
        grid = [t for t in np.linspace(args.t_min, args.t_max, args.points)
                if t > tc]
        for t in [tc] + grid:  # each series starts (ends) at the transition
            rows.append({"q_over_m3": q, "t_over_m": float(t),
                         "n2_over_n1": density_ratio(q, float(t), solver)})
    return rows, ["q_over_m3", "t_over_m", "n2_over_n1"]


def _cmd_profile(args):
    _, solver = _configs(args)
    try:
        mu = solve_mu(args.q, args.t, solver)
    except RelBecError:
        mu = 1.0  # condensed: thermal cloud sits at the condensation point
    prof = momentum_profile(PhasePoint(args.t, mu), args.k_max, args.samples)
    rows = [{"k_over_m": float(k), "n1_k": float(a), "n2_k": float(b)}
            for k, a, b in zip(prof.k_grid, prof.n1_of_k, prof.n2_of_k)]
    return rows, ["k_over_m", "n1_k", "n2_k"]


def _cmd_fraction_sweep(args):
    _, solver = _configs(args)
    rows = []
    for q in args.q:
        tc = critical_temperature(q, solver)
        for i in range(1, args.points + 1):
            t = tc * i / args.points
            sol = condensed_solution(q, t, solver)
            rows.append({"q_over_m3": q, "t_over_m": t,
                         "q0_over_q": sol.q0 / q})
    return rows, ["q_over_m3", "t_over_m", "q0_over_q"]


def _cmd_universal(args):
    _, solver = _configs(args)
    rows = []
    for pt in universal_curves(args.q_min, args.q_max, args.points, solver):
        rows.append({
            "q_over_m3": pt.q, "tc_over_m": pt.t_c, "n2_over_n1": pt.ratio,
            "tc_ur": ur_critical_temperature(pt.q),
            "ratio_ur": ur_density_ratio(pt.t_c),
        })
    return rows, ["q_over_m3", "tc_over_m", "n2_over_n1", "tc_ur", "ratio_ur"]


def _cmd_oracle_check(args):
    quad, solver = _configs(args)
    try:
        mu = solve_mu(args.q, args.t, solver)
    except RelBecError:
        mu = 1.0
    phase = PhasePoint(args.t, mu)
    q_quad = thermal_charge_density(phase, quad).q_tilde
    rows = []
    for length in args.box_lengths:
        cutoff = suggest_cutoff(phase, length)
        res = mode_sum(phase, BoxSpec(length, cutoff), tail_rel_tol=1e-3)
        dev = abs(res.q_tilde_fv - q_quad) / max(abs(q_quad), 1e-300)
        rows.append({"box_length": length, "mode_cutoff": cutoff,
                     "q_tilde_fv": res.q_tilde_fv, "q_tilde_quad": q_quad,
                     "rel_deviation": dev})
    return rows, ["box_length", "mode_cutoff", "q_tilde_fv", "q_tilde_quad",
                  "rel_deviation"]


def build_parser():
    p = argparse.ArgumentParser(
        prog="relbec",
        allow_abbrev=False,
        description="Equation of state of the relativistic ideal charged "
                    "Bose gas (scaled units: T/m, mu/m, q/m^3)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--tol-quad", type=float, default=1e-10,
                   help="quadrature relative tolerance")
    p.add_argument("--tol-mu", type=float, default=1e-10,
                   help="absolute tolerance on mu/m")
    p.add_argument("--tol-tc", type=float, default=1e-8,
                   help="relative tolerance on T_c/m")
    sub = p.add_subparsers(dest="subcommand", required=True)

    s = sub.add_parser("mu", help="chemical potential from charge and T")
    s.add_argument("--q", type=float, required=True)
    s.add_argument("--t", type=float, required=True)
    s.set_defaults(func=_cmd_mu)

    s = sub.add_parser("tc", help="BEC critical temperature from charge")
    s.add_argument("--q", type=float, required=True)
    s.set_defaults(func=_cmd_tc)

    s = sub.add_parser("ddim-tc", help="UR critical temperature in d dims")
    s.add_argument("--q-over-m", type=float, required=True)
    s.add_argument("--dim", type=int, required=True)
    s.set_defaults(func=_cmd_ddim_tc)

    s = sub.add_parser("ratio-sweep",
                       help="antiparticle ratio vs T at fixed charges")
    s.add_argument("--q", type=float, nargs="+", default=DEFAULT_Q_FAMILY)
    s.add_argument("--t-min", type=float, default=0.1)
    s.add_argument("--t-max", type=float, default=20.0)
    s.add_argument("--points", type=int, default=50)
    s.set_defaults(func=_cmd_ratio_sweep)

    s = sub.add_parser("profile", help="momentum-space occupation profiles")
    s.add_argument("--q", type=float, required=True)
    s.add_argument("--t", type=float, required=True)
    s.add_argument("--k-max", type=float, default=10.0)
    s.add_argument("--samples", type=int, default=256)
    s.set_defaults(func=_cmd_profile)

    s = sub.add_parser("fraction-sweep",
                       help="condensed fraction vs T below T_c")
    s.add_argument("--q", type=float, nargs="+", default=DEFAULT_Q_FAMILY)
    s.add_argument("--points", type=int, default=50)
    s.set_defaults(func=_cmd_fraction_sweep)

    s = sub.add_parser("universal", help="transition-line universal curves")
    s.add_argument("--q-min", type=float, default=0.01)
    s.add_argument("--q-max", type=float, default=100.0)
    s.add_argument("--points", type=int, default=25)
    s.set_defaults(func=_cmd_universal)

    s = sub.add_parser("oracle-check",
                       help="finite-volume mode sum vs quadrature")
    s.add_argument("--q", type=float, required=True)
    s.add_argument("--t", type=float, required=True)
    s.add_argument("--box-lengths", type=float, nargs="+",
                   default=[50.0, 100.0, 200.0])
    s.set_defaults(func=_cmd_oracle_check)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rows, columns = args.func(args)
    except RelBecError as exc:
        record = {"error": type(exc).__name__,
                  "operation": args.subcommand,
                  "message": str(exc)}
        sys.stderr.write(json.dumps(record) + "\n")
        return 1
    _emit(rows, columns, args.format, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
