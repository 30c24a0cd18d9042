"""Command-line surface: eval, slices, residual, simulate, figures.

Exit codes: 0 success, 2 usage error, 3 parameter validation error,
4 verification failure, 5 numerical abort.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__, output
from .params import ParameterError, RogonParams
from .residual import analytic_field, convergence_study, corrupted_field, residual_scan
from .rogon import eval_arrays, eval_grid
from .solver import (
    CarrierPeriodicityError,
    NumericalBlowupError,
    SimState,
    SolverConfig,
    compare_to_analytic,
    conserved_quantities,
    evolve,
    init_from_analytic,
    make_grid,
    nearest_admissible_k,
    snap_carrier,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARAMS = 3
EXIT_VERIFICATION = 4
EXIT_NUMERICAL = 5

FIGURE_PARAMS = dict(alpha=1.5, beta=1.0, a=2.0, b=5.0)
FIGURES = {
    "fig1": dict(order=1, k=0.0, times=(0.0, 0.4, 1.0)),
    "fig2": dict(order=1, k=0.5, times=(0.0, 0.4, 1.0)),
    "fig3": dict(order=2, k=0.0, times=(0.0, 0.4, 1.2)),
    "fig4": dict(order=2, k=0.5, times=(0.0, 0.8, 1.5)),
}
FIGURE_S_RANGE = (-4.0, 4.0)
FIGURE_T_RANGE = (-2.0, 2.0)
FIGURE_NS = 401
FIGURE_NT = 201


def _add_model_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--order", type=int, choices=(1, 2), required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--beta", type=float, required=True)
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--b", type=float, required=True)
    sp.add_argument("--k", type=float, default=0.0)


def _params_from(args) -> RogonParams:
    return RogonParams(alpha=args.alpha, beta=args.beta, a=args.a, b=args.b, k=args.k)


def _param_dict(p: RogonParams, order: int) -> dict:
    return {"order": order, "alpha": p.alpha, "beta": p.beta, "a": p.a, "b": p.b, "k": p.k}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rogonlab",
        description="Closed-form rogue-wave evaluation, residual verification, "
        "and split-step simulation of the coupled volatility/option-pricing model.",
    )
    parser.add_argument("--version", action="version", version=f"rogonlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="evaluate a solution on an S x t grid")
    _add_model_flags(sp)
    sp.add_argument("--s-min", type=float, default=-4.0)
    sp.add_argument("--s-max", type=float, default=4.0)
    sp.add_argument("--t-min", type=float, default=-2.0)
    sp.add_argument("--t-max", type=float, default=2.0)
    sp.add_argument("--ns", type=int, default=401)
    sp.add_argument("--nt", type=int, default=201)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("slices", help="intensity-vs-S slices at fixed times")
    _add_model_flags(sp)
    sp.add_argument("--times", required=True, help="comma-separated list of times")
    sp.add_argument("--s-min", type=float, default=-4.0)
    sp.add_argument("--s-max", type=float, default=4.0)
    sp.add_argument("--ns", type=int, default=401)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_slices)

    sp = sub.add_parser("residual", help="finite-difference residual verification")
    _add_model_flags(sp)
    sp.add_argument("--s-min", type=float, default=-5.0)
    sp.add_argument("--s-max", type=float, default=5.0)
    sp.add_argument("--t-min", type=float, default=-3.0)
    sp.add_argument("--t-max", type=float, default=3.0)
    sp.add_argument("--ns", type=int, default=101)
    sp.add_argument("--nt", type=int, default=61)
    sp.add_argument("--h", type=float, default=5e-3)
    sp.add_argument("--fd-order", type=int, choices=(2, 4, 6, 8), default=8)
    sp.add_argument("--tol", type=float, default=1e-5)
    sp.add_argument("--study", action="store_true", help="print a convergence table")
    sp.add_argument(
        "--field",
        choices=("analytic", "corrupted"),
        default="analytic",
        help="'corrupted' strips the carrier (negative-control hook)",
    )
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_residual)

    sp = sub.add_parser("simulate", help="split-step evolution seeded from the closed form")
    _add_model_flags(sp)
    sp.add_argument("--L", type=float, default=100.0)
    sp.add_argument("--N", type=int, default=2048)
    sp.add_argument("--dt", type=float, default=1e-3)
    sp.add_argument("--t0", type=float, default=-5.0)
    sp.add_argument("--t-end", type=float, default=5.0)
    sp.add_argument("--snap-k", action="store_true")
    sp.add_argument("--dealias", action="store_true")
    sp.add_argument("--record-every", type=int, default=100)
    sp.add_argument("--snapshot-every", type=int, default=0)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("figures", help="emit the four reference figure datasets")
    sp.add_argument("--out-dir", default="figures")
    sp.set_defaults(func=cmd_figures)

    return parser


def cmd_eval(args) -> int:
    t_start = time.perf_counter()
    p = _params_from(args)
    grid = eval_grid(
        p, args.order, (args.s_min, args.s_max), (args.t_min, args.t_max), args.ns, args.nt
    )
    csv_path = f"{args.out}.csv"
    output.write_field_csv(csv_path, grid.S, grid.t, grid.sigma, grid.psi)
    output.write_manifest(
        f"{args.out}.json",
        "eval",
        _param_dict(p, args.order),
        [csv_path],
        time.perf_counter() - t_start,
        grid={
            "s_range": [args.s_min, args.s_max],
            "t_range": [args.t_min, args.t_max],
            "ns": args.ns,
            "nt": args.nt,
        },
    )
    return EXIT_OK


def _parse_times(raw: str) -> list[float]:
    try:
        return [float(x) for x in raw.split(",") if x.strip() != ""]
    except ValueError:
        raise ParameterError(f"--times must be a comma list of reals, got {raw!r}")


def cmd_slices(args) -> int:
    t_start = time.perf_counter()
    p = _params_from(args)
    times = _parse_times(args.times)
    if not times:
        raise ParameterError("--times must list at least one time")
    S = np.linspace(args.s_min, args.s_max, args.ns)
    csv_paths = []
    for i, tv in enumerate(times):
        sigma, psi = eval_arrays(p, args.order, S, np.array([tv]))
        path = f"{args.out}_slice{i}.csv"
        output.write_field_csv(path, S, np.array([tv]), sigma, psi)
        csv_paths.append(path)
    script_path = f"{args.out}_plot.py"
    Path(script_path).write_text(
        output.slice_plot_script(
            [Path(c).name for c in csv_paths],
            times,
            f"order-{args.order} intensity slices",
        ),
        encoding="utf-8",
        newline="\n",
    )
    output.write_manifest(
        f"{args.out}.json",
        "slices",
        _param_dict(p, args.order),
        csv_paths + [script_path],
        time.perf_counter() - t_start,
        times=times,
        grid={"s_range": [args.s_min, args.s_max], "ns": args.ns},
    )
    return EXIT_OK


def cmd_residual(args) -> int:
    t_start = time.perf_counter()
    p = _params_from(args)
    field_fn = corrupted_field(args.order) if args.field == "corrupted" else analytic_field(args.order)
    report = residual_scan(
        field_fn,
        p,
        s_range=(args.s_min, args.s_max),
        t_range=(args.t_min, args.t_max),
        ns=args.ns,
        nt=args.nt,
        h=args.h,
        fd_order=args.fd_order,
    )
    doc = report.to_dict()
    doc["field"] = args.field
    doc["tol"] = args.tol
    doc["passed"] = report.max_abs <= args.tol
    report_path = f"{args.out}.json"
    Path(report_path).write_text(
        json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8", newline="\n"
    )
    output.write_manifest(
        f"{args.out}.manifest.json",
        "residual",
        _param_dict(p, args.order),
        [report_path],
        time.perf_counter() - t_start,
        fd={"h": args.h, "fd_order": args.fd_order, "tol": args.tol, "field": args.field},
    )
    if args.study:
        study = convergence_study(
            field_fn, p, S=0.5, t=0.3, fd_order=args.fd_order,
            h_list=(0.08, 0.04, 0.02, 0.01),
        )
        print("h          |r_sigma|      |r_psi|       roundoff")
        for h, rs, rp, flag in study.rows():
            print(f"{h:<10.4g} {rs:<13.6e} {rp:<13.6e} {flag}")
        if study.exact:
            print("residuals at roundoff for all h: field is an exact solution")
        else:
            print(f"measured slopes: sigma {study.slope_sigma:.3f}, psi {study.slope_psi:.3f}")
    print(
        f"max |r_sigma| = {report.max_abs_r_sigma:.6e}, "
        f"max |r_psi| = {report.max_abs_r_psi:.6e}, tol = {args.tol:g}"
    )
    if report.max_abs > args.tol:
        print("residual verification FAILED", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_simulate(args) -> int:
    t_start = time.perf_counter()
    p = _params_from(args)
    grid = make_grid(args.L, args.N)
    if args.snap_k:
        snapped = snap_carrier(p, grid.L)
        if snapped.k != p.k:
            print(f"snapping k = {p.k!r} to nearest admissible k = {snapped.k!r}")
        p = snapped
    state = init_from_analytic(p, args.order, grid, args.t0)
    cfg = SolverConfig(dt=args.dt, beta=p.beta, record_every=args.record_every,
                       dealias=args.dealias)

    def observer(s: SimState, g) -> dict:
        rep = conserved_quantities(s, g, cfg)
        cmp = compare_to_analytic(s, p, args.order, g)
        return {
            "N_sigma": rep.n_sigma,
            "N_psi": rep.n_psi,
            "momentum": rep.momentum,
            "hamiltonian": rep.hamiltonian,
            "l2_rel_vs_analytic": cmp["l2_rel"],
        }

    outputs = []
    records: list[dict] = []
    snap_idx = 0

    def take_snapshot(s: SimState) -> None:
        nonlocal snap_idx
        path = f"{args.out}_snap{snap_idx:05d}.csv"
        output.write_field_csv(path, grid.S, np.array([s.t]), s.sigma[None, :], s.psi[None, :])
        outputs.append(path)
        snap_idx += 1

    if args.snapshot_every > 0:
        take_snapshot(state)
        seg_span = args.snapshot_every * cfg.dt
        while state.t < args.t_end - 1e-12:
            t_next = min(state.t + seg_span, args.t_end)
            state, recs = evolve(state, grid, cfg, t_next, observer=observer)
            records.extend(recs if not records else recs[1:])
            take_snapshot(state)
    else:
        state, records = evolve(state, grid, cfg, args.t_end, observer=observer)

    series_path = f"{args.out}.csv"
    output.write_series_csv(
        series_path,
        ["t", "N_sigma", "N_psi", "momentum", "hamiltonian", "l2_rel_vs_analytic"],
        records,
    )
    outputs.append(series_path)
    output.write_manifest(
        f"{args.out}.json",
        "simulate",
        _param_dict(p, args.order),
        outputs,
        time.perf_counter() - t_start,
        solver={
            "L": args.L,
            "N": args.N,
            "dt": args.dt,
            "t0": args.t0,
            "t_end": args.t_end,
            "dealias": args.dealias,
            "record_every": args.record_every,
            "snapshot_every": args.snapshot_every,
        },
    )
    final = records[-1] if records else {}
    if final:
        print(
            f"final t = {state.t:g}, l2_rel_vs_analytic = "
            f"{final['l2_rel_vs_analytic']:.3e}"
        )
    return EXIT_OK


def cmd_figures(args) -> int:
    out_root = Path(args.out_dir)
    out_root.mkdir(parents=True, exist_ok=True)
    for name, fig in FIGURES.items():
        t_start = time.perf_counter()
        fig_dir = out_root / name
        fig_dir.mkdir(exist_ok=True)
        p = RogonParams(k=fig["k"], **FIGURE_PARAMS)
        order = fig["order"]
        grid = eval_grid(p, order, FIGURE_S_RANGE, FIGURE_T_RANGE, FIGURE_NS, FIGURE_NT)
        outputs = []

        surface_path = fig_dir / "surface.csv"
        output.write_field_csv(surface_path, grid.S, grid.t, grid.sigma, grid.psi)
        outputs.append(str(surface_path))

        slice_names = []
        S = grid.S
        for i, tv in enumerate(fig["times"]):
            sigma, psi = eval_arrays(p, order, S, np.array([tv]))
            path = fig_dir / f"slice{i}.csv"
            output.write_field_csv(path, S, np.array([tv]), sigma, psi)
            outputs.append(str(path))
            slice_names.append(path.name)

        title = f"{name}: order {order}, k = {p.k:g}"
        (fig_dir / "plot_surface.py").write_text(
            output.surface_plot_script("surface.csv", FIGURE_NS, FIGURE_NT, title),
            encoding="utf-8",
            newline="\n",
        )
        (fig_dir / "plot_slices.py").write_text(
            output.slice_plot_script(slice_names, list(fig["times"]), title),
            encoding="utf-8",
            newline="\n",
        )
        outputs += [str(fig_dir / "plot_surface.py"), str(fig_dir / "plot_slices.py")]
        output.write_manifest(
            fig_dir / "manifest.json",
            "figures",
            _param_dict(p, order),
            outputs,
            time.perf_counter() - t_start,
            figure=name,
            times=list(fig["times"]),
            grid={
                "s_range": list(FIGURE_S_RANGE),
                "t_range": list(FIGURE_T_RANGE),
                "ns": FIGURE_NS,
                "nt": FIGURE_NT,
            },
        )
        print(f"wrote {fig_dir}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except NumericalBlowupError as exc:
        print(f"numerical abort: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except CarrierPeriodicityError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except (ParameterError, ValueError) as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
