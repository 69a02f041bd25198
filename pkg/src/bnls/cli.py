"""Command-line front end: constants | ground-state | action-gss | verify | sweep.

Configuration is a flat JSON file mirroring Params + SolverConfig + grid keys;
command-line flags override file values, and --print-config echoes the
resolved configuration.  Exit codes: 0 pass, 1 check failure, 2
configuration/regime error, 3 solver divergence.  BNLS_THREADS caps the sweep
worker count.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import json
import logging
import os
import sys
from pathlib import Path

from .constants import compute_constants, omega_formula
from .errors import (
    BnlsError,
    ConfigurationError,
    DivergenceError,
    FieldFormatError,
    PreconditionError,
    RegimeError,
    VanishingError,
)
from .functionals import Params
from .grid import BoxGrid, norms
from .fieldio import read_field, read_sidecar, sidecar_path, write_field
from .solvers import (
    GroundState,
    SolverConfig,
    extract_omega,
    mass_constrained_flow,
    pde_residual,
    petviashvili,
    route_Q,
    weinstein_minimize,
)
from .verify import TolProfile, full_verification

log = logging.getLogger("bnls")

CONFIG_KEYS = {
    "N": 1,
    "p": 8.0,
    "eps": None,  # defaults to 1.0 with a notice
    "omega": None,
    "mass": None,
    "relaxed": False,
    "points": 1024,
    "box": 40.0,
    "max_iters": 5000,
    "tol_residual": 1e-10,
    "relaxation": 1.0,
    "seed": 0,
    "init": "gaussian_bump",
    "filter": False,
    "petviashvili_gamma": None,
    "out_dir": ".",
    "samples": 500,
}


def resolve_config(args) -> dict:
    cfg = dict(CONFIG_KEYS)
    if args.config:
        loaded = json.loads(Path(args.config).read_text())
        unknown = set(loaded) - set(CONFIG_KEYS)
        if unknown:
            raise ConfigurationError(f"unknown config keys: {sorted(unknown)}")
        cfg.update(loaded)
    for key in CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            cfg[key] = flag
    if cfg["eps"] is None:
        log.info("eps not configured; defaulting to eps = 1")
        cfg["eps"] = 1.0
    return cfg


def build_problem(cfg) -> tuple:
    params = Params(
        bigN=int(cfg["N"]),
        p=float(cfg["p"]),
        eps=float(cfg["eps"]),
        omega=None if cfg["omega"] is None else float(cfg["omega"]),
        mass_c=None if cfg["mass"] is None else float(cfg["mass"]),
        relaxed=bool(cfg["relaxed"]),
    )
    grid = BoxGrid(
        dim=params.bigN, points_per_axis=int(cfg["points"]), box_length=float(cfg["box"])
    )
    solver = SolverConfig(
        max_iters=int(cfg["max_iters"]),
        tol_residual=float(cfg["tol_residual"]),
        relaxation=float(cfg["relaxation"]),
        seed=int(cfg["seed"]),
        init=str(cfg["init"]),
        filter=bool(cfg["filter"]),
        petviashvili_gamma=(
            None if cfg["petviashvili_gamma"] is None else float(cfg["petviashvili_gamma"])
        ),
    )
    return params, grid, solver


def save_state(gs: GroundState, config: SolverConfig, out_dir, name: str) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"{name}.bnls"
    write_field(path, gs.field, sidecar=gs.sidecar(config))
    return path


def load_state(path) -> GroundState:
    field = read_field(path)
    side = {}
    if sidecar_path(path).exists():
        side = read_sidecar(path)
    pdoc = side.get("params", {})
    params = Params(
        bigN=int(pdoc.get("bigN", field.grid.dim)),
        p=float(pdoc.get("p", 8.0)),
        eps=float(pdoc.get("eps", 1.0)),
        omega=pdoc.get("omega"),
        mass_c=pdoc.get("mass_c"),
        relaxed=bool(pdoc.get("relaxed", False)),
    )
    nt = norms(field, params.p)
    omega_x = extract_omega(nt, params)
    return GroundState(
        field=field,
        params=params,
        nt=nt,
        omega_extracted=omega_x,
        residual_pde=pde_residual(field, params, omega_x),
        iters=int(side.get("iters", 0)),
        route=str(side.get("route", "stored")),
        warnings=tuple(side.get("warnings", ())),
    )


# ---------------------------------------------------------------------------
# subcommands


def cmd_constants(args) -> int:
    cfg = resolve_config(args)
    if args.print_config:
        print(json.dumps(cfg, indent=2, sort_keys=True))
    params, grid, solver = build_problem(cfg)
    report = compute_constants(params, grid, solver, with_k_numeric=args.k_numeric)
    out = Path(cfg["out_dir"])
    out.mkdir(parents=True, exist_ok=True)
    (out / "constants.json").write_text(
        json.dumps(report.as_dict(), indent=2, sort_keys=True) + "\n"
    )
    print(report.table())
    return 0


def cmd_ground_state(args) -> int:
    cfg = resolve_config(args)
    if args.print_config:
        print(json.dumps(cfg, indent=2, sort_keys=True))
    if args.load:
        gs = load_state(args.load)
        print(
            f"loaded {args.load}: route={gs.route} mass={gs.nt.mass:.12g} "
            f"omega={gs.omega_extracted:.12g} residual={gs.residual_pde:.3e}"
        )
        return 0
    params, grid, solver = build_problem(cfg)
    if params.mass_c is not None:
        gs = mass_constrained_flow(params, grid, solver)
        name = "ground_state_mass_flow"
    else:
        gs = route_Q(params, grid, solver)
        name = "ground_state_critical_mass"
    path = save_state(gs, solver, cfg["out_dir"], name)
    for warning in gs.warnings:
        log.warning(warning)
    print(
        f"{gs.route}: mass={gs.nt.mass:.12g} omega={gs.omega_extracted:.12g} "
        f"residual={gs.residual_pde:.3e} iters={gs.iters} -> {path}"
    )
    return 0


def cmd_action_gss(args) -> int:
    cfg = resolve_config(args)
    if args.print_config:
        print(json.dumps(cfg, indent=2, sort_keys=True))
    params, grid, solver = build_problem(cfg)
    if params.omega is None:
        v, _ = weinstein_minimize(params, grid, solver)
        omega = omega_formula(norms(v, params.p).mass, params)
        log.info("omega not configured; using the optimizer frequency %.12g", omega)
        params = params.with_omega(omega)
    gs = petviashvili(params, grid, solver)
    path = save_state(gs, solver, cfg["out_dir"], "action_gss")
    for warning in gs.warnings:
        log.warning(warning)
    print(
        f"petviashvili at omega={params.omega:.12g}: mass={gs.nt.mass:.12g} "
        f"residual={gs.residual_pde:.3e} iters={gs.iters} -> {path}"
    )
    return 0


def cmd_verify(args) -> int:
    cfg = resolve_config(args)
    if args.print_config:
        print(json.dumps(cfg, indent=2, sort_keys=True))
    params, grid, solver = build_problem(cfg)
    energy_state = action_state = None
    if args.energy_state:
        energy_state = load_state(args.energy_state)
        params = energy_state.params
        grid = energy_state.field.grid
    if args.action_state:
        action_state = load_state(args.action_state)
    report, _states = full_verification(
        params,
        grid,
        solver,
        tol=TolProfile(),
        n_samples=int(cfg["samples"]),
        with_k_numeric=not args.skip_k_numeric,
        energy_state=energy_state,
        action_state=action_state,
    )
    out = Path(cfg["out_dir"])
    out.mkdir(parents=True, exist_ok=True)
    (out / "verify_report.json").write_text(report.to_json() + "\n")
    print(report.table())
    return 0 if report.passed else 1


def _sweep_row(task) -> dict:
    n, p, eps, cfg = task
    params = Params(bigN=n, p=p, eps=eps)
    grid = BoxGrid(dim=n, points_per_axis=int(cfg["points"]), box_length=float(cfg["box"]))
    solver = SolverConfig(
        max_iters=int(cfg["max_iters"]),
        tol_residual=float(cfg["tol_residual"]),
        seed=int(cfg["seed"]),
    )
    from .functionals import nehari_residual, pohozaev, quadratic_scale

    report = compute_constants(params, grid, solver)
    gs = route_Q(params, grid, solver)
    pm = params.with_omega(gs.omega_extracted)
    scale = quadratic_scale(gs.nt, pm)
    nehari_rel = abs(nehari_residual(gs.nt, pm)) / scale
    poho_rel = abs(pohozaev(gs.nt, pm)) / scale
    identities_pass = (
        gs.residual_pde <= 1e-6
        and nehari_rel <= 1e-6
        and poho_rel <= 1e-6
        and abs(gs.nt.mass - report.c_eps) / report.c_eps <= 1e-4
    )
    return {
        "N": n,
        "p": p,
        "eps": eps,
        "C": report.C,
        "c_eps": report.c_eps,
        "omega": report.omega_eps,
        "v_mass": report.v_mass,
        "mass_Q": gs.nt.mass,
        "residual_pde": gs.residual_pde,
        "nehari_rel": nehari_rel,
        "pohozaev_rel": poho_rel,
        "identities_pass": identities_pass,
    }


SWEEP_COLUMNS = [
    "N",
    "p",
    "eps",
    "C",
    "c_eps",
    "omega",
    "v_mass",
    "mass_Q",
    "residual_pde",
    "nehari_rel",
    "pohozaev_rel",
    "identities_pass",
]


def cmd_sweep(args) -> int:
    cfg = resolve_config(args)
    if args.print_config:
        print(json.dumps(cfg, indent=2, sort_keys=True))
    n = int(cfg["N"])
    p_grid = [float(x) for x in args.p_grid.split(",")] if args.p_grid else [float(cfg["p"])]
    eps_grid = (
        [float(x) for x in args.eps_grid.split(",")] if args.eps_grid else [float(cfg["eps"])]
    )
    tasks = [(n, p, eps, cfg) for p in p_grid for eps in eps_grid]
    for _, p, eps, _ in tasks:
        Params(bigN=n, p=p, eps=eps)  # fail fast on regime violations
    workers = int(os.environ.get("BNLS_THREADS", "0")) or min(len(tasks), os.cpu_count() or 1)
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(_sweep_row, tasks))
    out = Path(cfg["out_dir"])
    out.mkdir(parents=True, exist_ok=True)
    path = out / "sweep.csv"
    with path.open("w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=SWEEP_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows -> {path}")
    return 0 if all(r["identities_pass"] for r in rows) else 1


# ---------------------------------------------------------------------------
# argument plumbing


def _add_common(sub):
    sub.add_argument("--config", help="JSON config file (flat keys; flags override)")
    sub.add_argument("--print-config", action="store_true", help="echo the resolved config")
    sub.add_argument("--N", type=int, help="space dimension N")
    sub.add_argument("--p", type=float, help="nonlinearity exponent")
    sub.add_argument("--eps", type=float, help="fourth-order dispersion coefficient")
    sub.add_argument("--omega", type=float, help="frequency (action route)")
    sub.add_argument("--mass", type=float, help="mass constraint c (energy route)")
    sub.add_argument("--relaxed", action="store_const", const=True, default=None,
                     help="allow any 2 < p < 2* and eps = 0 (oracle mode)")
    sub.add_argument("--points", type=int, help="grid points per axis (power of two)")
    sub.add_argument("--box", type=float, help="box side length L")
    sub.add_argument("--max-iters", dest="max_iters", type=int)
    sub.add_argument("--tol", dest="tol_residual", type=float, help="solver residual tolerance")
    sub.add_argument("--relaxation", type=float)
    sub.add_argument("--seed", type=int)
    sub.add_argument("--init", choices=["gaussian_bump", "random_bandlimited"])
    sub.add_argument("--filter", action="store_const", const=True, default=None,
                     help="low-pass the nonlinearity at 2/3 of the Nyquist radius")
    sub.add_argument("--gamma", dest="petviashvili_gamma", type=float,
                     help="stabilizing exponent (default (p-1)/(p-2))")
    sub.add_argument("--out-dir", dest="out_dir", help="output directory")
    sub.add_argument("--samples", type=int, help="random fields for inequality tests")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bnls",
        description=(
            "Ground states of eps*lap^2 u - lap u + omega u = |u|^(p-2) u on periodic "
            "boxes, with the constants pipeline and identity verification."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    c = subs.add_parser("constants", help="best constants, critical mass, frequency table")
    _add_common(c)
    c.add_argument("--k-numeric", action="store_true", help="also run the quotient-ascent K")
    c.set_defaults(func=cmd_constants)

    g = subs.add_parser("ground-state", help="critical-mass state, or mass flow with --mass")
    _add_common(g)
    g.add_argument("--load", help="load and report a stored field instead of solving")
    g.set_defaults(func=cmd_ground_state)

    a = subs.add_parser("action-gss", help="fixed-frequency ground state")
    _add_common(a)
    a.set_defaults(func=cmd_action_gss)

    v = subs.add_parser("verify", help="run every identity check on fresh or stored states")
    _add_common(v)
    v.add_argument("--fresh", action="store_true",
                   help="solve fresh states (the default when no paths are given)")
    v.add_argument("--energy-state", help="stored critical-mass state to verify")
    v.add_argument("--action-state", help="stored fixed-frequency state to verify")
    v.add_argument("--skip-k-numeric", action="store_true",
                   help="skip the multi-start quotient ascent (faster)")
    v.set_defaults(func=cmd_verify)

    s = subs.add_parser(
        "sweep",
        help="CSV over a parameter grid",
        epilog="CSV columns: " + ", ".join(SWEEP_COLUMNS) + ". "
        "C is the numeric best constant, c_eps the formula critical mass, omega the "
        "optimizer frequency, v_mass the optimizer mass, mass_Q the measured state mass, "
        "then the relative PDE/Nehari/Pohozaev residuals and an overall identities flag. "
        "BNLS_THREADS caps the worker count.",
    )
    _add_common(s)
    s.add_argument("--p-grid", help="comma-separated exponents, e.g. 7,7.5,8")
    s.add_argument("--eps-grid", help="comma-separated dispersion values")
    s.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RegimeError, ConfigurationError, FieldFormatError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DivergenceError, VanishingError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        history = getattr(exc, "history", None)
        if history:
            tail = ", ".join(f"{r:.3e}" for r in history[-8:])
            print(f"residual history (tail): {tail}", file=sys.stderr)
        return 3
    except BnlsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
