"""Command-line entry points.

Subcommands: spectrum, scatter, string, infolattice. Runs are configured
by an INI file with sections [model], [background], [packets], [evolution],
[spectrum], [output]; see README for the key reference. Any long flag can
be defaulted through an environment variable SCHWINGER_INFO_<FLAG>
(e.g. SCHWINGER_INFO_OUT, SCHWINGER_INFO_LMAX).

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import configparser
import os
import sys
import time
from pathlib import Path

import numpy as np

from .dynamics import StepError
from .hilbert import load_state
from .info_lattice import full_info_lattice, info_per_scale
from .protocols import ScatteringConfig, StringConfig, run_scattering, \
    run_string_quench
from .runio import write_csv, write_info_lattice_csv, write_manifest, \
    write_scale_profile_csv
from .schwinger import ChargeBackground, ModelParams, build_hamiltonian, \
    pseudo_momentum_operator
from .spectral import ConvergenceError, classify, excited_by_deflation, \
    lanczos_lowest

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

# scaled-down analog of the four scattering momenta in the k-scan preset
PRESETS = {
    "fig7-desk": {
        "N": 12, "ga": 1.0, "ma": 1e-5, "k_values": (0.7, 1.0, 1.2, 1.3),
        "j_left": 3, "j_right": 9, "sigma": 1.0, "t_end": 6.0,
        "sample_every": 1.0, "l_max": 7,
    },
}


class ConfigError(ValueError):
    pass


def _env_default(flag: str):
    return os.environ.get("SCHWINGER_INFO_" + flag.upper())


def _read_config(path: str) -> configparser.ConfigParser:
    parser = configparser.ConfigParser()
    if not Path(path).is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except configparser.Error as err:
        raise ConfigError(f"malformed config: {err}") from err
    return parser


def _model(cfg: configparser.ConfigParser) -> ModelParams:
    if "model" not in cfg:
        raise ConfigError("config missing [model] section")
    try:
        return ModelParams(N=cfg.getint("model", "N"),
                           ga=cfg.getfloat("model", "ga"),
                           ma=cfg.getfloat("model", "ma"))
    except (ValueError, configparser.Error) as err:
        raise ConfigError(f"bad [model] section: {err}") from err


def _background(cfg: configparser.ConfigParser) -> ChargeBackground | None:
    if "background" not in cfg:
        return None
    try:
        sec = cfg["background"]
        t_remove = sec.getfloat("t_remove") if "t_remove" in sec else None
        return ChargeBackground(Q=sec.getfloat("Q"),
                                u=sec.getfloat("u", fallback=1.0),
                                center_left=sec.getint("center_left"),
                                center_right=sec.getint("center_right"),
                                t_remove=t_remove)
    except (ValueError, configparser.Error) as err:
        raise ConfigError(f"bad [background] section: {err}") from err


def _floats(raw: str) -> list[float]:
    return [float(tok) for tok in raw.replace(",", " ").split()]


def cmd_spectrum(args) -> int:
    cfg = _read_config(args.config)
    params = _model(cfg)
    sec = cfg["spectrum"] if "spectrum" in cfg else {}
    k_states = int(sec.get("k_states", 10))
    eps_gap = float(sec.get("eps_gap", 1e-6))
    shift = float(sec.get("shift", 10 * 0.5 * params.ga**2 * params.N))
    p2_cut = float(sec.get("p2_cut", 0.5))

    out_dir = Path(args.out)
    started = time.time()
    H = build_hamiltonian(params)
    P = pseudo_momentum_operator(H.basis)

    ground = lanczos_lowest(H, 1, seed=args.seed)
    vacuum_energy = float(ground.energies[0])
    states = list(ground.states)
    for _ in range(k_states - 1):
        nxt = excited_by_deflation(H, states, shift, k=1, seed=args.seed)
        states.append(nxt.states[0])

    rows = []
    for idx, state in enumerate(states):
        label = classify(state, vacuum_energy, H, P, eps_gap=eps_gap,
                         p2_cut=p2_cut)
        rows.append((idx, H.expectation(state), label.gap, label.p2,
                     label.overlap_V, label.overlap_S, label.tag))

    out_dir.mkdir(parents=True, exist_ok=True)
    table = write_csv(out_dir / "spectrum.csv",
                      ["index", "energy", "gap", "p2", "overlap_V",
                       "overlap_S", "tag"], rows)
    write_manifest(out_dir, {"config": str(args.config),
                             "N": params.N, "ga": params.ga, "ma": params.ma,
                             "k_states": k_states},
                   [table], started)
    return EXIT_OK


def _scatter_config(cfg: configparser.ConfigParser, args) -> ScatteringConfig:
    params = _model(cfg)
    if "packets" not in cfg:
        raise ConfigError("config missing [packets] section")
    pk = cfg["packets"]
    ev = cfg["evolution"] if "evolution" in cfg else {}
    out = cfg["output"] if "output" in cfg else {}
    try:
        return ScatteringConfig(
            params=params,
            k=pk.getfloat("k"),
            j_left=pk.getint("j_left"),
            j_right=pk.getint("j_right"),
            sigma=pk.getfloat("sigma", fallback=1.0),
            t_end=float(ev.get("t_end", 20.0)),
            dt=float(ev.get("dt", 0.02)),
            sample_every=float(ev.get("sample_every", 0.5)),
            l_max=args.lmax if args.lmax is not None
            else int(out.get("lmax", min(9, params.N - 1))),
            snapshot_times=_floats(out["snapshot_times"])
            if "snapshot_times" in out else None,
        )
    except (ValueError, configparser.Error) as err:
        raise ConfigError(f"bad scattering config: {err}") from err


def cmd_scatter(args) -> int:
    if args.preset:
        return _run_preset(args)
    cfg = _scatter_config(_read_config(args.config), args)
    result = run_scattering(cfg, args.out)
    return EXIT_OK if result.complete else EXIT_NUMERICAL


def _run_preset(args) -> int:
    if args.preset not in PRESETS:
        print(f"unknown preset {args.preset!r}; have {sorted(PRESETS)}",
              file=sys.stderr)
        return EXIT_CONFIG
    p = PRESETS[args.preset]
    params = ModelParams(N=p["N"], ga=p["ga"], ma=p["ma"])
    ok = True
    for k in p["k_values"]:
        cfg = ScatteringConfig(
            params=params, k=k, j_left=p["j_left"], j_right=p["j_right"],
            sigma=p["sigma"], t_end=p["t_end"],
            sample_every=p["sample_every"], l_max=p["l_max"])
        result = run_scattering(cfg, Path(args.out) / f"k{k:g}")
        ok = ok and result.complete
    return EXIT_OK if ok else EXIT_NUMERICAL


def cmd_string(args) -> int:
    cfg = _read_config(args.config)
    params = _model(cfg)
    background = _background(cfg)
    if background is None:
        raise ConfigError("string run requires a [background] section")
    ev = cfg["evolution"] if "evolution" in cfg else {}
    out = cfg["output"] if "output" in cfg else {}
    try:
        string_cfg = StringConfig(
            params=params, background=background,
            t_end=float(ev.get("t_end", 20.0)),
            dt=float(ev.get("dt", 0.02)),
            sample_every=float(ev.get("sample_every", 0.5)),
            l_max=args.lmax if args.lmax is not None
            else int(out.get("lmax", min(9, params.N - 1))),
            snapshot_times=_floats(out["snapshot_times"])
            if "snapshot_times" in out else None,
            peak_exclude_below=int(out.get("peak_exclude_below", 2)),
        )
    except (ValueError, configparser.Error) as err:
        raise ConfigError(f"bad string config: {err}") from err
    result = run_string_quench(string_cfg, args.out)
    return EXIT_OK if result.complete else EXIT_NUMERICAL


def cmd_infolattice(args) -> int:
    try:
        state = load_state(args.state)
    except (OSError, ValueError) as err:
        print(f"cannot read state file: {err}", file=sys.stderr)
        return EXIT_CONFIG
    l_max = args.lmax if args.lmax is not None else state.N - 1
    started = time.time()
    lattice = full_info_lattice(state, l_max)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    files = [
        write_info_lattice_csv(out_dir / "infolattice.csv", [(0.0, lattice)]),
        write_scale_profile_csv(out_dir / "profile.csv",
                                [(0.0, info_per_scale(lattice))]),
    ]
    write_manifest(out_dir, {"state": str(args.state), "lmax": l_max},
                   files, started)
    return EXIT_OK


def _limit_threads(n: int | None) -> None:
    if n is None:
        return
    try:
        from threadpoolctl import threadpool_limits
        threadpool_limits(limits=n)
    except ImportError:
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS",
                    "MKL_NUM_THREADS"):
            os.environ[var] = str(n)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schwinger-info",
        description="Lattice Schwinger model quenches with information-lattice "
                    "diagnostics")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_config=True):
        if needs_config:
            p.add_argument("--config", default=_env_default("config"),
                           help="INI config file")
        p.add_argument("--out", default=_env_default("out") or "out",
                       help="output directory")
        p.add_argument("--threads", type=int,
                       default=int(e) if (e := _env_default("threads")) else None)
        p.add_argument("--seed", type=int,
                       default=int(_env_default("seed") or 0))
        p.add_argument("--lmax", type=int,
                       default=int(e) if (e := _env_default("lmax")) else None)

    p = sub.add_parser("spectrum", help="low-lying spectrum with classification")
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("scatter", help="meson wave-packet scattering run")
    common(p)
    p.add_argument("--preset", help="built-in configuration name "
                                    f"(one of {sorted(PRESETS)})")
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("string", help="electric-string quench run")
    common(p)
    p.set_defaults(func=cmd_string)

    p = sub.add_parser("infolattice", help="information lattice of a saved state")
    common(p, needs_config=False)
    p.add_argument("state", help="state snapshot file (JSON)")
    p.set_defaults(func=cmd_infolattice)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _limit_threads(args.threads)
    needs_config = args.command in ("spectrum", "string") or (
        args.command == "scatter" and not getattr(args, "preset", None))
    if needs_config and getattr(args, "config", None) is None:
        print("a --config file is required", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return args.func(args)
    except ConfigError as err:
        print(f"config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConvergenceError, StepError, np.linalg.LinAlgError) as err:
        print(f"numerical failure: {err}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
