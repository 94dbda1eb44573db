"""Command-line surface: run, sweep, predict, and figure batteries."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import batteries
from .analytics import (estimate_equilibrium, predict_individual_only,
                        predict_mixed_equilibrium, predict_social_equilibrium,
                        predict_three_way)
from .engine import run_simulation
from .errors import SimError
from .io import load_config, preset_names, write_sweep_csv, write_timeseries_csv
from .params import SimParams
from .sweeps import SweepSpec, run_sweep


def _load_params(path) -> SimParams:
    cfg = load_config(path)
    if isinstance(cfg, SweepSpec):
        return cfg.base
    return cfg


def cmd_run(args) -> int:
    params = _load_params(args.config)
    if args.seed is not None:
        params = params.with_(seed=args.seed)
    series = run_simulation(params)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / "timeseries.csv"
    write_timeseries_csv(series, out_path)
    mean, se = estimate_equilibrium(series, params.equilibrium_window)
    print(f"wrote {out_path}")
    print(f"equilibrium q_ok = {mean:.6f} +/- {se:.6f} "
          f"(trailing {params.equilibrium_window} steps, batch-means SE)")
    return 0


def cmd_sweep(args) -> int:
    spec = load_config(args.config)
    if isinstance(spec, SimParams):
        spec = SweepSpec(base=spec)  # single-cell sweep
    result = run_sweep(spec, workers=args.workers)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / "sweep.csv"
    write_sweep_csv(result, out_path)
    print(f"wrote {out_path} ({len(result.cells)} cells, "
          f"{spec.seeds_per_cell} seeds per cell)")
    return 0


def cmd_predict(args) -> int:
    p = _load_params(args.config)
    p_ss = 1.0 - p.u
    base = predict_individual_only(p.c_i, p.z_i, p.s_ok)
    print(f"individual-only equilibrium: {base:.6f}")
    print(f"{'q_i':>6} {'mixed':>10} {'social':>10} {'three-way(q_s=q_ai)':>20}")
    for q_i in (0.0, 0.25, 0.5, 0.75, 1.0):
        mixed = predict_mixed_equilibrium(q_i, p.c_i, p.z_i, p.c_s_human, p_ss, p.s_ok)
        social = predict_social_equilibrium(q_i, p.c_i, p.z_i, p.c_s_human, p_ss, p.s_ok)
        rest = (1.0 - q_i) / 2.0
        three = predict_three_way(q_i, rest, rest, p)
        print(f"{q_i:>6.2f} {mixed:>10.6f} {social:>10.6f} {three:>20.6f}")
    return 0


def cmd_paper(args) -> int:
    made = batteries.run_battery(args.figure, args.out, seeds=args.seeds,
                                 t_total=args.t_total, workers=args.workers)
    for name in made:
        print(f"wrote {Path(args.out) / name}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rogersim",
        description="Seeded Monte Carlo simulator of individual/social learner "
                    "populations with an AI node.",
        epilog=f"bundled presets: {', '.join(preset_names())}")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one scenario and write its time-series CSV")
    run_p.add_argument("--config", required=True,
                       help="config file path or bundled preset name")
    run_p.add_argument("--seed", type=int, default=None, help="override the config seed")
    run_p.add_argument("--out", required=True, help="output directory")
    run_p.set_defaults(func=cmd_run)

    sweep_p = sub.add_parser("sweep", help="run a parameter grid and write its sweep CSV")
    sweep_p.add_argument("--config", required=True)
    sweep_p.add_argument("--out", required=True)
    sweep_p.add_argument("--workers", type=int, default=1)
    sweep_p.set_defaults(func=cmd_sweep)

    pred_p = sub.add_parser("predict", help="print closed-form equilibrium predictions")
    pred_p.add_argument("--config", required=True)
    pred_p.set_defaults(func=cmd_predict)

    paper_p = sub.add_parser("paper", help="run the preset battery behind a figure "
                                           "and emit its CSVs")
    paper_p.add_argument("--figure", required=True, choices=batteries.FIGURE_IDS)
    paper_p.add_argument("--out", required=True)
    paper_p.add_argument("--seeds", type=int, default=3,
                         help="seeds per sweep cell (default 3)")
    paper_p.add_argument("--t-total", type=int, default=None,
                         help="override timestep count (default: full scale)")
    paper_p.add_argument("--workers", type=int, default=1)
    paper_p.set_defaults(func=cmd_paper)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SimError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
