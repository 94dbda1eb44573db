"""Preset batteries behind the standard figure set.

Each battery runs the scenarios a figure is built from and emits the
time-series / sweep CSVs that the chart renderers consume. Batteries never
render anything themselves.
"""
from __future__ import annotations

from pathlib import Path

from .engine import run_simulation
from .io import load_config, write_sweep_csv, write_timeseries_csv
from .params import LearningMode, SimParams
from .sweeps import SweepAxis, SweepSpec, run_sweep

FIGURE_IDS = ("2", "3", "4", "5", "6", "A1", "A2")

_U_VALUES = (0.01, 0.1, 0.5)
# update rate = 1 - cost; dense near rate 1 to resolve the saturation point
_UPDATE_COSTS = (0.99, 0.98, 0.95, 0.9, 0.8, 0.5, 0.1, 0.05, 0.01, 0.0)
_GRID = (0.1, 0.5, 0.9)


def _preset(name: str, t_total: int | None) -> SimParams:
    params = load_config(name)
    if t_total is not None:
        params = params.with_(t_total=t_total,
                              equilibrium_window=max(1, t_total // 4))
    return params


def _timeseries(name: str, out_dir: Path, filename: str, t_total: int | None):
    series = run_simulation(_preset(name, t_total))
    write_timeseries_csv(series, out_dir / filename)


def _sweep(base: SimParams, axes, out_dir: Path, filename: str,
           seeds: int, workers: int):
    spec = SweepSpec(base=base, axes=tuple(SweepAxis(p, tuple(v)) for p, v in axes),
                     seeds_per_cell=seeds)
    write_sweep_csv(run_sweep(spec, workers=workers), out_dir / filename)


def run_battery(figure_id: str, out_dir, seeds: int = 3,
                t_total: int | None = None, workers: int = 1) -> list[str]:
    """Run the scenario battery for one figure; returns the CSV filenames."""
    figure_id = str(figure_id).upper().lstrip("FIG")
    if figure_id not in FIGURE_IDS:
        raise ValueError(f"unknown figure id {figure_id!r}; expected one of {FIGURE_IDS}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    made: list[str] = []

    def ts(name, filename):
        _timeseries(name, out_dir, filename, t_total)
        made.append(filename)

    def sw(base, axes, filename):
        _sweep(base, axes, out_dir, filename, seeds, workers)
        made.append(filename)

    if figure_id == "2":
        ts("baseline_individual", "fig2_individual_timeseries.csv")
        ts("ai_social", "fig2_ai_social_timeseries.csv")
    elif figure_id == "3":
        sw(_preset("ai_social", t_total), [("u", _U_VALUES)], "fig3_baseline_sweep.csv")
        sw(_preset("ai_critical", t_total), [("u", _U_VALUES)], "fig3_critical_sweep.csv")
    elif figure_id == "4":
        sw(_preset("ai_scheduled", t_total),
           [("ai_policy.social_update_cost", _UPDATE_COSTS), ("u", _U_VALUES)],
           "fig4_update_schedule_sweep.csv")
    elif figure_id == "5":
        mixed = _preset("ai_mixed", t_total)
        axes = [("ai_policy.individual_update_cost", _GRID), ("ai_policy.z_ai", _GRID)]
        sw(mixed, axes, "fig5_baseline_sweep.csv")
        sw(mixed.with_(learning_mode=LearningMode.AI_CRITICAL), axes,
           "fig5_critical_sweep.csv")
    elif figure_id == "6":
        ts("feedback_ai_critical", "fig6_ai_only_feedback_timeseries.csv")
        ts("feedback_two_source", "fig6_two_source_feedback_timeseries.csv")
        ts("ai_human_critical", "fig6_two_source_nofeedback_timeseries.csv")
    elif figure_id == "A1":
        ts("baseline_individual", "figA1_individual_timeseries.csv")
        ts("human_social", "figA1_human_social_timeseries.csv")
    elif figure_id == "A2":
        ts("ai_social", "figA2_ai_social_timeseries.csv")
    return made
