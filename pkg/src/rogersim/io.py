"""Config parsing, bundled presets, and CSV emission.

Config files are TOML with five sections ([environment], [learning],
[evolution], [ai], [run]) plus an optional [sweep] section; unknown keys are
rejected so a typo'd sweep axis cannot silently no-op.
"""
from __future__ import annotations

import csv
import sys
from importlib import resources
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import ParseError, UnknownKeyError, ValidationError
from .params import CSV_COLUMNS, SimParams, TimeSeries
from .sweeps import SweepAxis, SweepSpec, SweepResult

# config key -> SimParams field (dotted for the AI policy)
_SCHEMA = {
    "environment": {"u": "u", "s_ok": "s_ok", "s_not_ok": "s_not_ok"},
    "learning": {"mode": "learning_mode", "c_i": "c_i", "z_i": "z_i",
                 "c_s_human": "c_s_human", "c_s_ai": "c_s_ai",
                 "feedback_decay": "feedback_decay"},
    "evolution": {"strategy_mutation_p": "strategy_mutation_p",
                  "propensity_mutation_p": "propensity_mutation_p",
                  "propensity_mutation_sigma": "propensity_mutation_sigma"},
    "ai": {"mode": "ai_policy.mode",
           "social_update_cost": "ai_policy.social_update_cost",
           "individual_update_cost": "ai_policy.individual_update_cost",
           "z_ai": "ai_policy.z_ai"},
    "run": {"n_agents": "n_agents", "t_total": "t_total",
            "equilibrium_window": "equilibrium_window", "seed": "seed"},
}
_SWEEP_KEYS = {"axes", "seeds_per_cell"}


def preset_names() -> list[str]:
    files = resources.files("rogersim").joinpath("presets")
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".toml"))


def preset_path(name: str):
    path = resources.files("rogersim").joinpath("presets", f"{name}.toml")
    if not path.is_file():
        raise ParseError(f"no bundled preset named {name!r}; "
                         f"available: {', '.join(preset_names())}")
    return path


def load_config(path) -> SimParams | SweepSpec:
    """Parse a config file into SimParams, or a SweepSpec when a [sweep]
    section is present. `path` may also name a bundled preset."""
    p = Path(path)
    if not p.exists() and p.suffix == "" and "/" not in str(path):
        p = preset_path(str(path))
    try:
        with open(p, "rb") as fh:
            raw = tomllib.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read config {path}: {e}") from e
    except tomllib.TOMLDecodeError as e:
        raise ParseError(f"malformed config {path}: {e}") from e
    if not raw:
        raise ParseError(f"config {path} is empty")
    return parse_config(raw)


def parse_config(raw: dict) -> SimParams | SweepSpec:
    flat = {}
    ai = {}
    for section, keys in raw.items():
        if section == "sweep":
            continue
        if section not in _SCHEMA:
            raise UnknownKeyError(f"unknown config section [{section}]")
        if not isinstance(keys, dict):
            raise ParseError(f"config section [{section}] must be a table")
        for key, value in keys.items():
            target = _SCHEMA[section].get(key)
            if target is None:
                raise UnknownKeyError(f"unknown key {key!r} in section [{section}]")
            if target.startswith("ai_policy."):
                ai[target.split(".", 1)[1]] = value
            else:
                flat[target] = value
    if ai:
        flat["ai_policy"] = ai
    params = SimParams.from_dict(flat)

    sweep = raw.get("sweep")
    if sweep is None:
        return params
    unknown = set(sweep) - _SWEEP_KEYS
    if unknown:
        raise UnknownKeyError(f"unknown key(s) in [sweep]: {sorted(unknown)}")
    axes = []
    for ax in sweep.get("axes", []):
        extra = set(ax) - {"path", "values"}
        if extra:
            raise UnknownKeyError(f"unknown key(s) in sweep axis: {sorted(extra)}")
        if "path" not in ax or "values" not in ax:
            raise ValidationError("each sweep axis needs 'path' and 'values'")
        axes.append(SweepAxis(path=ax["path"], values=tuple(ax["values"])))
    return SweepSpec(base=params, axes=tuple(axes),
                     seeds_per_cell=int(sweep.get("seeds_per_cell", 10)))


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def write_timeseries_csv(series: TimeSeries, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for t in range(len(series)):
            w.writerow([t, _fmt(series.q_ok[t]), _fmt(series.frac_individual[t]),
                        _fmt(series.mean_ai_propensity[t]), _fmt(series.ai_level[t]),
                        _fmt(series.mean_kappa[t]), int(series.env_changed[t])])


SWEEP_CSV_COLUMNS = ("axis1_name", "axis1_value", "axis2_name", "axis2_value",
                     "equilibrium_mean", "std_error", "seeds", "status")


def write_sweep_csv(result: SweepResult, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(SWEEP_CSV_COLUMNS)
        for cell in result.cells:
            names = list(cell.axis_names) + ["", ""]
            values = [_fmt(v) for v in cell.axis_values] + ["", ""]
            w.writerow([names[0], values[0], names[1], values[1],
                        _fmt(cell.equilibrium_mean), _fmt(cell.std_error),
                        cell.seeds, cell.status])


def read_timeseries_csv(path) -> dict[str, list[float]]:
    with open(path, newline="") as fh:
        r = csv.reader(fh)
        header = next(r)
        if tuple(header) != CSV_COLUMNS:
            raise ParseError(f"unexpected time-series header in {path}")
        cols = {name: [] for name in header}
        for row in r:
            for name, value in zip(header, row):
                cols[name].append(float(value))
    return cols
