"""Parameter-grid execution with per-cell replication.

Cells are laid out row-major over up to two axes. Every replicate's seed is
a pure function of the base seed and its cell index, so output is identical
whatever the worker count, and any cell can be reproduced standalone.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .analytics import estimate_equilibrium
from .engine import run_simulation
from .errors import ExtinctionError, ValidationError
from .params import SimParams

STATUS_OK = "ok"
STATUS_EXTINCTION = "extinction"


@dataclass(frozen=True)
class SweepAxis:
    path: str              # SimParams field, dotted for ai_policy (e.g. "ai_policy.z_ai")
    values: tuple

    def __post_init__(self):
        if not self.values:
            raise ValidationError(f"axis {self.path!r} has no values")


@dataclass(frozen=True)
class SweepSpec:
    base: SimParams
    axes: tuple[SweepAxis, ...] = ()
    seeds_per_cell: int = 10

    def __post_init__(self):
        if len(self.axes) > 2:
            raise ValidationError("a sweep supports at most 2 axes")
        if self.seeds_per_cell < 1:
            raise ValidationError("seeds_per_cell must be >= 1")
        for axis in self.axes:
            for v in axis.values:
                set_param(self.base, axis.path, v)  # raises on bad path/range

    @property
    def n_cells(self) -> int:
        return math.prod(len(a.values) for a in self.axes) if self.axes else 1

    def cell_values(self, cell_index: int) -> tuple:
        """Axis values of a cell, row-major over the axes."""
        vals = []
        idx = cell_index
        for axis in reversed(self.axes):
            idx, k = divmod(idx, len(axis.values))
            vals.append(axis.values[k])
        return tuple(reversed(vals))

    def cell_params(self, cell_index: int, replicate: int) -> SimParams:
        p = self.base
        for axis, v in zip(self.axes, self.cell_values(cell_index)):
            p = set_param(p, axis.path, v)
        return p.with_(seed=self.base.seed + cell_index * self.seeds_per_cell + replicate)


def set_param(params: SimParams, path: str, value) -> SimParams:
    """Replace one (possibly nested) field by dotted path; validation runs
    through normal construction, so out-of-range values raise."""
    parts = path.split(".")
    try:
        if len(parts) == 1:
            return replace(params, **{parts[0]: value})
        if len(parts) == 2 and parts[0] == "ai_policy":
            pol = replace(params.ai_policy, **{parts[1]: value})
            return replace(params, ai_policy=pol)
    except TypeError:
        pass
    raise ValidationError(f"unknown parameter path {path!r}")


@dataclass(frozen=True)
class CellResult:
    axis_names: tuple[str, ...]
    axis_values: tuple
    equilibrium_mean: float
    std_error: float
    seeds: int
    status: str


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    cells: tuple[CellResult, ...] = field(default_factory=tuple)


def _run_cell(args) -> CellResult:
    spec, cell_index = args
    names = tuple(a.path for a in spec.axes)
    values = spec.cell_values(cell_index)
    means = []
    ses = []
    for r in range(spec.seeds_per_cell):
        params = spec.cell_params(cell_index, r)
        try:
            series = run_simulation(params)
        except ExtinctionError:
            return CellResult(names, values, math.nan, math.nan,
                              len(means), STATUS_EXTINCTION)
        mean, se = estimate_equilibrium(series, params.equilibrium_window)
        means.append(mean)
        ses.append(se)
    n = len(means)
    agg_mean = sum(means) / n
    agg_se = math.sqrt(sum(s * s for s in ses)) / n
    return CellResult(names, values, agg_mean, agg_se, n, STATUS_OK)


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Run every cell (seeds_per_cell seeded replicates each) and aggregate
    the trailing-window equilibrium per cell. Cells execute concurrently
    across worker processes; output order is always row-major."""
    tasks = [(spec, i) for i in range(spec.n_cells)]
    if workers <= 1 or spec.n_cells == 1:
        cells = [_run_cell(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_run_cell, tasks))
    return SweepResult(spec=spec, cells=tuple(cells))
