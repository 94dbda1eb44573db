"""Closed-form equilibrium predictions and Monte Carlo equilibrium estimation.

The closed forms describe the long-run expected adapted fraction of the
population under the different learning mixes; the Monte Carlo estimator
averages the trailing window of a run and reports a batch-means standard
error, since consecutive q_ok values are strongly autocorrelated.
"""
from __future__ import annotations

import numpy as np

from .errors import ConvergenceError, DegenerateError
from .params import SimParams, TimeSeries

N_BATCHES = 50


def predict_individual_only(c_i: float, z_i: float, s_ok: float) -> float:
    """Equilibrium adapted fraction when every agent learns individually:
    (1 - c_i) * z_i * s_ok."""
    return (1.0 - c_i) * z_i * s_ok


def predict_mixed_equilibrium(q_i: float, c_i: float, z_i: float, c_s: float,
                              p_s_ok_ok: float, s_ok: float) -> float:
    """Expected adapted fraction across all agents with an individual-learner
    share q_i and social learners copying from the population."""
    p_i = (1.0 - c_i) * z_i
    denom = 1.0 - (1.0 - c_s) * p_s_ok_ok * s_ok * (1.0 - q_i)
    if denom <= 0.0:
        raise DegenerateError(f"denominator must be positive, got {denom}")
    return p_i * s_ok * q_i / denom


def predict_social_equilibrium(q_i: float, c_i: float, z_i: float, c_s: float,
                               p_s_ok_ok: float, s_ok: float) -> float:
    """Expected adapted fraction of just the social learners."""
    mixed = predict_mixed_equilibrium(q_i, c_i, z_i, c_s, p_s_ok_ok, s_ok)
    return (1.0 - c_s) * p_s_ok_ok * s_ok * mixed


def predict_three_way(q_i: float, q_s: float, q_ai_frac: float,
                      params: SimParams, tol: float = 1e-10,
                      max_iter: int = 10_000) -> float:
    """Equilibrium adapted fraction with individual, human-social, and
    AI-social learner shares (q_i, q_s, q_ai_frac).

    Both social branches succeed in proportion to the staleness-adjusted
    population mean, so the identity is a fixed point in E[q_ok]; solved by
    damped iteration (damping 0.5) to absolute tolerance tol.
    """
    total = q_i + q_s + q_ai_frac
    if abs(total - 1.0) > 1e-9:
        raise DegenerateError(f"learner shares must sum to 1, got {total}")
    p_i = params.p_i_base
    stale = 1.0 - params.u
    a_human = (1.0 - params.c_s_human) * stale * params.s_ok * q_s
    a_ai = (1.0 - params.c_s_ai) * stale * params.s_ok * q_ai_frac
    base = p_i * params.s_ok * q_i

    x = base
    for _ in range(max_iter):
        x_new = 0.5 * x + 0.5 * (base + (a_human + a_ai) * x)
        if abs(x_new - x) <= tol:
            return x_new
        x = x_new
    raise ConvergenceError(f"fixed point did not converge within {max_iter} iterations")


def batch_means(values: np.ndarray, n_batches: int = N_BATCHES) -> tuple[float, float]:
    """Mean and batch-means standard error of a (possibly autocorrelated)
    series; uses the trailing n_batches * floor(len/n_batches) samples."""
    values = np.asarray(values, dtype=np.float64)
    n = len(values)
    if n == 0:
        raise ValueError("empty series")
    n_batches = min(n_batches, n)
    batch_size = n // n_batches
    used = values[n - n_batches * batch_size:]
    means = used.reshape(n_batches, batch_size).mean(axis=1)
    mean = float(np.mean(values))
    if n_batches < 2:
        return mean, 0.0
    se = float(np.std(means, ddof=1) / np.sqrt(n_batches))
    return mean, se


def estimate_equilibrium(series: TimeSeries | np.ndarray,
                         window: int) -> tuple[float, float]:
    """Trailing-window mean of q_ok with a batch-means standard error."""
    q = series.q_ok if isinstance(series, TimeSeries) else np.asarray(series)
    if window > len(q):
        raise ValueError(f"window {window} exceeds series length {len(q)}")
    return batch_means(q[len(q) - window:])
