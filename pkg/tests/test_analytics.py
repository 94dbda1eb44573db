import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rogersim import DegenerateError, SimParams
from rogersim.analytics import (batch_means, estimate_equilibrium,
                                predict_individual_only,
                                predict_mixed_equilibrium,
                                predict_social_equilibrium, predict_three_way)


def test_individual_only_baseline():
    assert predict_individual_only(0.05, 0.66, 0.93) == pytest.approx(0.58311)


def test_individual_only_linear():
    assert predict_individual_only(0.0, 1.0, 1.0) == 1.0
    assert predict_individual_only(1.0, 1.0, 1.0) == 0.0


def test_mixed_reduces_to_individual_at_full_share():
    # q_i = 1: no social learners, closed form collapses to p_i * s_ok
    v = predict_mixed_equilibrium(1.0, 0.05, 0.66, 0.0, 0.99, 0.93)
    assert v == pytest.approx(0.58311)


def test_mixed_known_value():
    # q_i = 0.5, free copying, p_ss = 0.99:
    # 0.627*0.93*0.5 / (1 - 0.99*0.93*0.5) = 0.540267...
    v = predict_mixed_equilibrium(0.5, 0.05, 0.66, 0.0, 0.99, 0.93)
    expect = 0.627 * 0.93 * 0.5 / (1 - 0.99 * 0.93 * 0.5)
    assert v == pytest.approx(expect)
    assert v == pytest.approx(0.540267, abs=1e-6)


def test_mixed_degenerate_denominator():
    with pytest.raises(DegenerateError):
        predict_mixed_equilibrium(0.0, 0.0, 1.0, 0.0, 1.0, 1.0)


def test_social_is_discounted_mixed():
    mixed = predict_mixed_equilibrium(0.5, 0.05, 0.66, 0.1, 0.99, 0.93)
    social = predict_social_equilibrium(0.5, 0.05, 0.66, 0.1, 0.99, 0.93)
    assert social == pytest.approx(0.9 * 0.99 * 0.93 * mixed)
    assert social < mixed


@given(q_i=st.floats(0.05, 1.0), c_s=st.floats(0.0, 1.0),
       p_ss=st.floats(0.0, 0.999))
def test_mixed_bounded_by_individual_only(q_i, c_s, p_ss):
    # cheap social learning never beats the individual-only equilibrium
    v = predict_mixed_equilibrium(q_i, 0.05, 0.66, c_s, p_ss, 0.93)
    assert 0.0 <= v <= 0.58311 + 1e-12


def test_three_way_reduces_to_individual():
    p = SimParams(u=0.01)
    v = predict_three_way(1.0, 0.0, 0.0, p)
    assert v == pytest.approx(0.58311, abs=1e-9)


def test_three_way_matches_mixed_when_one_social_branch():
    p = SimParams(u=0.01, c_s_human=0.0)
    v = predict_three_way(0.5, 0.5, 0.0, p)
    expect = predict_mixed_equilibrium(0.5, 0.05, 0.66, 0.0, 0.99, 0.93)
    assert v == pytest.approx(expect, abs=1e-8)


def test_three_way_shares_must_sum_to_one():
    with pytest.raises(DegenerateError):
        predict_three_way(0.5, 0.5, 0.5, SimParams())


def test_three_way_symmetric_in_equal_branches():
    p = SimParams(c_s_human=0.0, c_s_ai=0.0)
    a = predict_three_way(0.4, 0.6, 0.0, p)
    b = predict_three_way(0.4, 0.0, 0.6, p)
    c = predict_three_way(0.4, 0.3, 0.3, p)
    assert a == pytest.approx(b, abs=1e-9)
    assert a == pytest.approx(c, abs=1e-9)


def test_batch_means_iid_matches_naive_se():
    rng = np.random.default_rng(0)
    x = rng.normal(0.5, 0.1, size=50_000)
    mean, se = batch_means(x)
    assert mean == pytest.approx(x.mean())
    naive = x.std(ddof=1) / math.sqrt(len(x))
    assert se == pytest.approx(naive, rel=0.5)


def test_batch_means_autocorrelated_se_larger_than_naive():
    rng = np.random.default_rng(1)
    # AR(1) with strong persistence
    n, phi = 50_000, 0.99
    eps = rng.normal(0, 0.01, n)
    x = np.empty(n)
    x[0] = 0.5
    for i in range(1, n):
        x[i] = 0.5 + phi * (x[i - 1] - 0.5) + eps[i]
    _, se = batch_means(x)
    naive = x.std(ddof=1) / math.sqrt(n)
    assert se > 2 * naive


def test_batch_means_degenerate_cases():
    mean, se = batch_means(np.array([0.7]))
    assert mean == 0.7 and se == 0.0
    with pytest.raises(ValueError):
        batch_means(np.array([]))


def test_estimate_equilibrium_uses_trailing_window():
    x = np.concatenate([np.zeros(100), np.ones(100)])
    mean, se = estimate_equilibrium(x, 100)
    assert mean == 1.0 and se == 0.0


def test_estimate_equilibrium_window_too_long():
    with pytest.raises(ValueError):
        estimate_equilibrium(np.zeros(10), 11)
