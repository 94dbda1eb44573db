import numpy as np
import pytest
from hypothesis import given, strategies as st

from rogersim import LearningMode, SimParams, run_simulation
from rogersim.feedback import apply_feedback_penalty


def test_penalty_is_multiplicative():
    assert apply_feedback_penalty(1.0, 0.9) == pytest.approx(0.9)
    assert apply_feedback_penalty(0.9, 0.9) == pytest.approx(0.81)


def test_no_decay_is_identity():
    assert apply_feedback_penalty(0.73, 1.0) == 0.73


@given(kappa=st.floats(1e-6, 1.0), decay=st.floats(1e-6, 1.0))
def test_penalty_stays_in_half_open_interval(kappa, decay):
    out = apply_feedback_penalty(kappa, decay)
    assert 0.0 < out <= kappa


def test_decay_lowers_mean_skill_in_simulation(baseline):
    p = baseline.with_(learning_mode=LearningMode.AI_CRITICAL,
                       feedback_decay=0.9, t_total=5000,
                       equilibrium_window=1000)
    s = run_simulation(p)
    tail = s.mean_kappa[-1000:]
    assert tail.mean() < 0.95
    # without decay the skill multiplier never moves
    s0 = run_simulation(p.with_(feedback_decay=1.0))
    assert np.all(s0.mean_kappa == 1.0)


def test_newborns_reset_keeps_mean_skill_positive(baseline):
    p = baseline.with_(learning_mode=LearningMode.AI_CRITICAL,
                       feedback_decay=0.9, t_total=5000,
                       equilibrium_window=1000)
    s = run_simulation(p)
    assert s.mean_kappa.min() > 0.0
