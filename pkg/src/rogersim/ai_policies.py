"""End-of-timestep update rules for the AI node's adaptation level.

Each rule maps (current level, just-measured population mean q_ok) to the
next level. The engine invokes exactly one of these per timestep, after
measurement, so learners always see the previous step's level.
"""
from numba import njit


@njit(cache=True)
def ai_snap_to_mean(level, q_ok):
    """Revert to the population mean measured this step."""
    return q_ok


@njit(cache=True)
def ai_scheduled_update(level, q_ok, social_update_cost, rng):
    """Snap to the mean with probability 1 - social_update_cost, else keep
    the current level (which the engine zeroes on environment change)."""
    if rng.random() < 1.0 - social_update_cost:
        return q_ok
    return level


@njit(cache=True)
def ai_individual_update(level, individual_update_cost, z_ai, rng):
    """Learn about the world directly: fully adapted with probability
    (1 - cost) * z_ai, otherwise a wrong conclusion (level 0)."""
    if rng.random() < (1.0 - individual_update_cost) * z_ai:
        return 1.0
    return 0.0


@njit(cache=True)
def ai_mixed_update(level, q_ok, individual_update_cost, z_ai, rng):
    """Greedy branch choice: take whichever of the individual attempt
    (expected level (1-cost)*z_ai) or the social snap (expected level q_ok)
    has the higher expectation; ties go to the social branch."""
    if (1.0 - individual_update_cost) * z_ai > q_ok:
        return ai_individual_update(level, individual_update_cost, z_ai, rng)
    return ai_snap_to_mean(level, q_ok)
