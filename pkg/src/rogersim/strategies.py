"""Per-agent learning procedures.

Every operation draws from the caller's RNG and returns whether the agent
ends the step adapted. All are numba-compiled scalar kernels so the engine
can call them inside its hot loop; they are equally callable from Python
with a numpy Generator.
"""
from numba import njit

# Teacher-source codes returned by choose_teacher: indices >= 0 name a human
# teacher in the snapshot; AI_SOURCE means the AI node.
AI_SOURCE = -1


@njit(cache=True)
def individual_learn(kappa, c_i, z_i, rng):
    """Succeeds with probability (1 - c_i) * z_i * kappa."""
    return rng.random() < (1.0 - c_i) * z_i * kappa


@njit(cache=True)
def social_learn_human(teacher_adapted, c_s_human, rng):
    """Copy an observed teacher: succeeds with probability 1 - c_s_human
    if the teacher was adapted, never otherwise."""
    if not teacher_adapted:
        return False
    return rng.random() < 1.0 - c_s_human


@njit(cache=True)
def social_learn_ai(ai_level, c_s_ai, rng):
    """Learn from the AI node: succeeds with probability (1 - c_s_ai) * level."""
    return rng.random() < (1.0 - c_s_ai) * ai_level


@njit(cache=True)
def gate_ai_access(ai_level, c_i, z_i):
    """Availability gate: AI is usable iff its level reaches the base
    individual success probability (1 - c_i) * z_i. Ties resolve to available."""
    return ai_level >= (1.0 - c_i) * z_i


@njit(cache=True)
def choose_teacher(ai_propensity, n_teachers, both_sources, rng):
    """Pick the social source: AI with probability ai_propensity when both
    sources exist, else a uniformly random human index; AI-only otherwise."""
    if both_sources:
        if rng.random() < ai_propensity:
            return AI_SOURCE
        return rng.integers(0, n_teachers)
    return AI_SOURCE


@njit(cache=True)
def critical_social_learn(social_adapted, kappa, c_i, z_i, rng):
    """Fall back to an individual attempt when the social attempt failed.
    Overall success probability is 1 - (1 - p_s) * (1 - p_i * kappa)."""
    if social_adapted:
        return True
    return individual_learn(kappa, c_i, z_i, rng)
