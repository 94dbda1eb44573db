"""Deskilling feedback: learning from the AI erodes individual-learning skill."""
from numba import njit


@njit(cache=True)
def apply_feedback_penalty(kappa, decay):
    """Multiplicative skill decay, applied once per timestep per agent that
    attempted to learn from the AI (successful or not)."""
    return kappa * decay
