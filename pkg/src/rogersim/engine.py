"""The per-timestep simulation loop.

Phase order within a timestep is fixed:
  (1) environment change, (2) learning (teacher pool = previous step's
  end-of-learning snapshot, AI source = previous step's level),
  (3) survival, (4) measurement q_ok = adapted survivors / n_agents,
  (5) replenishment back to n_agents, (6) AI update toward the measured q_ok.

The population lives in parallel numpy arrays (one slot per agent); the hot
loop is numba-compiled and strictly sequential, so a fixed seed gives a
byte-identical TimeSeries on every platform. RNG is numpy's PCG64.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .ai_policies import (ai_individual_update, ai_mixed_update,
                          ai_scheduled_update, ai_snap_to_mean)
from .errors import ExtinctionError
from .feedback import apply_feedback_penalty
from .params import (Agent, AiPolicyParams, LearningMode, SimParams, Strategy,
                     TimeSeries, validate_params)
from .strategies import (AI_SOURCE, choose_teacher, critical_social_learn,
                         gate_ai_access, individual_learn, social_learn_ai,
                         social_learn_human)

_INDIVIDUAL_ONLY = int(LearningMode.INDIVIDUAL_ONLY)
_HUMAN_SOCIAL = int(LearningMode.HUMAN_SOCIAL)
_AI_SOCIAL = int(LearningMode.AI_SOCIAL)
_AI_GATED = int(LearningMode.AI_GATED)
_AI_CRITICAL = int(LearningMode.AI_CRITICAL)
_AI_AND_HUMAN_CRITICAL = int(LearningMode.AI_AND_HUMAN_CRITICAL)

_SNAP = 0
_SCHEDULED = 1
_INDIVIDUAL = 2
_MIXED = 3


@dataclass
class PopulationState:
    """Struct-of-arrays population; snapshot is the previous step's
    end-of-learning adaptation flags (the teacher pool)."""

    is_individual: np.ndarray
    ai_propensity: np.ndarray
    adapted: np.ndarray
    kappa: np.ndarray
    snapshot: np.ndarray
    prev_q_ok: float = 0.0

    @property
    def n_agents(self) -> int:
        return len(self.is_individual)

    def agents(self) -> list[Agent]:
        return [
            Agent(strategy=Strategy.INDIVIDUAL if self.is_individual[j] else Strategy.SOCIAL,
                  ai_propensity=float(self.ai_propensity[j]),
                  adapted=bool(self.adapted[j]),
                  kappa=float(self.kappa[j]))
            for j in range(self.n_agents)
        ]


def init_population(params: SimParams) -> PopulationState:
    """Fresh population: unadapted, full skill, propensity 0.5, and an even
    individual/social strategy split (all individual in INDIVIDUAL_ONLY mode)."""
    n = params.n_agents
    if params.learning_mode == LearningMode.INDIVIDUAL_ONLY:
        is_ind = np.ones(n, dtype=np.bool_)
    else:
        is_ind = (np.arange(n) % 2 == 0)
    return PopulationState(
        is_individual=is_ind,
        ai_propensity=np.full(n, 0.5),
        adapted=np.zeros(n, dtype=np.bool_),
        kappa=np.ones(n),
        snapshot=np.zeros(n, dtype=np.bool_),
    )


@njit(cache=True)
def step_environment(adapted, snapshot, ai_level, u, rng):
    """With probability u the optimum changes: every adaptation flag (current
    and teacher-pool) and the AI's level become obsolete."""
    if rng.random() < u:
        adapted[:] = False
        snapshot[:] = False
        return 0.0, True
    return ai_level, False


@njit(cache=True)
def learning_phase(is_individual, ai_propensity, adapted, kappa, snapshot,
                   ai_level, mode, c_i, z_i, c_s_human, c_s_ai, feedback_decay, rng):
    """Every agent re-earns its adaptation flag; AI-learning attempts incur
    the deskilling decay after the attempt resolves."""
    n = len(is_individual)
    for j in range(n):
        used_ai = False
        if mode == _INDIVIDUAL_ONLY or is_individual[j]:
            a = individual_learn(kappa[j], c_i, z_i, rng)
        elif mode == _HUMAN_SOCIAL:
            tch = rng.integers(0, n)
            a = social_learn_human(snapshot[tch], c_s_human, rng)
        elif mode == _AI_SOCIAL:
            used_ai = True
            a = social_learn_ai(ai_level, c_s_ai, rng)
        elif mode == _AI_GATED:
            if gate_ai_access(ai_level, c_i, z_i):
                used_ai = True
                a = social_learn_ai(ai_level, c_s_ai, rng)
            else:
                a = individual_learn(kappa[j], c_i, z_i, rng)
        elif mode == _AI_CRITICAL:
            used_ai = True
            s = social_learn_ai(ai_level, c_s_ai, rng)
            a = critical_social_learn(s, kappa[j], c_i, z_i, rng)
        else:  # AI_AND_HUMAN_CRITICAL
            src = choose_teacher(ai_propensity[j], n, True, rng)
            if src == AI_SOURCE:
                used_ai = True
                s = social_learn_ai(ai_level, c_s_ai, rng)
            else:
                s = social_learn_human(snapshot[src], c_s_human, rng)
            a = critical_social_learn(s, kappa[j], c_i, z_i, rng)
        adapted[j] = a
        if used_ai:
            kappa[j] = apply_feedback_penalty(kappa[j], feedback_decay)


@njit(cache=True)
def survival_phase(is_individual, ai_propensity, adapted, kappa, s_ok, s_not_ok, rng):
    """Independent Bernoulli survival; survivors are compacted to the array
    head with order preserved. Returns (n_survivors, n_adapted_survivors,
    n_individual_survivors, sum_propensity_social, n_social_survivors,
    sum_kappa_survivors)."""
    n = len(is_individual)
    nsurv = 0
    nad = 0
    nind = 0
    nsoc = 0
    sprop = 0.0
    skappa = 0.0
    for j in range(n):
        p = s_ok if adapted[j] else s_not_ok
        if rng.random() < p:
            is_individual[nsurv] = is_individual[j]
            ai_propensity[nsurv] = ai_propensity[j]
            adapted[nsurv] = adapted[j]
            kappa[nsurv] = kappa[j]
            if adapted[nsurv]:
                nad += 1
            if is_individual[nsurv]:
                nind += 1
            else:
                nsoc += 1
                sprop += ai_propensity[nsurv]
            skappa += kappa[nsurv]
            nsurv += 1
    return nsurv, nad, nind, sprop, nsoc, skappa


@njit(cache=True)
def replenish(is_individual, ai_propensity, adapted, kappa, n_survivors,
              strategy_mutation_p, propensity_mutation_p, propensity_mutation_sigma, rng):
    """Refill slots n_survivors..n with newborns: strategy and propensity
    copied from a uniformly random survivor (with mutation), unadapted,
    fresh skill."""
    n = len(is_individual)
    for k in range(n_survivors, n):
        parent = rng.integers(0, n_survivors)
        strat = is_individual[parent]
        prop = ai_propensity[parent]
        if rng.random() < strategy_mutation_p:
            strat = not strat
        if rng.random() < propensity_mutation_p:
            prop = prop + rng.normal(0.0, propensity_mutation_sigma)
            if prop < 0.0:
                prop = 0.0
            elif prop > 1.0:
                prop = 1.0
        is_individual[k] = strat
        ai_propensity[k] = prop
        adapted[k] = False
        kappa[k] = 1.0


@njit(cache=True)
def ai_update(ai_level, q_ok, policy_mode, social_update_cost,
              individual_update_cost, z_ai, rng):
    if policy_mode == _SNAP:
        return ai_snap_to_mean(ai_level, q_ok)
    elif policy_mode == _SCHEDULED:
        return ai_scheduled_update(ai_level, q_ok, social_update_cost, rng)
    elif policy_mode == _INDIVIDUAL:
        return ai_individual_update(ai_level, individual_update_cost, z_ai, rng)
    return ai_mixed_update(ai_level, q_ok, individual_update_cost, z_ai, rng)


@njit(cache=True)
def _run_kernel(rng, is_individual, ai_propensity, adapted, kappa, snapshot,
                mode, u, s_ok, s_not_ok, c_i, z_i, c_s_human, c_s_ai,
                strategy_mutation_p, propensity_mutation_p, propensity_mutation_sigma,
                feedback_decay, policy_mode, social_update_cost,
                individual_update_cost, z_ai, t_total,
                out_q_ok, out_frac_ind, out_mean_prop, out_ai_level,
                out_mean_kappa, out_changed):
    n = len(is_individual)
    ai_level = 0.0
    for t in range(t_total):
        ai_level, changed = step_environment(adapted, snapshot, ai_level, u, rng)
        learning_phase(is_individual, ai_propensity, adapted, kappa, snapshot,
                       ai_level, mode, c_i, z_i, c_s_human, c_s_ai,
                       feedback_decay, rng)
        snapshot[:] = adapted
        nsurv, nad, nind, sprop, nsoc, skappa = survival_phase(
            is_individual, ai_propensity, adapted, kappa, s_ok, s_not_ok, rng)
        q_ok = nad / n
        out_q_ok[t] = q_ok
        out_changed[t] = changed
        if nsurv == 0:
            out_frac_ind[t] = 0.0
            out_mean_prop[t] = 0.0
            out_mean_kappa[t] = 0.0
            out_ai_level[t] = ai_level
            return t + 1  # extinct
        out_frac_ind[t] = nind / nsurv
        out_mean_prop[t] = sprop / nsoc if nsoc > 0 else 0.0
        out_mean_kappa[t] = skappa / nsurv
        replenish(is_individual, ai_propensity, adapted, kappa, nsurv,
                  strategy_mutation_p, propensity_mutation_p,
                  propensity_mutation_sigma, rng)
        ai_level = ai_update(ai_level, q_ok, policy_mode, social_update_cost,
                             individual_update_cost, z_ai, rng)
        out_ai_level[t] = ai_level
    return t_total


def run_simulation(params: SimParams) -> TimeSeries:
    """Run one seeded scenario end to end. Deterministic for a fixed seed.

    Raises ExtinctionError (with the truncated series attached) if every
    agent dies in some step; this cannot happen at baseline survival rates.
    """
    validate_params(params)
    rng = np.random.default_rng(params.seed)
    state = init_population(params)
    t_total = params.t_total
    out = {name: np.zeros(t_total) for name in
           ("q_ok", "frac_ind", "mean_prop", "ai_level", "mean_kappa")}
    out_changed = np.zeros(t_total, dtype=np.bool_)
    pol = params.ai_policy
    done = _run_kernel(
        rng, state.is_individual, state.ai_propensity, state.adapted,
        state.kappa, state.snapshot,
        int(params.learning_mode), params.u, params.s_ok, params.s_not_ok,
        params.c_i, params.z_i, params.c_s_human, params.c_s_ai,
        params.strategy_mutation_p, params.propensity_mutation_p,
        params.propensity_mutation_sigma, params.feedback_decay,
        int(pol.mode), pol.social_update_cost, pol.individual_update_cost,
        pol.z_ai, t_total,
        out["q_ok"], out["frac_ind"], out["mean_prop"], out["ai_level"],
        out["mean_kappa"], out_changed)
    series = TimeSeries(
        params,
        q_ok=out["q_ok"][:done],
        frac_individual=out["frac_ind"][:done],
        mean_ai_propensity=out["mean_prop"][:done],
        ai_level=out["ai_level"][:done],
        mean_kappa=out["mean_kappa"][:done],
        env_changed=out_changed[:done])
    if done < t_total:
        raise ExtinctionError(
            f"population went extinct at step {done - 1}", series=series)
    return series
