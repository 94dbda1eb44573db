"""Domain types: scenario parameters, agents, the AI node, and per-step records.

All types are immutable value types; construction validates every invariant
and raises ValidationError naming the first violated field.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, fields, replace

import numpy as np

from .errors import ValidationError


class LearningMode(enum.IntEnum):
    INDIVIDUAL_ONLY = 0
    HUMAN_SOCIAL = 1
    AI_SOCIAL = 2
    AI_GATED = 3
    AI_CRITICAL = 4
    AI_AND_HUMAN_CRITICAL = 5


class AiUpdateMode(enum.IntEnum):
    SNAP_TO_MEAN = 0
    SCHEDULED_SOCIAL = 1
    INDIVIDUAL = 2
    MIXED = 3


def _check_unit(name, value):
    if not (0.0 <= value <= 1.0):
        raise ValidationError(f"{name} must lie in [0, 1], got {value}")


@dataclass(frozen=True)
class AiPolicyParams:
    """How the AI node refreshes its adaptation level at the end of a step."""

    social_update_cost: float = 0.0    # per-step probability of NOT snapping to the mean
    individual_update_cost: float = 0.0
    z_ai: float = 0.0                  # success probability of the AI's own learning
    mode: AiUpdateMode = AiUpdateMode.SNAP_TO_MEAN

    def __post_init__(self):
        _check_unit("ai_policy.social_update_cost", self.social_update_cost)
        _check_unit("ai_policy.individual_update_cost", self.individual_update_cost)
        _check_unit("ai_policy.z_ai", self.z_ai)


@dataclass(frozen=True)
class SimParams:
    """Full parameterization of one simulation scenario."""

    n_agents: int = 1000
    u: float = 0.01                 # per-step probability the optimal behavior changes
    s_ok: float = 0.93              # survival probability when adapted
    s_not_ok: float = 0.85          # survival probability when not adapted
    c_i: float = 0.05               # individual learning cost
    z_i: float = 0.66               # individual learning success probability
    c_s_human: float = 0.0          # cost of social learning from a human teacher
    c_s_ai: float = 0.0             # cost of social learning from the AI
    strategy_mutation_p: float = 0.005
    propensity_mutation_p: float = 0.005
    propensity_mutation_sigma: float = 0.1
    t_total: int = 200_000
    equilibrium_window: int = 50_000
    learning_mode: LearningMode = LearningMode.INDIVIDUAL_ONLY
    feedback_decay: float = 1.0     # kappa multiplier applied on each AI-learning attempt
    ai_policy: AiPolicyParams = field(default_factory=AiPolicyParams)
    seed: int = 0

    def __post_init__(self):
        if self.n_agents < 2:
            raise ValidationError(f"n_agents must be >= 2, got {self.n_agents}")
        for name in ("u", "s_ok", "s_not_ok", "c_i", "z_i", "c_s_human", "c_s_ai",
                     "strategy_mutation_p", "propensity_mutation_p"):
            _check_unit(name, getattr(self, name))
        if self.s_ok < self.s_not_ok:
            raise ValidationError(
                f"s_ok must be >= s_not_ok, got {self.s_ok} < {self.s_not_ok}")
        if self.propensity_mutation_sigma < 0:
            raise ValidationError("propensity_mutation_sigma must be >= 0")
        if self.t_total < 1:
            raise ValidationError("t_total must be >= 1")
        if not (1 <= self.equilibrium_window <= self.t_total):
            raise ValidationError(
                f"equilibrium_window must lie in [1, t_total], got {self.equilibrium_window}")
        if not (0.0 < self.feedback_decay <= 1.0):
            raise ValidationError(
                f"feedback_decay must lie in (0, 1], got {self.feedback_decay}")
        if not (0 <= self.seed < 2 ** 64):
            raise ValidationError("seed must be an unsigned 64-bit integer")

    @property
    def p_i_base(self) -> float:
        """Individual learning success probability at full skill, (1-c_i)*z_i."""
        return (1.0 - self.c_i) * self.z_i

    def with_(self, **kwargs) -> "SimParams":
        return replace(self, **kwargs)

    def to_dict(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self) if f.name != "ai_policy"}
        d["learning_mode"] = self.learning_mode.name.lower()
        d["ai_policy"] = {
            "social_update_cost": self.ai_policy.social_update_cost,
            "individual_update_cost": self.ai_policy.individual_update_cost,
            "z_ai": self.ai_policy.z_ai,
            "mode": self.ai_policy.mode.name.lower(),
        }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SimParams":
        d = dict(d)
        ai = dict(d.pop("ai_policy", {}))
        if "mode" in ai:
            ai["mode"] = _parse_enum(AiUpdateMode, ai["mode"], "ai_policy.mode")
        if "learning_mode" in d:
            d["learning_mode"] = _parse_enum(LearningMode, d["learning_mode"], "learning_mode")
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValidationError(f"unknown SimParams field(s): {sorted(unknown)}")
        return cls(ai_policy=AiPolicyParams(**ai), **d)


def _parse_enum(enum_cls, value, name):
    if isinstance(value, enum_cls):
        return value
    try:
        return enum_cls[str(value).upper()]
    except KeyError:
        valid = ", ".join(m.name.lower() for m in enum_cls)
        raise ValidationError(f"{name} must be one of {{{valid}}}, got {value!r}") from None


def validate_params(p: SimParams) -> SimParams:
    """Return p unchanged if all invariants hold (dataclass construction enforces them)."""
    if not isinstance(p, SimParams):
        raise ValidationError(f"expected SimParams, got {type(p).__name__}")
    return p


class Strategy(enum.IntEnum):
    INDIVIDUAL = 0
    SOCIAL = 1


@dataclass(frozen=True)
class Agent:
    """One learner: strategy, AI-teacher propensity, adaptation flag, skill multiplier."""

    strategy: Strategy = Strategy.INDIVIDUAL
    ai_propensity: float = 0.5
    adapted: bool = False
    kappa: float = 1.0

    def __post_init__(self):
        _check_unit("ai_propensity", self.ai_propensity)
        if not (0.0 < self.kappa <= 1.0):
            raise ValidationError(f"kappa must lie in (0, 1], got {self.kappa}")


@dataclass(frozen=True)
class AiNode:
    """The AI's scalar adaptation level: the probability a copier becomes adapted."""

    level: float = 0.0

    def __post_init__(self):
        _check_unit("level", self.level)


@dataclass(frozen=True)
class StepStats:
    t: int
    q_ok: float
    frac_individual: float
    mean_ai_propensity: float
    ai_level: float
    mean_kappa: float
    env_changed: bool


CSV_COLUMNS = ("t", "q_ok", "frac_individual", "mean_ai_propensity",
               "ai_level", "mean_kappa", "env_changed")


class TimeSeries:
    """Per-timestep population statistics for one seeded run (column-oriented)."""

    def __init__(self, params: SimParams, q_ok, frac_individual, mean_ai_propensity,
                 ai_level, mean_kappa, env_changed):
        n = len(q_ok)
        for arr in (frac_individual, mean_ai_propensity, ai_level, mean_kappa, env_changed):
            if len(arr) != n:
                raise ValidationError("TimeSeries columns must have equal length")
        self.params = params
        self.q_ok = np.asarray(q_ok, dtype=np.float64)
        self.frac_individual = np.asarray(frac_individual, dtype=np.float64)
        self.mean_ai_propensity = np.asarray(mean_ai_propensity, dtype=np.float64)
        self.ai_level = np.asarray(ai_level, dtype=np.float64)
        self.mean_kappa = np.asarray(mean_kappa, dtype=np.float64)
        self.env_changed = np.asarray(env_changed, dtype=np.bool_)

    def __len__(self):
        return len(self.q_ok)

    def __getitem__(self, t) -> StepStats:
        return StepStats(
            t=int(t), q_ok=float(self.q_ok[t]),
            frac_individual=float(self.frac_individual[t]),
            mean_ai_propensity=float(self.mean_ai_propensity[t]),
            ai_level=float(self.ai_level[t]),
            mean_kappa=float(self.mean_kappa[t]),
            env_changed=bool(self.env_changed[t]),
        )

    @property
    def steps(self):
        return [self[t] for t in range(len(self))]
