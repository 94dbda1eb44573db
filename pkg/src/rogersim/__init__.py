"""Seeded Monte Carlo simulator of populations of individual and social
learners in a changing environment, extended with an AI node that learns
from the population."""

from .analytics import (batch_means, estimate_equilibrium,
                        predict_individual_only, predict_mixed_equilibrium,
                        predict_social_equilibrium, predict_three_way)
from .engine import PopulationState, init_population, run_simulation
from .errors import (ConvergenceError, DegenerateError, ExtinctionError,
                     ParseError, SimError, UnknownKeyError, ValidationError)
from .io import load_config, preset_names, write_sweep_csv, write_timeseries_csv
from .params import (Agent, AiNode, AiPolicyParams, AiUpdateMode, LearningMode,
                     SimParams, StepStats, Strategy, TimeSeries, validate_params)
from .sweeps import SweepAxis, SweepSpec, SweepResult, run_sweep, set_param

__version__ = "0.1.0"
