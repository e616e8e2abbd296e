"""Toolchain for the RLML reinforcement-learning modelling language.

Parse textual models, validate them against the language constraints, compile
their environments into deterministic tabular MDPs, train model-free agents
(Q-Learning, SARSA, Actor-Critic, Monte Carlo), compare agents side by side,
persist trained models, and generate standalone runnable programs.
"""

from .codegen import CodegenTarget, GeneratedProgram, UnsupportedAlgorithm, generate, generate_comparator
from .compare import CompareEntry, CompareReport, render_compare, run_compare
from .fingerprint import EnvironmentFingerprint, environment_digest, fingerprint
from .mdp import CompileError, InvalidAction, Mdp, NoStartState, compile_environment, reset, step
from .model import (
    AgentSpec,
    AlgorithmKind,
    ComparatorModel,
    EnvironmentSpec,
    Hyperparameters,
    InputSource,
    RlmlModel,
)
from .parser import MissingSection, ParseError, SourceSpan, parse_env_file, parse_model
from .persist import (
    FORMAT_VERSION,
    FingerprintMismatch,
    TrainedModelFile,
    VersionMismatch,
    load_model,
    read_model_file,
    save_model,
)
from .printer import format_number, print_environment, print_model
from .rng import SplitMix64
from .solve import optimal_successors, value_iteration
from .train import (
    ActorCriticTables,
    QTable,
    TrainOutcome,
    derive_policy,
    epsilon_greedy,
    render_result,
    rollout,
    softmax,
    train_actor_critic,
    train_agent,
    train_monte_carlo,
    train_q_learning,
    train_sarsa,
)
from .validate import (
    Diagnostic,
    DiagnosticCode,
    has_errors,
    validate_actions,
    validate_environment,
    validate_hyperparameters,
    validate_model,
    validate_rewards,
    validate_states,
    validate_terminals,
)

__version__ = "0.1.0"
