"""Core domain types shared across the toolchain.

Everything here is an immutable value object. Construction performs shape
normalization only (lists become tuples, numbers become floats); semantic
constraints such as index ranges or hyperparameter bounds are the validator's
job, so that broken models can be represented and diagnosed rather than
rejected at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class AlgorithmKind(Enum):
    """The supported model-free algorithms.

    Closed set in this version. Extending it means adding a variant here plus
    a trainer in `rlml.train` and a code fragment per target in
    `rlml.codegen`.
    """

    Q_LEARNING = "QLearning"
    SARSA = "SARSA"
    ACTOR_CRITIC = "ActorCritic"
    MONTE_CARLO = "MonteCarlo"

    @classmethod
    def from_name(cls, name: str) -> "AlgorithmKind":
        for kind in cls:
            if kind.value == name:
                return kind
        raise ValueError(f"unknown algorithm {name!r}")


@dataclass(frozen=True)
class Hyperparameters:
    """Common agent settings.

    Expected ranges (enforced by the validator, not here): alpha in (0, 1],
    gamma in [0, 1], epsilon in [0, 1], total_episodes >= 1, beta in (0, 1].
    `beta` is the critic learning rate, meaningful for ActorCritic only; when
    absent the critic uses `alpha`.
    """

    alpha: float
    gamma: float
    epsilon: float
    total_episodes: int
    beta: float | None = None

    @property
    def critic_rate(self) -> float:
        return self.alpha if self.beta is None else self.beta


@dataclass(frozen=True)
class EnvironmentSpec:
    """Raw environment arrays exactly as authored.

    `actions[s]` lists the indices of the states reachable from state `s`.
    `rewards` is a dense matrix; `rewards[s][t]` is the reward for moving
    from state `s` to state `t` (cells for disallowed moves are present but
    never read). No invariants are checked here.
    """

    states: tuple[str, ...]
    actions: tuple[tuple[int, ...], ...]
    rewards: tuple[tuple[float, ...], ...]
    terminal_states: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(str(s) for s in self.states))
        object.__setattr__(
            self, "actions", tuple(tuple(int(i) for i in row) for row in self.actions)
        )
        object.__setattr__(
            self, "rewards", tuple(tuple(float(v) for v in row) for row in self.rewards)
        )
        object.__setattr__(self, "terminal_states", tuple(str(s) for s in self.terminal_states))


@dataclass(frozen=True)
class AgentSpec:
    algorithm: AlgorithmKind
    hyperparameters: Hyperparameters


@dataclass(frozen=True)
class InputSource:
    """Provenance of a model's environment: authored inline or imported from a file.

    Excluded from model equality; two models that differ only in where their
    environment text came from are the same model.
    """

    kind: str  # "inline" | "file"
    path: str | None = None

    @classmethod
    def inline(cls) -> "InputSource":
        return cls("inline")

    @classmethod
    def from_file(cls, path: str) -> "InputSource":
        return cls("file", path)


@dataclass(frozen=True)
class RlmlModel:
    """A model with a single agent."""

    name: str
    environment: EnvironmentSpec
    agent: AgentSpec
    input_source: InputSource = field(default=InputSource("inline"), compare=False)


@dataclass(frozen=True)
class ComparatorModel:
    """A model that trains two or more agents on one shared environment."""

    name: str
    environment: EnvironmentSpec
    agents: tuple[AgentSpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "agents", tuple(self.agents))
