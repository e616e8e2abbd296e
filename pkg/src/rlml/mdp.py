"""Executable form of a validated environment: a deterministic tabular MDP.

State names become indices in authored order. Actions are positions into a
state's allowed-successor list, so taking action `a` in state `s` moves to
`allowed[s][a]` and pays `reward[s][allowed[s][a]]`. Transitions are
deterministic in this version.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import EnvironmentSpec
from .rng import SplitMix64
from .validate import Diagnostic, has_errors, validate_environment


class CompileError(Exception):
    """The environment failed validation; carries the diagnostics."""

    def __init__(self, diagnostics: list[Diagnostic]):
        super().__init__("; ".join(d.render() for d in diagnostics))
        self.diagnostics = diagnostics


class InvalidAction(Exception):
    pass


class NoStartState(Exception):
    """Every state is terminal, so no episode can start."""


@dataclass(frozen=True, eq=False)
class Mdp:
    names: tuple[str, ...]
    allowed: tuple[tuple[int, ...], ...]  # per-state successor indices, authored order
    reward: np.ndarray                    # dense (n, n) float64, read-only
    terminal: tuple[bool, ...]
    non_terminal: tuple[int, ...]
    step_cap: int                         # per-episode step budget: 100 * n_states

    @property
    def n_states(self) -> int:
        return len(self.names)

    @property
    def step_cap_only(self) -> bool:
        """True when there are no terminal states and episodes end only at the cap."""
        return not any(self.terminal)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown state {name!r}") from None


def compile_environment(env: EnvironmentSpec) -> Mdp:
    """Build an Mdp from a validated environment.

    Raises CompileError if the environment has error-level diagnostics; a
    clean validator result guarantees this cannot happen.
    """
    diagnostics = validate_environment(env)
    if has_errors(diagnostics):
        raise CompileError([d for d in diagnostics if d.severity == "error"])
    terminal_names = set(env.terminal_states)
    terminal = tuple(name in terminal_names for name in env.states)
    reward = np.array(env.rewards, dtype=np.float64)
    reward.setflags(write=False)
    return Mdp(
        names=env.states,
        allowed=env.actions,
        reward=reward,
        terminal=terminal,
        non_terminal=tuple(i for i, t in enumerate(terminal) if not t),
        step_cap=100 * len(env.states),
    )


def reset(mdp: Mdp, rng: SplitMix64) -> int:
    """Uniform draw over non-terminal states; terminal states never start an episode."""
    if not mdp.non_terminal:
        raise NoStartState("every state is terminal")
    return mdp.non_terminal[rng.randbelow(len(mdp.non_terminal))]


def step(mdp: Mdp, s: int, a: int) -> tuple[int, float, bool]:
    """Take action position `a` in state `s`; returns (successor, reward, done)."""
    if mdp.terminal[s]:
        raise InvalidAction(f"state {mdp.names[s]!r} is terminal")
    row = mdp.allowed[s]
    if not 0 <= a < len(row):
        raise InvalidAction(
            f"action position {a} out of range for state {mdp.names[s]!r} "
            f"({len(row)} allowed)")
    t = row[a]
    return t, float(mdp.reward[s][t]), mdp.terminal[t]
