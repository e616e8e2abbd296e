"""Constraint checking over parsed models.

Four constraint families cover the environment (state-name format, action
shape and index ranges, reward-matrix shape, terminal subset), plus two
cross-checks: every non-terminal state needs at least one action, and agent
hyperparameters must sit inside their documented ranges. Problems are
reported as a list of diagnostics in document order; nothing here raises.
An empty (or warning-only) result means the model is runnable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .model import ComparatorModel, EnvironmentSpec, Hyperparameters, RlmlModel

_STATE_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class DiagnosticCode(Enum):
    STATES_FORMAT = "StatesFormat"
    DUPLICATE_STATE = "DuplicateState"
    ACTIONS_SHAPE = "ActionsShape"
    ACTION_INDEX_RANGE = "ActionIndexRange"
    REWARDS_SHAPE = "RewardsShape"
    TERMINAL_NOT_SUBSET = "TerminalNotSubset"
    EMPTY_ACTION_NON_TERMINAL = "EmptyActionNonTerminal"
    HYPERPARAM_RANGE = "HyperparamRange"


@dataclass(frozen=True)
class Diagnostic:
    code: DiagnosticCode
    message: str
    location: str  # path naming the offending element, e.g. "actions[2]"
    severity: str = "error"  # "error" | "warning"

    def render(self) -> str:
        return f"{self.severity.upper()} {self.code.value} at {self.location}: {self.message}"


def has_errors(diagnostics: Sequence[Diagnostic]) -> bool:
    return any(d.severity == "error" for d in diagnostics)


def validate_states(states: Sequence[str]) -> list[Diagnostic]:
    out: list[Diagnostic] = []
    if not states:
        out.append(Diagnostic(DiagnosticCode.STATES_FORMAT,
                              "states must be a non-empty list of state names", "states"))
        return out
    first_seen: dict[str, int] = {}
    for i, name in enumerate(states):
        if not _STATE_NAME_RE.match(name):
            out.append(Diagnostic(
                DiagnosticCode.STATES_FORMAT,
                f"state name {name!r} must match [A-Za-z0-9_]+ (no commas or spaces)",
                f"states[{i}]"))
        elif name in first_seen:
            out.append(Diagnostic(
                DiagnosticCode.DUPLICATE_STATE,
                f"duplicate state name {name!r} (first declared at states[{first_seen[name]}])",
                f"states[{i}]"))
        else:
            first_seen[name] = i
    return out


def validate_actions(states: Sequence[str],
                     actions: Sequence[Sequence[int]]) -> list[Diagnostic]:
    """Check action rows against already-valid states."""
    out: list[Diagnostic] = []
    n = len(states)
    if len(actions) != n:
        out.append(Diagnostic(
            DiagnosticCode.ACTIONS_SHAPE,
            f"expected {n} action rows (one per state), found {len(actions)}",
            "actions"))
        return out
    for i, row in enumerate(actions):
        seen: set[int] = set()
        for j, index in enumerate(row):
            if not 0 <= index < n:
                out.append(Diagnostic(
                    DiagnosticCode.ACTION_INDEX_RANGE,
                    f"index {index} is out of range for {n} states",
                    f"actions[{i}][{j}]"))
            elif index in seen:
                out.append(Diagnostic(
                    DiagnosticCode.ACTION_INDEX_RANGE,
                    f"duplicate index {index} in action row",
                    f"actions[{i}][{j}]"))
            seen.add(index)
    return out


def validate_rewards(states: Sequence[str],
                     rewards: Sequence[Sequence[float]]) -> list[Diagnostic]:
    """Check the reward matrix is dense |states| x |states|."""
    out: list[Diagnostic] = []
    n = len(states)
    if len(rewards) != n:
        out.append(Diagnostic(
            DiagnosticCode.REWARDS_SHAPE,
            f"expected {n} reward rows (one per state), found {len(rewards)}",
            "rewards"))
        return out
    for i, row in enumerate(rewards):
        if len(row) != n:
            out.append(Diagnostic(
                DiagnosticCode.REWARDS_SHAPE,
                f"expected {n} reward cells in row, found {len(row)}",
                f"rewards[{i}]"))
    return out


def validate_terminals(states: Sequence[str],
                       terminals: Sequence[str]) -> list[Diagnostic]:
    """Check terminal names form a duplicate-free subset of states.

    An empty terminal list is allowed but flagged as a warning: episodes then
    end only when they hit the step cap.
    """
    out: list[Diagnostic] = []
    if not terminals:
        out.append(Diagnostic(
            DiagnosticCode.TERMINAL_NOT_SUBSET,
            "terminal_states is empty; training episodes will end only at the step cap",
            "terminal_states", severity="warning"))
        return out
    declared = set(states)
    seen: set[str] = set()
    for i, name in enumerate(terminals):
        if name not in declared:
            out.append(Diagnostic(
                DiagnosticCode.TERMINAL_NOT_SUBSET,
                f"terminal state {name!r} is not a declared state",
                f"terminal_states[{i}]"))
        elif name in seen:
            out.append(Diagnostic(
                DiagnosticCode.TERMINAL_NOT_SUBSET,
                f"duplicate terminal state {name!r}",
                f"terminal_states[{i}]"))
        seen.add(name)
    return out


def validate_environment(env: EnvironmentSpec) -> list[Diagnostic]:
    """All four families plus the dead-state cross-check, in document order.

    Checks that depend on valid states are skipped while states are broken;
    the dead-state check additionally needs the action row count to match.
    """
    out = validate_states(env.states)
    if has_errors(out):
        return out
    action_diags = validate_actions(env.states, env.actions)
    out.extend(action_diags)
    out.extend(validate_rewards(env.states, env.rewards))
    out.extend(validate_terminals(env.states, env.terminal_states))
    if len(env.actions) == len(env.states):
        terminal_names = set(env.terminal_states)
        for i, row in enumerate(env.actions):
            if not row and env.states[i] not in terminal_names:
                out.append(Diagnostic(
                    DiagnosticCode.EMPTY_ACTION_NON_TERMINAL,
                    f"non-terminal state {env.states[i]!r} has an empty action row",
                    f"actions[{i}]"))
    return out


def validate_hyperparameters(hp: Hyperparameters, location: str) -> list[Diagnostic]:
    out: list[Diagnostic] = []

    def bad(field: str, message: str) -> None:
        out.append(Diagnostic(DiagnosticCode.HYPERPARAM_RANGE, message,
                              f"{location}.{field}"))

    if not 0 < hp.alpha <= 1:
        bad("alpha", f"alpha must be in (0, 1], got {hp.alpha}")
    if not 0 <= hp.gamma <= 1:
        bad("gamma", f"gamma must be in [0, 1], got {hp.gamma}")
    if not 0 <= hp.epsilon <= 1:
        bad("epsilon", f"epsilon must be in [0, 1], got {hp.epsilon}")
    if hp.total_episodes < 1:
        bad("total_episodes", f"total_episodes must be >= 1, got {hp.total_episodes}")
    if hp.beta is not None and not 0 < hp.beta <= 1:
        bad("beta", f"beta must be in (0, 1], got {hp.beta}")
    return out


def validate_model(model: RlmlModel | ComparatorModel) -> list[Diagnostic]:
    """Environment checks followed by per-agent hyperparameter checks."""
    out = validate_environment(model.environment)
    if isinstance(model, ComparatorModel):
        for k, agent in enumerate(model.agents):
            out.extend(validate_hyperparameters(agent.hyperparameters, f"agents[{k}]"))
    else:
        out.extend(validate_hyperparameters(model.agent.hyperparameters, "agent"))
    return out
