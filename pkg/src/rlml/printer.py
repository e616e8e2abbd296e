"""Canonical text rendering of models: the inverse of the parser.

The printed form uses a fixed entry order (states, actions, rewards,
terminal_states, then agents in declaration order), two-space indentation and
the shortest exact decimal spelling of every number, so printing is
deterministic and `parse_model(print_model(m)) == m`.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

from .model import AgentSpec, ComparatorModel, EnvironmentSpec, RlmlModel


def format_number(value: float) -> str:
    """Shortest decimal string that parses back to exactly `value`.

    Integral values drop the trailing `.0`, so authored literals like `100`
    survive a print/parse cycle looking the way they were written.
    """
    v = float(value)
    if math.isfinite(v) and v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def _bracketed(items: Iterable[str]) -> str:
    return "[" + ", ".join(items) + "]"


def _environment_lines(env: EnvironmentSpec, pad: str) -> Iterator[str]:
    yield pad + "states: " + _bracketed(env.states)
    yield pad + "actions: " + _bracketed(
        _bracketed(str(i) for i in row) for row in env.actions
    )
    yield pad + "rewards: " + _bracketed(
        _bracketed(format_number(v) for v in row) for row in env.rewards
    )
    yield pad + "terminal_states: " + _bracketed(env.terminal_states)


def _agent_lines(agent: AgentSpec, pad: str) -> Iterator[str]:
    hp = agent.hyperparameters
    yield f"{pad}agent {agent.algorithm.value} {{"
    yield f"{pad}  alpha: {format_number(hp.alpha)}"
    yield f"{pad}  gamma: {format_number(hp.gamma)}"
    yield f"{pad}  epsilon: {format_number(hp.epsilon)}"
    yield f"{pad}  total_episodes: {hp.total_episodes}"
    if hp.beta is not None:
        yield f"{pad}  beta: {format_number(hp.beta)}"
    yield pad + "}"


def print_model(model: RlmlModel | ComparatorModel) -> str:
    """Render a model to canonical RLML text (ends with a newline)."""
    if isinstance(model, ComparatorModel):
        keyword, agents = "rlml_comparator", model.agents
    else:
        keyword, agents = "rlml", (model.agent,)
    lines = [f"{keyword} {model.name} {{", "  environment {"]
    lines.extend(_environment_lines(model.environment, "    "))
    lines.append("  }")
    for agent in agents:
        lines.extend(_agent_lines(agent, "  "))
    lines.append("}")
    return "\n".join(lines) + "\n"


def print_environment(env: EnvironmentSpec) -> str:
    """Render an environment in the import-file format (four labeled sections)."""
    return "\n".join(_environment_lines(env, "")) + "\n"
