"""Shared fixtures and generators for the test suite."""

from __future__ import annotations

import random

import pytest

import rlml
from rlml import corpus
from rlml.model import (
    AgentSpec,
    AlgorithmKind,
    ComparatorModel,
    EnvironmentSpec,
    Hyperparameters,
    RlmlModel,
)

# The four valid example payloads from the language reference: six rooms,
# goal room C.
PF_STATES = ("A", "B", "C", "D", "E", "F")
PF_ACTIONS = ((1, 3), (0, 2, 4), (2,), (0, 4), (1, 3, 5), (2, 4))
PF_REWARDS = (
    (0, 0, 0, 0, 0, 0),
    (0, 0, 100, 0, 0, 0),
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0),
    (0, 0, 100, 0, 0, 0),
)
PF_TERMINALS = ("C",)


def make_hp(**overrides) -> Hyperparameters:
    values = dict(alpha=0.1, gamma=0.9, epsilon=0.1, total_episodes=100, beta=None)
    values.update(overrides)
    return Hyperparameters(**values)


def path_finding_env() -> EnvironmentSpec:
    return EnvironmentSpec(PF_STATES, PF_ACTIONS, PF_REWARDS, PF_TERMINALS)


def two_state_env(reward: float = 100.0) -> EnvironmentSpec:
    """B with a single move into terminal C paying `reward`."""
    return EnvironmentSpec(("B", "C"), ((1,), (1,)), ((0.0, reward), (0.0, 0.0)), ("C",))


@pytest.fixture(scope="session")
def path_finding() -> RlmlModel:
    return rlml.parse_model(corpus.load("path_finding"))


@pytest.fixture(scope="session")
def path_finding_mdp(path_finding):
    return rlml.compile_environment(path_finding.environment)


@pytest.fixture(scope="session")
def comparator_model() -> ComparatorModel:
    return rlml.parse_model(corpus.load("path_finding_comparator"))


@pytest.fixture(scope="session")
def simple_game() -> RlmlModel:
    return rlml.parse_model(corpus.load("simple_game"))


@pytest.fixture(scope="session")
def frozen_lake() -> RlmlModel:
    return rlml.parse_model(corpus.load("frozen_lake"))


@pytest.fixture(scope="session")
def blackjack() -> RlmlModel:
    return rlml.parse_model(corpus.load("blackjack"))


# ---------------------------------------------------------------------------
# randomized generators (seeded by the caller; stdlib random, independent of
# the engine's own PRNG)

def random_valid_environment(rng: random.Random, max_states: int = 8) -> EnvironmentSpec:
    """A random environment that passes validation (warnings allowed)."""
    n = rng.randint(1, max_states)
    states = [f"S{i}_{rng.randint(0, 9)}" for i in range(n)]
    # make names unique
    states = [f"{name}_{i}" for i, name in enumerate(states)]
    terminal = sorted(rng.sample(range(n), rng.randint(0, n)))
    terminal_set = set(terminal)
    actions = []
    for s in range(n):
        if s in terminal_set and rng.random() < 0.5:
            actions.append([])
            continue
        size = rng.randint(1, n)
        actions.append(sorted(rng.sample(range(n), size)))
    rewards = [[round(rng.uniform(-100, 100), 3) if rng.random() < 0.4 else 0.0
                for _ in range(n)] for _ in range(n)]
    return EnvironmentSpec(states, actions, rewards, [states[i] for i in terminal])


def random_hyperparameters(rng: random.Random, algorithm: AlgorithmKind) -> Hyperparameters:
    beta = None
    if algorithm is AlgorithmKind.ACTOR_CRITIC and rng.random() < 0.5:
        beta = rng.uniform(0.01, 1.0)
    return Hyperparameters(
        alpha=rng.uniform(0.001, 1.0),
        gamma=rng.choice([0.0, 0.5, 0.9, 1.0, rng.random()]),
        epsilon=rng.choice([0.0, 1.0, rng.random()]),
        total_episodes=rng.randint(1, 10_000),
        beta=beta,
    )


def random_valid_model(rng: random.Random) -> RlmlModel | ComparatorModel:
    env = random_valid_environment(rng)
    name = f"Model_{rng.randint(0, 10**6)}"
    kinds = list(AlgorithmKind)
    if rng.random() < 0.5:
        algorithm = rng.choice(kinds)
        return RlmlModel(name, env, AgentSpec(algorithm, random_hyperparameters(rng, algorithm)))
    agents = []
    for _ in range(rng.randint(2, 4)):
        algorithm = rng.choice(kinds)
        agents.append(AgentSpec(algorithm, random_hyperparameters(rng, algorithm)))
    return ComparatorModel(name, env, tuple(agents))


def random_trainable_environment(rng: random.Random) -> EnvironmentSpec:
    """Random deterministic environment (3-6 states, sparse rewards in
    [-10, 100]) in which every non-terminal state can reach a terminal,
    regenerated until that holds."""
    while True:
        n = rng.randint(3, 6)
        states = [f"S{i}" for i in range(n)]
        terminal = set(rng.sample(range(n), rng.randint(1, 2)))
        if len(terminal) == n:
            continue
        actions = []
        for s in range(n):
            if s in terminal:
                actions.append([s])
            else:
                actions.append(sorted(rng.sample(range(n), rng.randint(1, n))))
        if not _terminals_reachable(actions, terminal):
            continue
        rewards = [[0.0] * n for _ in range(n)]
        for s in range(n):
            if s in terminal:
                continue
            for t in actions[s]:
                if rng.random() < 0.35:
                    rewards[s][t] = rng.uniform(-10.0, 100.0)
        return EnvironmentSpec(states, actions, rewards,
                               [states[i] for i in sorted(terminal)])


def _terminals_reachable(actions: list[list[int]], terminal: set[int]) -> bool:
    for s in range(len(actions)):
        if s in terminal:
            continue
        seen = {s}
        frontier = [s]
        found = False
        while frontier:
            x = frontier.pop()
            if x in terminal:
                found = True
                break
            for t in actions[x]:
                if t not in seen:
                    seen.add(t)
                    frontier.append(t)
        if not found:
            return False
    return True
