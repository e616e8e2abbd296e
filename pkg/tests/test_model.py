"""Core types and fingerprints."""

import random

import pytest

from conftest import make_hp, path_finding_env, random_valid_environment
from rlml.fingerprint import environment_digest, fingerprint
from rlml.model import AlgorithmKind, EnvironmentSpec, Hyperparameters


def test_algorithm_kind_name_bijection():
    for kind in AlgorithmKind:
        assert AlgorithmKind.from_name(kind.value) is kind
    with pytest.raises(ValueError):
        AlgorithmKind.from_name("DQN")


def test_environment_spec_normalizes_to_tuples():
    env = EnvironmentSpec(["A", "B"], [[1], [0]], [[0, 1], [2, 0]], ["B"])
    assert env.states == ("A", "B")
    assert env.actions == ((1,), (0,))
    assert env.rewards == ((0.0, 1.0), (2.0, 0.0))
    assert isinstance(env.rewards[0][0], float)


def test_environment_spec_structural_equality():
    a = EnvironmentSpec(["A", "B"], [[1], [0]], [[0, 1], [2, 0]], ["B"])
    b = EnvironmentSpec(("A", "B"), ((1,), (0,)), ((0.0, 1.0), (2.0, 0.0)), ("B",))
    assert a == b


def test_critic_rate_defaults_to_alpha():
    assert make_hp(alpha=0.3).critic_rate == 0.3
    assert make_hp(alpha=0.3, beta=0.7).critic_rate == 0.7


def test_fingerprint_deterministic():
    env = path_finding_env()
    hp = make_hp()
    assert fingerprint(env, hp) == fingerprint(env, hp)
    assert len(fingerprint(env, hp).digest) == 64  # 256-bit hex


def test_fingerprint_changes_with_reward_cell():
    env = path_finding_env()
    rewards = [list(row) for row in env.rewards]
    rewards[0][0] = 1.0
    changed = EnvironmentSpec(env.states, env.actions, rewards, env.terminal_states)
    hp = make_hp()
    assert fingerprint(env, hp) != fingerprint(changed, hp)


def test_fingerprint_changes_with_alpha():
    env = path_finding_env()
    assert fingerprint(env, make_hp(alpha=0.1)) != fingerprint(env, make_hp(alpha=0.2))


def test_fingerprint_covers_every_field():
    env = path_finding_env()
    base = fingerprint(env, make_hp())
    assert fingerprint(env, make_hp(gamma=0.8)) != base
    assert fingerprint(env, make_hp(epsilon=0.2)) != base
    assert fingerprint(env, make_hp(total_episodes=101)) != base
    terminals_changed = EnvironmentSpec(env.states, env.actions, env.rewards, ("B",))
    assert fingerprint(terminals_changed, make_hp()) != base


def test_fingerprint_explicit_beta_equal_to_alpha_is_canonical():
    env = path_finding_env()
    assert fingerprint(env, make_hp(alpha=0.3)) == fingerprint(env, make_hp(alpha=0.3, beta=0.3))
    assert fingerprint(env, make_hp(alpha=0.3)) != fingerprint(env, make_hp(alpha=0.3, beta=0.2))


def test_fingerprint_determinism_over_random_environments():
    rng = random.Random(11)
    for _ in range(25):
        env = random_valid_environment(rng)
        hp = make_hp(alpha=rng.uniform(0.01, 1.0))
        assert fingerprint(env, hp) == fingerprint(env, hp)
        assert environment_digest(env) == environment_digest(env)


def test_environment_digest_ignores_hyperparameters():
    env = path_finding_env()
    assert environment_digest(env).digest != fingerprint(env, make_hp()).digest
