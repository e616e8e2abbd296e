"""The value-iteration oracle."""

import numpy as np
import pytest

from conftest import two_state_env
import rlml
from rlml.mdp import compile_environment
from rlml.model import EnvironmentSpec
from rlml.solve import optimal_successors, value_iteration


def test_two_state_analytic_value():
    mdp = compile_environment(two_state_env(reward=100.0))
    v = value_iteration(mdp, gamma=0.9)
    assert v[0] == pytest.approx(100.0, abs=1e-9)
    assert v[1] == 0.0


def test_path_finding_values_and_tie_sets(path_finding_mdp):
    # hand derivation: V(B)=V(F)=100, V(A)=V(E)=90, V(D)=81;
    # D ties between A and E, E ties between B and F.
    v = value_iteration(path_finding_mdp, gamma=0.9)
    names = path_finding_mdp.names
    expected = {"A": 90.0, "B": 100.0, "C": 0.0, "D": 81.0, "E": 90.0, "F": 100.0}
    for name, value in expected.items():
        assert v[names.index(name)] == pytest.approx(value, abs=1e-8)
    best = optimal_successors(path_finding_mdp, 0.9)
    readable = {names[s]: {names[t] for t in ts} for s, ts in best.items()}
    assert readable == {
        "A": {"B"},
        "B": {"C"},
        "D": {"A", "E"},
        "E": {"B", "F"},
        "F": {"C"},
    }


def test_discount_shrinks_values(path_finding_mdp):
    v_half = value_iteration(path_finding_mdp, gamma=0.5)
    v_nine = value_iteration(path_finding_mdp, gamma=0.9)
    a = path_finding_mdp.index_of("A")
    assert v_half[a] < v_nine[a]


def test_self_loop_with_positive_reward_accumulates():
    # one state looping on itself at reward 1: V = 1 / (1 - gamma)
    env = EnvironmentSpec(("A", "Z"), ((0, 1), (1,)), ((1.0, 0.0), (0.0, 0.0)), ("Z",))
    mdp = compile_environment(env)
    v = value_iteration(mdp, gamma=0.5)
    assert v[0] == pytest.approx(2.0, abs=1e-8)


def test_gamma_one_rejected(path_finding_mdp):
    with pytest.raises(ValueError):
        value_iteration(path_finding_mdp, gamma=1.0)


def test_terminal_states_keep_zero_value(path_finding_mdp):
    v = value_iteration(path_finding_mdp, gamma=0.9)
    c = path_finding_mdp.index_of("C")
    assert v[c] == 0.0
    assert np.all(np.isfinite(v))
