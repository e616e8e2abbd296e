"""Exhaustive planning on small MDPs.

Value iteration here is the independent reference the sampled trainers are
checked against in the test suite: it never touches the training code paths,
only the Mdp arrays.
"""

from __future__ import annotations

import numpy as np

from .mdp import Mdp


def value_iteration(mdp: Mdp, gamma: float, tol: float = 1e-10,
                    max_sweeps: int = 1_000_000) -> np.ndarray:
    """Optimal state values under discount `gamma`, swept to residual < tol.

    Terminal states keep value zero. Requires gamma < 1 so the backup is a
    contraction (deterministic rewards plus possible cycles otherwise diverge).
    """
    if not 0 <= gamma < 1:
        raise ValueError(f"value iteration requires gamma in [0, 1), got {gamma}")
    n = mdp.n_states
    reward = mdp.reward
    v = np.zeros(n)
    for _ in range(max_sweeps):
        new = np.zeros(n)
        for s in mdp.non_terminal:
            best = -np.inf
            for t in mdp.allowed[s]:
                value = reward[s][t] + (0.0 if mdp.terminal[t] else gamma * v[t])
                if value > best:
                    best = value
            new[s] = best
        if np.max(np.abs(new - v)) < tol:
            return new
        v = new
    raise RuntimeError(f"value iteration did not reach residual {tol} "
                       f"within {max_sweeps} sweeps")


def optimal_successors(mdp: Mdp, gamma: float, tol: float = 1e-6) -> dict[int, set[int]]:
    """Per non-terminal state, the set of successors within `tol` of optimal.

    A learned greedy policy is optimal up to ties iff policy[s] lands in
    these sets for every state.
    """
    v = value_iteration(mdp, gamma)
    best_sets: dict[int, set[int]] = {}
    for s in mdp.non_terminal:
        values = {t: mdp.reward[s][t] + (0.0 if mdp.terminal[t] else gamma * v[t])
                  for t in mdp.allowed[s]}
        top = max(values.values())
        best_sets[s] = {t for t, value in values.items() if value >= top - tol}
    return best_sets
