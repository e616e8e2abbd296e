"""Model-free training on a compiled MDP.

Four trainers share the same conventions: tables start at zero, terminal-state
rows are never touched, every episode starts in a uniformly random
non-terminal state and ends on a terminal transition or after `mdp.step_cap`
steps, and argmax ties always break toward the lowest position. Training is
deterministic given (mdp, hyperparameters, seed); two identical calls produce
bit-identical outcomes.

The inner loops run on plain Python lists (converted from the Mdp's arrays
once, up front): scalar updates on lists beat ndarray item access by a wide
margin at these table sizes, and the generated standalone programs use the
same arithmetic expression by expression, so both compute identical floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mdp import Mdp, NoStartState
from .model import AgentSpec, AlgorithmKind, Hyperparameters
from .rng import SplitMix64


@dataclass(eq=False)
class QTable:
    """Action values indexed [s][t]; cell meaningful only for t in allowed[s]."""

    q: np.ndarray  # (n, n) float64


@dataclass(eq=False)
class ActorCriticTables:
    v: np.ndarray  # (n,) state values
    h: np.ndarray  # (n, n) action preferences, same indexing as QTable


@dataclass(eq=False)
class TrainOutcome:
    tables: QTable | ActorCriticTables
    policy: dict[int, int]          # non-terminal state -> chosen successor
    episode_returns: list[float]    # discounted return from each episode's start state
    steps_total: int
    result_text: str


def epsilon_greedy(values: list[float], epsilon: float, rng: SplitMix64) -> int:
    """Pick a position in `values`: uniform with probability epsilon,
    otherwise the argmax with ties broken toward the lowest position.

    Always consumes exactly one uniform draw (plus one more when exploring),
    so streams stay aligned across algorithms.
    """
    if rng.random() < epsilon:
        return rng.randbelow(len(values))
    best = 0
    for i in range(1, len(values)):
        if values[i] > values[best]:
            best = i
    return best


def softmax(preferences: list[float]) -> list[float]:
    """Numerically stable softmax; sums to 1 within float rounding."""
    m = max(preferences)
    exps = [math.exp(p - m) for p in preferences]
    total = sum(exps)
    return [e / total for e in exps]


def _sample(probabilities: list[float], rng: SplitMix64) -> int:
    u = rng.random()
    acc = 0.0
    for i, p in enumerate(probabilities):
        acc += p
        if u < acc:
            return i
    return len(probabilities) - 1


def _argmax(values: list[float]) -> int:
    best = 0
    for i in range(1, len(values)):
        if values[i] > values[best]:
            best = i
    return best


def mc_first_visit_update(q: list[list[float]], counts: list[list[int]],
                          episode: list[tuple[int, int, float]], gamma: float) -> None:
    """First-visit Monte Carlo update for one logged episode.

    `episode` is the list of (state, successor, reward) steps in order. Walks
    the episode backward accumulating G = r + gamma * G; each (state,
    successor) pair's first visit bumps its count and moves the stored value
    toward G by the incremental mean.
    """
    returns: dict[tuple[int, int], float] = {}
    g = 0.0
    for s, t, r in reversed(episode):
        g = r + gamma * g
        returns[(s, t)] = g  # later (earlier-in-episode) writes win: first visit
    for (s, t), value in returns.items():
        counts[s][t] += 1
        q[s][t] += (value - q[s][t]) / counts[s][t]


def _unpack(mdp: Mdp) -> tuple[list[list[int]], list[list[float]], list[bool], list[int]]:
    allowed = [list(row) for row in mdp.allowed]
    rewards = mdp.reward.tolist()
    terminal = list(mdp.terminal)
    non_terminal = list(mdp.non_terminal)
    if not non_terminal:
        raise NoStartState("every state is terminal")
    return allowed, rewards, terminal, non_terminal


def _value_bound(rewards: list[list[float]], gamma: float) -> float | None:
    """|value| <= Rmax / (1 - gamma) for gamma < 1; asserted each episode in debug runs."""
    if gamma >= 1:
        return None
    rmax = max((abs(v) for row in rewards for v in row), default=0.0)
    return rmax / (1.0 - gamma) + 1e-9


def _assert_bounded(rows: list[list[float]], bound: float) -> None:
    for row in rows:
        for v in row:
            assert abs(v) <= bound, f"value {v} exceeds bound {bound}"


def _initial_matrix(n: int, initial: np.ndarray | None) -> list[list[float]]:
    if initial is None:
        return [[0.0] * n for _ in range(n)]
    return np.asarray(initial, dtype=np.float64).tolist()


def _finish(q_rows: list[list[float]], mdp: Mdp, episode_returns: list[float],
            steps_total: int) -> TrainOutcome:
    tables = QTable(np.array(q_rows, dtype=np.float64))
    policy = derive_policy(tables, mdp)
    outcome = TrainOutcome(tables, policy, episode_returns, steps_total, "")
    outcome.result_text = render_result(outcome, mdp)
    return outcome


def train_q_learning(mdp: Mdp, hp: Hyperparameters, seed: int,
                     initial: QTable | None = None) -> TrainOutcome:
    """Off-policy one-step TD control.

    Update: q[s][t] += alpha * (r + gamma * max_t' q[t][t'] - q[s][t]) with a
    zero target beyond terminal successors.
    """
    allowed, rewards, terminal, non_terminal = _unpack(mdp)
    q = _initial_matrix(len(allowed), initial.q if initial else None)
    rng = SplitMix64(seed)
    alpha, gamma, epsilon = hp.alpha, hp.gamma, hp.epsilon
    cap = mdp.step_cap
    bound = _value_bound(rewards, gamma)
    episode_returns: list[float] = []
    steps_total = 0
    for _ in range(hp.total_episodes):
        s = non_terminal[rng.randbelow(len(non_terminal))]
        g = 0.0
        disc = 1.0
        for _ in range(cap):
            row = allowed[s]
            a = epsilon_greedy([q[s][t] for t in row], epsilon, rng)
            t = row[a]
            r = rewards[s][t]
            done = terminal[t]
            best_next = 0.0 if done else max(q[t][u] for u in allowed[t])
            q[s][t] += alpha * (r + gamma * best_next - q[s][t])
            g += disc * r
            disc *= gamma
            steps_total += 1
            s = t
            if done:
                break
        episode_returns.append(g)
        if __debug__ and bound is not None:
            _assert_bounded(q, bound)
    return _finish(q, mdp, episode_returns, steps_total)


def train_sarsa(mdp: Mdp, hp: Hyperparameters, seed: int,
                initial: QTable | None = None) -> TrainOutcome:
    """On-policy one-step TD control: the target uses the action actually
    selected at the successor state (zero beyond terminals)."""
    allowed, rewards, terminal, non_terminal = _unpack(mdp)
    q = _initial_matrix(len(allowed), initial.q if initial else None)
    rng = SplitMix64(seed)
    alpha, gamma, epsilon = hp.alpha, hp.gamma, hp.epsilon
    cap = mdp.step_cap
    bound = _value_bound(rewards, gamma)
    episode_returns: list[float] = []
    steps_total = 0
    for _ in range(hp.total_episodes):
        s = non_terminal[rng.randbelow(len(non_terminal))]
        a = epsilon_greedy([q[s][t] for t in allowed[s]], epsilon, rng)
        g = 0.0
        disc = 1.0
        for _ in range(cap):
            t = allowed[s][a]
            r = rewards[s][t]
            g += disc * r
            disc *= gamma
            steps_total += 1
            if terminal[t]:
                q[s][t] += alpha * (r - q[s][t])
                break
            next_row = allowed[t]
            a2 = epsilon_greedy([q[t][u] for u in next_row], epsilon, rng)
            q[s][t] += alpha * (r + gamma * q[t][next_row[a2]] - q[s][t])
            s, a = t, a2
        episode_returns.append(g)
        if __debug__ and bound is not None:
            _assert_bounded(q, bound)
    return _finish(q, mdp, episode_returns, steps_total)


def train_monte_carlo(mdp: Mdp, hp: Hyperparameters, seed: int,
                      initial: QTable | None = None) -> TrainOutcome:
    """On-policy first-visit Monte Carlo control with epsilon-greedy behavior.

    Values are incremental means over first-visit returns (visit counts start
    fresh each run; they are not part of the persisted tables).
    """
    allowed, rewards, terminal, non_terminal = _unpack(mdp)
    n = len(allowed)
    q = _initial_matrix(n, initial.q if initial else None)
    counts = [[0] * n for _ in range(n)]
    rng = SplitMix64(seed)
    gamma, epsilon = hp.gamma, hp.epsilon
    cap = mdp.step_cap
    episode_returns: list[float] = []
    steps_total = 0
    for _ in range(hp.total_episodes):
        s = non_terminal[rng.randbelow(len(non_terminal))]
        episode: list[tuple[int, int, float]] = []
        g = 0.0
        disc = 1.0
        for _ in range(cap):
            row = allowed[s]
            a = epsilon_greedy([q[s][t] for t in row], epsilon, rng)
            t = row[a]
            r = rewards[s][t]
            episode.append((s, t, r))
            g += disc * r
            disc *= gamma
            steps_total += 1
            s = t
            if terminal[t]:
                break
        episode_returns.append(g)
        mc_first_visit_update(q, counts, episode, gamma)
    return _finish(q, mdp, episode_returns, steps_total)


def train_actor_critic(mdp: Mdp, hp: Hyperparameters, seed: int,
                       initial: ActorCriticTables | None = None) -> TrainOutcome:
    """One-step tabular actor-critic.

    The actor keeps a preference per allowed move, turned into a policy by
    softmax; the critic keeps a value per state. Each step computes the TD
    error delta = r + gamma * v[t] (zero beyond terminals) - v[s], moves the
    critic by the critic rate, and shifts preferences by alpha * delta
    weighted so that each step's preference updates sum to zero across the
    row.
    """
    allowed, rewards, terminal, non_terminal = _unpack(mdp)
    n = len(allowed)
    if initial is None:
        v = [0.0] * n
        h = [[0.0] * n for _ in range(n)]
    else:
        v = np.asarray(initial.v, dtype=np.float64).tolist()
        h = np.asarray(initial.h, dtype=np.float64).tolist()
    rng = SplitMix64(seed)
    alpha, gamma = hp.alpha, hp.gamma
    beta = hp.critic_rate
    cap = mdp.step_cap
    bound = _value_bound(rewards, gamma)
    episode_returns: list[float] = []
    steps_total = 0
    for _ in range(hp.total_episodes):
        s = non_terminal[rng.randbelow(len(non_terminal))]
        g = 0.0
        disc = 1.0
        for _ in range(cap):
            row = allowed[s]
            pi = softmax([h[s][t] for t in row])
            a = _sample(pi, rng)
            t = row[a]
            r = rewards[s][t]
            done = terminal[t]
            delta = r + gamma * (0.0 if done else v[t]) - v[s]
            v[s] += beta * delta
            for i, p in enumerate(pi):
                if i == a:
                    h[s][row[i]] += alpha * delta * (1.0 - p)
                else:
                    h[s][row[i]] -= alpha * delta * p
            g += disc * r
            disc *= gamma
            steps_total += 1
            s = t
            if done:
                break
        episode_returns.append(g)
        if __debug__ and bound is not None:
            _assert_bounded([v], bound)
    tables = ActorCriticTables(np.array(v, dtype=np.float64),
                               np.array(h, dtype=np.float64))
    policy = derive_policy(tables, mdp)
    outcome = TrainOutcome(tables, policy, episode_returns, steps_total, "")
    outcome.result_text = render_result(outcome, mdp)
    return outcome


_TRAINERS = {
    AlgorithmKind.Q_LEARNING: train_q_learning,
    AlgorithmKind.SARSA: train_sarsa,
    AlgorithmKind.MONTE_CARLO: train_monte_carlo,
    AlgorithmKind.ACTOR_CRITIC: train_actor_critic,
}


def train_agent(mdp: Mdp, agent: AgentSpec, seed: int,
                initial: QTable | ActorCriticTables | None = None) -> TrainOutcome:
    """Dispatch to the trainer for the agent's algorithm."""
    return _TRAINERS[agent.algorithm](mdp, agent.hyperparameters, seed, initial=initial)


def _table_matrix(tables: QTable | ActorCriticTables) -> np.ndarray:
    return tables.q if isinstance(tables, QTable) else tables.h


def derive_policy(tables: QTable | ActorCriticTables, mdp: Mdp) -> dict[int, int]:
    """Greedy successor per non-terminal state, ties toward the lowest position."""
    matrix = _table_matrix(tables)
    policy: dict[int, int] = {}
    for s in mdp.non_terminal:
        row = mdp.allowed[s]
        policy[s] = row[_argmax([matrix[s][t] for t in row])]
    return policy


def rollout(mdp: Mdp, policy: dict[int, int], start: int,
            cap: int | None = None) -> list[int]:
    """Follow the policy from `start` until a terminal state or the cap.

    Returns the visited states including start and final; at most cap moves,
    so the path holds at most cap + 1 states.
    """
    if cap is None:
        cap = mdp.step_cap
    path = [start]
    s = start
    for _ in range(cap):
        if mdp.terminal[s]:
            break
        s = policy[s]
        path.append(s)
    return path


def render_result(outcome: TrainOutcome, mdp: Mdp) -> str:
    """The fixed result text: the value table (two decimals, all columns) and
    the greedy policy, one `NAME -> NAME` line per non-terminal state."""
    matrix = _table_matrix(outcome.tables)
    lines = ["Q-Table:"]
    n = mdp.n_states
    for s in range(n):
        cells = ", ".join(f"{matrix[s][t]:.2f}" for t in range(n))
        lines.append(f"{mdp.names[s]}: [{cells}]")
    lines.append("")
    lines.append("Policy:")
    for s in mdp.non_terminal:
        lines.append(f"{mdp.names[s]} -> {mdp.names[outcome.policy[s]]}")
    return "\n".join(lines)
