"""Standalone program generation.

Turns a model into one self-contained source file that embeds the environment
arrays as literals, trains with the same semantics as the in-process engine
(same update rules, tie-breaking, step cap and SplitMix64 stream) and prints
the same result text. Two output flavors exist: `python_flavor` (a single
.py script) and `jvm_flavor` (a single .java class). Generated programs
depend only on their target's standard runtime, default to seed 0 like the
CLI, and expose a `run` entry point.

Generation is a pure function of (model, target): the same input always
yields byte-identical output, which the golden-file tests rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import AgentSpec, AlgorithmKind, ComparatorModel, RlmlModel
from .printer import format_number


class UnsupportedAlgorithm(Exception):
    pass


class CodegenTarget(Enum):
    PYTHON_FLAVOR = "python_flavor"
    JVM_FLAVOR = "jvm_flavor"

    @property
    def extension(self) -> str:
        return ".py" if self is CodegenTarget.PYTHON_FLAVOR else ".java"


@dataclass(frozen=True)
class GeneratedProgram:
    filename: str
    source_text: str


# ---------------------------------------------------------------------------
# python_flavor templates

_PY_RUNTIME = '''\
N_STATES = len(STATES)
TERMINAL = [name in TERMINAL_STATES for name in STATES]
NON_TERMINAL = [s for s in range(N_STATES) if not TERMINAL[s]]
STEP_CAP = 100 * N_STATES

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: a 64-bit counter stepped by the golden-ratio constant and
    mixed by two xor-shift-multiply rounds; all arithmetic modulo 2**64."""

    def __init__(self, seed):
        self.state = seed & _MASK64

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self):
        return (self.next_u64() >> 11) * 2.0 ** -53

    def randbelow(self, n):
        return self.next_u64() % n
'''

_PY_EPSILON_GREEDY = '''\
def epsilon_greedy(values, epsilon, rng):
    if rng.random() < epsilon:
        return rng.randbelow(len(values))
    best = 0
    for i in range(1, len(values)):
        if values[i] > values[best]:
            best = i
    return best
'''

_PY_RESET = '''\
def reset(rng):
    return NON_TERMINAL[rng.randbelow(len(NON_TERMINAL))]
'''

_PY_DERIVE_POLICY = '''\
def derive_policy(table):
    policy = {}
    for s in NON_TERMINAL:
        row = ACTIONS[s]
        best = 0
        for i in range(1, len(row)):
            if table[s][row[i]] > table[s][row[best]]:
                best = i
        policy[s] = row[best]
    return policy
'''

_PY_FORMAT_RESULT = '''\
def format_result(table, policy):
    lines = ["Q-Table:"]
    for s in range(N_STATES):
        cells = ", ".join("%.2f" % table[s][t] for t in range(N_STATES))
        lines.append("%s: [%s]" % (STATES[s], cells))
    lines.append("")
    lines.append("Policy:")
    for s in NON_TERMINAL:
        lines.append("%s -> %s" % (STATES[s], STATES[policy[s]]))
    return "\\n".join(lines)
'''

_PY_FRAGMENTS = {
    AlgorithmKind.Q_LEARNING: '''\
def train_q_learning(rng, alpha, gamma, epsilon, total_episodes):
    q = [[0.0] * N_STATES for _ in range(N_STATES)]
    for _episode in range(total_episodes):
        s = reset(rng)
        for _step in range(STEP_CAP):
            row = ACTIONS[s]
            a = epsilon_greedy([q[s][t] for t in row], epsilon, rng)
            t = row[a]
            r = REWARDS[s][t]
            done = TERMINAL[t]
            best_next = 0.0 if done else max(q[t][u] for u in ACTIONS[t])
            q[s][t] += alpha * (r + gamma * best_next - q[s][t])
            s = t
            if done:
                break
    return q
''',
    AlgorithmKind.SARSA: '''\
def train_sarsa(rng, alpha, gamma, epsilon, total_episodes):
    q = [[0.0] * N_STATES for _ in range(N_STATES)]
    for _episode in range(total_episodes):
        s = reset(rng)
        a = epsilon_greedy([q[s][t] for t in ACTIONS[s]], epsilon, rng)
        for _step in range(STEP_CAP):
            t = ACTIONS[s][a]
            r = REWARDS[s][t]
            if TERMINAL[t]:
                q[s][t] += alpha * (r - q[s][t])
                break
            next_row = ACTIONS[t]
            a2 = epsilon_greedy([q[t][u] for u in next_row], epsilon, rng)
            q[s][t] += alpha * (r + gamma * q[t][next_row[a2]] - q[s][t])
            s, a = t, a2
    return q
''',
    AlgorithmKind.MONTE_CARLO: '''\
def train_monte_carlo(rng, gamma, epsilon, total_episodes):
    q = [[0.0] * N_STATES for _ in range(N_STATES)]
    counts = [[0] * N_STATES for _ in range(N_STATES)]
    for _episode in range(total_episodes):
        s = reset(rng)
        episode = []
        for _step in range(STEP_CAP):
            row = ACTIONS[s]
            a = epsilon_greedy([q[s][t] for t in row], epsilon, rng)
            t = row[a]
            episode.append((s, t, REWARDS[s][t]))
            s = t
            if TERMINAL[t]:
                break
        returns = {}
        g = 0.0
        for s, t, r in reversed(episode):
            g = r + gamma * g
            returns[(s, t)] = g
        for (s, t), value in returns.items():
            counts[s][t] += 1
            q[s][t] += (value - q[s][t]) / counts[s][t]
    return q
''',
    AlgorithmKind.ACTOR_CRITIC: '''\
def train_actor_critic(rng, alpha, beta, gamma, total_episodes):
    v = [0.0] * N_STATES
    h = [[0.0] * N_STATES for _ in range(N_STATES)]
    for _episode in range(total_episodes):
        s = reset(rng)
        for _step in range(STEP_CAP):
            row = ACTIONS[s]
            prefs = [h[s][t] for t in row]
            m = max(prefs)
            exps = [math.exp(p - m) for p in prefs]
            total = sum(exps)
            pi = [e / total for e in exps]
            u = rng.random()
            a = len(pi) - 1
            acc = 0.0
            for i, p in enumerate(pi):
                acc += p
                if u < acc:
                    a = i
                    break
            t = row[a]
            r = REWARDS[s][t]
            done = TERMINAL[t]
            delta = r + gamma * (0.0 if done else v[t]) - v[s]
            v[s] += beta * delta
            for i, p in enumerate(pi):
                if i == a:
                    h[s][row[i]] += alpha * delta * (1.0 - p)
                else:
                    h[s][row[i]] -= alpha * delta * p
            s = t
            if done:
                break
    return h
''',
}

_PY_TRAIN_NAMES = {
    AlgorithmKind.Q_LEARNING: "train_q_learning",
    AlgorithmKind.SARSA: "train_sarsa",
    AlgorithmKind.MONTE_CARLO: "train_monte_carlo",
    AlgorithmKind.ACTOR_CRITIC: "train_actor_critic",
}


def _hp_values(agent: AgentSpec) -> list[tuple[str, str]]:
    """(CONSTANT_NAME, literal) pairs in the order the trainer expects them."""
    hp = agent.hyperparameters
    episodes = str(hp.total_episodes)
    if agent.algorithm is AlgorithmKind.MONTE_CARLO:
        return [("GAMMA", format_number(hp.gamma)),
                ("EPSILON", format_number(hp.epsilon)),
                ("TOTAL_EPISODES", episodes)]
    if agent.algorithm is AlgorithmKind.ACTOR_CRITIC:
        return [("ALPHA", format_number(hp.alpha)),
                ("BETA", format_number(hp.critic_rate)),
                ("GAMMA", format_number(hp.gamma)),
                ("TOTAL_EPISODES", episodes)]
    return [("ALPHA", format_number(hp.alpha)),
            ("GAMMA", format_number(hp.gamma)),
            ("EPSILON", format_number(hp.epsilon)),
            ("TOTAL_EPISODES", episodes)]


def _fragment_for(fragments: dict, algorithm: AlgorithmKind) -> str:
    try:
        return fragments[algorithm]
    except KeyError:
        raise UnsupportedAlgorithm(f"no code template for {algorithm!r}") from None


def _dedupe_algorithms(agents: tuple[AgentSpec, ...]) -> list[AlgorithmKind]:
    seen: list[AlgorithmKind] = []
    for agent in agents:
        if agent.algorithm not in seen:
            seen.append(agent.algorithm)
    return seen


def _py_arrays(model: RlmlModel | ComparatorModel) -> list[str]:
    env = model.environment
    lines = ["STATES = [" + ", ".join(f'"{s}"' for s in env.states) + "]"]
    lines.append("ACTIONS = [" + ", ".join(
        "[" + ", ".join(str(i) for i in row) + "]" for row in env.actions) + "]")
    lines.append("REWARDS = [")
    for row in env.rewards:
        lines.append("    [" + ", ".join(format_number(v) for v in row) + "],")
    lines.append("]")
    lines.append("TERMINAL_STATES = [" + ", ".join(f'"{s}"' for s in env.terminal_states) + "]")
    return lines


def _py_sections(model: RlmlModel | ComparatorModel, agents: tuple[AgentSpec, ...],
                 header: str, constants: list[str], run_section: list[str]) -> str:
    algorithms = _dedupe_algorithms(agents)
    needs_math = AlgorithmKind.ACTOR_CRITIC in algorithms
    needs_greedy = any(a is not AlgorithmKind.ACTOR_CRITIC for a in algorithms)
    imports = []
    if needs_math:
        imports.append("import math")
    if isinstance(model, ComparatorModel):
        imports.append("import time")

    sections = [header]
    if imports:
        sections.append("\n".join(imports) + "\n")
    sections.append("\n".join(_py_arrays(model)) + "\n")
    sections.append("\n".join(constants) + "\n")
    sections.append(_PY_RUNTIME)
    if needs_greedy:
        sections.append(_PY_EPSILON_GREEDY)
    sections.append(_PY_RESET)
    for algorithm in algorithms:
        sections.append(_fragment_for(_PY_FRAGMENTS, algorithm))
    sections.append(_PY_DERIVE_POLICY)
    sections.append(_PY_FORMAT_RESULT)
    sections.append("\n".join(run_section) + "\n")
    return "\n\n".join(sections)


def _generate_python(model: RlmlModel) -> str:
    agent = model.agent
    header = (
        "#!/usr/bin/env python3\n"
        f'"""{model.name}: self-contained tabular {agent.algorithm.value} program.\n'
        "\n"
        "Generated from an RLML model; regenerate instead of editing by hand. The\n"
        "program depends only on the Python standard library: it trains on the\n"
        "embedded environment and prints the learned value table and greedy policy.\n"
        '"""\n'
    )
    hp_pairs = _hp_values(agent)
    constants = [f"{name} = {literal}" for name, literal in hp_pairs]
    constants.append("SEED = 0")
    call_args = ", ".join(name for name, _ in hp_pairs)
    run_section = [
        "def run(seed=SEED):",
        '    """Train the agent and return (table, policy)."""',
        "    rng = SplitMix64(seed)",
        f"    table = {_PY_TRAIN_NAMES[agent.algorithm]}(rng, {call_args})",
        "    return table, derive_policy(table)",
        "",
        "",
        'if __name__ == "__main__":',
        "    table, policy = run()",
        "    print(format_result(table, policy))",
    ]
    return _py_sections(model, (agent,), header, constants, run_section)


def _generate_python_comparator(model: ComparatorModel) -> str:
    header = (
        "#!/usr/bin/env python3\n"
        f'"""{model.name}: self-contained comparison program.\n'
        "\n"
        "Generated from an RLML model; regenerate instead of editing by hand.\n"
        f"Trains {len(model.agents)} agents in sequence on the shared embedded\n"
        "environment and prints one labeled result block per agent.\n"
        '"""\n'
    )
    constants = ["SEED = 0"]
    run_section = [
        "def run(base_seed=SEED):",
        '    """Train every agent on the shared environment, in declaration order."""',
        "    results = []",
    ]
    for k, agent in enumerate(model.agents):
        literals = ", ".join(literal for _, literal in _hp_values(agent))
        label = f"{agent.algorithm.value}#{k}"
        run_section.extend([
            "    started = time.perf_counter()",
            f"    table = {_PY_TRAIN_NAMES[agent.algorithm]}(SplitMix64(base_seed + {k}), {literals})",
            "    elapsed_ms = int((time.perf_counter() - started) * 1000)",
            f'    results.append(("{label}", table, derive_policy(table), elapsed_ms))',
        ])
    run_section.extend([
        "    return results",
        "",
        "",
        'if __name__ == "__main__":',
        "    blocks = []",
        "    for label, table, policy, elapsed_ms in run():",
        '        blocks.append("=== %s ===\\n%s\\nwall_time_ms: %d"',
        "                      % (label, format_result(table, policy), elapsed_ms))",
        '    print("\\n\\n".join(blocks))',
    ])
    return _py_sections(model, model.agents, header, constants, run_section)


# ---------------------------------------------------------------------------
# jvm_flavor templates

_JAVA_RUNTIME = '''\
    static final int N_STATES = STATES.length;
    static final boolean[] TERMINAL = new boolean[N_STATES];
    static final int[] NON_TERMINAL;
    static final int STEP_CAP = 100 * N_STATES;

    static {
        for (int s = 0; s < N_STATES; s++) {
            for (String name : TERMINAL_STATES) {
                if (STATES[s].equals(name)) {
                    TERMINAL[s] = true;
                }
            }
        }
        int count = 0;
        for (int s = 0; s < N_STATES; s++) {
            if (!TERMINAL[s]) {
                count++;
            }
        }
        NON_TERMINAL = new int[count];
        int next = 0;
        for (int s = 0; s < N_STATES; s++) {
            if (!TERMINAL[s]) {
                NON_TERMINAL[next++] = s;
            }
        }
    }

    /**
     * SplitMix64: a 64-bit counter stepped by the golden-ratio constant and
     * mixed by two xor-shift-multiply rounds. Same stream as the python flavor.
     */
    static final class SplitMix64 {
        private long state;

        SplitMix64(long seed) {
            this.state = seed;
        }

        long nextU64() {
            state += 0x9E3779B97F4A7C15L;
            long z = state;
            z = (z ^ (z >>> 30)) * 0xBF58476D1CE4E5B9L;
            z = (z ^ (z >>> 27)) * 0x94D049BB133111EBL;
            return z ^ (z >>> 31);
        }

        double random() {
            return (nextU64() >>> 11) * 0x1.0p-53;
        }

        int randBelow(int n) {
            return (int) Long.remainderUnsigned(nextU64(), n);
        }
    }

    static int reset(SplitMix64 rng) {
        return NON_TERMINAL[rng.randBelow(NON_TERMINAL.length)];
    }
'''

_JAVA_EPSILON_GREEDY = '''\
    static int epsilonGreedy(double[] values, double epsilon, SplitMix64 rng) {
        if (rng.random() < epsilon) {
            return rng.randBelow(values.length);
        }
        int best = 0;
        for (int i = 1; i < values.length; i++) {
            if (values[i] > values[best]) {
                best = i;
            }
        }
        return best;
    }

    static double[] valuesFor(double[][] table, int s, int[] row) {
        double[] values = new double[row.length];
        for (int i = 0; i < row.length; i++) {
            values[i] = table[s][row[i]];
        }
        return values;
    }
'''

_JAVA_TAIL = '''\
    static int[] derivePolicy(double[][] table) {
        int[] policy = new int[N_STATES];
        for (int s = 0; s < N_STATES; s++) {
            policy[s] = -1;
        }
        for (int s : NON_TERMINAL) {
            int[] row = ACTIONS[s];
            int best = 0;
            for (int i = 1; i < row.length; i++) {
                if (table[s][row[i]] > table[s][row[best]]) {
                    best = i;
                }
            }
            policy[s] = row[best];
        }
        return policy;
    }

    static String formatResult(double[][] table, int[] policy) {
        StringBuilder sb = new StringBuilder();
        sb.append("Q-Table:");
        for (int s = 0; s < N_STATES; s++) {
            sb.append('\\n').append(STATES[s]).append(": [");
            for (int t = 0; t < N_STATES; t++) {
                if (t > 0) {
                    sb.append(", ");
                }
                sb.append(String.format(Locale.ROOT, "%.2f", table[s][t]));
            }
            sb.append(']');
        }
        sb.append("\\n\\nPolicy:");
        for (int s : NON_TERMINAL) {
            sb.append('\\n').append(STATES[s]).append(" -> ").append(STATES[policy[s]]);
        }
        return sb.toString();
    }
'''

_JAVA_FRAGMENTS = {
    AlgorithmKind.Q_LEARNING: '''\
    static double[][] trainQLearning(SplitMix64 rng, double alpha, double gamma,
                                     double epsilon, int totalEpisodes) {
        double[][] q = new double[N_STATES][N_STATES];
        for (int episode = 0; episode < totalEpisodes; episode++) {
            int s = reset(rng);
            for (int step = 0; step < STEP_CAP; step++) {
                int[] row = ACTIONS[s];
                int a = epsilonGreedy(valuesFor(q, s, row), epsilon, rng);
                int t = row[a];
                double r = REWARDS[s][t];
                boolean done = TERMINAL[t];
                double bestNext = 0.0;
                if (!done) {
                    int[] next = ACTIONS[t];
                    bestNext = q[t][next[0]];
                    for (int i = 1; i < next.length; i++) {
                        if (q[t][next[i]] > bestNext) {
                            bestNext = q[t][next[i]];
                        }
                    }
                }
                q[s][t] += alpha * (r + gamma * bestNext - q[s][t]);
                s = t;
                if (done) {
                    break;
                }
            }
        }
        return q;
    }
''',
    AlgorithmKind.SARSA: '''\
    static double[][] trainSarsa(SplitMix64 rng, double alpha, double gamma,
                                 double epsilon, int totalEpisodes) {
        double[][] q = new double[N_STATES][N_STATES];
        for (int episode = 0; episode < totalEpisodes; episode++) {
            int s = reset(rng);
            int a = epsilonGreedy(valuesFor(q, s, ACTIONS[s]), epsilon, rng);
            for (int step = 0; step < STEP_CAP; step++) {
                int t = ACTIONS[s][a];
                double r = REWARDS[s][t];
                if (TERMINAL[t]) {
                    q[s][t] += alpha * (r - q[s][t]);
                    break;
                }
                int[] nextRow = ACTIONS[t];
                int a2 = epsilonGreedy(valuesFor(q, t, nextRow), epsilon, rng);
                q[s][t] += alpha * (r + gamma * q[t][nextRow[a2]] - q[s][t]);
                s = t;
                a = a2;
            }
        }
        return q;
    }
''',
    AlgorithmKind.MONTE_CARLO: '''\
    static double[][] trainMonteCarlo(SplitMix64 rng, double gamma, double epsilon,
                                      int totalEpisodes) {
        double[][] q = new double[N_STATES][N_STATES];
        int[][] counts = new int[N_STATES][N_STATES];
        int[] froms = new int[STEP_CAP];
        int[] tos = new int[STEP_CAP];
        double[] stepRewards = new double[STEP_CAP];
        for (int episode = 0; episode < totalEpisodes; episode++) {
            int s = reset(rng);
            int length = 0;
            for (int step = 0; step < STEP_CAP; step++) {
                int[] row = ACTIONS[s];
                int a = epsilonGreedy(valuesFor(q, s, row), epsilon, rng);
                int t = row[a];
                froms[length] = s;
                tos[length] = t;
                stepRewards[length] = REWARDS[s][t];
                length++;
                s = t;
                if (TERMINAL[t]) {
                    break;
                }
            }
            double g = 0.0;
            double[] firstReturns = new double[length];
            for (int i = length - 1; i >= 0; i--) {
                g = stepRewards[i] + gamma * g;
                firstReturns[i] = g;
            }
            boolean[][] seen = new boolean[N_STATES][N_STATES];
            for (int i = 0; i < length; i++) {
                int from = froms[i];
                int to = tos[i];
                if (seen[from][to]) {
                    continue;
                }
                seen[from][to] = true;
                counts[from][to]++;
                q[from][to] += (firstReturns[i] - q[from][to]) / counts[from][to];
            }
        }
        return q;
    }
''',
    AlgorithmKind.ACTOR_CRITIC: '''\
    static double[][] trainActorCritic(SplitMix64 rng, double alpha, double beta,
                                       double gamma, int totalEpisodes) {
        double[] v = new double[N_STATES];
        double[][] h = new double[N_STATES][N_STATES];
        for (int episode = 0; episode < totalEpisodes; episode++) {
            int s = reset(rng);
            for (int step = 0; step < STEP_CAP; step++) {
                int[] row = ACTIONS[s];
                int m = row.length;
                double maxPref = h[s][row[0]];
                for (int i = 1; i < m; i++) {
                    if (h[s][row[i]] > maxPref) {
                        maxPref = h[s][row[i]];
                    }
                }
                double[] pi = new double[m];
                double total = 0.0;
                for (int i = 0; i < m; i++) {
                    pi[i] = Math.exp(h[s][row[i]] - maxPref);
                    total += pi[i];
                }
                for (int i = 0; i < m; i++) {
                    pi[i] /= total;
                }
                double u = rng.random();
                int a = m - 1;
                double acc = 0.0;
                for (int i = 0; i < m; i++) {
                    acc += pi[i];
                    if (u < acc) {
                        a = i;
                        break;
                    }
                }
                int t = row[a];
                double r = REWARDS[s][t];
                boolean done = TERMINAL[t];
                double delta = r + gamma * (done ? 0.0 : v[t]) - v[s];
                v[s] += beta * delta;
                for (int i = 0; i < m; i++) {
                    if (i == a) {
                        h[s][row[i]] += alpha * delta * (1.0 - pi[i]);
                    } else {
                        h[s][row[i]] -= alpha * delta * pi[i];
                    }
                }
                s = t;
                if (done) {
                    break;
                }
            }
        }
        return h;
    }
''',
}

_JAVA_TRAIN_NAMES = {
    AlgorithmKind.Q_LEARNING: "trainQLearning",
    AlgorithmKind.SARSA: "trainSarsa",
    AlgorithmKind.MONTE_CARLO: "trainMonteCarlo",
    AlgorithmKind.ACTOR_CRITIC: "trainActorCritic",
}


def _java_arrays(model: RlmlModel | ComparatorModel) -> list[str]:
    env = model.environment
    lines = ["    static final String[] STATES = {"
             + ", ".join(f'"{s}"' for s in env.states) + "};"]
    lines.append("    static final int[][] ACTIONS = {" + ", ".join(
        "{" + ", ".join(str(i) for i in row) + "}" for row in env.actions) + "};")
    lines.append("    static final double[][] REWARDS = {")
    for row in env.rewards:
        lines.append("        {" + ", ".join(format_number(v) for v in row) + "},")
    lines.append("    };")
    lines.append("    static final String[] TERMINAL_STATES = {"
                 + ", ".join(f'"{s}"' for s in env.terminal_states) + "};")
    return lines


def _java_sections(model: RlmlModel | ComparatorModel, agents: tuple[AgentSpec, ...],
                   header: str, constants: list[str], run_section: list[str]) -> str:
    algorithms = _dedupe_algorithms(agents)
    needs_greedy = any(a is not AlgorithmKind.ACTOR_CRITIC for a in algorithms)

    sections = [header]
    sections.append(f"public final class {model.name} {{\n")
    sections.append("\n".join(_java_arrays(model)) + "\n")
    sections.append("\n".join(constants) + "\n")
    sections.append(_JAVA_RUNTIME)
    if needs_greedy:
        sections.append(_JAVA_EPSILON_GREEDY)
    for algorithm in algorithms:
        sections.append(_fragment_for(_JAVA_FRAGMENTS, algorithm))
    sections.append(_JAVA_TAIL)
    sections.append("\n".join(run_section) + "\n}\n")
    return "\n".join(sections)


def _generate_java(model: RlmlModel) -> str:
    agent = model.agent
    header = (
        f"// {model.name}: self-contained tabular {agent.algorithm.value} program.\n"
        "// Generated from an RLML model; regenerate instead of editing by hand.\n"
        "// Depends only on the Java standard library.\n"
        "\n"
        "import java.util.Locale;\n"
    )
    hp_pairs = _hp_values(agent)
    constants = []
    for name, literal in hp_pairs:
        if name == "TOTAL_EPISODES":
            constants.append(f"    static final int {name} = {literal};")
        else:
            constants.append(f"    static final double {name} = {literal};")
    constants.append("    static final long SEED = 0L;")
    call_args = ", ".join(name for name, _ in hp_pairs)
    run_section = [
        "    /** Train the agent and print the result table and policy. */",
        "    public static void run() {",
        "        SplitMix64 rng = new SplitMix64(SEED);",
        f"        double[][] table = {_JAVA_TRAIN_NAMES[agent.algorithm]}(rng, {call_args});",
        "        System.out.println(formatResult(table, derivePolicy(table)));",
        "    }",
        "",
        "    public static void main(String[] args) {",
        "        run();",
        "    }",
    ]
    return _java_sections(model, (agent,), header, constants, run_section)


def _generate_java_comparator(model: ComparatorModel) -> str:
    header = (
        f"// {model.name}: self-contained comparison program.\n"
        "// Generated from an RLML model; regenerate instead of editing by hand.\n"
        f"// Trains {len(model.agents)} agents in sequence on the shared embedded\n"
        "// environment and prints one labeled result block per agent.\n"
        "\n"
        "import java.util.Locale;\n"
    )
    constants = ["    static final long SEED = 0L;"]
    run_section = [
        "    /** Train every agent on the shared environment, in declaration order. */",
        "    public static void run() {",
        "        StringBuilder out = new StringBuilder();",
        "        long started;",
        "        double[][] table;",
    ]
    for k, agent in enumerate(model.agents):
        literals = ", ".join(literal for _, literal in _hp_values(agent))
        label = f"{agent.algorithm.value}#{k}"
        run_section.extend([
            "        started = System.nanoTime();",
            f"        table = {_JAVA_TRAIN_NAMES[agent.algorithm]}(new SplitMix64(SEED + {k}), {literals});",
            f'        appendBlock(out, "{label}", table, (System.nanoTime() - started) / 1000000L);',
        ])
    run_section.extend([
        "        System.out.println(out);",
        "    }",
        "",
        "    static void appendBlock(StringBuilder out, String label, double[][] table,",
        "                            long elapsedMs) {",
        "        if (out.length() > 0) {",
        '            out.append("\\n\\n");',
        "        }",
        '        out.append("=== ").append(label).append(" ===\\n");',
        "        out.append(formatResult(table, derivePolicy(table)));",
        '        out.append("\\nwall_time_ms: ").append(elapsedMs);',
        "    }",
        "",
        "    public static void main(String[] args) {",
        "        run();",
        "    }",
    ])
    return _java_sections(model, model.agents, header, constants, run_section)


def generate(model: RlmlModel, target: CodegenTarget) -> GeneratedProgram:
    """Generate a standalone single-agent program. The model must validate clean."""
    if target is CodegenTarget.PYTHON_FLAVOR:
        source = _generate_python(model)
    else:
        source = _generate_java(model)
    return GeneratedProgram(model.name + target.extension, source)


def generate_comparator(model: ComparatorModel, target: CodegenTarget) -> GeneratedProgram:
    """Generate a standalone program that trains every agent and prints one
    labeled block per agent, in declaration order."""
    if target is CodegenTarget.PYTHON_FLAVOR:
        source = _generate_python_comparator(model)
    else:
        source = _generate_java_comparator(model)
    return GeneratedProgram(model.name + target.extension, source)
