// PathFinding: self-contained tabular QLearning program.
// Generated from an RLML model; regenerate instead of editing by hand.
// Depends only on the Java standard library.

import java.util.Locale;

public final class PathFinding {

    static final String[] STATES = {"A", "B", "C", "D", "E", "F"};
    static final int[][] ACTIONS = {{1, 3}, {0, 2, 4}, {2}, {0, 4}, {1, 3, 5}, {2, 4}};
    static final double[][] REWARDS = {
        {0, 0, 0, 0, 0, 0},
        {0, 0, 100, 0, 0, 0},
        {0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0},
        {0, 0, 100, 0, 0, 0},
    };
    static final String[] TERMINAL_STATES = {"C"};

    static final double ALPHA = 0.1;
    static final double GAMMA = 0.9;
    static final double EPSILON = 0.1;
    static final int TOTAL_EPISODES = 1000;
    static final long SEED = 0L;

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
            sb.append('\n').append(STATES[s]).append(": [");
            for (int t = 0; t < N_STATES; t++) {
                if (t > 0) {
                    sb.append(", ");
                }
                sb.append(String.format(Locale.ROOT, "%.2f", table[s][t]));
            }
            sb.append(']');
        }
        sb.append("\n\nPolicy:");
        for (int s : NON_TERMINAL) {
            sb.append('\n').append(STATES[s]).append(" -> ").append(STATES[policy[s]]);
        }
        return sb.toString();
    }

    /** Train the agent and print the result table and policy. */
    public static void run() {
        SplitMix64 rng = new SplitMix64(SEED);
        double[][] table = trainQLearning(rng, ALPHA, GAMMA, EPSILON, TOTAL_EPISODES);
        System.out.println(formatResult(table, derivePolicy(table)));
    }

    public static void main(String[] args) {
        run();
    }
}
