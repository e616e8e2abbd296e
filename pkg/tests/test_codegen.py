"""Program generation: goldens, determinism, and executing the python flavor."""

import pathlib
import re
import shutil
import subprocess
import sys

import pytest

from conftest import make_hp
import rlml
from rlml import corpus
from rlml.codegen import CodegenTarget, generate, generate_comparator
from rlml.model import AgentSpec, AlgorithmKind, RlmlModel

GOLDENS = pathlib.Path(__file__).parent / "goldens"


def run_python_source(source: str) -> str:
    result = subprocess.run([sys.executable, "-c", source],
                            capture_output=True, text=True, timeout=120)
    assert result.returncode == 0, result.stderr
    return result.stdout


def parse_policy_lines(output: str) -> dict[str, str]:
    lines = output.splitlines()
    start = lines.index("Policy:") + 1
    policy = {}
    for line in lines[start:]:
        m = re.fullmatch(r"(\w+) -> (\w+)", line)
        if m:
            policy[m.group(1)] = m.group(2)
    return policy


def test_generation_is_deterministic(path_finding):
    for target in CodegenTarget:
        a = generate(path_finding, target)
        b = generate(path_finding, target)
        assert a == b


def test_filenames_follow_model_name(path_finding):
    assert generate(path_finding, CodegenTarget.PYTHON_FLAVOR).filename == "PathFinding.py"
    assert generate(path_finding, CodegenTarget.JVM_FLAVOR).filename == "PathFinding.java"


def test_python_golden(path_finding):
    program = generate(path_finding, CodegenTarget.PYTHON_FLAVOR)
    assert program.source_text == (GOLDENS / "PathFinding.py").read_text(encoding="utf-8")


def test_java_golden(path_finding):
    program = generate(path_finding, CodegenTarget.JVM_FLAVOR)
    assert program.source_text == (GOLDENS / "PathFinding.java").read_text(encoding="utf-8")


def test_comparator_python_golden(comparator_model):
    program = generate_comparator(comparator_model, CodegenTarget.PYTHON_FLAVOR)
    assert program.source_text == (GOLDENS / "PathFindingComparison.py").read_text(encoding="utf-8")


def test_generated_python_has_run_entry_point_and_literals(path_finding):
    source = generate(path_finding, CodegenTarget.PYTHON_FLAVOR).source_text
    assert 'STATES = ["A", "B", "C", "D", "E", "F"]' in source
    assert "def run(seed=SEED):" in source
    compile(source, "PathFinding.py", "exec")


def test_generated_java_has_run_entry_point(path_finding):
    source = generate(path_finding, CodegenTarget.JVM_FLAVOR).source_text
    assert "public final class PathFinding {" in source
    assert "public static void run()" in source
    assert "public static void main(String[] args)" in source


def test_every_algorithm_generates_runnable_python(path_finding):
    for kind in AlgorithmKind:
        hp = make_hp(total_episodes=60,
                     beta=0.2 if kind is AlgorithmKind.ACTOR_CRITIC else None)
        model = RlmlModel("Mini" + kind.value, path_finding.environment,
                          AgentSpec(kind, hp))
        program = generate(model, CodegenTarget.PYTHON_FLAVOR)
        output = run_python_source(program.source_text)
        policy = parse_policy_lines(output)
        mdp = rlml.compile_environment(model.environment)
        for src, dst in policy.items():
            s = mdp.index_of(src)
            assert mdp.index_of(dst) in mdp.allowed[s]


def test_executed_python_policy_reaches_goal(path_finding):
    program = generate(path_finding, CodegenTarget.PYTHON_FLAVOR)
    policy = parse_policy_lines(run_python_source(program.source_text))
    mdp = rlml.compile_environment(path_finding.environment)
    index_policy = {mdp.index_of(a): mdp.index_of(b) for a, b in policy.items()}
    goal = mdp.index_of("C")
    for s in mdp.non_terminal:
        assert rlml.rollout(mdp, index_policy, s)[-1] == goal


def test_executed_python_matches_engine_bit_for_bit(path_finding):
    # same algorithm, same PRNG, same seed: the standalone program reproduces
    # the engine's rendered result exactly
    program = generate(path_finding, CodegenTarget.PYTHON_FLAVOR)
    output = run_python_source(program.source_text)
    mdp = rlml.compile_environment(path_finding.environment)
    engine = rlml.train_agent(mdp, path_finding.agent, 0)
    assert output == engine.result_text + "\n"


def test_executed_comparator_matches_engine_blocks(comparator_model):
    program = generate_comparator(comparator_model, CodegenTarget.PYTHON_FLAVOR)
    output = run_python_source(program.source_text)
    report = rlml.run_compare(comparator_model, 0)
    rendered = rlml.render_compare(report)

    def strip_wall(text):
        return [l for l in text.splitlines() if not l.startswith("wall_time_ms:")]

    assert strip_wall(output.rstrip("\n")) == strip_wall(rendered)


def test_comparator_embeds_environment_once(comparator_model):
    source = generate_comparator(comparator_model, CodegenTarget.PYTHON_FLAVOR).source_text
    assert source.count('STATES = ["A", "B", "C", "D", "E", "F"]') == 1
    assert source.count("def train_q_learning") == 1


def test_comparator_agent_order_preserved(comparator_model):
    source = generate_comparator(comparator_model, CodegenTarget.PYTHON_FLAVOR).source_text
    positions = [source.index(f'"{label}"') for label in
                 ("QLearning#0", "SARSA#1", "ActorCritic#2")]
    assert positions == sorted(positions)


@pytest.mark.skipif(shutil.which("javac") is None, reason="no JDK available")
def test_java_flavor_compiles_and_runs(tmp_path, path_finding):
    program = generate(path_finding, CodegenTarget.JVM_FLAVOR)
    src = tmp_path / program.filename
    src.write_text(program.source_text, encoding="utf-8")
    subprocess.run(["javac", str(src)], check=True, cwd=tmp_path)
    result = subprocess.run(["java", "-cp", str(tmp_path), "PathFinding"],
                            capture_output=True, text=True, check=True)
    policy = parse_policy_lines(result.stdout)
    mdp = rlml.compile_environment(path_finding.environment)
    for src_name, dst_name in policy.items():
        assert mdp.index_of(dst_name) in mdp.allowed[mdp.index_of(src_name)]
