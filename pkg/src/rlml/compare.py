"""Run several agents against one shared environment, side by side.

Agent k trains with seed base_seed + k on the same compiled Mdp, so the
report is deterministic for a fixed base seed no matter how the runs are
scheduled. Wall times are measured and reported but excluded from any golden
comparison.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .fingerprint import environment_digest
from .mdp import compile_environment
from .model import ComparatorModel
from .persist import tables_to_payload
from .train import TrainOutcome, train_agent


@dataclass(frozen=True)
class CompareEntry:
    label: str        # "<Algorithm>#<k>", k the zero-based agent index
    algorithm: str
    seed: int
    outcome: TrainOutcome
    wall_time_ms: int


@dataclass(frozen=True)
class CompareReport:
    model_name: str
    entries: tuple[CompareEntry, ...]
    env_fingerprint: str


def run_compare(model: ComparatorModel, base_seed: int) -> CompareReport:
    """Train every agent in declaration order; the model must have validated clean."""
    mdp = compile_environment(model.environment)
    entries = []
    for k, agent in enumerate(model.agents):
        seed = base_seed + k
        started = time.perf_counter()
        outcome = train_agent(mdp, agent, seed)
        wall_time_ms = int((time.perf_counter() - started) * 1000)
        entries.append(CompareEntry(
            label=f"{agent.algorithm.value}#{k}",
            algorithm=agent.algorithm.value,
            seed=seed,
            outcome=outcome,
            wall_time_ms=wall_time_ms,
        ))
    return CompareReport(model.name, tuple(entries),
                         environment_digest(model.environment).digest)


def render_compare(report: CompareReport) -> str:
    """One block per entry, separated by blank lines:

        === <label> ===
        <result text>
        wall_time_ms: <n>
    """
    blocks = [
        f"=== {entry.label} ===\n{entry.outcome.result_text}\nwall_time_ms: {entry.wall_time_ms}"
        for entry in report.entries
    ]
    return "\n\n".join(blocks)


def compare_to_json(report: CompareReport, mdp_names: tuple[str, ...],
                    base_seed: int) -> str:
    """Structured (JSON) rendering of a report."""
    entries = []
    for entry in report.entries:
        entries.append({
            "label": entry.label,
            "algorithm": entry.algorithm,
            "seed": entry.seed,
            "wall_time_ms": entry.wall_time_ms,
            "policy": {mdp_names[s]: mdp_names[t] for s, t in entry.outcome.policy.items()},
            "steps_total": entry.outcome.steps_total,
            "tables": tables_to_payload(entry.outcome.tables),
        })
    document = {
        "model": report.model_name,
        "base_seed": base_seed,
        "env_fingerprint": report.env_fingerprint,
        "entries": entries,
    }
    return json.dumps(document, indent=2)
