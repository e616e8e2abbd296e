"""Digests binding a trained model to the environment and settings it was trained with.

A saved model is only reusable against the exact environment and
hyperparameters that produced it; the fingerprint makes that limitation
checkable instead of silent. The digest is SHA-256 over a canonical text
form, so any change to a state name, an action row, a reward cell, a
terminal or a hyperparameter changes it.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .model import EnvironmentSpec, Hyperparameters
from .printer import format_number


@dataclass(frozen=True)
class EnvironmentFingerprint:
    digest: str  # lowercase hex, 256 bits

    def __str__(self) -> str:
        return self.digest


def canonical_environment_text(env: EnvironmentSpec) -> str:
    lines = [
        "states:" + ",".join(env.states),
        "actions:" + ";".join(",".join(str(i) for i in row) for row in env.actions),
        "rewards:" + ";".join(",".join(format_number(v) for v in row) for row in env.rewards),
        "terminal_states:" + ",".join(env.terminal_states),
    ]
    return "\n".join(lines) + "\n"


def canonical_hyperparameters_text(hp: Hyperparameters) -> str:
    # beta is canonicalized to its resolved value, so an explicit beta equal
    # to alpha fingerprints the same as an omitted one.
    fields = [
        format_number(hp.alpha),
        format_number(hp.gamma),
        format_number(hp.epsilon),
        str(hp.total_episodes),
        format_number(hp.critic_rate),
    ]
    return "hyperparameters:" + ",".join(fields) + "\n"


def fingerprint(env: EnvironmentSpec, hp: Hyperparameters) -> EnvironmentFingerprint:
    """Digest over the canonical (environment, hyperparameters) pair."""
    payload = canonical_environment_text(env) + canonical_hyperparameters_text(hp)
    return EnvironmentFingerprint(hashlib.sha256(payload.encode("utf-8")).hexdigest())


def environment_digest(env: EnvironmentSpec) -> EnvironmentFingerprint:
    """Digest over the environment alone.

    Used to label comparison reports, where the agents share one environment
    but carry their own hyperparameters.
    """
    return EnvironmentFingerprint(
        hashlib.sha256(canonical_environment_text(env).encode("utf-8")).hexdigest()
    )
