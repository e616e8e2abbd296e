"""Saving and reloading trained tables.

The on-disk format is a small JSON document (see docs/grammar.md). Numbers
are serialized at full precision, and the document embeds the fingerprint of
the (environment, hyperparameters) pair it was trained with; loading against
anything else fails with FingerprintMismatch. Reusing a loaded table as the
`initial` argument of a trainer continues training, which is equivalent to
having asked for more episodes in the first place.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .fingerprint import fingerprint
from .model import AlgorithmKind, EnvironmentSpec, Hyperparameters
from .train import ActorCriticTables, QTable, TrainOutcome

FORMAT_VERSION = 1


class VersionMismatch(Exception):
    pass


class FingerprintMismatch(Exception):
    """The saved model was trained with a different environment or settings."""


@dataclass(frozen=True)
class TrainedModelFile:
    format_version: int
    algorithm: AlgorithmKind
    hyperparameters: Hyperparameters
    fingerprint: str
    tables: QTable | ActorCriticTables
    episodes_trained: int
    seed: int


def tables_to_payload(tables: QTable | ActorCriticTables) -> dict:
    if isinstance(tables, QTable):
        return {"kind": "q", "q": tables.q.tolist()}
    return {"kind": "actor_critic", "v": tables.v.tolist(), "h": tables.h.tolist()}


def tables_from_payload(payload: dict) -> QTable | ActorCriticTables:
    kind = payload.get("kind")
    if kind == "q":
        return QTable(np.array(payload["q"], dtype=np.float64))
    if kind == "actor_critic":
        return ActorCriticTables(np.array(payload["v"], dtype=np.float64),
                                 np.array(payload["h"], dtype=np.float64))
    raise ValueError(f"unknown tables kind {kind!r}")


def _hyperparameters_payload(hp: Hyperparameters) -> dict:
    payload = {
        "alpha": hp.alpha,
        "gamma": hp.gamma,
        "epsilon": hp.epsilon,
        "total_episodes": hp.total_episodes,
    }
    if hp.beta is not None:
        payload["beta"] = hp.beta
    return payload


def save_model(outcome: TrainOutcome, algorithm: AlgorithmKind, hp: Hyperparameters,
               env: EnvironmentSpec, seed: int, episodes_trained: int | None = None) -> str:
    """Serialize a trained outcome to the versioned document text."""
    document = {
        "format_version": FORMAT_VERSION,
        "algorithm": algorithm.value,
        "hyperparameters": _hyperparameters_payload(hp),
        "fingerprint": fingerprint(env, hp).digest,
        "tables": tables_to_payload(outcome.tables),
        "episodes_trained": hp.total_episodes if episodes_trained is None else episodes_trained,
        "seed": seed,
    }
    return json.dumps(document, indent=2) + "\n"


def read_model_file(text: str) -> TrainedModelFile:
    """Parse a saved document without checking it against an environment."""
    document = json.loads(text)
    version = document.get("format_version")
    if version != FORMAT_VERSION:
        raise VersionMismatch(f"unsupported format_version {version!r}; "
                              f"this build reads version {FORMAT_VERSION}")
    hp = document["hyperparameters"]
    return TrainedModelFile(
        format_version=version,
        algorithm=AlgorithmKind.from_name(document["algorithm"]),
        hyperparameters=Hyperparameters(
            alpha=hp["alpha"], gamma=hp["gamma"], epsilon=hp["epsilon"],
            total_episodes=hp["total_episodes"], beta=hp.get("beta"),
        ),
        fingerprint=document["fingerprint"],
        tables=tables_from_payload(document["tables"]),
        episodes_trained=document["episodes_trained"],
        seed=document["seed"],
    )


def load_model(text: str, env: EnvironmentSpec,
               hp: Hyperparameters) -> QTable | ActorCriticTables:
    """Read a saved document and verify it matches (env, hp) before returning tables.

    Raises VersionMismatch for an unknown format_version, FingerprintMismatch
    when the environment or hyperparameters differ from training time.
    """
    saved = read_model_file(text)
    expected = fingerprint(env, hp).digest
    if saved.fingerprint != expected:
        raise FingerprintMismatch(
            "saved model does not match this environment and hyperparameters; "
            "models cannot be reused once the original parameters change")
    return saved.tables
