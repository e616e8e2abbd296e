"""Bundled example models mirroring the validation applications: path
finding, simple game, blackjack and frozen lake, plus a three-agent
comparator and an environment import file."""

from pathlib import Path

_HERE = Path(__file__).parent

MODEL_NAMES = (
    "path_finding",
    "path_finding_comparator",
    "simple_game",
    "blackjack",
    "frozen_lake",
)


def path(name: str) -> Path:
    """Filesystem path of a bundled file by stem (model) or full filename."""
    candidate = _HERE / name
    if candidate.suffix:
        if not candidate.exists():
            raise KeyError(f"no bundled file {name!r}")
        return candidate
    candidate = _HERE / f"{name}.rlml"
    if not candidate.exists():
        raise KeyError(f"no bundled model {name!r}")
    return candidate


def load(name: str) -> str:
    return path(name).read_text(encoding="utf-8")
