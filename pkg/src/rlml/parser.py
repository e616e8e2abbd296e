"""Recursive-descent parser for RLML model text and environment import files.

Grammar (see docs/grammar.md for the full reference):

    model       := ("rlml" | "rlml_comparator") IDENT "{" env_block agent_block+ "}"
    env_block   := "environment" "{" env_entry* "}"
    env_entry   := "states" ":" name_list
                 | "actions" ":" int_matrix
                 | "rewards" ":" number_matrix
                 | "terminal_states" ":" name_list
    agent_block := "agent" ALGO "{" (HP_KEY ":" NUMBER)* "}"

Each of the four environment entries must appear exactly once, in any order;
likewise the required hyperparameter keys inside an agent block. `#` starts a
comment running to the end of the line, and any whitespace may separate
tokens. The first error aborts the parse; there is no recovery.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import (
    AgentSpec,
    AlgorithmKind,
    ComparatorModel,
    EnvironmentSpec,
    Hyperparameters,
    InputSource,
    RlmlModel,
)

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NAME_RE = re.compile(r"[A-Za-z0-9_]+")
_NUMBER_RE = re.compile(r"-?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_INT_RE = re.compile(r"-?\d+\Z")

_ENV_KEYS = ("states", "actions", "rewards", "terminal_states")
_HP_KEYS = ("alpha", "gamma", "epsilon", "total_episodes", "beta")
_REQUIRED_HP_KEYS = ("alpha", "gamma", "epsilon", "total_episodes")


@dataclass(frozen=True)
class SourceSpan:
    """1-based position of a token (or error) in the input text."""

    line: int
    column: int
    length: int = 1


class ParseError(Exception):
    def __init__(self, span: SourceSpan, message: str, expected: str | None = None):
        super().__init__(message)
        self.span = span
        self.message = message
        self.expected = expected

    def __str__(self) -> str:
        return f"line {self.span.line}, column {self.span.column}: {self.message}"


class MissingSection(ParseError):
    """A required labeled section (states/actions/rewards/terminal_states) is absent."""

    def __init__(self, span: SourceSpan, section: str):
        super().__init__(span, f"missing section {section!r}", expected=f"{section}:")
        self.section = section


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def span_at(self, pos: int, length: int = 1) -> SourceSpan:
        # Clamp so that even end-of-input errors point inside the text.
        p = min(pos, max(len(self.text) - 1, 0))
        line = self.text.count("\n", 0, p) + 1
        column = p - self.text.rfind("\n", 0, p)
        return SourceSpan(line, column, length)

    def fail(self, message: str, expected: str | None = None, pos: int | None = None,
             length: int = 1):
        raise ParseError(self.span_at(self.pos if pos is None else pos, length),
                         message, expected)

    def skip_trivia(self) -> None:
        text, n = self.text, len(self.text)
        p = self.pos
        while p < n:
            c = text[p]
            if c in " \t\r\n":
                p += 1
            elif c == "#":
                nl = text.find("\n", p)
                p = n if nl == -1 else nl + 1
            else:
                break
        self.pos = p

    def at_end(self) -> bool:
        self.skip_trivia()
        return self.pos >= len(self.text)

    def _describe_here(self) -> str:
        if self.pos >= len(self.text):
            return "end of input"
        return repr(self.text[self.pos])

    def try_punct(self, ch: str) -> bool:
        self.skip_trivia()
        if self.pos < len(self.text) and self.text[self.pos] == ch:
            self.pos += 1
            return True
        return False

    def expect_punct(self, ch: str) -> None:
        if not self.try_punct(ch):
            self.fail(f"expected {ch!r}, found {self._describe_here()}", expected=repr(ch))

    def _match(self, regex: re.Pattern[str], what: str) -> tuple[str, int]:
        self.skip_trivia()
        m = regex.match(self.text, self.pos)
        if not m:
            self.fail(f"expected {what}, found {self._describe_here()}", expected=what)
        start = self.pos
        self.pos = m.end()
        return m.group(), start

    def ident(self, what: str = "identifier") -> tuple[str, int]:
        return self._match(_IDENT_RE, what)

    def name(self) -> tuple[str, int]:
        return self._match(_NAME_RE, "state name")

    def number_token(self, what: str = "number") -> tuple[str, int]:
        return self._match(_NUMBER_RE, what)


def _parse_name_list(sc: _Scanner) -> tuple[str, ...]:
    sc.expect_punct("[")
    names: list[str] = []
    if sc.try_punct("]"):
        return tuple(names)
    while True:
        names.append(sc.name()[0])
        if sc.try_punct("]"):
            return tuple(names)
        sc.expect_punct(",")


def _parse_int(sc: _Scanner) -> int:
    token, start = sc.number_token("integer")
    if not _INT_RE.match(token):
        sc.fail(f"expected integer, found {token!r}", expected="integer",
                pos=start, length=len(token))
    return int(token)


def _parse_number(sc: _Scanner) -> float:
    token, _ = sc.number_token()
    return float(token)


def _parse_row(sc: _Scanner, parse_cell) -> tuple:
    sc.expect_punct("[")
    cells: list = []
    if sc.try_punct("]"):
        return tuple(cells)
    while True:
        cells.append(parse_cell(sc))
        if sc.try_punct("]"):
            return tuple(cells)
        sc.expect_punct(",")


def _parse_matrix(sc: _Scanner, parse_cell) -> tuple[tuple, ...]:
    sc.expect_punct("[")
    rows: list[tuple] = []
    if sc.try_punct("]"):
        return tuple(rows)
    while True:
        rows.append(_parse_row(sc, parse_cell))
        if sc.try_punct("]"):
            return tuple(rows)
        sc.expect_punct(",")


def _parse_env_entries(sc: _Scanner, until_brace: bool) -> EnvironmentSpec:
    """Parse the four labeled entries, in any order, each exactly once.

    Stops at a closing `}` when `until_brace` is set (model environment
    block), otherwise at end of input (import file).
    """
    entries: dict[str, object] = {}
    while True:
        if until_brace:
            if sc.try_punct("}"):
                break
        elif sc.at_end():
            break
        key, start = sc.ident("environment entry name")
        if key not in _ENV_KEYS:
            sc.fail(f"unknown environment entry {key!r}", expected="one of " + ", ".join(_ENV_KEYS),
                    pos=start, length=len(key))
        if key in entries:
            sc.fail(f"duplicate entry {key!r}", pos=start, length=len(key))
        sc.expect_punct(":")
        if key == "states" or key == "terminal_states":
            entries[key] = _parse_name_list(sc)
        elif key == "actions":
            entries[key] = _parse_matrix(sc, _parse_int)
        else:
            entries[key] = _parse_matrix(sc, _parse_number)
    for key in _ENV_KEYS:
        if key not in entries:
            raise MissingSection(sc.span_at(sc.pos), key)
    return EnvironmentSpec(
        states=entries["states"],
        actions=entries["actions"],
        rewards=entries["rewards"],
        terminal_states=entries["terminal_states"],
    )


def _parse_env_block(sc: _Scanner) -> EnvironmentSpec:
    word, start = sc.ident("'environment'")
    if word != "environment":
        sc.fail(f"expected 'environment', found {word!r}", expected="'environment'",
                pos=start, length=len(word))
    sc.expect_punct("{")
    return _parse_env_entries(sc, until_brace=True)


def _parse_agent_block(sc: _Scanner) -> AgentSpec:
    word, start = sc.ident("'agent'")
    if word != "agent":
        sc.fail(f"expected 'agent', found {word!r}", expected="'agent'",
                pos=start, length=len(word))
    algo, algo_start = sc.ident("algorithm name")
    try:
        kind = AlgorithmKind.from_name(algo)
    except ValueError:
        expected = ", ".join(k.value for k in AlgorithmKind)
        sc.fail(f"unknown algorithm {algo!r}", expected="one of " + expected,
                pos=algo_start, length=len(algo))
    sc.expect_punct("{")
    values: dict[str, float | int] = {}
    while not sc.try_punct("}"):
        key, key_start = sc.ident("hyperparameter name")
        if key not in _HP_KEYS:
            sc.fail(f"unknown hyperparameter {key!r}", expected="one of " + ", ".join(_HP_KEYS),
                    pos=key_start, length=len(key))
        if key in values:
            sc.fail(f"duplicate hyperparameter {key!r}", pos=key_start, length=len(key))
        if key == "beta" and kind is not AlgorithmKind.ACTOR_CRITIC:
            sc.fail("'beta' is only valid for ActorCritic agents",
                    pos=key_start, length=len(key))
        sc.expect_punct(":")
        values[key] = _parse_int(sc) if key == "total_episodes" else _parse_number(sc)
    for key in _REQUIRED_HP_KEYS:
        if key not in values:
            sc.fail(f"agent block is missing hyperparameter {key!r}", expected=f"{key}:")
    return AgentSpec(
        kind,
        Hyperparameters(
            alpha=values["alpha"],
            gamma=values["gamma"],
            epsilon=values["epsilon"],
            total_episodes=values["total_episodes"],
            beta=values.get("beta"),
        ),
    )


def parse_model(text: str) -> RlmlModel | ComparatorModel:
    """Parse RLML model text into an AST.

    Raises ParseError (with a span pointing at the offending token) on the
    first problem encountered.
    """
    sc = _Scanner(text)
    keyword, start = sc.ident("'rlml' or 'rlml_comparator'")
    if keyword not in ("rlml", "rlml_comparator"):
        sc.fail(f"expected 'rlml' or 'rlml_comparator', found {keyword!r}",
                expected="'rlml' or 'rlml_comparator'", pos=start, length=len(keyword))
    name, _ = sc.ident("model name")
    sc.expect_punct("{")
    environment = _parse_env_block(sc)
    agents: list[AgentSpec] = []
    while not sc.try_punct("}"):
        agents.append(_parse_agent_block(sc))
    if not sc.at_end():
        sc.fail(f"unexpected input after model: {sc._describe_here()}")
    if keyword == "rlml":
        if len(agents) != 1:
            sc.fail(f"expected exactly 1 agent block in an 'rlml' model, found {len(agents)}")
        return RlmlModel(name, environment, agents[0], InputSource.inline())
    if len(agents) < 2:
        sc.fail(f"expected at least 2 agent blocks in an 'rlml_comparator' model, "
                f"found {len(agents)}")
    return ComparatorModel(name, environment, tuple(agents))


def parse_env_file(text: str) -> EnvironmentSpec:
    """Parse an environment import file: the four labeled sections, any order.

    Raises MissingSection naming the first absent key, or ParseError for any
    other problem.
    """
    sc = _Scanner(text)
    return _parse_env_entries(sc, until_brace=False)
