"""Command-line front end: validate, run, compare, gen, rollout.

Human-readable results go to stdout; diagnostics and errors go to stderr.
Exit codes are a stable scripting contract (see ExitCode). Seeds default to 0
so runs are reproducible by default; pass `--seed random` to opt into
OS randomness. Set RLML_NO_COLOR to disable styled diagnostics.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from enum import IntEnum
from pathlib import Path

from .codegen import CodegenTarget, generate, generate_comparator
from .compare import compare_to_json, render_compare, run_compare
from .fingerprint import fingerprint
from .mdp import compile_environment
from .model import ComparatorModel, RlmlModel, InputSource
from .parser import ParseError, parse_env_file, parse_model
from .persist import (
    FingerprintMismatch,
    VersionMismatch,
    load_model,
    save_model,
)
from .train import derive_policy, rollout, train_agent
from .validate import has_errors, validate_model


class ExitCode(IntEnum):
    OK = 0
    VALIDATION_FAILED = 1
    PARSE_FAILED = 2
    USAGE_ERROR = 3
    IO_ERROR = 4


_TARGET_NAMES = {
    "python": CodegenTarget.PYTHON_FLAVOR,
    "python_flavor": CodegenTarget.PYTHON_FLAVOR,
    "java": CodegenTarget.JVM_FLAVOR,
    "jvm": CodegenTarget.JVM_FLAVOR,
    "jvm_flavor": CodegenTarget.JVM_FLAVOR,
}


def _use_color() -> bool:
    return sys.stderr.isatty() and not os.environ.get("RLML_NO_COLOR")


def _style(text: str, code: str) -> str:
    if _use_color():
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _error(message: str) -> None:
    print(_style("error:", "31") + f" {message}", file=sys.stderr)


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _parse_seed(value: str) -> int:
    if value == "random":
        seed = int.from_bytes(os.urandom(8), "big")
        print(f"seed: {seed}", file=sys.stderr)
        return seed
    try:
        return int(value, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"seed must be an integer or 'random', got {value!r}") from None


def _load_validated_model(args) -> tuple[object, int | None]:
    """Parse (and optionally env-merge) and validate the model at args.path.

    Returns (model, None) on success or (None, exit_code) on failure, having
    already printed the problem to stderr.
    """
    try:
        text = _read_text(args.path)
    except OSError as exc:
        _error(f"cannot read {args.path}: {exc}")
        return None, ExitCode.IO_ERROR
    try:
        model = parse_model(text)
    except ParseError as exc:
        _error(f"{args.path}: {exc}")
        return None, ExitCode.PARSE_FAILED
    env_path = getattr(args, "env", None)
    if env_path:
        if isinstance(model, ComparatorModel):
            _error("--env is only supported for plain 'rlml' models")
            return None, ExitCode.USAGE_ERROR
        try:
            env_text = _read_text(env_path)
        except OSError as exc:
            _error(f"cannot read {env_path}: {exc}")
            return None, ExitCode.IO_ERROR
        try:
            environment = parse_env_file(env_text)
        except ParseError as exc:
            _error(f"{env_path}: {exc}")
            return None, ExitCode.PARSE_FAILED
        model = RlmlModel(model.name, environment, model.agent,
                          InputSource.from_file(env_path))
    diagnostics = validate_model(model)
    for diagnostic in diagnostics:
        color = "31" if diagnostic.severity == "error" else "33"
        print(_style(diagnostic.render(), color), file=sys.stderr)
    if has_errors(diagnostics):
        return None, ExitCode.VALIDATION_FAILED
    return model, None


def cmd_validate(args) -> int:
    model, failure = _load_validated_model(args)
    if failure is not None:
        return failure
    return ExitCode.OK


def cmd_run(args) -> int:
    model, failure = _load_validated_model(args)
    if failure is not None:
        return failure
    if isinstance(model, ComparatorModel):
        _error("this file holds an 'rlml_comparator' model; use 'rlml compare'")
        return ExitCode.USAGE_ERROR
    mdp = compile_environment(model.environment)
    outcome = train_agent(mdp, model.agent, args.seed)
    hp = model.agent.hyperparameters
    if args.format == "structured":
        from .persist import tables_to_payload

        document = {
            "model": model.name,
            "algorithm": model.agent.algorithm.value,
            "seed": args.seed,
            "hyperparameters": {
                "alpha": hp.alpha, "gamma": hp.gamma, "epsilon": hp.epsilon,
                "total_episodes": hp.total_episodes,
                **({"beta": hp.beta} if hp.beta is not None else {}),
            },
            "fingerprint": fingerprint(model.environment, hp).digest,
            "steps_total": outcome.steps_total,
            "policy": {mdp.names[s]: mdp.names[t] for s, t in outcome.policy.items()},
            "tables": tables_to_payload(outcome.tables),
        }
        print(json.dumps(document, indent=2))
    else:
        print(outcome.result_text)
    if args.save:
        document = save_model(outcome, model.agent.algorithm, hp,
                              model.environment, args.seed)
        try:
            Path(args.save).write_text(document, encoding="utf-8")
        except OSError as exc:
            _error(f"cannot write {args.save}: {exc}")
            return ExitCode.IO_ERROR
        print(f"saved model: {args.save}", file=sys.stderr)
    if args.returns_csv:
        lines = [f"{i},{r!r}" for i, r in enumerate(outcome.episode_returns)]
        try:
            Path(args.returns_csv).write_text("\n".join(lines) + "\n", encoding="utf-8")
        except OSError as exc:
            _error(f"cannot write {args.returns_csv}: {exc}")
            return ExitCode.IO_ERROR
    return ExitCode.OK


def cmd_compare(args) -> int:
    model, failure = _load_validated_model(args)
    if failure is not None:
        return failure
    if not isinstance(model, ComparatorModel):
        _error("this file holds a plain 'rlml' model; use 'rlml run'")
        return ExitCode.USAGE_ERROR
    report = run_compare(model, args.seed)
    if args.format == "structured":
        print(compare_to_json(report, model.environment.states, args.seed))
    else:
        print(render_compare(report))
    return ExitCode.OK


def cmd_gen(args) -> int:
    model, failure = _load_validated_model(args)
    if failure is not None:
        return failure
    target = _TARGET_NAMES.get(args.target)
    if target is None:
        _error(f"unknown target {args.target!r}; expected one of: "
               + ", ".join(sorted(set(_TARGET_NAMES))))
        return ExitCode.USAGE_ERROR
    if isinstance(model, ComparatorModel):
        program = generate_comparator(model, target)
    else:
        program = generate(model, target)
    outdir = Path(args.outdir)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        out_path = outdir / program.filename
        out_path.write_text(program.source_text, encoding="utf-8")
    except OSError as exc:
        _error(f"cannot write generated program: {exc}")
        return ExitCode.IO_ERROR
    print(out_path)
    return ExitCode.OK


def cmd_rollout(args) -> int:
    model, failure = _load_validated_model(args)
    if failure is not None:
        return failure
    if isinstance(model, ComparatorModel):
        _error("rollout needs a plain 'rlml' model (one agent)")
        return ExitCode.USAGE_ERROR
    mdp = compile_environment(model.environment)
    try:
        saved_text = _read_text(args.model)
    except OSError as exc:
        _error(f"cannot read {args.model}: {exc}")
        return ExitCode.IO_ERROR
    try:
        tables = load_model(saved_text, model.environment, model.agent.hyperparameters)
    except (VersionMismatch, FingerprintMismatch) as exc:
        _error(str(exc))
        return ExitCode.VALIDATION_FAILED
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        _error(f"{args.model}: not a readable model file ({exc})")
        return ExitCode.PARSE_FAILED
    try:
        start = mdp.index_of(args.start)
    except KeyError:
        _error(f"unknown state {args.start!r}; states are: " + ", ".join(mdp.names))
        return ExitCode.USAGE_ERROR
    if mdp.terminal[start]:
        _error(f"state {args.start!r} is terminal; rollouts start from a "
               "non-terminal state")
        return ExitCode.USAGE_ERROR
    policy = derive_policy(tables, mdp)
    path = rollout(mdp, policy, start)
    print(" -> ".join(mdp.names[s] for s in path))
    return ExitCode.OK


class _Parser(argparse.ArgumentParser):
    """argparse with the usage-error exit code from the ExitCode table."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(int(ExitCode.USAGE_ERROR), f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rlml", description="RLML toolchain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a model file against the language constraints")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("run", help="train the model's agent and print the result")
    p.add_argument("path")
    p.add_argument("--seed", type=_parse_seed, default=0,
                   help="integer seed or 'random' (default 0)")
    p.add_argument("--env", help="environment import file replacing the model's "
                                 "environment block")
    p.add_argument("--save", help="write the trained model to this file")
    p.add_argument("--returns-csv", help="dump per-episode discounted returns as "
                                         "'episode,return' lines")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compare", help="train all agents of a comparator model side by side")
    p.add_argument("path")
    p.add_argument("--seed", type=_parse_seed, default=0,
                   help="base seed; agent k trains with seed base+k")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen", help="generate a standalone source program from a model")
    p.add_argument("path")
    p.add_argument("--target", required=True,
                   help="output flavor: python (python_flavor) or java (jvm_flavor)")
    p.add_argument("-o", "--outdir", default=".")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("rollout", help="follow a saved model's greedy policy from a state")
    p.add_argument("path", help="model file defining the environment and agent")
    p.add_argument("--model", required=True, help="saved trained-model file")
    p.add_argument("--start", required=True, help="starting state name")
    p.set_defaults(func=cmd_rollout)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    return int(args.func(args))


def run_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run_main()
