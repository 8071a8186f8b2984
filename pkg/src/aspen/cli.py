"""Command-line front end: solve, generate, verify, encode, wfs, reduct, bench.

Exit codes: 0 for success (for queries: an affirmative answer), 1 for a
negative query answer, 2 for any input error. All output is deterministic
given the input, the flags and the seed.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .extremal import generate_from_spec
from .families import (
    encode_antichain,
    make_witness_random,
    parse_family,
    witness_greatest,
    witness_least,
)
from .solver import (
    DEFAULT_DEPTH_CAP,
    Heuristics,
    QueryMode,
    solve_query,
    stable_models_a,
    stable_models_h,
    stable_models_r,
)
from .syntax import (
    ParseError,
    Program,
    format_atom_set,
    format_model,
    parse_program,
    print_program,
)
from .transform import simp
from .verify import DEFAULT_ATOM_CAP, run_suite
from .wfs import well_founded

_SOLVERS = {"a": stable_models_a, "r": stable_models_r, "h": stable_models_h}


@dataclass
class RunConfig:
    """Everything one command invocation depends on."""

    command: str
    input: str | None = None
    algo: str = "a"
    strategy: str = "wfs"
    mode: str = "all"
    atom_selector: str = "size-min"
    rule_selector: str = "size-min"
    mode_selector: str = "atom"
    policy: str = "least"
    seed: int = 0
    seeds: int | None = None
    atom_cap: int = DEFAULT_ATOM_CAP
    depth_cap: int = DEFAULT_DEPTH_CAP
    show_stats: bool = False
    generator: str | None = None
    forced_true: str = ""
    forced_false: str = ""

    @property
    def heuristics(self) -> Heuristics:
        return Heuristics(self.atom_selector, self.rule_selector, self.mode_selector)


def _read_text(source: str | None) -> str:
    if source is None or source == "-":
        return sys.stdin.read()
    with open(source, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_program(config: RunConfig, require_normal: bool = False) -> Program:
    program = parse_program(_read_text(config.input))
    if require_normal and not program.is_normal:
        raise ValueError("this command handles normal programs only")
    return program


def _parse_query_mode(text: str) -> QueryMode:
    kind, sep, atom = text.partition(":")
    if kind in ("brave", "cautious"):
        if not sep or not atom:
            raise ValueError(f"mode {kind} needs an atom, e.g. {kind}:a")
        return QueryMode(kind, atom)
    if sep:
        raise ValueError(f"mode {kind} takes no atom")
    return QueryMode(kind)


def _model_lines(program: Program, models) -> list[str]:
    return sorted(
        (format_model(program, model) for model in models),
        key=lambda line: tuple(line[1:-1].split(", ")) if len(line) > 2 else (),
    )


def _print_stats_footer(stats) -> None:
    for line in stats.as_text().splitlines():
        print(f"% {line}")


def cmd_solve(config: RunConfig) -> int:
    program = _load_program(config, require_normal=True)
    mode = _parse_query_mode(config.mode)
    answer = solve_query(
        program,
        mode,
        heuristics=config.heuristics,
        strategy=config.strategy,
        algorithm=config.algo,
        depth_cap=config.depth_cap,
    )
    code = 0
    if mode.kind == "all":
        assert answer.models is not None
        for line in _model_lines(program, answer.models):
            print(line)
    elif mode.kind == "first":
        if answer.model is not None:
            print(format_model(program, answer.model))
        else:
            code = 1
    else:
        if answer.truth:
            print("yes (vacuous)" if answer.vacuous else "yes")
        else:
            print("no")
            code = 1
    if config.show_stats and answer.stats is not None:
        _print_stats_footer(answer.stats)
    return code


def cmd_generate(config: RunConfig) -> int:
    assert config.generator is not None
    text = print_program(generate_from_spec(config.generator))
    if text:
        print(text)
    return 0


def cmd_verify(config: RunConfig) -> int:
    assert config.input is not None
    results = run_suite(
        config.input, seeds=config.seeds, seed=config.seed, atom_cap=config.atom_cap
    )
    for result in results:
        print(result.line())
    return 0 if all(result.passed for result in results) else 1


def cmd_encode(config: RunConfig) -> int:
    family = parse_family(_read_text(config.input))
    if config.policy == "least":
        policy = witness_least
    elif config.policy == "greatest":
        policy = witness_greatest
    elif config.policy == "random":
        policy = make_witness_random(config.seed)
    else:
        raise ValueError(f"unknown witness policy {config.policy!r}")
    text = print_program(encode_antichain(family, policy))
    if text:
        print(text)
    return 0


def cmd_wfs(config: RunConfig) -> int:
    program = _load_program(config, require_normal=True)
    split = well_founded(program)
    true_text = format_atom_set(program.names(split.true_set))
    false_text = format_atom_set(program.names(split.false_set))
    print(f"T={true_text} F={false_text}")
    return 0


def _atom_list(program: Program, text: str, which: str) -> frozenset[int]:
    ids = set()
    for name in filter(None, (part.strip() for part in text.split(","))):
        atom = program.find_atom(name)
        if atom is None:
            raise ValueError(f"--{which} atom {name!r} does not occur in the program")
        ids.add(atom)
    return frozenset(ids)


def cmd_reduct(config: RunConfig) -> int:
    program = _load_program(config, require_normal=True)
    forced_true = _atom_list(program, config.forced_true, "true")
    forced_false = _atom_list(program, config.forced_false, "false")
    text = print_program(simp(program, forced_true, forced_false))
    if text:
        print(text)
    return 0


def cmd_bench(config: RunConfig) -> int:
    if config.generator is not None:
        program = generate_from_spec(config.generator)
        if not program.is_normal:
            raise ValueError("bench runs the normal-program solvers")
    else:
        program = _load_program(config, require_normal=True)
    models, stats = _SOLVERS[config.algo](
        program,
        heuristics=config.heuristics,
        strategy=config.strategy,
        depth_cap=config.depth_cap,
    )
    print(f"algo={config.algo}")
    print(f"strategy={config.strategy}")
    print(f"models={len(models)}")
    print(stats.as_text())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspen",
        description="Ground logic-program workbench: stable models, splits, extremal families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_heuristic_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--strategy", choices=("wfs", "trivial"), default="wfs")
        p.add_argument("--atom-sel", dest="atom_selector", default="size-min")
        p.add_argument("--rule-sel", dest="rule_selector", default="size-min")
        p.add_argument("--mode-sel", dest="mode_selector", choices=("atom", "small-rule"), default="atom")
        p.add_argument("--depth-cap", dest="depth_cap", type=int, default=DEFAULT_DEPTH_CAP)

    p = sub.add_parser("solve", help="enumerate stable models or answer a query")
    p.add_argument("input", nargs="?", default="-", help="program file, or - for stdin")
    p.add_argument("--algo", choices=("a", "r", "h"), default="a")
    p.add_argument(
        "--mode",
        default="all",
        help="all | first | exists | brave:ATOM | cautious:ATOM",
    )
    p.add_argument("--stats", dest="show_stats", action="store_true")
    add_heuristic_flags(p)

    p = sub.add_parser("generate", help="print a generated program")
    p.add_argument("generator", help="A:3 | B:2 | C:2 | Cp:2 | P:4 | D:3x2 | sig:2,1,1")

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("input", metavar="suite", help="bounds | counting | lemma1 | wfs | agreement | shift | roundtrip")
    p.add_argument("--seeds", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--atom-cap", dest="atom_cap", type=int, default=DEFAULT_ATOM_CAP)

    p = sub.add_parser("encode", help="encode an antichain family as a program")
    p.add_argument("input", nargs="?", default="-", help="family file, or - for stdin")
    p.add_argument("--policy", choices=("least", "greatest", "random"), default="least")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("wfs", help="print the well-founded split of a program")
    p.add_argument("input", nargs="?", default="-")

    p = sub.add_parser("reduct", help="simplify a program under forced atoms")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--true", dest="forced_true", default="", help="comma-separated atoms")
    p.add_argument("--false", dest="forced_false", default="", help="comma-separated atoms")

    p = sub.add_parser("bench", help="run one solver and print its counters")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--gen", dest="generator", default=None, help="generator spec instead of a file")
    p.add_argument("--algo", choices=("a", "r", "h"), default="a")
    add_heuristic_flags(p)

    return parser


_COMMANDS = {
    "solve": cmd_solve,
    "generate": cmd_generate,
    "verify": cmd_verify,
    "encode": cmd_encode,
    "wfs": cmd_wfs,
    "reduct": cmd_reduct,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    arguments = _build_parser().parse_args(argv)
    config = RunConfig(**vars(arguments))
    try:
        return _COMMANDS[config.command](config)
    except (ParseError, OSError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
