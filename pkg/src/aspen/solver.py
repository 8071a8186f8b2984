"""Recursive stable-model enumeration by splitting on atoms or rules.

All three entry points share one driver: preprocess with
:func:`aspen.wfs.implied_set`, stop when nothing is left, otherwise pick an
atom (or a rule), recurse into the two split programs, and filter the
candidates each branch proposes through a stability check against the
current residual. Filtering is what makes the recursion sound: a stable
model of a split program does not have to lift to one of the residual.

Splitting on an atom q sends branch candidates up as ``{q} | N`` and ``N``;
splitting on a rule commits the rule's head and positive body in the firing
branch. A rule that blocks itself (head or positive body atom inside its
own negative body) can never fire, so that branch is skipped outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .semantics import ModelFamily, is_stable
from .syntax import Program, Rule
from .transform import (
    atom_reduct_neg,
    atom_reduct_pos,
    rule_reduct_neg,
    rule_reduct_pos,
)
from .wfs import implied_set

DEFAULT_DEPTH_CAP = 64

_ALGORITHMS = {"a": "atom", "r": "rule", "h": "hybrid"}


class SearchDepthExceeded(RuntimeError):
    """Recursion went past the configured depth cap."""


@dataclass
class SearchStats:
    """Counters for one solver run; all grow monotonically."""

    recursive_calls: int = 0
    stability_checks: int = 0
    candidates_tested: int = 0
    max_depth: int = 0

    def as_text(self) -> str:
        """Flat ``key=value`` block, one counter per line."""
        return "\n".join(f"{key}={value}" for key, value in vars(self).items())


@dataclass(frozen=True)
class Heuristics:
    """Named selection strategies steering the search."""

    atom_selector: str = "size-min"
    rule_selector: str = "size-min"
    mode_selector: str = "atom"


@dataclass(frozen=True)
class QueryMode:
    """What to ask of the search: all | first | exists | brave | cautious.

    ``brave`` and ``cautious`` carry the queried atom by name.
    """

    kind: str
    atom: str | None = None

    def __post_init__(self):
        if self.kind not in ("all", "first", "exists", "brave", "cautious"):
            raise ValueError(f"unknown query mode {self.kind!r}")
        if self.kind in ("brave", "cautious") and not self.atom:
            raise ValueError(f"{self.kind} queries need an atom")


@dataclass(frozen=True)
class QueryAnswer:
    mode: QueryMode
    models: ModelFamily | None = None
    model: frozenset[int] | None = None
    truth: bool | None = None
    vacuous: bool = False  # cautious answer that holds only because no model exists
    stats: SearchStats | None = None


def _split_cost(program: Program, atom: int) -> int:
    return atom_reduct_pos(program, atom).size + atom_reduct_neg(program, atom).size


def select_atom_default(program: Program) -> int:
    """The occurring atom whose two split programs are jointly smallest;
    ties go to the lowest atom id."""
    return min(sorted(program.occurring_atoms()), key=lambda a: (_split_cost(program, a), a))


def _rule_can_fire(rule: Rule) -> bool:
    return not (rule.head | rule.pos_body) & rule.neg_body


def select_rule_default(program: Program) -> int:
    """The rule whose two split programs are jointly smallest, skipping
    self-blocking rules while any other rule remains."""
    best: tuple[int, int] | None = None
    for idx in range(len(program.rules)):
        if not _rule_can_fire(program.rules[idx]):
            continue
        cost = rule_reduct_pos(program, idx).size + rule_reduct_neg(program, idx).size
        if best is None or cost < best[0]:
            best = (cost, idx)
    return 0 if best is None else best[1]


def _mode_always_atom(program: Program) -> str:
    return "atom"


def _mode_small_rule(program: Program) -> str:
    """Split on a rule whenever some rule has at most one body literal."""
    if any(len(r.pos_body) + len(r.neg_body) <= 1 for r in program.rules):
        return "rule"
    return "atom"


ATOM_SELECTORS: dict[str, Callable[[Program], int]] = {"size-min": select_atom_default}
RULE_SELECTORS: dict[str, Callable[[Program], int]] = {"size-min": select_rule_default}
MODE_SELECTORS: dict[str, Callable[[Program], str]] = {
    "atom": _mode_always_atom,
    "small-rule": _mode_small_rule,
}


def _search(
    program: Program,
    heuristics: Heuristics,
    strategy: str,
    split: str,
    stats: SearchStats,
    depth: int,
    depth_cap: int,
) -> Iterator[frozenset[int]]:
    """Yield stable models of the program, preprocessed residual first.

    Rule splits may propose the same model in both branches; callers that
    need a duplicate-free family canonicalize afterwards.
    """
    stats.recursive_calls += 1
    if depth > stats.max_depth:
        stats.max_depth = depth
    if depth > depth_cap:
        raise SearchDepthExceeded(f"search depth exceeded the cap of {depth_cap}")
    preprocessed = implied_set(program, strategy)
    forced, residual = preprocessed.implied_true, preprocessed.residual
    if not residual.rules:
        yield forced
        return
    branch_kind = split
    if branch_kind == "hybrid":
        branch_kind = MODE_SELECTORS[heuristics.mode_selector](residual)

    def recurse(subprogram: Program) -> Iterator[frozenset[int]]:
        return _search(subprogram, heuristics, strategy, split, stats, depth + 1, depth_cap)

    def passes(candidate: frozenset[int]) -> bool:
        stats.candidates_tested += 1
        stats.stability_checks += 1
        return is_stable(residual, candidate)

    if branch_kind == "atom":
        atom = ATOM_SELECTORS[heuristics.atom_selector](residual)
        chosen = frozenset((atom,))
        for sub in recurse(atom_reduct_pos(residual, atom)):
            candidate = sub | chosen
            if passes(candidate):
                yield forced | candidate
        for sub in recurse(atom_reduct_neg(residual, atom)):
            if passes(sub):
                yield forced | sub
    else:
        index = RULE_SELECTORS[heuristics.rule_selector](residual)
        rule = residual.rules[index]
        if _rule_can_fire(rule):
            committed = rule.head | rule.pos_body
            for sub in recurse(rule_reduct_pos(residual, index)):
                candidate = sub | committed
                if passes(candidate):
                    yield forced | candidate
        for sub in recurse(rule_reduct_neg(residual, index)):
            if passes(sub):
                yield forced | sub


def _require_normal(program: Program) -> None:
    if not program.is_normal:
        raise ValueError("the solvers handle normal programs only")


def _run(
    program: Program,
    heuristics: Heuristics,
    strategy: str,
    split: str,
    depth_cap: int,
) -> tuple[ModelFamily, SearchStats]:
    _require_normal(program)
    stats = SearchStats()
    models = ModelFamily.from_iterable(
        _search(program, heuristics, strategy, split, stats, 1, depth_cap)
    )
    return models, stats


def stable_models_a(
    program: Program,
    heuristics: Heuristics = Heuristics(),
    strategy: str = "wfs",
    depth_cap: int = DEFAULT_DEPTH_CAP,
) -> tuple[ModelFamily, SearchStats]:
    """All stable models by splitting on atoms."""
    return _run(program, heuristics, strategy, "atom", depth_cap)


def stable_models_r(
    program: Program,
    heuristics: Heuristics = Heuristics(),
    strategy: str = "wfs",
    depth_cap: int = DEFAULT_DEPTH_CAP,
) -> tuple[ModelFamily, SearchStats]:
    """All stable models by splitting on rules."""
    return _run(program, heuristics, strategy, "rule", depth_cap)


def stable_models_h(
    program: Program,
    heuristics: Heuristics = Heuristics(),
    strategy: str = "wfs",
    depth_cap: int = DEFAULT_DEPTH_CAP,
) -> tuple[ModelFamily, SearchStats]:
    """All stable models, choosing atom or rule splits per call."""
    return _run(program, heuristics, strategy, "hybrid", depth_cap)


def solve_query(
    program: Program,
    mode: QueryMode,
    heuristics: Heuristics = Heuristics(),
    strategy: str = "wfs",
    algorithm: str = "a",
    depth_cap: int = DEFAULT_DEPTH_CAP,
) -> QueryAnswer:
    """Answer a query, consuming the search only as far as needed.

    ``all`` materializes the family; ``first`` and ``exists`` stop at the
    first model; ``brave`` stops at the first model containing the atom;
    ``cautious`` stops at the first model missing it, and is vacuously true
    (flagged) when there is no model at all.
    """
    _require_normal(program)
    try:
        split = _ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None
    stats = SearchStats()
    found = _search(program, heuristics, strategy, split, stats, 1, depth_cap)
    if mode.kind == "all":
        return QueryAnswer(mode, models=ModelFamily.from_iterable(found), stats=stats)
    if mode.kind == "first":
        model = next(found, None)
        return QueryAnswer(mode, model=model, truth=model is not None, stats=stats)
    if mode.kind == "exists":
        return QueryAnswer(mode, truth=next(found, None) is not None, stats=stats)
    assert mode.atom is not None
    target = program.find_atom(mode.atom)
    if mode.kind == "brave":
        truth = target is not None and any(target in model for model in found)
        return QueryAnswer(mode, truth=truth, stats=stats)
    first = next(found, None)
    if first is None:
        return QueryAnswer(mode, truth=True, vacuous=True, stats=stats)
    if target is None or target not in first:
        return QueryAnswer(mode, truth=False, stats=stats)
    return QueryAnswer(mode, truth=all(target in model for model in found), stats=stats)
