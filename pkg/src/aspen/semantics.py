"""Stable-model and answer-set semantics, plus exhaustive brute-force oracles.

Everything here is a pure function of immutable inputs. The oracles
enumerate the full candidate space and are the reference the solvers are
validated against; keep them simple rather than fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .syntax import Program, Rule

_EMPTY: frozenset[int] = frozenset()

DEFAULT_ATOM_CAP = 20


def _model_key(model: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(model))


@dataclass(frozen=True)
class ModelFamily:
    """A duplicate-free family of interpretations in canonical order."""

    models: tuple[frozenset[int], ...] = ()

    @classmethod
    def from_iterable(cls, models: Iterable[frozenset[int]]) -> ModelFamily:
        return cls(tuple(sorted(set(models), key=_model_key)))

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.models)

    def __len__(self) -> int:
        return len(self.models)

    def __contains__(self, model: object) -> bool:
        return model in self.models

    def as_set(self) -> frozenset[frozenset[int]]:
        return frozenset(self.models)

    def is_antichain(self) -> bool:
        return not any(a < b for a in self.models for b in self.models)


def gl_reduct(program: Program, interpretation: frozenset[int]) -> Program:
    """The positive program the interpretation leaves behind.

    Rules blocked by a negated atom inside the interpretation are dropped;
    the remaining rules lose their negative bodies. Works for disjunctive
    programs as well.
    """
    kept = []
    for rule in program.rules:
        if rule.neg_body & interpretation:
            continue
        kept.append(Rule(rule.head, rule.pos_body) if rule.neg_body else rule)
    return program.with_rules(kept)


def least_model(program: Program) -> frozenset[int]:
    """Least fixpoint of one-step provability, by unit propagation."""
    if not program.is_positive:
        raise ValueError("least model requires a program without negation")
    if not program.is_normal:
        raise ValueError("least model requires singleton heads; use minimal models")
    derived: set[int] = set()
    missing: list[int] = []
    watchers: dict[int, list[int]] = {}
    queue: list[int] = []
    for idx, rule in enumerate(program.rules):
        missing.append(len(rule.pos_body))
        for atom in rule.pos_body:
            watchers.setdefault(atom, []).append(idx)
        if not rule.pos_body:
            queue.append(idx)
    while queue:
        head = program.rules[queue.pop()].head_atom
        if head in derived:
            continue
        derived.add(head)
        for idx in watchers.get(head, ()):
            missing[idx] -= 1
            if missing[idx] == 0:
                queue.append(idx)
    return frozenset(derived)


def satisfies(rule: Rule, interpretation: frozenset[int]) -> bool:
    """Classical satisfaction, reading ``not`` as complement membership."""
    if not rule.pos_body <= interpretation:
        return True
    if rule.neg_body & interpretation:
        return True
    return bool(rule.head & interpretation)


def is_model(program: Program, interpretation: frozenset[int]) -> bool:
    return all(satisfies(rule, interpretation) for rule in program.rules)


def is_stable(program: Program, interpretation: frozenset[int]) -> bool:
    """Does the interpretation reproduce itself through its own reduct?"""
    if not program.is_normal:
        raise ValueError("stability is for normal programs; use is_answer_set")
    return interpretation == least_model(gl_reduct(program, interpretation))


def is_minimal_model(program: Program, interpretation: frozenset[int]) -> bool:
    """The interpretation satisfies every rule and no proper subset does.

    Proper subsets are enumerated smallest-first with early exit; this is
    the reference semantics at desk scale, not a co-NP-grade check.
    """
    if not is_model(program, interpretation):
        return False
    atoms = sorted(interpretation)
    for k in range(len(atoms)):
        for kept in combinations(atoms, k):
            if is_model(program, frozenset(kept)):
                return False
    return True


def is_answer_set(program: Program, interpretation: frozenset[int]) -> bool:
    """Minimal-model check against the interpretation's own reduct.

    On normal programs this coincides with :func:`is_stable`.
    """
    return is_minimal_model(gl_reduct(program, interpretation), interpretation)


def generating_rules(program: Program, interpretation: frozenset[int]) -> frozenset[int]:
    """Indices of rules whose positive body lies inside, and negative body
    outside, the given atom set."""
    return frozenset(
        idx
        for idx, rule in enumerate(program.rules)
        if rule.pos_body <= interpretation and not rule.neg_body & interpretation
    )


def _subsets(atoms: Sequence[int]) -> Iterator[frozenset[int]]:
    for mask in range(1 << len(atoms)):
        yield frozenset(atom for i, atom in enumerate(atoms) if mask >> i & 1)


def _checked_heads(program: Program, cap: int) -> list[int]:
    heads = sorted(program.head_atoms())
    if len(heads) > cap:
        raise ValueError(f"{len(heads)} head atoms exceed the brute-force cap {cap}")
    return heads


def brute_force_stable(program: Program, cap: int = DEFAULT_ATOM_CAP) -> ModelFamily:
    """Every stable model, found by testing all subsets of the head atoms.

    Restricting candidates to head atoms is sound: a stable model always
    reproduces itself from rule heads only.
    """
    if not program.is_normal:
        raise ValueError("stable-model oracle is for normal programs")
    heads = _checked_heads(program, cap)
    return ModelFamily.from_iterable(
        candidate for candidate in _subsets(heads) if is_stable(program, candidate)
    )


def brute_force_answer_sets(program: Program, cap: int = DEFAULT_ATOM_CAP) -> ModelFamily:
    """Every answer set, found by testing all subsets of the head atoms."""
    heads = _checked_heads(program, cap)
    return ModelFamily.from_iterable(
        candidate for candidate in _subsets(heads) if is_answer_set(program, candidate)
    )
