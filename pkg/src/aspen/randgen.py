"""Seeded program distributions for the randomized verification suites.

One distribution, documented once: the caller fixes the rule count, each
head is uniform over the atom pool, body length is geometric (p = 1/2)
capped, body atoms are sampled without replacement, and each body literal's
sign is uniform. Everything is a pure function of the passed-in
``random.Random``, so failures replay from a seed.
"""

from __future__ import annotations

import random

from .families import Family
from .syntax import Program, ProgramBuilder


def _pool(n_atoms: int) -> list[str]:
    return [f"x{i}" for i in range(1, n_atoms + 1)]


def _geometric(rng: random.Random, cap: int, p: float = 0.5) -> int:
    length = 0
    while length < cap and rng.random() < p:
        length += 1
    return length


def _signed_body(rng: random.Random, atoms: list[str]) -> tuple[list[str], list[str]]:
    pos: list[str] = []
    neg: list[str] = []
    for atom in atoms:
        (pos if rng.random() < 0.5 else neg).append(atom)
    # sorted so atoms intern in print order and parse(print(.)) is the identity
    return sorted(pos), sorted(neg)


def random_normal_program(
    rng: random.Random, n_atoms: int, n_rules: int, max_body: int = 3
) -> Program:
    pool = _pool(n_atoms)
    builder = ProgramBuilder()
    for _ in range(n_rules):
        head = rng.choice(pool)
        body = rng.sample(pool, _geometric(rng, min(max_body, n_atoms)))
        pos, neg = _signed_body(rng, body)
        builder.rule([head], pos=pos, neg=neg)
    return builder.build()


def random_short_body_program(rng: random.Random, n_atoms: int, n_rules: int) -> Program:
    """Rules with at most one body literal (length uniform over {0, 1})."""
    pool = _pool(n_atoms)
    builder = ProgramBuilder()
    for _ in range(n_rules):
        head = rng.choice(pool)
        body = rng.sample(pool, rng.randint(0, 1))
        pos, neg = _signed_body(rng, body)
        builder.rule([head], pos=pos, neg=neg)
    return builder.build()


def random_sized_program(rng: random.Random, n_atoms: int, max_size: int) -> Program:
    """A program whose total atom occurrences stay within ``max_size``."""
    if max_size < 1:
        raise ValueError("need room for at least one fact")
    target = rng.randint(1, max_size)
    pool = _pool(n_atoms)
    builder = ProgramBuilder()
    used = 0
    while used < target:
        room = target - used
        cap = min(3, n_atoms, room - 1)
        body = rng.sample(pool, _geometric(rng, cap)) if cap > 0 else []
        pos, neg = _signed_body(rng, body)
        builder.rule([rng.choice(pool)], pos=pos, neg=neg)
        used += 1 + len(body)
    return builder.build()


def random_disjunctive_program(
    rng: random.Random, n_atoms: int, n_rules: int, max_clause_len: int
) -> Program:
    """Clauses of total length at most ``max_clause_len``; head size uniform,
    the rest of the budget available to a geometric body."""
    if max_clause_len < 1:
        raise ValueError("clauses need at least a head atom")
    pool = _pool(n_atoms)
    builder = ProgramBuilder()
    for _ in range(n_rules):
        head_size = rng.randint(1, min(max_clause_len, n_atoms))
        head = sorted(rng.sample(pool, head_size))
        cap = min(3, n_atoms, max_clause_len - head_size)
        body = rng.sample(pool, _geometric(rng, cap)) if cap > 0 else []
        pos, neg = _signed_body(rng, body)
        builder.rule(head, pos=pos, neg=neg)
    return builder.build()


def random_antichain(rng: random.Random, n_atoms: int, max_sets: int) -> Family:
    """A pairwise-incomparable family of nonempty sets; never empty itself."""
    pool = _pool(n_atoms)
    want = rng.randint(1, max_sets)
    chosen: list[frozenset[str]] = []
    for _ in range(10 * max_sets):
        if len(chosen) >= want:
            break
        candidate = frozenset(rng.sample(pool, rng.randint(1, n_atoms)))
        if any(candidate <= other or other <= candidate for other in chosen):
            continue
        chosen.append(candidate)
    return frozenset(chosen)


def random_split_sets(
    rng: random.Random, program: Program
) -> tuple[frozenset[int], frozenset[int]]:
    """Disjoint (true, false) atom-id sets over the program's atoms."""
    forced_true: set[int] = set()
    forced_false: set[int] = set()
    for atom in sorted(program.occurring_atoms()):
        roll = rng.random()
        if roll < 0.25:
            forced_true.add(atom)
        elif roll < 0.5:
            forced_false.add(atom)
    return frozenset(forced_true), frozenset(forced_false)
