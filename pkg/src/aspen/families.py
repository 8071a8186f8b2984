"""Antichain families of atom sets and their encodings as programs.

The family text format matches the model output format: one set per line,
``{a, b}``, so solver output can be fed straight back into the encoder.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .syntax import ATOM_NAME, ParseError, Program, ProgramBuilder, format_atom_set

AtomSet = frozenset[str]
Family = frozenset[AtomSet]

WitnessPolicy = Callable[[AtomSet, AtomSet], str]


def is_antichain(family: Iterable[AtomSet]) -> bool:
    """No member is a proper subset of another."""
    sets = list(family)
    return not any(a < b for a in sets for b in sets)


def witness_least(current: AtomSet, other: AtomSet) -> str:
    """The alphabetically first atom of ``other`` outside ``current``."""
    return min(other - current)


def witness_greatest(current: AtomSet, other: AtomSet) -> str:
    return max(other - current)


def make_witness_random(seed: int = 0) -> WitnessPolicy:
    """A seeded policy picking any separating atom; still deterministic."""
    rng = random.Random(seed)

    def pick(current: AtomSet, other: AtomSet) -> str:
        return rng.choice(sorted(other - current))

    return pick


def _set_key(atoms: AtomSet) -> tuple[str, ...]:
    return tuple(sorted(atoms))


def encode_antichain(family: Family, policy: WitnessPolicy = witness_least) -> Program:
    """A program whose stable models are exactly the given antichain.

    Each member set gets one rule per element, negating one witness atom
    from every other member's difference; the policy picks the witness.
    Two edges the construction does not cover are handled directly: the
    empty family encodes to a single self-blocking rule over a fresh atom
    (no stable models), and the family holding only the empty set encodes
    to the empty program (sole stable model ``{}``).
    """
    members = sorted(family, key=_set_key)
    if not is_antichain(members):
        raise ValueError("family is not an antichain")
    if not members:
        builder = ProgramBuilder()
        builder.rule(["void"], neg=["void"])
        return builder.build()
    if any(not member for member in members):
        # an antichain containing {} has no other member
        return Program()
    builder = ProgramBuilder()
    for current in members:
        blockers = set()
        for other in members:
            if other == current:
                continue
            witness = policy(current, other)
            if witness not in other - current:
                raise ValueError(
                    f"witness policy returned {witness!r}, which does not separate"
                    f" {format_atom_set(other)} from {format_atom_set(current)}"
                )
            blockers.add(witness)
        for element in sorted(current):
            builder.rule([element], neg=sorted(blockers))
    return builder.build()


@dataclass(frozen=True)
class EncodingReport:
    """Actual encoded size next to the guaranteed ceilings."""

    clause_count: int
    size: int
    clause_bound: int  # sum of member sizes
    size_bound: int  # family cardinality times that sum


def encoding_size_report(family: Family, policy: WitnessPolicy = witness_least) -> EncodingReport:
    program = encode_antichain(family, policy)
    total = sum(len(member) for member in family)
    return EncodingReport(program.clause_count, program.size, total, len(family) * total)


def parse_family(text: str) -> Family:
    """One set per line, ``{a, b}``; blank lines and % comments ignored."""
    sets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        if not (line.startswith("{") and line.endswith("}")):
            raise ParseError("expected a set like {a, b}", lineno, 1)
        inner = line[1:-1].strip()
        if not inner:
            sets.append(frozenset())
            continue
        names = [part.strip() for part in inner.split(",")]
        for name in names:
            if not ATOM_NAME.fullmatch(name):
                raise ParseError(f"invalid atom name {name!r}", lineno, 1)
        sets.append(frozenset(names))
    return frozenset(sets)


def format_family(family: Family) -> str:
    return "\n".join(format_atom_set(member) for member in sorted(family, key=_set_key))


def models_as_family(program: Program, models: Iterable[frozenset[int]]) -> Family:
    """Translate id-based interpretations into a name-based family."""
    return frozenset(
        frozenset(program.atom_name(aid) for aid in model) for model in models
    )
