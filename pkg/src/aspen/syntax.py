"""Ground program syntax: atom interning, rules, parsing, canonical printing.

The text format is one rule per line::

    a | b :- c, d, not e.   % disjunctive head, mixed body
    fact.                   % empty body
    % comment to end of line

Atom names match ``[a-z][A-Za-z0-9_]*``; ``not`` is reserved. Whitespace is
insignificant outside tokens. Heads are never empty (no integrity
constraints).
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

ATOM_NAME = re.compile(r"[a-z][A-Za-z0-9_]*")

_EMPTY: frozenset[int] = frozenset()


class ParseError(ValueError):
    """Malformed program or family text, with a 1-based source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class DuplicateLiteralWarning(UserWarning):
    """A rule listed the same literal more than once; duplicates are dropped."""


@dataclass(frozen=True)
class Atom:
    """An interned propositional symbol: dense id plus display name."""

    id: int
    name: str


@dataclass(frozen=True)
class Rule:
    """One clause: head atom ids, positive body ids, negative body ids.

    ``head`` holds one atom for a normal rule and several for a disjunctive
    one; it is never empty.
    """

    head: frozenset[int]
    pos_body: frozenset[int] = _EMPTY
    neg_body: frozenset[int] = _EMPTY

    def __post_init__(self):
        if not self.head:
            raise ValueError("a rule needs at least one head atom")

    @property
    def is_normal(self) -> bool:
        return len(self.head) == 1

    @property
    def is_fact(self) -> bool:
        return not self.pos_body and not self.neg_body

    @property
    def head_atom(self) -> int:
        """The sole head atom; rejects disjunctive rules."""
        if len(self.head) != 1:
            raise ValueError("disjunctive rule has no single head atom")
        return next(iter(self.head))

    @property
    def is_redundant(self) -> bool:
        """A head atom occurs in the own body, or an atom occurs in both body parts."""
        return bool(self.head & (self.pos_body | self.neg_body)) or bool(
            self.pos_body & self.neg_body
        )

    @property
    def size(self) -> int:
        return len(self.head) + len(self.pos_body) + len(self.neg_body)

    def atoms(self) -> frozenset[int]:
        return self.head | self.pos_body | self.neg_body


@dataclass(frozen=True)
class Program:
    """An ordered rule collection over an interned symbol table.

    ``symbols[i]`` is the name of atom id ``i``; ids are dense and unique
    within one program. Programs are immutable; transforms build new ones
    sharing the symbol table, so atom ids stay comparable between a program
    and anything derived from it.
    """

    rules: tuple[Rule, ...] = ()
    symbols: tuple[str, ...] = ()

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: aid for aid, name in enumerate(self.symbols)}

    def atom_id(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown atom {name!r}") from None

    def find_atom(self, name: str) -> int | None:
        return self._index.get(name)

    def atom_name(self, aid: int) -> str:
        return self.symbols[aid]

    def atoms(self) -> tuple[Atom, ...]:
        return tuple(Atom(aid, name) for aid, name in enumerate(self.symbols))

    def names(self, ids: Iterable[int]) -> list[str]:
        """Atom names for the given ids, sorted alphabetically."""
        return sorted(self.symbols[aid] for aid in ids)

    @property
    def clause_count(self) -> int:
        return len(self.rules)

    @property
    def size(self) -> int:
        """Total atom occurrences across all heads and bodies."""
        return sum(rule.size for rule in self.rules)

    @property
    def is_normal(self) -> bool:
        return all(rule.is_normal for rule in self.rules)

    @property
    def is_positive(self) -> bool:
        return all(not rule.neg_body for rule in self.rules)

    def head_atoms(self) -> frozenset[int]:
        out: set[int] = set()
        for rule in self.rules:
            out |= rule.head
        return frozenset(out)

    def occurring_atoms(self) -> frozenset[int]:
        out: set[int] = set()
        for rule in self.rules:
            out |= rule.head
            out |= rule.pos_body
            out |= rule.neg_body
        return frozenset(out)

    def with_rules(self, rules: Iterable[Rule]) -> Program:
        """A program over the same symbol table with a different rule list."""
        return Program(tuple(rules), self.symbols)


class ProgramBuilder:
    """Incremental program construction with first-use atom interning."""

    def __init__(self):
        self._ids: dict[str, int] = {}
        self._names: list[str] = []
        self._rules: list[Rule] = []

    def atom(self, name: str) -> int:
        aid = self._ids.get(name)
        if aid is None:
            if not ATOM_NAME.fullmatch(name) or name == "not":
                raise ValueError(f"invalid atom name {name!r}")
            aid = len(self._names)
            self._ids[name] = aid
            self._names.append(name)
        return aid

    def rule(
        self,
        head: Iterable[str],
        pos: Iterable[str] = (),
        neg: Iterable[str] = (),
    ) -> None:
        self._rules.append(
            Rule(
                frozenset(self.atom(name) for name in head),
                frozenset(self.atom(name) for name in pos),
                frozenset(self.atom(name) for name in neg),
            )
        )

    def build(self) -> Program:
        return Program(tuple(self._rules), tuple(self._names))


@dataclass(frozen=True)
class _Token:
    kind: str  # ATOM NOT ARROW DOT COMMA PIPE
    text: str
    line: int
    column: int


def _tokenize(text: str) -> Iterator[_Token]:
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
        elif ch in " \t\r":
            i += 1
            col += 1
        elif ch == "%":
            while i < n and text[i] != "\n":
                i += 1
        elif ch == ".":
            yield _Token("DOT", ".", line, col)
            i += 1
            col += 1
        elif ch == ",":
            yield _Token("COMMA", ",", line, col)
            i += 1
            col += 1
        elif ch == "|":
            yield _Token("PIPE", "|", line, col)
            i += 1
            col += 1
        elif ch == ":":
            if text[i : i + 2] != ":-":
                raise ParseError("expected ':-'", line, col)
            yield _Token("ARROW", ":-", line, col)
            i += 2
            col += 2
        else:
            match = ATOM_NAME.match(text, i)
            if not match:
                raise ParseError(f"unexpected character {ch!r}", line, col)
            word = match.group()
            yield _Token("NOT" if word == "not" else "ATOM", word, line, col)
            i = match.end()
            col += len(word)


class _Parser:
    def __init__(self, text: str):
        self._tokens = list(_tokenize(text))
        self._pos = 0
        self._builder = ProgramBuilder()

    def _peek(self) -> _Token | None:
        if self._pos < len(self._tokens):
            return self._tokens[self._pos]
        return None

    def _take(self, kind: str, what: str) -> _Token:
        token = self._peek()
        if token is None:
            if self._tokens:
                last = self._tokens[-1]
                raise ParseError(
                    f"unexpected end of input, expected {what}",
                    last.line,
                    last.column + len(last.text),
                )
            raise ParseError(f"unexpected end of input, expected {what}", 1, 1)
        if token.kind != kind:
            raise ParseError(f"expected {what}, found {token.text!r}", token.line, token.column)
        self._pos += 1
        return token

    def _literal(self) -> tuple[bool, str]:
        token = self._peek()
        if token is not None and token.kind == "NOT":
            self._pos += 1
            atom = self._take("ATOM", "an atom after 'not'")
            return False, atom.text
        atom = self._take("ATOM", "an atom")
        return True, atom.text

    def _rule(self) -> None:
        start = self._peek()
        assert start is not None
        heads = [self._take("ATOM", "a head atom").text]
        while (token := self._peek()) is not None and token.kind == "PIPE":
            self._pos += 1
            heads.append(self._take("ATOM", "a head atom").text)
        literals: list[tuple[bool, str]] = []
        if (token := self._peek()) is not None and token.kind == "ARROW":
            self._pos += 1
            literals.append(self._literal())
            while (token := self._peek()) is not None and token.kind == "COMMA":
                self._pos += 1
                literals.append(self._literal())
        self._take("DOT", "'.'")
        if len(set(heads)) < len(heads) or len(set(literals)) < len(literals):
            warnings.warn(
                DuplicateLiteralWarning(
                    f"line {start.line}: duplicate literal in rule dropped"
                ),
                stacklevel=4,
            )
        self._builder.rule(
            heads,
            pos=[name for positive, name in literals if positive],
            neg=[name for positive, name in literals if not positive],
        )

    def parse(self) -> Program:
        while self._peek() is not None:
            self._rule()
        return self._builder.build()


def parse_program(text: str) -> Program:
    """Parse program text into a :class:`Program`.

    Rule order and atom interning follow the text (first occurrence wins).
    A repeated literal within one rule is dropped with a
    :class:`DuplicateLiteralWarning`; anything else malformed raises
    :class:`ParseError` with its line and column.
    """
    return _Parser(text).parse()


def print_program(program: Program) -> str:
    """Canonical text: rule order kept, head atoms sorted by name and joined
    with `` | ``, body literals positive-first, each group sorted by name."""
    lines = []
    for rule in program.rules:
        head = " | ".join(program.names(rule.head))
        parts = program.names(rule.pos_body)
        parts += [f"not {name}" for name in program.names(rule.neg_body)]
        lines.append(head + (" :- " + ", ".join(parts) if parts else "") + ".")
    return "\n".join(lines)


def program_size(program: Program) -> int:
    """Total number of atom occurrences in the program."""
    return program.size


def format_atom_set(names: Iterable[str]) -> str:
    return "{" + ", ".join(sorted(names)) + "}"


def format_model(program: Program, model: Iterable[int]) -> str:
    """Render an interpretation as ``{a, b, c}``, atoms sorted by name."""
    return format_atom_set(program.symbols[aid] for aid in model)
