"""Program families with the largest stable-model counts, and their formulas.

The building block is the canonical "pick one of these atoms" program: one
rule per atom, each negating all the others, with the singletons as its
stable models. Disjoint unions of such blocks over 2-, 3- and 4-atom sets
maximize the model count per clause; the generators here produce them, the
formulas give the exact maxima, and the recognizer decides whether a program
has the maximizing shape.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .syntax import Program, ProgramBuilder, Rule
from .transform import overline


@dataclass(frozen=True)
class Signature:
    """Block counts of a program that is a disjoint union of canonical
    blocks over 2-, 3- and 4-atom sets."""

    lambda2: int = 0
    lambda3: int = 0
    lambda4: int = 0

    def __post_init__(self):
        if min(self.lambda2, self.lambda3, self.lambda4) < 0:
            raise ValueError("block counts must be non-negative")

    @property
    def clause_count(self) -> int:
        return 2 * self.lambda2 + 3 * self.lambda3 + 4 * self.lambda4

    @property
    def model_count(self) -> int:
        """Stable models multiply across independent blocks."""
        return 2**self.lambda2 * 3**self.lambda3 * 4**self.lambda4

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return (2,) * self.lambda2 + (3,) * self.lambda3 + (4,) * self.lambda4


def canonical_program(atoms: list[str] | tuple[str, ...]) -> Program:
    """One rule per atom, each negating all the others.

    The stable models are exactly the singletons of the atom set.
    """
    names = list(atoms)
    if not names:
        raise ValueError("a canonical program needs at least one atom")
    if len(set(names)) != len(names):
        raise ValueError("canonical program atoms must be distinct")
    builder = ProgramBuilder()
    for name in names:
        builder.rule([name], neg=[other for other in names if other != name])
    return builder.build()


def program_234(signature: Signature) -> Program:
    """Disjoint union of canonical blocks with the given signature.

    Atoms are named systematically: block ``i`` (1-based) gets atoms
    ``a{i}_1 .. a{i}_k``.
    """
    if signature.clause_count == 0:
        raise ValueError("signature must contain at least one block")
    builder = ProgramBuilder()
    for block, size in enumerate(signature.block_sizes, start=1):
        names = [f"a{block}_{j}" for j in range(1, size + 1)]
        for name in names:
            builder.rule([name], neg=[other for other in names if other != name])
    return builder.build()


_FAMILY_SIGNATURES = {
    "A": lambda k: Signature(0, k, 0),
    "B": lambda k: Signature(1, k, 0),
    "C": lambda k: Signature(2, k - 1, 0),
    "Cp": lambda k: Signature(0, k - 1, 1),
    "P": lambda k: Signature(k, 0, 0),
}

_FAMILY_MIN_K = {"A": 1, "B": 0, "C": 1, "Cp": 1, "P": 0}


def gen_named(family: str, k: int) -> Program:
    """A member of a named family: A(k), B(k), C(k), Cp(k) or P(k).

    A, C and Cp need k >= 1; B and P accept k >= 0, with P(0) empty.
    """
    if family not in _FAMILY_SIGNATURES:
        raise ValueError(f"unknown family {family!r}")
    if k < _FAMILY_MIN_K[family]:
        raise ValueError(f"{family}({k}) is out of range")
    if family == "P" and k == 0:
        return Program()
    return program_234(_FAMILY_SIGNATURES[family](k))


def gen_D(n: int, m: int) -> Program:
    """n disjunctive facts of m fresh head atoms each.

    Every way of picking one atom per rule is an answer set, so there are
    exactly m**n of them.
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    builder = ProgramBuilder()
    for i in range(1, n + 1):
        builder.rule([f"a{i}_{j}" for j in range(1, m + 1)])
    return builder.build()


def s0(n: int) -> int:
    """Largest stable-model count over normal programs with n clauses.

    Three-periodic: 3**k at n = 3k, 4*3**(k-1) at n = 3k+1, 2*3**k at
    n = 3k+2. Defined for n >= 2.
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    k = n // 3
    if n % 3 == 0:
        return 3**k
    if n % 3 == 1:
        return 4 * 3 ** (k - 1)
    return 2 * 3**k


def extremal_program(n: int) -> Program:
    """A program with n clauses attaining s0(n)."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    k = n // 3
    if n % 3 == 0:
        return gen_named("A", k)
    if n % 3 == 1:
        return gen_named("C", k)
    return gen_named("B", k)


@dataclass(frozen=True)
class Bound:
    """Two-sided desk bound for a size-limited class: a witness count that
    is attained and a proof ceiling that may be irrational."""

    lower: int
    upper: float
    witness: str


def max_stable(class_id: str, n: int, m: int | None = None) -> int | Bound:
    """Largest model count for a program class.

    Exact for clause-limited classes: ``LPn`` (normal, n clauses) gives
    s0(n); ``LP2n`` (bodies of at most one literal) gives 2**(n//2);
    ``DPnm`` (disjunctive, n clauses of length at most m) gives m**n.
    Size-limited classes return a :class:`Bound`: ``LPsize`` is pinned
    between the P(n//4) witness and 2**(n/4); ``DPsize`` between the
    D(n//2, 2) witness and 2**(n/2).
    """
    if class_id == "LPn":
        return s0(n)
    if class_id == "LP2n":
        if n < 0:
            raise ValueError("need n >= 0")
        return 2 ** (n // 2)
    if class_id == "DPnm":
        if m is None:
            raise ValueError("class DPnm needs both n and m")
        if n < 1 or m < 1:
            raise ValueError("need n >= 1 and m >= 1")
        return m**n
    if class_id == "LPsize":
        if n < 0:
            raise ValueError("need n >= 0")
        return Bound(2 ** (n // 4), 2 ** (n / 4), f"P:{n // 4}")
    if class_id == "DPsize":
        if n < 2:
            raise ValueError("need n >= 2")
        return Bound(2 ** (n // 2), 2 ** (n / 2), f"D:{n // 2}x2")
    raise ValueError(f"unknown program class {class_id!r}")


def shift(program: Program) -> Program:
    """Move every negated body atom into the head of its rule.

    The result is negation-free; every answer set of the input survives as
    an answer set of the shifted program.
    """
    return program.with_rules(
        Rule(rule.head | rule.neg_body, rule.pos_body) if rule.neg_body else rule
        for rule in program.rules
    )


def decompose_234(program: Program) -> Signature | None:
    """The signature of a disjoint union of canonical blocks, or None.

    Recognition works block by block: each rule must be negative-bodied,
    each atom must head exactly one rule, and the head plus its negated
    atoms must name the same block from every member's point of view.
    """
    if not program.is_normal:
        return None
    rule_of: dict[int, Rule] = {}
    for rule in program.rules:
        if rule.pos_body:
            return None
        head = rule.head_atom
        if head in rule_of:
            return None
        rule_of[head] = rule
    blocks: set[frozenset[int]] = set()
    for head, rule in rule_of.items():
        block = rule.neg_body | {head}
        for atom in block:
            member = rule_of.get(atom)
            if member is None or member.neg_body | {atom} != block:
                return None
        blocks.add(block)
    sizes = Counter(len(block) for block in blocks)
    if set(sizes) - {2, 3, 4}:
        return None
    return Signature(sizes.get(2, 0), sizes.get(3, 0), sizes.get(4, 0))


def is_extremal_member(program: Program, n: int) -> bool:
    """Does the program have the shape that attains s0(n)?

    After deleting vacuous negated literals, the program must be a disjoint
    union of canonical blocks with the signature the clause count dictates:
    all 3-blocks at n = 3k, one 2-block extra at n = 3k+2, and either two
    2-blocks or one 4-block extra at n = 3k+1.
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    if not program.is_normal:
        raise ValueError("extremal membership is defined for normal programs")
    if program.clause_count != n:
        raise ValueError(f"program has {program.clause_count} clauses, not {n}")
    signature = decompose_234(overline(program))
    if signature is None:
        return False
    k = n // 3
    if n % 3 == 0:
        targets = (Signature(0, k, 0),)
    elif n % 3 == 2:
        targets = (Signature(1, k, 0),)
    else:
        targets = (Signature(2, k - 1, 0), Signature(0, k - 1, 1))
    return signature in targets


def generate_from_spec(spec: str) -> Program:
    """Build a program from a generator spec string.

    Accepted forms: ``A:3`` ``B:2`` ``C:2`` ``Cp:2`` ``P:4`` (named
    families), ``D:3x2`` (disjunctive facts), ``sig:2,1,1`` (explicit block
    counts).
    """
    def number(text: str) -> int:
        try:
            return int(text)
        except ValueError:
            raise ValueError(f"bad generator spec {spec!r}: {text!r} is not a number") from None

    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ValueError(f"bad generator spec {spec!r}; expected NAME:ARGS")
    if kind == "D":
        n_text, sep2, m_text = arg.partition("x")
        if not sep2:
            raise ValueError(f"bad generator spec {spec!r}; expected D:NxM")
        return gen_D(number(n_text), number(m_text))
    if kind == "sig":
        counts = arg.split(",")
        if len(counts) != 3:
            raise ValueError(f"bad generator spec {spec!r}; expected sig:L2,L3,L4")
        return program_234(Signature(*(number(c) for c in counts)))
    if kind in _FAMILY_SIGNATURES:
        return gen_named(kind, number(arg))
    raise ValueError(f"unknown generator {kind!r}")
