"""Forced-truth simplification of normal programs and the splits it induces."""

from __future__ import annotations

from typing import Iterable

from .syntax import Program, Rule


def simp(
    program: Program,
    true_atoms: Iterable[int],
    false_atoms: Iterable[int],
) -> Program:
    """Reduce a normal program under forced-true and forced-false atoms.

    Four steps, applied in this order (they commute, but a fixed order keeps
    golden output stable):

    1. drop rules whose head is forced either way;
    2. drop rules with a forced-false atom in the positive body;
    3. drop rules with a forced-true atom in the negative body;
    4. delete forced-true atoms from positive bodies and forced-false atoms
       from negative bodies of the survivors.

    The result contains no occurrence of a forced atom, and its stable
    models extend to stable models of the original once the true set is
    added back.
    """
    forced_true = frozenset(true_atoms)
    forced_false = frozenset(false_atoms)
    overlap = forced_true & forced_false
    if overlap:
        names = ", ".join(sorted(program.symbols[aid] for aid in overlap))
        raise ValueError(f"true/false sets overlap on: {names}")
    if not program.is_normal:
        raise ValueError("simp is defined for normal programs")
    kept = []
    for rule in program.rules:
        head = rule.head_atom
        if head in forced_true or head in forced_false:
            continue
        if rule.pos_body & forced_false:
            continue
        if rule.neg_body & forced_true:
            continue
        kept.append(Rule(rule.head, rule.pos_body - forced_true, rule.neg_body - forced_false))
    return program.with_rules(kept)


def atom_reduct_pos(program: Program, atom: int) -> Program:
    """The split program for branches that make the atom true."""
    return simp(program, (atom,), ())


def atom_reduct_neg(program: Program, atom: int) -> Program:
    """The split program for branches that make the atom false."""
    return simp(program, (), (atom,))


def _check_index(program: Program, index: int) -> Rule:
    if not 0 <= index < len(program.rules):
        raise ValueError(f"rule index {index} out of range")
    return program.rules[index]


def rule_reduct_pos(program: Program, index: int) -> Program:
    """The split program for branches where the indexed rule fires.

    Forces the rule's head and positive body true and its negative body
    false. Undefined when those sets overlap (the rule blocks itself and
    can never fire); that case is reported as an error.
    """
    rule = _check_index(program, index)
    forced_true = rule.head | rule.pos_body
    if forced_true & rule.neg_body:
        raise ValueError(f"rule {index} blocks itself; its firing split is undefined")
    return simp(program, forced_true, rule.neg_body)


def rule_reduct_neg(program: Program, index: int) -> Program:
    """The program with exactly the rule at this position removed.

    Identity is positional, so one of two textually equal rules can be
    removed on its own.
    """
    _check_index(program, index)
    return program.with_rules(program.rules[:index] + program.rules[index + 1 :])


def remove_redundant_rules(program: Program) -> Program:
    """Drop rules that mention a head atom in their own body or an atom in
    both body parts."""
    return program.with_rules(rule for rule in program.rules if not rule.is_redundant)


def overline(program: Program) -> Program:
    """Delete negated occurrences of atoms that head no rule.

    Such atoms can never be true, so the deleted literals are vacuous;
    positive occurrences are kept.
    """
    heads = program.head_atoms()
    kept = []
    for rule in program.rules:
        if rule.neg_body - heads:
            kept.append(Rule(rule.head, rule.pos_body, rule.neg_body & heads))
        else:
            kept.append(rule)
    return program.with_rules(kept)
