"""Well-founded analysis and the solver preprocessing built on it."""

from __future__ import annotations

from dataclasses import dataclass

from .semantics import gl_reduct, least_model
from .syntax import Program
from .transform import simp

IMPLIED_SET_STRATEGIES = ("wfs", "trivial")


@dataclass(frozen=True)
class WfsResult:
    """Atoms definitely true and definitely false in every stable model."""

    true_set: frozenset[int]
    false_set: frozenset[int]


@dataclass(frozen=True)
class ImpliedSetResult:
    """Atoms forced into every stable model, plus the program left to solve."""

    implied_true: frozenset[int]
    residual: Program


def _stage(program: Program, interpretation: frozenset[int]) -> frozenset[int]:
    return least_model(gl_reduct(program, interpretation))


def well_founded(program: Program) -> WfsResult:
    """Alternating-fixpoint split of a normal program's atoms.

    An under-estimate of the surely-true atoms and an over-estimate of the
    possibly-true atoms refine each other until both settle; what falls
    outside the final over-estimate is surely false. Atoms of the program
    that head no rule always end up false. Total on normal programs.
    """
    if not program.is_normal:
        raise ValueError("the well-founded split is for normal programs")
    occurring = program.occurring_atoms()
    sure: frozenset[int] = frozenset()
    possible = _stage(program, sure)
    while True:
        next_sure = _stage(program, possible)
        next_possible = _stage(program, next_sure)
        if next_sure == sure and next_possible == possible:
            return WfsResult(sure, occurring - possible)
        sure, possible = next_sure, next_possible


def implied_set(program: Program, strategy: str = "wfs") -> ImpliedSetResult:
    """Preprocessing step shared by all solvers.

    ``wfs`` returns the well-founded true set and the program simplified
    under the full well-founded split; ``trivial`` returns nothing forced
    and the program unchanged. Either way, stable models of the input are
    exactly the implied set unioned with stable models of the residual.
    """
    if strategy == "trivial":
        return ImpliedSetResult(frozenset(), program)
    if strategy == "wfs":
        split = well_founded(program)
        return ImpliedSetResult(
            split.true_set, simp(program, split.true_set, split.false_set)
        )
    raise ValueError(f"unknown implied-set strategy {strategy!r}")
