"""Shared hypothesis strategies building small ground programs and families."""

import hypothesis.strategies as st

from aspen.syntax import Program, ProgramBuilder

POOL = tuple("abcdefgh")


@st.composite
def normal_programs(draw, max_atoms=6, max_rules=8, max_body=3) -> Program:
    pool = POOL[: draw(st.integers(1, max_atoms))]
    builder = ProgramBuilder()
    for _ in range(draw(st.integers(0, max_rules))):
        head = draw(st.sampled_from(pool))
        body = draw(
            st.lists(st.tuples(st.sampled_from(pool), st.booleans()), max_size=max_body)
        )
        builder.rule(
            [head],
            pos=[atom for atom, positive in body if positive],
            neg=[atom for atom, positive in body if not positive],
        )
    return builder.build()


@st.composite
def disjunctive_programs(draw, max_atoms=6, max_rules=5, max_head=3, max_body=2) -> Program:
    pool = POOL[: draw(st.integers(1, max_atoms))]
    builder = ProgramBuilder()
    for _ in range(draw(st.integers(0, max_rules))):
        head = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_head, unique=True))
        body = draw(
            st.lists(st.tuples(st.sampled_from(pool), st.booleans()), max_size=max_body)
        )
        builder.rule(
            head,
            pos=[atom for atom, positive in body if positive],
            neg=[atom for atom, positive in body if not positive],
        )
    return builder.build()


@st.composite
def antichains(draw, max_atoms=6, max_sets=5):
    pool = POOL[: draw(st.integers(1, max_atoms))]
    members: list[frozenset[str]] = []
    candidates = draw(
        st.lists(
            st.frozensets(st.sampled_from(pool), min_size=1, max_size=len(pool)),
            min_size=1,
            max_size=2 * max_sets,
        )
    )
    for candidate in candidates:
        if len(members) == max_sets:
            break
        if not any(candidate <= other or other <= candidate for other in members):
            members.append(candidate)
    return frozenset(members)


@st.composite
def programs_with_splits(draw, max_atoms=6, max_rules=8):
    """A normal program plus disjoint forced-true / forced-false id sets."""
    program = draw(normal_programs(max_atoms=max_atoms, max_rules=max_rules))
    forced_true: set[int] = set()
    forced_false: set[int] = set()
    for atom in sorted(program.occurring_atoms()):
        bucket = draw(st.integers(0, 3))
        if bucket == 0:
            forced_true.add(atom)
        elif bucket == 1:
            forced_false.add(atom)
    return program, frozenset(forced_true), frozenset(forced_false)
