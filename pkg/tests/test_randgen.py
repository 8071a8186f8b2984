import random

from aspen.families import is_antichain
from aspen.randgen import (
    random_antichain,
    random_disjunctive_program,
    random_normal_program,
    random_short_body_program,
    random_sized_program,
    random_split_sets,
)


def test_same_seed_same_program():
    first = random_normal_program(random.Random(11), 6, 8)
    second = random_normal_program(random.Random(11), 6, 8)
    assert first == second


def test_normal_programs_have_requested_shape():
    for seed in range(30):
        program = random_normal_program(random.Random(seed), 5, 7)
        assert program.clause_count == 7
        assert program.is_normal
        assert all(len(r.pos_body) + len(r.neg_body) <= 3 for r in program.rules)


def test_short_body_programs_stay_short():
    for seed in range(30):
        program = random_short_body_program(random.Random(seed), 5, 6)
        assert all(len(r.pos_body) + len(r.neg_body) <= 1 for r in program.rules)


def test_sized_programs_respect_the_budget():
    for seed in range(50):
        program = random_sized_program(random.Random(seed), 6, 16)
        assert 1 <= program.size <= 16


def test_disjunctive_programs_respect_clause_length():
    for seed in range(30):
        program = random_disjunctive_program(random.Random(seed), 6, 5, 4)
        assert program.clause_count == 5
        assert all(rule.size <= 4 for rule in program.rules)


def test_random_antichains_are_antichains_of_nonempty_sets():
    for seed in range(50):
        members = random_antichain(random.Random(seed), 5, 4)
        assert members
        assert is_antichain(members)
        assert all(members for members in members)


def test_random_splits_are_disjoint_and_local():
    for seed in range(30):
        rng = random.Random(seed)
        program = random_normal_program(rng, 6, 8)
        forced_true, forced_false = random_split_sets(rng, program)
        assert not forced_true & forced_false
        occurring = program.occurring_atoms()
        assert forced_true <= occurring and forced_false <= occurring
