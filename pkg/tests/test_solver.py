import pytest
from hypothesis import given, settings

import aspen.solver as solver_module
from aspen.extremal import canonical_program, gen_named
from aspen.semantics import brute_force_stable, is_stable
from aspen.solver import (
    Heuristics,
    QueryMode,
    SearchDepthExceeded,
    select_atom_default,
    solve_query,
    stable_models_a,
    stable_models_h,
    stable_models_r,
)
from aspen.syntax import Program, ProgramBuilder, parse_program

from strategies import normal_programs

CP2 = canonical_program(["a", "b"])
CP3 = canonical_program(["a", "b", "c"])

ALGORITHMS = (stable_models_a, stable_models_r, stable_models_h)


def ids(program, *names):
    return frozenset(program.atom_id(name) for name in names)


def names_family(program, family):
    return {frozenset(program.atom_name(a) for a in model) for model in family}


def test_atom_split_on_choice_triple():
    family, stats = stable_models_a(CP3)
    assert names_family(CP3, family) == {frozenset({n}) for n in "abc"}
    assert stats.recursive_calls >= 1
    assert stats.max_depth >= 1


def test_atom_split_on_blocked_program():
    family, _ = stable_models_a(parse_program("a :- not a."))
    assert len(family) == 0


def test_atom_split_on_two_block_generator():
    family, _ = stable_models_a(gen_named("B", 0))
    assert len(family) == 2


def test_rule_split_on_choice_triple():
    family, _ = stable_models_r(CP3)
    assert len(family) == 3


def test_rule_split_with_positive_chain():
    program = parse_program("a :- not b.\nb :- not a.\nc :- a.")
    family, _ = stable_models_r(program)
    assert names_family(program, family) == {frozenset({"a", "c"}), frozenset({"b"})}


def test_rule_split_on_empty_program():
    family, _ = stable_models_r(Program())
    assert family.models == (frozenset(),)


def test_rule_split_survives_self_blocking_rules():
    family, _ = stable_models_r(parse_program("a :- not a."))
    assert len(family) == 0
    program = parse_program("a :- not a.\nb :- not c.")
    family, _ = stable_models_r(program)
    assert len(family) == 0  # the self-blocking rule forces a, contradiction


def test_hybrid_on_independent_blocks():
    family, _ = stable_models_h(gen_named("A", 2))
    assert len(family) == 9
    family, _ = stable_models_h(parse_program("a :- not a."))
    assert len(family) == 0
    family, _ = stable_models_h(gen_named("P", 2))
    assert len(family) == 4


def test_solvers_reject_disjunctive_programs():
    choice = parse_program("a | b.")
    for solve in ALGORITHMS:
        with pytest.raises(ValueError):
            solve(choice)
    with pytest.raises(ValueError):
        solve_query(choice, QueryMode("exists"))


# --- queries -------------------------------------------------------------------


def test_brave_and_cautious_on_choice_pair():
    assert solve_query(CP2, QueryMode("brave", "a")).truth is True
    assert solve_query(CP2, QueryMode("cautious", "a")).truth is False


def test_exists_on_blocked_program():
    answer = solve_query(parse_program("a :- not a."), QueryMode("exists"))
    assert answer.truth is False


def test_cautious_on_a_fact():
    answer = solve_query(parse_program("a."), QueryMode("cautious", "a"))
    assert answer.truth is True
    assert answer.vacuous is False


def test_cautious_is_vacuous_without_models():
    answer = solve_query(parse_program("a :- not a."), QueryMode("cautious", "a"))
    assert answer.truth is True
    assert answer.vacuous is True


def test_brave_on_unknown_atom_is_false():
    assert solve_query(CP2, QueryMode("brave", "zz")).truth is False


def test_first_returns_a_genuine_model():
    answer = solve_query(CP2, QueryMode("first"))
    assert answer.model is not None
    assert is_stable(CP2, answer.model)
    empty = solve_query(parse_program("a :- not a."), QueryMode("first"))
    assert empty.model is None and empty.truth is False


def test_all_mode_matches_enumerators():
    answer = solve_query(CP3, QueryMode("all"))
    assert answer.models is not None
    assert answer.models.as_set() == stable_models_a(CP3)[0].as_set()


def test_early_stop_does_less_work_than_full_enumeration():
    program = gen_named("A", 4)
    _, full = stable_models_a(program)
    partial = solve_query(program, QueryMode("exists")).stats
    assert partial is not None
    assert partial.recursive_calls < full.recursive_calls


def test_query_mode_validation():
    with pytest.raises(ValueError):
        QueryMode("everything")
    with pytest.raises(ValueError):
        QueryMode("brave")
    with pytest.raises(ValueError):
        solve_query(CP2, QueryMode("exists"), algorithm="x")


# --- heuristics -----------------------------------------------------------------


def test_atom_selector_breaks_ties_by_lowest_id():
    assert select_atom_default(CP2) == CP2.atom_id("a")


def test_atom_selector_prefers_most_constraining_atom():
    program = parse_program("a :- not b.\nb :- not a.\nc :- not a.\nd :- not a.")
    assert select_atom_default(program) == program.atom_id("a")


def test_atom_selector_on_single_rule():
    program = parse_program("a :- not b.")
    costs = {
        name: solver_module._split_cost(program, program.atom_id(name))
        for name in ("a", "b")
    }
    best = min(sorted(costs), key=lambda name: (costs[name], program.atom_id(name)))
    assert select_atom_default(program) == program.atom_id(best)


def test_unknown_selector_name_fails():
    with pytest.raises(KeyError):
        stable_models_a(CP2, heuristics=Heuristics(atom_selector="magic"))


# --- instrumentation and limits ---------------------------------------------------


def _self_blocking(n):
    builder = ProgramBuilder()
    for i in range(n):
        builder.rule([f"x{i}"], neg=[f"x{i}"])
    return builder.build()


def test_default_depth_cap_turns_runaway_recursion_into_an_error():
    # every atom split leaves the other 69 self-blocking rules in both
    # branches, so full enumeration would be hopeless; the cap cuts it short
    with pytest.raises(SearchDepthExceeded):
        stable_models_a(_self_blocking(70))


def test_depth_cap_is_configurable():
    program = _self_blocking(10)
    with pytest.raises(SearchDepthExceeded):
        stable_models_a(program, depth_cap=5)
    family, stats = stable_models_a(program)
    assert len(family) == 0
    assert stats.max_depth == 11


def test_stats_are_deterministic():
    program = parse_program("a :- not b.\nb :- not a.\nc :- a, not d.\nd :- not c.")
    first = stable_models_a(program)
    second = stable_models_a(program)
    assert first[0].models == second[0].models
    assert vars(first[1]) == vars(second[1])


def test_stats_text_block():
    _, stats = stable_models_a(CP2)
    lines = stats.as_text().splitlines()
    assert lines[0].startswith("recursive_calls=")
    assert all("=" in line for line in lines)
    assert len(lines) == 4


def test_failed_candidates_are_genuinely_unstable(monkeypatch):
    rejected = []
    real_is_stable = solver_module.is_stable

    def tracing_is_stable(program, candidate):
        verdict = real_is_stable(program, candidate)
        if not verdict:
            rejected.append((program, candidate))
        return verdict

    monkeypatch.setattr(solver_module, "is_stable", tracing_is_stable)
    program = parse_program(
        "a :- not b.\nb :- not a.\nc :- a, not d.\nd :- not c.\ne :- b, not e."
    )
    for solve in ALGORITHMS:
        rejected.clear()
        family, _ = solve(program)
        assert family.as_set() == brute_force_stable(program).as_set()
        for residual, candidate in rejected:
            assert candidate not in brute_force_stable(residual).as_set()


# --- oracle agreement --------------------------------------------------------------


@given(normal_programs())
@settings(max_examples=60)
def test_all_algorithms_and_strategies_match_the_oracle(program):
    oracle = brute_force_stable(program).as_set()
    for solve in ALGORITHMS:
        for strategy in ("wfs", "trivial"):
            family, stats = solve(program, strategy=strategy)
            assert family.as_set() == oracle
            assert family.is_antichain()
            if program.rules:
                assert stats.recursive_calls >= 1


@given(normal_programs())
@settings(max_examples=40)
def test_hybrid_with_rule_leaning_mode_selector_matches_oracle(program):
    heuristics = Heuristics(mode_selector="small-rule")
    family, _ = stable_models_h(program, heuristics=heuristics)
    assert family.as_set() == brute_force_stable(program).as_set()


@given(normal_programs())
@settings(max_examples=40)
def test_models_stay_within_heads(program):
    family, _ = stable_models_a(program)
    heads = program.head_atoms()
    assert all(model <= heads for model in family)
