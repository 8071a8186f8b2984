import pytest
from hypothesis import given, settings

from aspen.families import (
    encode_antichain,
    encoding_size_report,
    format_family,
    is_antichain,
    make_witness_random,
    models_as_family,
    parse_family,
    witness_greatest,
    witness_least,
)
from aspen.semantics import brute_force_stable
from aspen.syntax import ParseError, parse_program, print_program

from strategies import antichains


def family(*sets):
    return frozenset(frozenset(s) for s in sets)


def stable_family(program):
    return models_as_family(program, brute_force_stable(program))


def test_antichain_recognition():
    assert is_antichain(family({"a"}, {"b"}))
    assert not is_antichain(family({"a"}, {"a", "b"}))
    assert is_antichain(family({"a", "b"}, {"a", "c"}, {"b", "c"}))
    assert is_antichain(family())
    assert not is_antichain(family(set(), {"a"}))


def test_encode_singleton_family():
    target = family({"a", "b"})
    program = encode_antichain(target)
    assert print_program(program) == "a.\nb."
    assert stable_family(program) == target


def test_encode_two_singletons_gives_choice_pair():
    target = family({"a"}, {"b"})
    program = encode_antichain(target)
    assert print_program(program) == "a :- not b.\nb :- not a."
    assert stable_family(program) == target


def test_encode_two_element_cover():
    target = family({"a", "b"}, {"a", "c"}, {"b", "c"})
    program = encode_antichain(target)
    assert program.clause_count == 6
    assert stable_family(program) == target


def test_encode_empty_family_has_no_stable_models():
    program = encode_antichain(family())
    assert program.clause_count == 1
    assert len(brute_force_stable(program)) == 0


def test_encode_family_of_the_empty_set():
    program = encode_antichain(family(set()))
    assert program.clause_count == 0
    assert stable_family(program) == family(set())


def test_encode_rejects_non_antichains():
    with pytest.raises(ValueError):
        encode_antichain(family({"a"}, {"a", "b"}))
    with pytest.raises(ValueError):
        encode_antichain(family(set(), {"a"}))


def test_encode_rejects_broken_witness_policy():
    with pytest.raises(ValueError):
        encode_antichain(family({"a"}, {"b"}), policy=lambda current, other: "a")


def test_size_report_examples():
    report = encoding_size_report(family({"a"}, {"b"}))
    assert (report.clause_count, report.size) == (2, 4)
    assert (report.clause_bound, report.size_bound) == (2, 4)

    report = encoding_size_report(family({"a", "b"}))
    assert (report.clause_count, report.size) == (2, 2)
    assert (report.clause_bound, report.size_bound) == (2, 2)

    report = encoding_size_report(family({"a", "b"}, {"a", "c"}, {"b", "c"}))
    assert report.clause_count == 6 <= report.clause_bound
    assert report.size <= report.size_bound == 18


def test_every_policy_encodes_the_same_family():
    target = family({"a", "b"}, {"a", "c"}, {"b", "c"})
    for policy in (witness_least, witness_greatest, make_witness_random(7)):
        assert stable_family(encode_antichain(target, policy)) == target


@given(antichains())
@settings(max_examples=100)
def test_roundtrip_on_random_antichains(target):
    program = encode_antichain(target)
    assert stable_family(program) == target
    report = encoding_size_report(target)
    assert report.clause_count <= report.clause_bound
    assert report.size <= report.size_bound


@given(antichains(max_atoms=4, max_sets=4))
@settings(max_examples=40)
def test_roundtrip_is_policy_independent(target):
    for policy in (witness_greatest, make_witness_random(3)):
        assert stable_family(encode_antichain(target, policy)) == target


def test_family_text_roundtrip():
    text = "{a, b}\n{c}"
    parsed = parse_family(text)
    assert parsed == family({"a", "b"}, {"c"})
    assert format_family(parsed) == text
    assert parse_family("") == family()
    assert parse_family("{}") == family(set())
    assert parse_family("% note\n\n{a}\n{a}") == family({"a"})


def test_family_text_errors():
    with pytest.raises(ParseError):
        parse_family("a, b")
    with pytest.raises(ParseError) as info:
        parse_family("{a}\n{B}")
    assert info.value.line == 2


def test_solver_output_is_valid_family_input():
    program = encode_antichain(family({"a"}, {"b"}))
    lines = "\n".join(
        sorted(
            "{" + ", ".join(sorted(program.atom_name(i) for i in model)) + "}"
            for model in brute_force_stable(program)
        )
    )
    assert parse_family(lines) == family({"a"}, {"b"})


def test_encoding_parses_back(tmp_path):
    target = family({"a", "b"}, {"c"})
    program = encode_antichain(target)
    assert parse_program(print_program(program)) == program
