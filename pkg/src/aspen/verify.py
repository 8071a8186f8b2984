"""Named verification suites behind the CLI ``verify`` command.

Each suite returns a list of check results; the CLI prints one line per
check and fails the run if any check fails. Random checks derive one
``random.Random`` per iteration from the suite name, the base seed and the
iteration index, so any failure replays exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .extremal import Signature, extremal_program, gen_D, gen_named, program_234, s0, shift
from .families import (
    encoding_size_report,
    encode_antichain,
    make_witness_random,
    models_as_family,
    witness_greatest,
    witness_least,
)
from .randgen import (
    random_antichain,
    random_disjunctive_program,
    random_normal_program,
    random_short_body_program,
    random_sized_program,
    random_split_sets,
)
from .semantics import brute_force_answer_sets, brute_force_stable
from .solver import stable_models_a, stable_models_h, stable_models_r
from .syntax import parse_program, print_program
from .transform import simp
from .wfs import well_founded

DEFAULT_ATOM_CAP = 20


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _rngs(suite: str, seed: int, count: int) -> Iterator[tuple[int, random.Random]]:
    for i in range(count):
        yield i, random.Random(f"{suite}:{seed}:{i}")


def extremal_table_checks(atom_cap: int = DEFAULT_ATOM_CAP) -> list[CheckResult]:
    """The generated witness program attains s0(n) for n = 2..12."""
    results = []
    for n in range(2, 13):
        expected = s0(n)
        attained = len(brute_force_stable(extremal_program(n), cap=atom_cap))
        results.append(
            CheckResult(
                f"clauses-{n}",
                attained == expected,
                f"s0({n})={expected} attained={attained}",
            )
        )
    return results


def disjunctive_max_check(atom_cap: int = DEFAULT_ATOM_CAP) -> CheckResult:
    """D(n, m) has exactly m**n answer sets for every n*m <= 9."""
    bad = []
    for n in range(1, 10):
        for m in range(1, 10):
            if n * m > 9:
                continue
            count = len(brute_force_answer_sets(gen_D(n, m), cap=atom_cap))
            if count != m**n:
                bad.append(f"D({n},{m})={count}")
    return CheckResult(
        "disjunctive-max",
        not bad,
        "m^n met for all n*m <= 9" if not bad else ", ".join(bad),
    )


def ceiling_checks(
    seeds: int = 500, seed: int = 0, atom_cap: int = DEFAULT_ATOM_CAP
) -> list[CheckResult]:
    """Random programs never beat the closed-form maxima of their classes."""
    results = []
    failures = 0
    for _, rng in _rngs("ceiling-clauses", seed, seeds):
        n_rules = rng.randint(2, 8)
        program = random_normal_program(rng, rng.randint(1, 8), n_rules)
        if len(brute_force_stable(program, cap=atom_cap)) > s0(n_rules):
            failures += 1
    results.append(
        CheckResult("ceiling-clauses", failures == 0, f"{seeds} programs, {failures} violations")
    )

    failures = 0
    for _, rng in _rngs("ceiling-short-bodies", seed, seeds):
        n_rules = rng.randint(2, 10)
        program = random_short_body_program(rng, rng.randint(1, 8), n_rules)
        if len(brute_force_stable(program, cap=atom_cap)) > 2 ** (n_rules // 2):
            failures += 1
    results.append(
        CheckResult(
            "ceiling-short-bodies", failures == 0, f"{seeds} programs, {failures} violations"
        )
    )

    failures = 0
    for _, rng in _rngs("ceiling-size", seed, seeds):
        program = random_sized_program(rng, rng.randint(1, 8), max_size=16)
        count = len(brute_force_stable(program, cap=atom_cap))
        if count**4 > 2**program.size:  # count <= 2**(size/4), kept in integers
            failures += 1
    results.append(
        CheckResult("ceiling-size", failures == 0, f"{seeds} programs, {failures} violations")
    )

    failures = 0
    for _, rng in _rngs("ceiling-disjunctive", seed, seeds):
        n_rules = rng.randint(1, 5)
        max_len = rng.randint(1, 4)
        program = random_disjunctive_program(rng, rng.randint(1, 6), n_rules, max_len)
        if len(brute_force_answer_sets(program, cap=atom_cap)) > max_len**n_rules:
            failures += 1
    results.append(
        CheckResult(
            "ceiling-disjunctive", failures == 0, f"{seeds} programs, {failures} violations"
        )
    )
    return results


def search_calls_check() -> CheckResult:
    """The atom-splitting solver stays within 4 * 3**(n/3) calls on A(1..6)."""
    worst = 0.0
    ok = True
    for k in range(1, 7):
        _, stats = stable_models_a(gen_named("A", k))
        worst = max(worst, stats.recursive_calls / 3**k)
        if stats.recursive_calls > 4 * 3**k:
            ok = False
    return CheckResult("search-calls", ok, f"max calls/3^(n/3) = {worst:.2f} on A(1..6)")


def suite_bounds(
    seeds: int = 500, seed: int = 0, atom_cap: int = DEFAULT_ATOM_CAP
) -> list[CheckResult]:
    """Exact maxima are attained by the generators and never beaten by
    random programs from the matching classes."""
    return [
        *extremal_table_checks(atom_cap),
        disjunctive_max_check(atom_cap),
        *ceiling_checks(seeds, seed, atom_cap),
        search_calls_check(),
    ]


def suite_counting(
    seeds: int = 500, seed: int = 0, atom_cap: int = DEFAULT_ATOM_CAP
) -> list[CheckResult]:
    """Clause and model counts of every block signature of weight <= 12."""
    results = []
    for lambda2 in range(0, 7):
        for lambda3 in range(0, 5):
            for lambda4 in range(0, 4):
                signature = Signature(lambda2, lambda3, lambda4)
                weight = signature.clause_count
                if weight == 0 or weight > 12:
                    continue
                program = program_234(signature)
                count = len(brute_force_stable(program, cap=atom_cap))
                ok = count == signature.model_count and program.clause_count == weight
                results.append(
                    CheckResult(
                        f"sig-{lambda2},{lambda3},{lambda4}",
                        ok,
                        f"clauses={program.clause_count} models={count}"
                        f" expected={signature.model_count}",
                    )
                )
    return results


def suite_lemma1(
    seeds: int = 500, seed: int = 0, atom_cap: int = DEFAULT_ATOM_CAP
) -> list[CheckResult]:
    """Stable models that respect a forced split survive, shifted, in the
    simplified program."""
    failures = 0
    for _, rng in _rngs("lemma1", seed, seeds):
        program = random_normal_program(rng, rng.randint(1, 8), rng.randint(0, 10))
        forced_true, forced_false = random_split_sets(rng, program)
        reduced_family = brute_force_stable(
            simp(program, forced_true, forced_false), cap=atom_cap
        ).as_set()
        for model in brute_force_stable(program, cap=atom_cap):
            if forced_true <= model and not model & forced_false:
                if model - forced_true not in reduced_family:
                    failures += 1
    return [
        CheckResult("split-survival", failures == 0, f"{seeds} triples, {failures} violations")
    ]


def suite_wfs(
    seeds: int = 500, seed: int = 0, atom_cap: int = DEFAULT_ATOM_CAP
) -> list[CheckResult]:
    """At the well-founded split the survival map is exact in both
    directions, and the split brackets every stable model."""
    reconstruction_failures = 0
    bracket_failures = 0
    for _, rng in _rngs("wfs", seed, seeds):
        program = random_normal_program(rng, rng.randint(1, 8), rng.randint(0, 10))
        split = well_founded(program)
        family = brute_force_stable(program, cap=atom_cap).as_set()
        for model in family:
            if not split.true_set <= model or model & split.false_set:
                bracket_failures += 1
        reduced = brute_force_stable(
            simp(program, split.true_set, split.false_set), cap=atom_cap
        )
        rebuilt = frozenset(model | split.true_set for model in reduced)
        if rebuilt != family:
            reconstruction_failures += 1
    return [
        CheckResult(
            "wfs-brackets-models",
            bracket_failures == 0,
            f"{seeds} programs, {bracket_failures} violations",
        ),
        CheckResult(
            "wfs-exact-reconstruction",
            reconstruction_failures == 0,
            f"{seeds} programs, {reconstruction_failures} violations",
        ),
    ]


def suite_agreement(
    seeds: int = 500, seed: int = 0, atom_cap: int = DEFAULT_ATOM_CAP
) -> list[CheckResult]:
    """All three solvers, under both preprocessing strategies, reproduce the
    brute-force family exactly."""
    solvers = (("a", stable_models_a), ("r", stable_models_r), ("h", stable_models_h))
    failures = {f"{name}/{strategy}": 0 for name, _ in solvers for strategy in ("wfs", "trivial")}
    for _, rng in _rngs("agreement", seed, seeds):
        program = random_normal_program(rng, rng.randint(1, 10), rng.randint(0, 12))
        oracle = brute_force_stable(program, cap=atom_cap).as_set()
        for name, solve in solvers:
            for strategy in ("wfs", "trivial"):
                family, _ = solve(program, strategy=strategy)
                if family.as_set() != oracle:
                    failures[f"{name}/{strategy}"] += 1
    return [
        CheckResult(
            f"oracle-agreement-{key}", count == 0, f"{seeds} programs, {count} violations"
        )
        for key, count in failures.items()
    ]


def suite_shift(
    seeds: int = 300, seed: int = 0, atom_cap: int = DEFAULT_ATOM_CAP
) -> list[CheckResult]:
    """Moving negations into heads never loses an answer set."""
    failures = 0
    for _, rng in _rngs("shift", seed, seeds):
        program = random_disjunctive_program(rng, rng.randint(1, 6), rng.randint(0, 5), 4)
        before = brute_force_answer_sets(program, cap=atom_cap).as_set()
        after = brute_force_answer_sets(shift(program), cap=atom_cap).as_set()
        if not before <= after:
            failures += 1
    return [
        CheckResult("shift-inclusion", failures == 0, f"{seeds} programs, {failures} violations")
    ]


def suite_roundtrip(
    seeds: int = 200, seed: int = 0, atom_cap: int = DEFAULT_ATOM_CAP
) -> list[CheckResult]:
    """Antichain -> program -> stable models is the identity, within the
    advertised size ceilings, for every witness policy; program text
    survives a parse/print cycle."""
    family_failures = 0
    bound_failures = 0
    policy_failures = 0
    text_failures = 0
    for i, rng in _rngs("roundtrip", seed, seeds):
        family = random_antichain(rng, rng.randint(1, 6), max_sets=5)
        program = encode_antichain(family)
        if models_as_family(program, brute_force_stable(program, cap=atom_cap)) != family:
            family_failures += 1
        report = encoding_size_report(family)
        if report.clause_count > report.clause_bound or report.size > report.size_bound:
            bound_failures += 1
        for policy in (witness_greatest, make_witness_random(i)):
            alternate = encode_antichain(family, policy)
            if (
                models_as_family(alternate, brute_force_stable(alternate, cap=atom_cap))
                != family
            ):
                policy_failures += 1
        text = print_program(program)
        if print_program(parse_program(text)) != text:
            text_failures += 1
    return [
        CheckResult(
            "family-roundtrip", family_failures == 0, f"{seeds} antichains, {family_failures} violations"
        ),
        CheckResult(
            "size-ceilings", bound_failures == 0, f"{seeds} antichains, {bound_failures} violations"
        ),
        CheckResult(
            "policy-independence",
            policy_failures == 0,
            f"{seeds} antichains, {policy_failures} violations",
        ),
        CheckResult(
            "text-roundtrip", text_failures == 0, f"{seeds} programs, {text_failures} violations"
        ),
    ]


SUITES = {
    "bounds": suite_bounds,
    "counting": suite_counting,
    "lemma1": suite_lemma1,
    "wfs": suite_wfs,
    "agreement": suite_agreement,
    "shift": suite_shift,
    "roundtrip": suite_roundtrip,
}


def run_suite(
    name: str, seeds: int | None = None, seed: int = 0, atom_cap: int = DEFAULT_ATOM_CAP
) -> list[CheckResult]:
    if name not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise ValueError(f"unknown suite {name!r}; choose one of: {known}")
    suite = SUITES[name]
    if seeds is None:
        return suite(seed=seed, atom_cap=atom_cap)
    return suite(seeds=seeds, seed=seed, atom_cap=atom_cap)
