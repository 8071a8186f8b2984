"""End-to-end acceptance checks, one test and one printed line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL lines
and timings as they happen; without ``-s`` pytest shows them on failure.
"""

import time

from aspen.extremal import Signature, extremal_program, gen_D, gen_named, program_234
from aspen.semantics import brute_force_answer_sets, brute_force_stable
from aspen.solver import stable_models_a
from aspen.verify import (
    ceiling_checks,
    suite_agreement,
    suite_lemma1,
    suite_roundtrip,
    suite_shift,
    suite_wfs,
)

S0_TABLE = {
    2: 2, 3: 3, 4: 4, 5: 6, 6: 9, 7: 12, 8: 18, 9: 27, 10: 36, 11: 54, 12: 81,
}


def report(name, ok, detail=""):
    suffix = f" ({detail})" if detail else ""
    print(f"{'PASS' if ok else 'FAIL'} {name}{suffix}")
    assert ok, f"{name}: {detail}"


def timed(limit_s):
    start = time.perf_counter()

    def done():
        elapsed = time.perf_counter() - start
        return elapsed, elapsed < limit_s

    return done


def test_criterion_1_clause_maximum_table():
    done = timed(10.0)
    attained = {
        n: len(brute_force_stable(extremal_program(n))) for n in S0_TABLE
    }
    elapsed, in_time = done()
    report(
        "criterion-1 clause-maximum-table",
        attained == S0_TABLE and in_time,
        f"n=2..12 counts {sorted(attained.values())}, {elapsed:.2f}s",
    )


def test_criterion_2_signature_counting():
    done = timed(30.0)
    checked = 0
    bad = []
    for lambda2 in range(0, 7):
        for lambda3 in range(0, 5):
            for lambda4 in range(0, 4):
                signature = Signature(lambda2, lambda3, lambda4)
                if not 0 < signature.clause_count <= 12:
                    continue
                checked += 1
                program = program_234(signature)
                count = len(brute_force_stable(program))
                if count != signature.model_count or program.clause_count != signature.clause_count:
                    bad.append(signature)
    elapsed, in_time = done()
    report(
        "criterion-2 signature-counting",
        not bad and in_time,
        f"{checked} signatures, {elapsed:.2f}s",
    )


def test_criterion_3_disjunctive_maximum():
    done = timed(30.0)
    counts = {}
    for n in range(1, 10):
        for m in range(1, 10):
            if n * m <= 9:
                counts[(n, m)] = len(brute_force_answer_sets(gen_D(n, m)))
    ok = all(count == m**n for (n, m), count in counts.items())
    elapsed, in_time = done()
    report(
        "criterion-3 disjunctive-maximum",
        ok and counts[(2, 3)] == 9 and counts[(3, 2)] == 8 and in_time,
        f"{len(counts)} programs, {elapsed:.2f}s",
    )


def test_criterion_4_random_ceilings():
    done = timed(120.0)
    results = ceiling_checks(seeds=500)
    elapsed, in_time = done()
    report(
        "criterion-4 random-ceilings",
        all(r.passed for r in results) and in_time,
        f"4 classes x 500 programs, {elapsed:.2f}s",
    )


def test_criterion_5_split_survival():
    results = suite_lemma1(seeds=500)
    report("criterion-5 split-survival", all(r.passed for r in results), results[0].detail)


def test_criterion_6_wfs_exactness():
    results = suite_wfs(seeds=500)
    report(
        "criterion-6 wfs-exactness",
        all(r.passed for r in results),
        "; ".join(r.detail for r in results),
    )


def test_criterion_7_algorithm_oracle_agreement():
    done = timed(300.0)
    results = suite_agreement(seeds=500)
    elapsed, in_time = done()
    report(
        "criterion-7 algorithm-oracle-agreement",
        all(r.passed for r in results) and in_time,
        f"500 programs x 3 algorithms x 2 strategies, {elapsed:.2f}s",
    )


def test_criterion_8_search_call_ceiling():
    worst = 0.0
    ok = True
    for k in range(1, 7):
        _, stats = stable_models_a(gen_named("A", k))
        worst = max(worst, stats.recursive_calls / 3**k)
        if stats.recursive_calls > 4 * 3**k:
            ok = False
    report(
        "criterion-8 search-call-ceiling",
        ok,
        f"measured constant {worst:.3f} <= 4 on A(1..6)",
    )


def test_criterion_9_representability_roundtrip():
    results = suite_roundtrip(seeds=200)
    by_name = {r.name: r for r in results}
    report(
        "criterion-9 representability-roundtrip",
        by_name["family-roundtrip"].passed and by_name["size-ceilings"].passed,
        f"200 antichains; {by_name['family-roundtrip'].detail}",
    )


def test_criterion_10_shift_inclusion():
    results = suite_shift(seeds=300)
    report("criterion-10 shift-inclusion", all(r.passed for r in results), results[0].detail)
