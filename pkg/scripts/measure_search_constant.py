#!/usr/bin/env python3
"""Measure how the atom-splitting solver's call count scales on A(k).

A(k) is the hardest well-behaved input: its well-founded split is empty, so
every one of its 3**k stable models has to be found by branching. The table
reports recursive calls against 3**(n/3) for n = 3k clauses.

Usage: measure_search_constant.py [MAX_K]
"""

import sys

from aspen.extremal import gen_named
from aspen.solver import stable_models_a


def main() -> None:
    max_k = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    print(f"{'k':>3} {'clauses':>8} {'models':>8} {'calls':>8} {'3^k':>8} {'ratio':>7}")
    for k in range(1, max_k + 1):
        program = gen_named("A", k)
        models, stats = stable_models_a(program)
        ceiling = 3**k
        ratio = stats.recursive_calls / ceiling
        print(
            f"{k:>3} {program.clause_count:>8} {len(models):>8}"
            f" {stats.recursive_calls:>8} {ceiling:>8} {ratio:>7.3f}"
        )


if __name__ == "__main__":
    main()
