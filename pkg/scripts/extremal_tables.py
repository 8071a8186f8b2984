#!/usr/bin/env python3
"""Print the clause-count maxima table and the block-signature table.

Both tables pair the closed-form count with the brute-force count of the
generated witness program, so a discrepancy is immediately visible.
"""

from aspen.extremal import Signature, extremal_program, program_234, s0
from aspen.semantics import brute_force_stable


def clause_table(max_n: int = 12) -> None:
    print(f"{'n':>3} {'s0(n)':>6} {'attained':>9}")
    for n in range(2, max_n + 1):
        attained = len(brute_force_stable(extremal_program(n)))
        print(f"{n:>3} {s0(n):>6} {attained:>9}")


def signature_table(max_weight: int = 12) -> None:
    print(f"\n{'signature':>12} {'clauses':>8} {'predicted':>10} {'counted':>8}")
    for lambda2 in range(0, max_weight // 2 + 1):
        for lambda3 in range(0, max_weight // 3 + 1):
            for lambda4 in range(0, max_weight // 4 + 1):
                signature = Signature(lambda2, lambda3, lambda4)
                if not 0 < signature.clause_count <= max_weight:
                    continue
                program = program_234(signature)
                counted = len(brute_force_stable(program))
                label = f"<{lambda2},{lambda3},{lambda4}>"
                print(
                    f"{label:>12} {program.clause_count:>8}"
                    f" {signature.model_count:>10} {counted:>8}"
                )


if __name__ == "__main__":
    clause_table()
    signature_table()
