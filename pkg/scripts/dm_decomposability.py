#!/usr/bin/env python3
"""Scan the parameterized degenerate families for decomposability.

Usage: python scripts/dm_decomposability.py [MAX_K]

For each k, DM6(k) (and its duals DM7, DM8) should decompose exactly when
k = 2 or k is not a prime power; the witnesses are the minimal normal
subgroups of the dihedral monodromy group, one per prime divisor of k.
"""

import sys

from flagmaps import (build_degenerate, decomposability_reflexible,
                      minimal_normal_subgroups)


def is_prime_power(k: int) -> bool:
    if k < 2:
        return False
    p = next(p for p in range(2, k + 1) if k % p == 0)
    while k % p == 0:
        k //= p
    return k == 1


def main() -> None:
    max_k = int(sys.argv[1]) if len(sys.argv) > 1 else 40
    mismatches = 0
    print(" k  |Mon|  minimal normals  decomposable  factors")
    for k in range(2, max_k + 1):
        m = build_degenerate(6, k)
        minimals = minimal_normal_subgroups(m.monodromy_group())
        verdict = decomposability_reflexible(m)
        expected = (k == 2) or not is_prime_power(k)
        flag = "" if verdict.decomposable == expected else "  <-- MISMATCH"
        factors = ""
        if verdict.factors:
            factors = " x ".join(f"{f.n_flags}-flag" for f in verdict.factors)
        print(f"{k:3d}  {2 * k:4d}  {len(minimals):15d}  "
              f"{str(verdict.decomposable):12s}  {factors}{flag}")
        mismatches += verdict.decomposable != expected
    print("\nall consistent with the prime-power criterion"
          if not mismatches else f"\n{mismatches} MISMATCHES")


if __name__ == "__main__":
    main()
