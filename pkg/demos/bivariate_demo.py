#!/usr/bin/env python3
"""Left and right rectangular bivariate approximants.

Builds a left-(3, 2) approximant of a random exact-rational series, checks
the defining defect property at every y-level, compares against the
per-level linear-solve oracle, and shows the right variant as the left one
of the transposed series.
"""
import random
from fractions import Fraction

from bipade import BivSeries, left_pade, oracle_left_pade, right_pade
from bipade.algebra import poly_mul_truncated, poly_sub
from bipade.bivariate import compute_seeds
from bipade.errors import DegenerateTableError
from bipade.series import required_orders


def random_series(rng, n, m):
    N, M = required_orders(n, m)
    while True:
        table = [
            [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(M + 1)]
            for _ in range(N + 1)
        ]
        table[0][0] = Fraction(0)
        if table[1][0] != 0 and table[0][1] != 0:
            return BivSeries(table)


def main():
    rng = random.Random(42)
    n, m = 3, 2
    while True:
        s = random_series(rng, n, m)
        try:
            pade = left_pade(s, n, m)
            break
        except DegenerateTableError:
            continue

    print(f"left-({n}, {m}) approximant levels (x-polynomial per y-power):")
    for p in range(m + 1):
        print(f"  A[{p}] = {pade.A[p].coeffs}")
        print(f"  B[{p}] = {pade.B[p].coeffs}")

    print("\nseed conditions (constant-in-x coefficients from the y-axis table):")
    seeds = compute_seeds(s, m)
    for p in range(m + 1):
        print(
            f"  level {p}: b0 = {pade.B[p].coeff(0)} (expected {seeds.b0[p]}),"
            f" a0 = {pade.A[p].coeff(0)} (expected {seeds.a0[p]})"
        )

    print("\ndefect property: A_p - sum B_s C_(p-s) = O(x^(2n+1)) at every level:")
    for p in range(m + 1):
        acc = pade.A[p]
        for q in range(p + 1):
            acc = poly_sub(
                acc, poly_mul_truncated(pade.B[q], s.slice_x(2 * n, p - q), 2 * n)
            )
        print(f"  level {p}: first 2n+1 coefficients all zero: {acc.is_zero()}")

    orc = oracle_left_pade(s, n, m)
    print(f"\nrecursion equals oracle: {pade.A == orc.A and pade.B == orc.B}")

    r = right_pade(s, n, m)
    inner = left_pade(s.transpose(), m, n)
    x, y = Fraction(1, 9), Fraction(1, 7)
    print(
        "right variant is the transposed left one: "
        f"{r.evaluate(x, y) == inner.evaluate(y, x)}"
    )


if __name__ == "__main__":
    main()
