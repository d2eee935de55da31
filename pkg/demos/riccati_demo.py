#!/usr/bin/env python3
"""The singular Riccati equation x w' - beta w + beta w^2 + alpha x = 0.

For non-integer beta the solution near 0 is a double series in x and
x^beta with one free parameter c_{0,1}.  Rectangular bivariate
approximants plus the boundary condition w(1) = 0 estimate c_{0,1}; the
exact value comes from the closed-form Bessel-function solution.
"""
from fractions import Fraction

import mpmath as mp

from bipade import (
    RiccatiProblem,
    estimate_c01,
    evaluate_bessel_solution,
    exact_c01,
    generate_series,
)
from bipade.riccati import exact_c01_mp, rational_form_coeffs


def main():
    prob = RiccatiProblem(Fraction(1), Fraction(1, 2))
    print("alpha = 1, beta = 1/2")

    s = generate_series(prob, Fraction(1), 4, 2)
    print("\nfirst series coefficients (at unit free parameter):")
    for n in range(3):
        for m in range(3):
            if (n, m) != (0, 0):
                print(f"  c[{n}][{m}] = {s.coeff(n, m)}")

    exact = exact_c01(prob)
    print(f"\nexact free parameter c_01 = {exact:.15f}")
    print("  (for these constants it reduces to sqrt(2) tan(sqrt(2)))")

    print("\nestimates from the boundary condition w(1) = 0:")
    ref = exact_c01_mp(prob, 60)
    with mp.workdps(60):
        for n in range(1, 9):
            est = estimate_c01(prob, n, "right", "refined")
            v = mp.mpf(est.value.numerator) / est.value.denominator
            print(f"  n={n}: error vs exact = {mp.nstr(abs(v - ref), 3)}")

    print("\nexact solution at a few points (w(1) = 0 by construction):")
    for x in (0.25, 0.5, 1.0):
        print(f"  w({x}) = {evaluate_bessel_solution(prob, x):+.12f}")

    coeffs = rational_form_coeffs(prob, 6)
    b = float(prob.beta)
    x = 0.3
    num = sum(c * x**m for m, c in enumerate(coeffs.a_m0)) + x**b * sum(
        c * x**m for m, c in enumerate(coeffs.a_m1)
    )
    den = sum(c * x**m for m, c in enumerate(coeffs.b_m0)) + x**b * sum(
        c * x**m for m, c in enumerate(coeffs.b_m1)
    )
    print(
        "\nclosed-form rational representation at x = 0.3: "
        f"{num / den:+.12f} (Bessel: {evaluate_bessel_solution(prob, x):+.12f})"
    )


if __name__ == "__main__":
    main()
