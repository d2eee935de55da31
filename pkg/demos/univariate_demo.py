#!/usr/bin/env python3
"""Diagonal [n/n] approximants by three-term recursion.

Builds the approximants of exp(x) - 1 in exact rationals, shows the
recursion parameters, the order of contact, and agreement with the
linear-solve oracle.
"""
from fractions import Fraction
from math import exp, factorial

from bipade import Poly, jacobi_pade, oracle_pade
from bipade.algebra import poly_eval, poly_mul_truncated, poly_sub
from bipade.univariate import jacobi_init, jacobi_step


def main():
    # Series of f(x) = exp(x) - 1 (zero constant term, as required).
    c = [Fraction(0)] + [Fraction(1, factorial(k)) for k in range(1, 13)]

    print("recursion parameters alpha_n, beta_n:")
    trace = jacobi_init(c)
    for n in range(1, 6):
        jacobi_step(trace)
        print(f"  n={n}: alpha={trace.alpha[n]}  beta={trace.beta[n]}")

    print("\n[n/n] approximants and their order of contact:")
    for n in range(1, 6):
        pade = jacobi_pade(c[: 2 * n + 1], n)
        defect = poly_sub(
            pade.A, poly_mul_truncated(pade.B, Poly(c[: 2 * n + 1]), 3 * n)
        )
        contact = next(
            (i for i in range(3 * n + 1) if defect.coeff(i) != 0), 3 * n + 1
        )
        approx = float(poly_eval(pade.A, Fraction(1)) / poly_eval(pade.B, Fraction(1)))
        print(
            f"  n={n}: first defect power x^{contact} (expected > {2 * n}),"
            f"  value at 1: {approx:.12f} vs {exp(1) - 1:.12f}"
        )

    print("\nrecursion vs. linear-solve oracle at n = 5:")
    rec = jacobi_pade(c[:11], 5)
    orc = oracle_pade(c[:11], 5)
    print(f"  identical: {rec.A == orc.A and rec.B == orc.B and rec.e == orc.e}")


if __name__ == "__main__":
    main()
