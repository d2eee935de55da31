"""Remainder decomposition: the defining identity, coefficient by coefficient.

For each level n and scalar pair (sigma_odd, sigma_even), the materialized
correction must satisfy

    sigma_odd x^(2n-1) + sigma_even x^(2n)
        = A_corr - B_corr * C_{2n} + sum_k tau_k x^(2n+k)

exactly, through degree 3n.
"""
import random
from fractions import Fraction

from bipade.algebra import Poly, poly_mul_truncated, poly_sub
from bipade.errors import DegenerateTableError
from bipade.remainder import (
    apply_remainder,
    next_components,
    remainder_components,
)
from bipade.univariate import jacobi_init, jacobi_step


def random_series(rng, length):
    while True:
        c = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(length)]
        c[0] = Fraction(0)
        if c[1] != 0:
            return c


def build_levels(c, n_max):
    trace = jacobi_init(c)
    levels = [trace.level(0)]
    for _ in range(n_max):
        levels.append(jacobi_step(trace))
    return levels


def check_identity(c, n, levels, sigma_odd, sigma_even):
    comp = remainder_components(n, c, levels[:n])
    uni_prev = levels[n - 1]
    uni_prev2 = levels[n - 2] if n >= 2 else None
    A_corr, B_corr, tau = apply_remainder(comp, sigma_odd, sigma_even, uni_prev, uni_prev2)
    assert A_corr.degree <= n and A_corr.coeff(0) == 0
    assert B_corr.degree <= n and B_corr.coeff(0) == 0
    trunc = Poly(c[: 2 * n + 1])
    lhs = poly_sub(A_corr, poly_mul_truncated(B_corr, trunc, 3 * n))
    target = {2 * n - 1: sigma_odd, 2 * n: sigma_even}
    for k in range(1, n + 1):
        target[2 * n + k] = target.get(2 * n + k, 0) - tau[k - 1]
    for i in range(3 * n + 1):
        assert lhs.coeff(i) == target.get(i, 0), (n, i)


def test_identity_random_sigma():
    rng = random.Random(99)
    for _ in range(8):
        c = random_series(rng, 19)
        try:
            levels = build_levels(c, 6)
        except DegenerateTableError:
            continue
        for n in range(1, 7):
            sigma_odd = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            sigma_even = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            check_identity(c, n, levels, sigma_odd, sigma_even)


def test_identity_basis_sigmas():
    # Linearity: checking (1, 0) and (0, 1) covers every sigma pair.
    rng = random.Random(5)
    c = random_series(rng, 19)
    levels = build_levels(c, 6)
    for n in range(1, 7):
        check_identity(c, n, levels, Fraction(1), Fraction(0))
        check_identity(c, n, levels, Fraction(0), Fraction(1))
        check_identity(c, n, levels, Fraction(0), Fraction(0))


def test_incremental_matches_rebuild():
    rng = random.Random(17)
    c = random_series(rng, 19)
    levels = build_levels(c, 6)
    comp = remainder_components(1, c, levels[:1])
    for n in range(2, 7):
        comp = next_components(comp, c, levels[n - 1], levels[n - 2])
        assert comp == remainder_components(n, c, levels[:n])
