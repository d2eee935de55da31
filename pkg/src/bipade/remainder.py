"""Canonical remainder decomposition.

For arbitrary scalars (sigma_odd, sigma_even) and a univariate table built
through level n-1, express

    sigma_odd x^(2n-1) + sigma_even x^(2n)
        = A_corr - B_corr * C_{2n}  +  sum_k tau_k x^(2n+k),  k = 1..n,

with A_corr, B_corr of degree <= n and zero constant term.  All components
are linear in sigma and independent of it, so they are computed once per
level and applied to many sigma pairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from .algebra import Poly, poly_add, poly_shift_scale
from .errors import DegenerateTableError
from .univariate import UniPade


@dataclass(frozen=True)
class RemainderComponents:
    """sigma-independent building blocks at one level n.

    tau_odd[k-1] / tau_even[k-1] multiply sigma_odd / sigma_even in the
    coefficient of x^(2n+k).
    """

    n: int
    F_odd: object  # multiplies sigma_odd in the level-n correction scalar
    F_even: object  # multiplies sigma_even in the same scalar
    F_prev: object  # level-(n-1) F_even, multiplies sigma_odd one level down
    tau_odd: tuple
    tau_even: tuple


def _base_components(c: Sequence) -> RemainderComponents:
    c1, c2 = c[1], c[2]
    return RemainderComponents(
        n=1,
        F_odd=0,
        F_even=-1 / c1,
        F_prev=1,
        tau_odd=(0,),
        tau_even=(-c2 / c1,),
    )


def next_components(
    prev_comp: RemainderComponents,
    c: Sequence,
    uni_prev: UniPade,
    uni_prev2: UniPade,
) -> RemainderComponents:
    """Components at level n = prev_comp.n + 1 from those at the level below."""
    n = prev_comp.n + 1
    denom = c[2 * n - 1] - uni_prev.e_at(2 * n - 1)
    if denom == 0:
        raise DegenerateTableError(f"degenerate remainder operator at level {n}")
    F_odd = -prev_comp.tau_even[0] / denom
    F_even = -1 / denom
    F_prev = prev_comp.F_even
    tau_odd: List = []
    tau_even: List = []
    for k in range(1, n + 1):
        bracket_prev = (
            uni_prev.b(k - 1) * c[2 * n]
            + uni_prev.b(k) * c[2 * n - 1]
            - uni_prev.e_at(2 * n + k - 1)
        )
        bracket_prev2 = (
            uni_prev2.b(k - 2) * c[2 * n]
            + uni_prev2.b(k - 1) * c[2 * n - 1]
            + uni_prev2.b(k) * c[2 * n - 2]
            + uni_prev2.b(k + 1) * c[2 * n - 3]
            - uni_prev2.e_at(2 * n + k - 2)
        )
        tau_odd.append(F_odd * bracket_prev + F_prev * bracket_prev2)
        tau_even.append(F_even * bracket_prev)
    return RemainderComponents(n, F_odd, F_even, F_prev, tuple(tau_odd), tuple(tau_even))


def remainder_components(n: int, c: Sequence, levels: Sequence[UniPade]) -> RemainderComponents:
    """Components at level n >= 1.

    `levels` must hold the univariate table entries 0..n-1 (level 0 may be
    the trivial entry).  The whole ladder 1..n is rebuilt; callers that
    need every level use `next_components` incrementally instead.
    """
    if n < 1:
        raise ValueError("remainder components are defined for n >= 1")
    if c[1] == 0:
        raise DegenerateTableError("degenerate remainder operator at level 1")
    comp = _base_components(c)
    for level in range(2, n + 1):
        comp = next_components(comp, c, levels[level - 1], levels[level - 2])
    return comp


def apply_remainder(
    comp: RemainderComponents,
    sigma_odd,
    sigma_even,
    uni_prev: UniPade,
    uni_prev2: UniPade,
):
    """Materialize (A_corr, B_corr, tau) for one sigma pair.

    At n = 1 the level-(n-2) numerator is the formal Laurent bootstrap; its
    only effect is the +sigma_odd * x term in A_corr.
    """
    n = comp.n
    bstar = comp.F_odd * sigma_odd + comp.F_even * sigma_even
    bstar_prev = comp.F_prev * sigma_odd
    A_corr = poly_shift_scale(uni_prev.A, 1, bstar)
    B_corr = poly_shift_scale(uni_prev.B, 1, bstar)
    if n == 1:
        A_corr = poly_add(A_corr, Poly([0, bstar_prev]))
    else:
        A_corr = poly_add(A_corr, poly_shift_scale(uni_prev2.A, 2, bstar_prev))
        B_corr = poly_add(B_corr, poly_shift_scale(uni_prev2.B, 2, bstar_prev))
    tau = tuple(
        comp.tau_odd[k] * sigma_odd + comp.tau_even[k] * sigma_even for k in range(n)
    )
    return A_corr, B_corr, tau
