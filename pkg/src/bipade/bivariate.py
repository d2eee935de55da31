"""Rectangular left-(n, m) and right-(n, m) bivariate Pade approximants.

The left approximant is the ratio

    sum_p A_p(x) y^p / sum_p B_p(x) y^p,      p = 0..m,

with all polynomials of degree <= n in x, the denominator constant terms
pinned to the seeds (the y-axis [m/m] Pade denominator coefficients), and
each level p satisfying the defect equations

    A_p - sum_{s<=p} B_s C_{2n, p-s} = O(x^{2n+1}).

Two independent routes compute it: the level-recursive algorithm (a
bivariate analogue of the univariate three-term recursion) and a direct
linear solve per level, used as an oracle.  The right approximant is the
left one applied to the transposed series with the variable roles swapped.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .algebra import (
    Poly,
    poly_add,
    poly_eval,
    poly_mul_truncated,
    poly_shift_scale,
    poly_sub,
    solve_dense,
)
from .errors import DegenerateTableError, PoleError
from .remainder import RemainderComponents, next_components, remainder_components
from .series import BivSeries, check_orders
from .univariate import UniPade, jacobi_init, oracle_pade


@dataclass(frozen=True)
class Seeds:
    """Constant-in-x coefficients fixed by the y-axis [m/m] approximant."""

    m: int
    b0: tuple  # b0[p], p = 0..m, with b0[0] = 1
    a0: tuple  # a0[p], numerator y-coefficients, a0[0] = 0


@dataclass(frozen=True)
class BivPade:
    """One rectangular approximant.

    For variant "left", ``A[p]``/``B[p]`` are the x-polynomials of the y^p
    terms.  For variant "right" they belong to the left-(m, n) approximant
    of the transposed series: ``A[p]`` is then a polynomial in y attached
    to x^p, and ``evaluate`` swaps the arguments accordingly.
    """

    n: int
    m: int
    variant: str  # "left" | "right"
    A: tuple  # tuple[Poly]
    B: tuple  # tuple[Poly]
    seeds: Seeds
    e: tuple  # e[p] = defect tail of level p, like UniPade.e

    def evaluate(self, x, y):
        if self.variant == "right":
            x, y = y, x
        num = 0
        den = 0
        for p in range(len(self.A) - 1, -1, -1):
            num = num * y + poly_eval(self.A[p], x)
            den = den * y + poly_eval(self.B[p], x)
        if den == 0:
            raise PoleError(f"denominator vanishes at ({x}, {y})")
        return num / den


def evaluate(pade: BivPade, x, y):
    return pade.evaluate(x, y)


def compute_seeds(series: BivSeries, m: int) -> Seeds:
    """Seeds from the univariate [m/m] approximant of f(0, y)."""
    if m == 0:
        return Seeds(0, (1,), (0,))
    y_axis = series.y_coeffs(0)[: 2 * m + 1]
    uni = oracle_pade(y_axis, m)
    return Seeds(
        m,
        tuple(uni.B.coeff(p) for p in range(m + 1)),
        tuple(uni.A.coeff(p) for p in range(m + 1)),
    )


class _LeftState:
    """All level data while building a left-(n, m) approximant recursively.

    Levels are indexed (k, p): k is the x-order step, p the y-level.  The
    p = 0 column is the univariate recursion; every p >= 1 level is driven
    by the correction parameters (check_beta0, check_alpha0) produced from
    the remainder components of the p = 0 column.
    """

    def __init__(self, series: BivSeries, n: int, m: int, seeds: Seeds):
        self.series = series
        self.n = n
        self.m = m
        self.seeds = seeds
        self.c = series.coeff
        # pade[p][k] for k = -1..n (offset by 1)
        self.A: List[List[Poly]] = []
        self.B: List[List[Poly]] = []
        self.e: List[List[tuple]] = []
        self.trace = None  # univariate JacobiTrace for the p = 0 column
        self.comps: List[Optional[RemainderComponents]] = [None]  # per k >= 1
        # check_beta0[k][p], check_alpha0[k][p] for k = 1..n, p = 1..m
        self.check_beta0 = [[None] * (m + 1) for _ in range(n + 1)]
        self.check_alpha0 = [[None] * (m + 1) for _ in range(n + 1)]

    # -- stored-level accessors (k may be -1 or out of range: zeros) -------
    def get_A(self, k: int, p: int) -> Poly:
        return self.A[p][k + 1] if k >= -1 else Poly()

    def get_B(self, k: int, p: int) -> Poly:
        return self.B[p][k + 1] if k >= -1 else Poly()

    def b_coeff(self, k: int, j: int, p: int):
        """b^{(k)}_{j,p}: x^j coefficient of B_{k,p} (zero out of range)."""
        if k < 0 or j < 0:
            return 0
        return self.B[p][k + 1].coeff(j)

    def e_coeff(self, k: int, p: int, power: int):
        """Defect coefficient of x^power at level (k, p); zero out of range."""
        if k < 1:
            return 0
        j = power - 2 * k
        if 1 <= j <= k:
            return self.e[p][k + 1][j - 1]
        return 0

    def check_beta(self, k: int, p: int, q: int):
        """check-beta^{k,p}_q via the copy rule (q >= 1 reads level p - q)."""
        return self.check_beta0[k][p - q]

    def check_alpha(self, k: int, p: int, q: int):
        return self.check_alpha0[k][p - q]


def _build_univariate_column(state: _LeftState):
    c0 = state.series.x_coeffs(0)[: 2 * state.n + 1]
    n = state.n
    if n == 0:
        state.A.append([Poly(), Poly()])
        state.B.append([Poly(), Poly([1])])
        state.e.append([(), ()])
        return
    trace = jacobi_init(c0)
    for _ in range(n):
        trace.step()
    state.trace = trace
    state.A.append([Poly()] + [lvl.A for lvl in trace.levels])
    state.B.append([Poly()] + [lvl.B for lvl in trace.levels])
    state.e.append([()] + [lvl.e for lvl in trace.levels])
    comp = None
    for k in range(1, n + 1):
        if k == 1:
            comp = remainder_components(1, c0, trace.levels)
        else:
            comp = next_components(comp, c0, trace.levels[k - 1], trace.levels[k - 2])
        state.comps.append(comp)


def sigma_for_level(state: _LeftState, k: int, p: int):
    """The pair (sigma_{2k-1}, sigma_{2k}) for level (k, p).

    sigma-hat collects the terms the plain three-term recursion leaves at
    orders x^(2k-1), x^(2k); sigma-check adds the contributions of the
    p' = 1..p-1 correction terms via the copy rule.
    """
    c = state.c
    alpha_k = state.trace.alpha[k]
    beta_k = state.trace.beta[k]

    # sigma-hat
    s_odd = -state.e_coeff(k - 1, p, 2 * k - 1) - alpha_k * state.e_coeff(
        k - 2, p, 2 * k - 3
    )
    s_even = -(
        state.e_coeff(k - 1, p, 2 * k)
        + beta_k * state.e_coeff(k - 1, p, 2 * k - 1)
        + alpha_k * state.e_coeff(k - 2, p, 2 * k - 2)
    )
    for s in range(p + 1):
        b0_prev = state.b_coeff(k - 1, 0, s)
        b1_prev = state.b_coeff(k - 1, 1, s)
        b0_prev2 = state.b_coeff(k - 2, 0, s)
        b1_prev2 = state.b_coeff(k - 2, 1, s)
        s_odd += b0_prev * c(2 * k - 1, p - s) + alpha_k * b0_prev2 * c(2 * k - 3, p - s)
        s_even += (
            b0_prev * c(2 * k, p - s)
            + (b1_prev + beta_k * b0_prev) * c(2 * k - 1, p - s)
            + alpha_k * (b0_prev2 * c(2 * k - 2, p - s) + b1_prev2 * c(2 * k - 3, p - s))
        )

    # sigma-check
    for q in range(1, p):
        cb = state.check_beta(k, p, q)
        ca = state.check_alpha(k, p, q)
        pp = q  # the bracket reads level p' = q, summed over s <= q
        acc_b = -state.e_coeff(k - 1, pp, 2 * k - 1)
        acc_a_odd = -state.e_coeff(k - 2, pp, 2 * k - 3)
        acc_a_even = -state.e_coeff(k - 2, pp, 2 * k - 2)
        for s in range(pp + 1):
            acc_b += state.b_coeff(k - 1, 0, s) * c(2 * k - 1, pp - s)
            acc_a_odd += state.b_coeff(k - 2, 0, s) * c(2 * k - 3, pp - s)
            acc_a_even += state.b_coeff(k - 2, 0, s) * c(2 * k - 2, pp - s) + state.b_coeff(
                k - 2, 1, s
            ) * c(2 * k - 3, pp - s)
        s_odd += ca * acc_a_odd
        s_even += cb * acc_b + ca * acc_a_even
    return s_odd, s_even


def check_params(sigma, comp: RemainderComponents):
    """(check_beta0, check_alpha0) from a sigma pair and the level components."""
    s_odd, s_even = sigma
    return (
        comp.F_odd * s_odd + comp.F_even * s_even,
        comp.F_prev * s_odd,
    )


def _tau_hat(state: _LeftState, k: int, p: int, j: int):
    c = state.c
    alpha_k = state.trace.alpha[k]
    beta_k = state.trace.beta[k]
    t = (
        state.e_coeff(k - 1, p, 2 * k + j)
        + beta_k * state.e_coeff(k - 1, p, 2 * k + j - 1)
        + alpha_k * state.e_coeff(k - 2, p, 2 * k + j - 2)
    )
    for s in range(p + 1):
        t -= (
            state.b_coeff(k - 1, j + 1, s) * c(2 * k - 1, p - s)
            + state.b_coeff(k - 1, j, s) * c(2 * k, p - s)
            + beta_k
            * (
                state.b_coeff(k - 1, j, s) * c(2 * k - 1, p - s)
                + state.b_coeff(k - 1, j - 1, s) * c(2 * k, p - s)
            )
            + alpha_k
            * (
                state.b_coeff(k - 2, j + 1, s) * c(2 * k - 3, p - s)
                + state.b_coeff(k - 2, j, s) * c(2 * k - 2, p - s)
                + state.b_coeff(k - 2, j - 1, s) * c(2 * k - 1, p - s)
                + state.b_coeff(k - 2, j - 2, s) * c(2 * k, p - s)
            )
        )
    return t


def _tau_check(state: _LeftState, k: int, p: int, j: int):
    c = state.c
    t = 0
    for q in range(1, p):
        cb = state.check_beta(k, p, q)
        ca = state.check_alpha(k, p, q)
        pp = q
        acc_b = state.e_coeff(k - 1, pp, 2 * k + j - 1)
        acc_a = state.e_coeff(k - 2, pp, 2 * k + j - 2)
        for s in range(pp + 1):
            acc_b -= state.b_coeff(k - 1, j, s) * c(2 * k - 1, pp - s) + state.b_coeff(
                k - 1, j - 1, s
            ) * c(2 * k, pp - s)
            acc_a -= (
                state.b_coeff(k - 2, j + 1, s) * c(2 * k - 3, pp - s)
                + state.b_coeff(k - 2, j, s) * c(2 * k - 2, pp - s)
                + state.b_coeff(k - 2, j - 1, s) * c(2 * k - 1, pp - s)
                + state.b_coeff(k - 2, j - 2, s) * c(2 * k, pp - s)
            )
        t += cb * acc_b + ca * acc_a
    return t


def bivariate_step(state: _LeftState, k: int, p: int):
    """Compute (A_{k,p}, B_{k,p}, e-row) and store them."""
    sigma = sigma_for_level(state, k, p)
    comp = state.comps[k]
    cb0, ca0 = check_params(sigma, comp)
    state.check_beta0[k][p] = cb0
    state.check_alpha0[k][p] = ca0

    alpha_k = state.trace.alpha[k]
    beta_k = state.trace.beta[k]
    A_prev = state.get_A(k - 1, p)
    B_prev = state.get_B(k - 1, p)
    A = poly_add(poly_add(A_prev, poly_shift_scale(A_prev, 1, beta_k)),
                 poly_shift_scale(state.get_A(k - 2, p), 2, alpha_k))
    B = poly_add(poly_add(B_prev, poly_shift_scale(B_prev, 1, beta_k)),
                 poly_shift_scale(state.get_B(k - 2, p), 2, alpha_k))
    for q in range(p):  # correction sum over lower levels p' = 0..p-1
        cb = state.check_beta(k, p, q)
        ca = state.check_alpha(k, p, q)
        A = poly_add(A, poly_shift_scale(state.get_A(k - 1, q), 1, cb))
        B = poly_add(B, poly_shift_scale(state.get_B(k - 1, q), 1, cb))
        if k == 1 and q == 0:
            # Formal bootstrap numerator at level (-1, 0): contributes
            # +check_alpha0 * x to A only.
            A = poly_add(A, Poly([0, ca]))
        else:
            A = poly_add(A, poly_shift_scale(state.get_A(k - 2, q), 2, ca))
            B = poly_add(B, poly_shift_scale(state.get_B(k - 2, q), 2, ca))

    tau_sigma = tuple(
        comp.tau_odd[j - 1] * sigma[0] + comp.tau_even[j - 1] * sigma[1]
        for j in range(1, k + 1)
    )
    e_row = tuple(
        _tau_hat(state, k, p, j) + _tau_check(state, k, p, j) - tau_sigma[j - 1]
        for j in range(1, k + 1)
    )
    state.A[p][k + 1] = A
    state.B[p][k + 1] = B
    state.e[p][k + 1] = e_row
    return A, B, e_row


def _run_left(series: BivSeries, n: int, m: int, seeds: Optional[Seeds]) -> _LeftState:
    check_orders(series, n, m)
    if seeds is None:
        seeds = compute_seeds(series, m)
    state = _LeftState(series, n, m, seeds)
    _build_univariate_column(state)
    for p in range(1, m + 1):
        # Base values: A_{0,p} = sum_{s<p} b0[s] c[0][p-s], B_{0,p} = b0[p].
        a_base = sum(seeds.b0[s] * series.coeff(0, p - s) for s in range(p))
        state.A.append([Poly(), Poly([a_base])] + [None] * n)
        state.B.append([Poly(), Poly([seeds.b0[p]])] + [None] * n)
        state.e.append([(), ()] + [None] * n)
        for k in range(1, n + 1):
            bivariate_step(state, k, p)
    return state


def left_check_params(series: BivSeries, n: int, m: int):
    """The correction parameters (check_beta0, check_alpha0) of the run.

    Returns two tables indexed [k][p] for k = 1..n, p = 1..m (entries at
    k = 0 or p = 0 are None); used to compare against closed forms.
    """
    state = _run_left(series, n, m, None)
    return state.check_beta0, state.check_alpha0


def left_pade(series: BivSeries, n: int, m: int, seeds: Optional[Seeds] = None) -> BivPade:
    """Left-(n, m) approximant via the double recursion."""
    state = _run_left(series, n, m, seeds)
    seeds = state.seeds
    return BivPade(
        n=n,
        m=m,
        variant="left",
        A=tuple(state.A[p][n + 1] for p in range(m + 1)),
        B=tuple(state.B[p][n + 1] for p in range(m + 1)),
        seeds=seeds,
        e=tuple(state.e[p][n + 1] for p in range(m + 1)),
    )


def right_pade(series: BivSeries, n: int, m: int) -> BivPade:
    """Right-(n, m) approximant: the left-(m, n) one of the transposed series."""
    inner = left_pade(series.transpose(), m, n)
    return BivPade(
        n=n,
        m=m,
        variant="right",
        A=inner.A,
        B=inner.B,
        seeds=inner.seeds,
        e=inner.e,
    )


def defect_tail(series: BivSeries, A: Sequence[Poly], B: Sequence[Poly], n: int, p: int):
    """Coefficients x^(2n+1)..x^(3n) of A_p - sum_{s<=p} B_s C_{2n,p-s}."""
    acc = A[p]
    for s in range(p + 1):
        acc = poly_sub(
            acc, poly_mul_truncated(B[s], series.slice_x(2 * n, p - s), 3 * n)
        )
    return tuple(acc.coeff(i) for i in range(2 * n + 1, 3 * n + 1))


def oracle_left_pade(series: BivSeries, n: int, m: int, seeds: Optional[Seeds] = None) -> BivPade:
    """Left-(n, m) approximant by per-level dense linear solves."""
    check_orders(series, n, m)
    if seeds is None:
        seeds = compute_seeds(series, m)
    A_list: List[Poly] = []
    B_list: List[Poly] = []
    e_list: List[tuple] = []
    for p in range(m + 1):
        known = Poly()
        for s in range(p):
            known = poly_add(
                known, poly_mul_truncated(B_list[s], series.slice_x(2 * n, p - s), 2 * n)
            )
        c0 = series.x_coeffs(0)
        rows = []
        rhs = []
        for j in range(n + 1, 2 * n + 1):
            rows.append([c0[j - k] if j - k >= 0 else 0 for k in range(1, n + 1)])
            rhs.append(
                -known.coeff(j) - seeds.b0[p] * (c0[j] if j <= 2 * n else 0)
            )
        if n > 0:
            try:
                b = solve_dense(rows, rhs)
            except ValueError as exc:
                raise DegenerateTableError(
                    f"non-normal bivariate table at level ({n}, {p})"
                ) from exc
        else:
            b = []
        B_p = Poly([seeds.b0[p]] + list(b))
        full = poly_add(known, poly_mul_truncated(B_p, series.slice_x(2 * n, 0), 2 * n))
        A_p = Poly([full.coeff(j) for j in range(n + 1)])
        A_list.append(A_p)
        B_list.append(B_p)
    for p in range(m + 1):
        e_list.append(defect_tail(series, A_list, B_list, n, p))
    return BivPade(
        n=n,
        m=m,
        variant="left",
        A=tuple(A_list),
        B=tuple(B_list),
        seeds=seeds,
        e=tuple(e_list),
    )
