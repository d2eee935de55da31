"""Rational approximation of the singular Riccati equation

    x w' - beta w + beta w^2 + alpha x = 0,   w(0) = 0, w(1) = 0,

whose general solution for non-integer beta is a bivariate series
w(x) = f(x, x^beta) with a free parameter c_{0,1}.  This module generates
that series, specializes the Pade algorithms to it (closed-form recursion
parameters and direct coefficient-ratio chains), estimates c_{0,1} from
the boundary condition, and compares against the exact Bessel-function
solution.
"""
from __future__ import annotations

import math
import multiprocessing
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .algebra import Poly, poly_add, poly_eval, poly_shift_scale
from .bivariate import BivPade, Seeds, defect_tail, left_pade, right_pade
from .errors import (
    DegenerateTableError,
    EstimationSingularError,
    InputError,
    ResonanceError,
)
from .series import BivSeries
from .special_functions import bessel_j, bessel_y, gamma, pochhammer
from .univariate import UniPade, _defect_tail


def _is_integer(b) -> bool:
    if isinstance(b, Fraction):
        return b.denominator == 1
    if isinstance(b, int):
        return True
    return float(b).is_integer()


@dataclass(frozen=True)
class RiccatiProblem:
    """The equation constants.  Exact mode passes both as Fractions."""

    alpha: object
    beta: object

    def __post_init__(self):
        if not (self.alpha > 0):
            raise InputError("alpha must be positive")
        if not (self.beta > 0):
            raise InputError("beta must be positive")
        if _is_integer(self.beta):
            raise InputError("beta must be non-integer")

    def as_float(self) -> "RiccatiProblem":
        return RiccatiProblem(float(self.alpha), float(self.beta))


@dataclass(frozen=True)
class C01Estimate:
    """One estimate of the free parameter c_{0,1}."""

    value: object
    variant: str  # "left" | "right"
    n: int
    error_vs_exact: Optional[float] = None


@dataclass(frozen=True)
class RationalFormCoeffs:
    """Coefficients of the closed-form rational solution

        w = (sum a_m0 x^m + x^beta sum a_m1 x^m)
            / (1 + sum b_m0 x^m + x^beta sum b_m1 x^m),

    together with the Bessel ratio constant C at z = 2 sqrt(alpha beta).
    """

    a_m0: tuple
    b_m0: tuple
    a_m1: tuple
    b_m1: tuple
    C: float
    z: float


def generate_series(prob: RiccatiProblem, c01, N: int, M: int) -> BivSeries:
    """Series coefficients c_{n,m} for n <= N, m <= M, with c_{0,1} = c01.

    Substituting w = sum c_{n,m} x^n x^{m beta} into the equation gives

        (n + (m-1) beta) c_{n,m}
            = -alpha [n=1][m=0] - beta sum c_{i,j} c_{n-i,m-j},

    summed over (0,0) < (i,j) < (n,m) componentwise.  (0,1) is the free
    slot; a vanishing divisor anywhere else is a resonance.
    """
    a, b = prob.alpha, prob.beta
    c = [[None] * (M + 1) for _ in range(N + 1)]
    c[0][0] = a * 0  # zero in the scalar's type
    for n in range(N + 1):
        for m in range(M + 1):
            if n == 0 and m == 0:
                continue
            if n == 0 and m == 1:
                c[0][1] = c01
                continue
            div = n + (m - 1) * b
            if div == 0:
                raise ResonanceError(
                    f"resonance at (n, m) = ({n}, {m}): n + (m-1)*beta = 0",
                    index=(n, m),
                )
            rhs = -a if (n, m) == (1, 0) else a * 0
            conv = a * 0
            for i in range(n + 1):
                for j in range(m + 1):
                    if (i, j) == (0, 0) or (i, j) == (n, m):
                        continue
                    conv += c[i][j] * c[n - i][m - j]
            c[n][m] = (rhs - b * conv) / div
    return BivSeries(c)


def explicit_jacobi_params(prob: RiccatiProblem, n: int):
    """Closed-form recursion parameters (alpha_n, beta_n) for n >= 2."""
    if n < 2:
        raise InputError("closed-form recursion parameters start at n = 2")
    a, b = prob.alpha, prob.beta
    d_alpha = (b - 2 * n + 1) * (b - 2 * n + 2) ** 2 * (b - 2 * n + 3)
    d_beta = (b - 2 * n) * (b - 2 * n + 2)
    if d_alpha == 0 or d_beta == 0:
        raise DegenerateTableError(
            f"closed-form parameter denominator vanishes at level {n}"
        )
    return -(a * b) ** 2 / d_alpha, -2 * a * b / d_beta


def _level_one(prob: RiccatiProblem):
    """(alpha_1, beta_1, c_{1,0}, c_{2,0}) of the series column at y-level 0."""
    a, b = prob.alpha, prob.beta
    c10 = a / (b - 1)
    c20 = -b * c10 * c10 / (2 - b)
    return -c10, -c20 / c10, c10, c20


def _jacobi_levels_explicit(prob: RiccatiProblem, n: int) -> List[UniPade]:
    """Univariate table levels 0..n via closed-form parameters (no defects)."""
    alpha1, beta1, c10, _ = _level_one(prob)
    levels = [UniPade(0, Poly(), Poly([1]), ())]
    if n >= 1:
        levels.append(UniPade(1, Poly([0, c10]), Poly([1, beta1]), ()))
    for k in range(2, n + 1):
        alpha_k, beta_k = explicit_jacobi_params(prob, k)
        prev, prev2 = levels[k - 1], levels[k - 2]
        A = poly_add(
            poly_add(prev.A, poly_shift_scale(prev.A, 1, beta_k)),
            poly_shift_scale(prev2.A, 2, alpha_k),
        )
        B = poly_add(
            poly_add(prev.B, poly_shift_scale(prev.B, 1, beta_k)),
            poly_shift_scale(prev2.B, 2, alpha_k),
        )
        levels.append(UniPade(k, A, B, ()))
    return levels


def jacobi_explicit_pade(prob: RiccatiProblem, n: int, c0=None) -> UniPade:
    """[n/n] approximant of the x-column via closed-form parameters.

    Defect coefficients are filled in by direct expansion against the
    generated series (the closed forms only shortcut the parameters);
    `c0` may supply the column coefficients up to x^2n to avoid
    regenerating them.
    """
    out = _jacobi_levels_explicit(prob, n)[n]
    if c0 is None:
        c0 = generate_series(prob, 0, 2 * n, 0).x_coeffs(0)
    return UniPade(n, out.A, out.B, _defect_tail(out.A, out.B, c0, n))


def direct_coeff_ratios(prob: RiccatiProblem, n: int, c0=None) -> UniPade:
    """[n/n] approximant of the x-column via coefficient-ratio chains.

    b_k = P0(n, k) b_{k-1} from b_0 = 1, and a_k = Q0(n, k) a_{k-1} from
    the anchor a_1 = c_{1,0}; no induction over the order.
    """
    a, b = prob.alpha, prob.beta
    _, _, c10, _ = _level_one(prob)

    bcoeffs = [a * 0 + 1]
    for k in range(1, n + 1):
        den = k * (2 * n - k + 1) * (b - (2 * n - k + 1)) * (b - k)
        if den == 0:
            raise DegenerateTableError(f"ratio-chain denominator vanishes at k={k}")
        p0 = -2 * a * b * (2 * n - 2 * k + 1) * (n - k + 1) / den
        bcoeffs.append(p0 * bcoeffs[-1])
    acoeffs = [a * 0]
    if n >= 1:
        acoeffs.append(c10)
    for k in range(2, n + 1):
        den = (k - 1) * (2 * n - k + 1) * (b - (2 * n - k + 2)) * (b - k)
        if den == 0:
            raise DegenerateTableError(f"ratio-chain denominator vanishes at k={k}")
        q0 = -2 * a * b * (2 * n - 2 * k + 3) * (n - k + 1) / den
        acoeffs.append(q0 * acoeffs[-1])
    A, B = Poly(acoeffs), Poly(bcoeffs)
    if c0 is None:
        c0 = generate_series(prob, 0, 2 * n, 0).x_coeffs(0)
    return UniPade(n, A, B, _defect_tail(A, B, c0, n))


def _check_params_level1(prob: RiccatiProblem, c01):
    """(check_beta, check_alpha) at level 1 from the series coefficients."""
    series = generate_series(prob, c01, 2, 1)
    c = series.coeff
    _, beta1, c10, _ = _level_one(prob)
    b01 = c01  # -c_{0,2}/c_{0,1} for this equation
    sigma1 = c(1, 1) + b01 * c(1, 0)
    sigma2 = c(2, 1) + b01 * c(2, 0) + beta1 * sigma1
    return -sigma2 / c10, sigma1


def explicit_check_params(prob: RiccatiProblem, c01, n: int):
    """Closed-form level-(n, 1) correction parameters, n >= 2.

    Both are linear in c01:

        check_beta  = -beta (1-2 beta)_{2n-3}
                      [2(2n-1)^2 + beta(-8(n-1) - 3 + 2 beta)]
                      beta_n c01 / (n (2n-1)!)
        check_alpha = -4 beta (1-2 beta)_{2n-4}
                      [2 beta^2 - (8n-7) beta + 8(n-1)^2 - 1]
                      alpha_n c01 / (2n-1)!

    The check_alpha product was recovered by exact polynomial interpolation
    in beta against the general recursion (degree 2n-1, zero constant term,
    linear factors at beta = 0, 1/2, 1, ..., n-2 plus one quadratic); both
    forms are asserted equal to the general path across n and beta in tests.
    """
    if n < 2:
        raise InputError("closed-form correction parameters start at n = 2")
    b = prob.beta
    alpha_n, beta_n = explicit_jacobi_params(prob, n)
    fact = math.factorial(2 * n - 1)
    check_beta = (
        -b
        * pochhammer(1 - 2 * b, 2 * n - 3)
        * (2 * (2 * n - 1) ** 2 + b * (-8 * (n - 1) - 3 + 2 * b))
        * beta_n
        * c01
        / (n * fact)
    )
    check_alpha = (
        -4
        * b
        * pochhammer(1 - 2 * b, 2 * n - 4)
        * (2 * b * b - (8 * n - 7) * b + 8 * (n - 1) ** 2 - 1)
        * alpha_n
        * c01
        / fact
    )
    return check_beta, check_alpha


def left_pade_refined(prob: RiccatiProblem, c01, n: int) -> BivPade:
    """Left-(n, 1) approximant via closed-form parameters throughout."""
    series = generate_series(prob, c01, 2 * n, 2)
    c = series.coeff
    b01 = -c(0, 2) / c(0, 1)
    seeds = Seeds(1, (c01 * 0 + 1, b01), (c01 * 0, c(0, 1)))
    uni = _jacobi_levels_explicit(prob, n)
    alpha1, beta1, _, _ = _level_one(prob)

    prev_A, prev2_A = Poly([c01]), Poly()
    prev_B, prev2_B = Poly([b01]), Poly()
    for k in range(1, n + 1):
        if k == 1:
            alpha_k, beta_k = alpha1, beta1
            cb, ca = _check_params_level1(prob, c01)
        else:
            alpha_k, beta_k = explicit_jacobi_params(prob, k)
            cb, ca = explicit_check_params(prob, c01, k)
        A = poly_add(
            poly_add(prev_A, poly_shift_scale(prev_A, 1, beta_k)),
            poly_shift_scale(prev2_A, 2, alpha_k),
        )
        B = poly_add(
            poly_add(prev_B, poly_shift_scale(prev_B, 1, beta_k)),
            poly_shift_scale(prev2_B, 2, alpha_k),
        )
        A = poly_add(A, poly_shift_scale(uni[k - 1].A, 1, cb))
        B = poly_add(B, poly_shift_scale(uni[k - 1].B, 1, cb))
        if k == 1:
            A = poly_add(A, Poly([0, ca]))
        else:
            A = poly_add(A, poly_shift_scale(uni[k - 2].A, 2, ca))
            B = poly_add(B, poly_shift_scale(uni[k - 2].B, 2, ca))
        prev_A, prev2_A = A, prev_A
        prev_B, prev2_B = B, prev_B
    A_polys = (uni[n].A, prev_A)
    B_polys = (uni[n].B, prev_B)
    e = tuple(defect_tail(series, A_polys, B_polys, n, p) for p in range(2))
    return BivPade(n=n, m=1, variant="left", A=A_polys, B=B_polys, seeds=seeds, e=e)


def right_induction_coeffs(prob: RiccatiProblem, c01, n: int) -> BivPade:
    """Right-(n, 1) approximant via the level-1 coefficient-ratio chains.

    The x^k y coefficients follow b_k = P1(n, k) b_{k-1} from the anchor
    b_0 = -c_{0,2}/c_{0,1} and a_k = Q1(n, k) a_{k-1} from a_0 = c_{0,1};
    the univariate part comes from the ratio chains as well.
    """
    a, b = prob.alpha, prob.beta
    uni = direct_coeff_ratios(prob, n)
    series = generate_series(prob, c01, 2 * n, 2)
    c = series.coeff
    b1 = [-c(0, 2) / c(0, 1)]
    a1 = [c(0, 1)]
    for k in range(1, n + 1):
        den_p = k * (2 * b - (2 * n - k + 1)) * (b - (2 * n - k + 1)) * (k + b)
        den_q = k * (2 * b - (2 * n - k + 2)) * (b - (2 * n - k + 1)) * (k - 1 + b)
        if den_p == 0 or den_q == 0:
            raise DegenerateTableError(f"ratio-chain denominator vanishes at k={k}")
        p1 = -2 * a * b * (b - (n - k + 1)) * (2 * b - (2 * n - 2 * k + 1)) / den_p
        q1 = -2 * a * b * (b - (n - k + 1)) * (2 * b - (2 * n - 2 * k + 3)) / den_q
        b1.append(p1 * b1[-1])
        a1.append(q1 * a1[-1])
    A_polys = tuple(Poly([uni.A.coeff(k), a1[k]]) for k in range(n + 1))
    B_polys = tuple(Poly([uni.B.coeff(k), b1[k]]) for k in range(n + 1))
    seeds = Seeds(
        n,
        tuple(uni.B.coeff(k) for k in range(n + 1)),
        tuple(uni.A.coeff(k) for k in range(n + 1)),
    )
    t = series.transpose()
    e = tuple(defect_tail(t, A_polys, B_polys, 1, p) for p in range(n + 1))
    return BivPade(n=n, m=1, variant="right", A=A_polys, B=B_polys, seeds=seeds, e=e)


def _level_values_at_one(pade: BivPade):
    """(A_{n,0}(1), A_{n,1}(1)) for either variant."""
    if pade.variant == "left":
        return poly_eval(pade.A[0], 1), poly_eval(pade.A[1], 1)
    return (
        sum(p.coeff(0) for p in pade.A),
        sum(p.coeff(1) for p in pade.A),
    )


def _build_approximant(prob: RiccatiProblem, c01, n: int, variant: str, algorithm: str) -> BivPade:
    if variant not in ("left", "right"):
        raise InputError(f"unknown variant {variant!r}")
    if algorithm not in ("general", "refined"):
        raise InputError(f"unknown algorithm {algorithm!r}")
    if algorithm == "refined":
        if variant == "left":
            return left_pade_refined(prob, c01, n)
        return right_induction_coeffs(prob, c01, n)
    series = generate_series(prob, c01, 2 * n, 2)
    if variant == "left":
        return left_pade(series, n, 1)
    return right_pade(series, n, 1)


def estimate_c01(
    prob: RiccatiProblem,
    n: int,
    variant: str = "right",
    algorithm: str = "refined",
    use_bisection: bool = False,
    reference: Optional[float] = None,
) -> C01Estimate:
    """Estimate c_{0,1} from the boundary condition A_{n,0}(1) + A_{n,1}(1) = 0.

    All level-1 coefficients are linear in c_{0,1} (a tested homogeneity),
    so building the approximant at unit c_{0,1} turns the condition into a
    linear equation: c01 = -A_{n,0}(1) / A_hat_{n,1}(1).  The bisection
    fallback re-solves the same condition by bracketing the residual as a
    function of c_{0,1}, rebuilding the approximant per candidate.
    """
    one = prob.alpha * 0 + 1
    pade = _build_approximant(prob, one, n, variant, algorithm)
    a0, a1 = _level_values_at_one(pade)
    if a1 == 0:
        raise EstimationSingularError(f"estimation singular at order {n}")
    value = -a0 / a1

    if use_bisection:
        fprob = prob.as_float()

        def residual(t: float) -> float:
            p = _build_approximant(fprob, t, n, variant, algorithm)
            v0, v1 = _level_values_at_one(p)
            return v0 + v1

        center = float(value)
        width = max(abs(center) * 0.5, 1.0)
        lo, hi = center - width, center + width
        for _ in range(60):
            if residual(lo) * residual(hi) <= 0:
                break
            width *= 2.0
            lo, hi = center - width, center + width
        else:
            raise EstimationSingularError(f"no bisection bracket at order {n}")
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if residual(lo) * residual(mid) <= 0:
                hi = mid
            else:
                lo = mid
        value = 0.5 * (lo + hi)

    err = None
    if reference is not None:
        err = abs(float(value) - reference)
    return C01Estimate(value=value, variant=variant, n=n, error_vs_exact=err)


def _bessel_constant(prob: RiccatiProblem) -> float:
    a, b = float(prob.alpha), float(prob.beta)
    z = 2.0 * math.sqrt(a * b)
    return bessel_j(b - 1.0, z) / bessel_y(b - 1.0, z)


def exact_c01(prob: RiccatiProblem) -> float:
    """The exact free parameter: the x^beta coefficient of the solution."""
    a, b = float(prob.alpha), float(prob.beta)
    C = _bessel_constant(prob)
    num = math.pi * (
        1.0 / gamma(b) + C * gamma(1.0 - b) * math.cos((b - 1.0) * math.pi) / math.pi
    ) * (a * b) ** b
    return num / (b * C * gamma(b))


def exact_c01_mp(prob: RiccatiProblem, dps: int = 60):
    """High-precision exact c_{0,1} via mpmath (independent route)."""
    import mpmath as mp

    with mp.workdps(dps):
        a = mp.mpf(prob.alpha.numerator) / prob.alpha.denominator if isinstance(
            prob.alpha, Fraction
        ) else mp.mpf(prob.alpha)
        b = mp.mpf(prob.beta.numerator) / prob.beta.denominator if isinstance(
            prob.beta, Fraction
        ) else mp.mpf(prob.beta)
        z = 2 * mp.sqrt(a * b)
        C = mp.besselj(b - 1, z) / mp.bessely(b - 1, z)
        num = mp.pi * (
            1 / mp.gamma(b) + C * mp.gamma(1 - b) * mp.cos((b - 1) * mp.pi) / mp.pi
        ) * (a * b) ** b
        return num / (b * C * mp.gamma(b))


def evaluate_bessel_solution(prob: RiccatiProblem, x: float) -> float:
    """The exact solution w(x) as a ratio of Bessel functions."""
    if not 0 < x:
        raise InputError("x must be positive")
    a, b = float(prob.alpha), float(prob.beta)
    z = 2.0 * math.sqrt(a * b * x)
    C = _bessel_constant(prob)
    den = bessel_j(b, z) - C * bessel_y(b, z)
    if den == 0:
        raise InputError(f"solution pole at x = {x}")
    return z / (2.0 * b) * (bessel_j(b - 1.0, z) - C * bessel_y(b - 1.0, z)) / den


def rational_form_coeffs(prob: RiccatiProblem, M: int) -> RationalFormCoeffs:
    """Coefficients of the closed-form rational solution, m = 0..M.

    a_m0 = (-1)^(m+1) (alpha beta)^m / ((m-1)! (-beta)_{m+1}) for m >= 1
    (sign chosen so the numerator starts c_{1,0} x, consistent with the
    series), b_m0 = (-1)^m (alpha beta)^m / (m! (1-beta)_m), and the
    x^beta rows carry the Bessel-ratio constant C.
    """
    a, b = float(prob.alpha), float(prob.beta)
    C = _bessel_constant(prob)
    z = 2.0 * math.sqrt(a * b)
    ab = a * b
    a_m0 = [0.0]
    b_m0 = [1.0]
    for m in range(1, M + 1):
        a_m0.append(
            (-1.0) ** (m + 1) * ab**m / (math.factorial(m - 1) * pochhammer(-b, m + 1))
        )
        b_m0.append((-1.0) ** m * ab**m / (math.factorial(m) * pochhammer(1.0 - b, m)))
    top = math.pi * (
        1.0 / gamma(b) + C * gamma(1.0 - b) * math.cos((b - 1.0) * math.pi) / math.pi
    )
    top1 = math.pi * (
        1.0 / gamma(b + 1.0) + C * gamma(-b) * math.cos(b * math.pi) / math.pi
    )
    a_m1 = []
    b_m1 = []
    for m in range(M + 1):
        a_m1.append(
            top * (-1.0) ** m * ab ** (m + b)
            / (b * C * gamma(b) * pochhammer(b, m) * math.factorial(m))
        )
        b_m1.append(
            top1 * (-1.0) ** m * ab ** (m + b)
            / (C * gamma(b) * pochhammer(b + 1.0, m) * math.factorial(m))
        )
    return RationalFormCoeffs(
        a_m0=tuple(a_m0), b_m0=tuple(b_m0), a_m1=tuple(a_m1), b_m1=tuple(b_m1), C=C, z=z
    )


# ---------------------------------------------------------------------------
# Error/timing table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ErrorTableRow:
    """One table row; None in a timing column means the cell timed out."""

    n: int
    err_left: Optional[float]
    err_right: Optional[float]
    time_general: Optional[float]
    time_refined: Optional[float]
    note: str = ""


def _timed_estimates(prob: RiccatiProblem, n: int, algorithm: str, out):
    t0 = time.perf_counter()
    estimate_c01(prob, n, "left", algorithm)
    estimate_c01(prob, n, "right", algorithm)
    out.put(time.perf_counter() - t0)


def _time_cell(prob: RiccatiProblem, n: int, algorithm: str, timeout: float):
    """Wall time for both variants' estimates, or None past the budget."""
    ctx = multiprocessing.get_context("fork")
    out = ctx.Queue()
    proc = ctx.Process(target=_timed_estimates, args=(prob, n, algorithm, out))
    proc.start()
    proc.join(timeout)
    if proc.is_alive():
        proc.terminate()
        proc.join()
        return None
    try:
        return out.get_nowait()
    except Exception:
        return None


def _mp_error(value, reference) -> float:
    import mpmath as mp

    if isinstance(value, Fraction):
        v = mp.mpf(value.numerator) / value.denominator
    else:
        v = mp.mpf(value)
    return abs(v - reference)


def error_table_row(
    prob: RiccatiProblem,
    n: int,
    timeout_secs: float = 60.0,
    dps: int = 80,
    reference=None,
) -> ErrorTableRow:
    """One table row; see `error_table`."""
    import mpmath as mp

    if reference is None:
        reference = exact_c01_mp(prob, dps)
    note = []
    err_l = err_r = None
    with mp.workdps(dps):
        try:
            est = estimate_c01(prob, n, "left", "refined")
            err_l = float(_mp_error(est.value, reference))
        except (DegenerateTableError, EstimationSingularError) as exc:
            note.append(f"left: {exc}")
        try:
            est = estimate_c01(prob, n, "right", "refined")
            err_r = float(_mp_error(est.value, reference))
        except (DegenerateTableError, EstimationSingularError) as exc:
            note.append(f"right: {exc}")
    t_gen = _time_cell(prob, n, "general", timeout_secs)
    t_ref = _time_cell(prob, n, "refined", timeout_secs)
    return ErrorTableRow(
        n=n,
        err_left=err_l,
        err_right=err_r,
        time_general=t_gen,
        time_refined=t_ref,
        note="; ".join(note),
    )


def error_table(
    prob: RiccatiProblem,
    n_max: int,
    timeout_secs: float = 60.0,
    dps: int = 80,
) -> List[ErrorTableRow]:
    """Estimation errors and timings for n = 1..n_max.

    Errors are |c_{0,1} estimate - exact| with the estimate computed in
    exact rationals (refined path; all algorithms agree on the value) and
    the reference at `dps` digits, since the right-variant error quickly
    falls below double precision.  Each timing cell is the wall time for
    both variants' estimates under one algorithm family; None (rendered
    "?") marks a cell exceeding the timeout.  Per-cell degeneracies land
    in the row's note instead of aborting the table.
    """
    if n_max < 1:
        raise InputError("n_max must be >= 1")
    ref = exact_c01_mp(prob, dps)
    return [
        error_table_row(prob, n, timeout_secs, dps, ref) for n in range(1, n_max + 1)
    ]
