"""Diagonal [n/n] Pade approximants of a univariate series.

Two independent routes are provided: a three-term recursion over the level
parameters (alpha_n, beta_n), and a direct dense linear solve used as an
oracle in tests.  The defect is always measured against the truncated
series C_{2n} = sum_{k<=2n} c_k x^k:

    E_n = A_n - B_n * C_{2n} = e_{2n+1} x^{2n+1} + ... + e_{3n} x^{3n}
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence

from .algebra import Poly, poly_add, poly_mul_truncated, poly_shift_scale, solve_dense
from .errors import DegenerateTableError, InputError


@dataclass(frozen=True)
class UniPade:
    """One diagonal Pade table entry with its defect coefficients.

    ``e[k-1]`` holds the coefficient of x^(2n+k) in A - B*C_{2n},
    for k = 1..n.
    """

    n: int
    A: Poly
    B: Poly
    e: tuple = ()

    def e_at(self, power: int):
        """Defect coefficient of x**power; zero outside 2n+1..3n."""
        k = power - 2 * self.n
        if 1 <= k <= self.n:
            return self.e[k - 1]
        return 0

    def b(self, k: int):
        return self.B.coeff(k)

    def a(self, k: int):
        return self.A.coeff(k)


def _defect_tail(A: Poly, B: Poly, c: Sequence, n: int):
    """Coefficients x^(2n+1)..x^(3n) of A - B*C_{2n}."""
    tail = []
    for power in range(2 * n + 1, 3 * n + 1):
        s = A.coeff(power)
        for k in range(len(B.coeffs)):
            i = power - k
            if 0 <= i <= 2 * n:
                s -= B.coeffs[k] * c[i]
        tail.append(s)
    return tuple(tail)


class JacobiTrace:
    """Mutable driver for the three-term recursion over levels n = 0, 1, 2, ...

    Retains every computed level plus the per-level parameters; levels are
    value objects and may be shared freely once produced.
    """

    def __init__(self, c: Sequence):
        c = list(c)
        if len(c) < 3:
            raise InputError("need series coefficients at least up to x^2")
        if c[0] != 0:
            raise InputError("series must vanish at the origin (c_0 = 0)")
        if c[1] == 0:
            raise DegenerateTableError(
                "non-normal series: c_1 = 0; the recursion is undefined"
            )
        self.c = c
        self.levels: List[UniPade] = [UniPade(0, Poly(), Poly([1]), ())]
        # alpha[n], beta[n] for n >= 1; index 0 unused.
        self.alpha = [None]
        self.beta = [None]

    @property
    def current_n(self) -> int:
        return len(self.levels) - 1

    def level(self, n: int) -> UniPade:
        if n < 0:
            # Formal bootstrap level: B = 0 and no defect coefficients at
            # non-negative powers.  (Its numerator is a formal Laurent term
            # that only ever acts through the special-cased n = 1 step.)
            return UniPade(n, Poly(), Poly(), ())
        return self.levels[n]

    def _require(self, upto: int):
        if len(self.c) <= upto:
            raise InputError(
                f"need series coefficients up to x^{upto}; got {len(self.c) - 1}"
            )

    def step(self) -> UniPade:
        """Advance one level and return the new table entry."""
        n = self.current_n + 1
        self._require(2 * n)
        c = self.c
        if n == 1:
            # Bootstrap: forcing E_1 = O(x^3) on A_1 = c_1 x,
            # B_1 = 1 + beta_1 x gives beta_1 = -c_2/c_1 directly.
            alpha_n = -c[1]
            beta_n = -c[2] / c[1]
            A = Poly([0, c[1]])
            B = Poly([1, beta_n])
        else:
            prev, prev2 = self.levels[n - 1], self.levels[n - 2]
            pivot = prev.e_at(2 * n - 1) - c[2 * n - 1]
            if pivot == 0:
                raise DegenerateTableError(f"degenerate Pade table at level {n}")
            denom2 = prev2.e_at(2 * n - 3) - c[2 * n - 3]
            if denom2 == 0:
                raise DegenerateTableError(f"degenerate Pade table at level {n}")
            alpha_n = -pivot / denom2
            beta_n = (
                prev.b(1) * c[2 * n - 1]
                + c[2 * n]
                - prev.e_at(2 * n)
                + alpha_n
                * (c[2 * n - 2] + prev2.b(1) * c[2 * n - 3] - prev2.e_at(2 * n - 2))
            ) / pivot
            A = poly_add(
                poly_add(prev.A, poly_shift_scale(prev.A, 1, beta_n)),
                poly_shift_scale(prev2.A, 2, alpha_n),
            )
            B = poly_add(
                poly_add(prev.B, poly_shift_scale(prev.B, 1, beta_n)),
                poly_shift_scale(prev2.B, 2, alpha_n),
            )
        e = _defect_tail(A, B, c, n)
        out = UniPade(n, A, B, e)
        self.levels.append(out)
        self.alpha.append(alpha_n)
        self.beta.append(beta_n)
        return out


def jacobi_init(c: Sequence) -> JacobiTrace:
    """Start the recursion; fails if c_1 = 0 (non-normal series)."""
    return JacobiTrace(c)


def jacobi_step(trace: JacobiTrace) -> UniPade:
    return trace.step()


def jacobi_pade(c: Sequence, n: int) -> UniPade:
    """The [n/n] approximant via the recursion."""
    if n == 0:
        return UniPade(0, Poly(), Poly([1]), ())
    trace = jacobi_init(c)
    out = trace.levels[0]
    for _ in range(n):
        out = trace.step()
    return out


def oracle_pade(c: Sequence, n: int) -> UniPade:
    """The [n/n] approximant by a direct dense linear solve.

    The x^(n+1)..x^(2n) defect equations determine b_1..b_n; the
    x^0..x^n equations then read off the numerator.  A consistent
    underdetermined system yields the reducible entry (free unknowns
    zero); an inconsistent one marks a non-normal table.
    """
    c = list(c)
    if len(c) <= 2 * n:
        raise InputError(f"need series coefficients up to x^{2 * n}")
    if c[0] != 0:
        raise InputError("series must vanish at the origin (c_0 = 0)")
    if n == 0:
        return UniPade(0, Poly(), Poly([1]), ())
    rows = []
    rhs = []
    for j in range(n + 1, 2 * n + 1):
        rows.append([c[j - k] if 0 <= j - k else 0 for k in range(1, n + 1)])
        rhs.append(-c[j])
    try:
        b = solve_dense(rows, rhs)
    except ValueError as exc:
        raise DegenerateTableError(f"non-normal table at order {n}") from exc
    B = Poly([1] + list(b))
    A = Poly(
        [sum(B.coeff(k) * c[j - k] for k in range(0, j + 1)) for j in range(n + 1)]
    )
    return UniPade(n, A, B, _defect_tail(A, B, c, n))
