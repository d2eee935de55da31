"""Dense univariate polynomials over an abstract scalar field.

Coefficients may be any exact or floating scalar type supporting ring
arithmetic with Python ints (``fractions.Fraction`` and ``float`` are the
two realizations used throughout).  All operations are pure; a ``Poly`` is
immutable after construction.
"""
from __future__ import annotations

import math
from typing import Sequence

NEG_INF = -math.inf


class Poly:
    """Dense polynomial, coefficients indexed by power of x, lowest first.

    Trailing zero coefficients are allowed in storage; ``degree`` ignores
    them.  The zero polynomial has degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i] != 0:
                return i
        return NEG_INF

    def coeff(self, i: int):
        """Coefficient of x**i, zero outside the stored range."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coeff(i) == other.coeff(i) for i in range(n))

    def __hash__(self):
        d = self.degree
        if d == NEG_INF:
            return hash(())
        return hash(self.coeffs[: d + 1])

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p.coeffs), len(q.coeffs))
    return Poly([p.coeff(i) + q.coeff(i) for i in range(n)])


def poly_sub(p: Poly, q: Poly) -> Poly:
    n = max(len(p.coeffs), len(q.coeffs))
    return Poly([p.coeff(i) - q.coeff(i) for i in range(n)])


def poly_mul_truncated(p: Poly, q: Poly, max_deg: int) -> Poly:
    """Product of p and q with every term of degree > max_deg discarded."""
    if max_deg < 0:
        raise ValueError("max_deg must be non-negative")
    out = [0] * (max_deg + 1)
    for i, a in enumerate(p.coeffs):
        if i > max_deg or a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            if i + j > max_deg:
                break
            if b != 0:
                out[i + j] += a * b
    return Poly(out)


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Full product (used by tests and rational-function identities)."""
    if p.is_zero() or q.is_zero():
        return Poly()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            if b != 0:
                out[i + j] += a * b
    return Poly(out)


def poly_shift_scale(p: Poly, power: int, s) -> Poly:
    """s * x**power * p, for power in {0, 1, 2}."""
    if power not in (0, 1, 2):
        raise ValueError("power must be 0, 1 or 2")
    return Poly([0] * power + [s * c for c in p.coeffs])


def poly_scale(p: Poly, s) -> Poly:
    return Poly([s * c for c in p.coeffs])


def poly_eval(p: Poly, x0):
    """Horner evaluation at x0."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def solve_dense(matrix, rhs):
    """Solve a small dense linear system by Gaussian elimination.

    Works over any field (Fraction or float).  Consistent underdetermined
    systems are solved with free variables set to zero; an inconsistent
    system raises ValueError.  Over floats, partial pivoting is used.
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    exact = not any(
        isinstance(v, float) for row in aug for v in row
    )

    pivots = []  # (row, col)
    row = 0
    for col in range(n_cols):
        if row >= n_rows:
            break
        if exact:
            pivot_row = next((r for r in range(row, n_rows) if aug[r][col] != 0), None)
        else:
            cand = max(range(row, n_rows), key=lambda r: abs(aug[r][col]))
            pivot_row = cand if aug[cand][col] != 0 else None
        if pivot_row is None:
            continue
        aug[row], aug[pivot_row] = aug[pivot_row], aug[row]
        for r in range(row + 1, n_rows):
            if aug[r][col] != 0:
                f = aug[r][col] / aug[row][col]
                for j in range(col, n_cols + 1):
                    aug[r][j] -= f * aug[row][j]
        pivots.append((row, col))
        row += 1

    for r in range(row, n_rows):
        if aug[r][n_cols] != 0:
            raise ValueError("inconsistent linear system")

    x = [0] * n_cols
    for r, c in reversed(pivots):
        s = aug[r][n_cols]
        for j in range(c + 1, n_cols):
            s -= aug[r][j] * x[j]
        x[c] = s / aug[r][c]
    return x
