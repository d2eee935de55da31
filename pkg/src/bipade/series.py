"""Truncated bivariate power series f(x, y) = sum c[n][m] x^n y^m."""
from __future__ import annotations

from typing import Sequence

from .algebra import Poly
from .errors import InputError, OrderError


class BivSeries:
    """Rectangular coefficient table c[n][m], 0 <= n <= N, 0 <= m <= M.

    The constant coefficient c[0][0] must be zero (the represented function
    vanishes at the origin).  Entries are immutable after construction.
    """

    __slots__ = ("c", "N", "M")

    def __init__(self, table: Sequence[Sequence]):
        rows = [tuple(row) for row in table]
        if not rows or not rows[0]:
            raise InputError("series table must be non-empty")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise InputError("series table must be rectangular (no holes)")
        if rows[0][0] != 0:
            raise InputError("c[0][0] must be zero")
        self.c = rows
        self.N = len(rows) - 1
        self.M = width - 1

    def coeff(self, n: int, m: int):
        """c[n][m]; negative indices read as zero, excess indices are an error."""
        if n < 0 or m < 0:
            return 0
        if n > self.N or m > self.M:
            raise OrderError(
                f"series truncated at ({self.N}, {self.M}); coefficient "
                f"({n}, {m}) requested",
                required=(n, m),
            )
        return self.c[n][m]

    def slice_x(self, up_to: int, m: int) -> Poly:
        """Polynomial sum_{i<=up_to} c[i][m] x^i."""
        if up_to > self.N or m > self.M:
            raise OrderError(
                f"series truncated at ({self.N}, {self.M}); x-slice up to "
                f"({up_to}, {m}) requested",
                required=(up_to, m),
            )
        return Poly([self.c[i][m] for i in range(up_to + 1)])

    def x_coeffs(self, m: int = 0):
        """All x-coefficients of the y^m column, as a list."""
        if m > self.M:
            raise OrderError(
                f"series truncated at ({self.N}, {self.M}); column {m} requested",
                required=(0, m),
            )
        return [self.c[i][m] for i in range(self.N + 1)]

    def y_coeffs(self, n: int = 0):
        """All y-coefficients of the x^n row, as a list."""
        if n > self.N:
            raise OrderError(
                f"series truncated at ({self.N}, {self.M}); row {n} requested",
                required=(n, 0),
            )
        return list(self.c[n])

    def transpose(self) -> "BivSeries":
        """The series of f(y, x): entries and orders swapped."""
        return BivSeries(
            [[self.c[n][m] for n in range(self.N + 1)] for m in range(self.M + 1)]
        )

    def __eq__(self, other):
        if not isinstance(other, BivSeries):
            return NotImplemented
        return self.c == other.c

    def __repr__(self):
        return f"BivSeries(N={self.N}, M={self.M})"


def required_orders(n: int, m: int):
    """Orders (N, M) a series must carry for a left-(n, m) approximant.

    The x-direction consumes c[i][j] for i <= 2n, j <= m; the y-seed
    computation additionally reads the j <= 2m prefix of the x^0 row.
    """
    return 2 * n, max(m, 2 * m)


def check_orders(series: BivSeries, n: int, m: int):
    """Fail fast if `series` is too short for a left-(n, m) approximant."""
    need_n, need_m = required_orders(n, m)
    if series.N < need_n or series.M < need_m:
        raise OrderError(
            f"left-({n},{m}) approximant needs series orders at least "
            f"({need_n}, {need_m}); got ({series.N}, {series.M})",
            required=(need_n, need_m),
        )
