"""Rook and queen polynomial tables and their generating-function checks.

Both tables replace one coefficient of a lattice-path recurrence with the
variable z.  The rook table P[m][n] satisfies

    P[m][n] = 2 P[m-1][n] + 2 P[m][n-1] + z P[m-1][n-1],   P[0][0] = 1,

the queen table Q[m][n] satisfies

    Q[m][n] = 2 Q[m-1][n] + 2 Q[m][n-1] - Q[m-1][n-1]
              - 3 Q[m-2][n-1] - 3 Q[m-1][n-2] + z Q[m-2][n-2],   Q[0][0] = 1,

with entries at negative indices identically zero.  The rook diagonal is a
rescaled Legendre polynomial, P[m][m](z) = z**m * L_m(8/z + 1), and the queen
diagonal is the coefficient sequence of an algebraic generating function
handled in :mod:`queenpoly.genfun`; this module verifies both claims by exact
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactpoly import QQ, ZZ, ExactPoly, poly_mul

KINDS = ("rook", "queen")

_Z = ExactPoly([0, 1], ZZ)
_ZERO = ExactPoly([], ZZ)
_ONE = ExactPoly([1], ZZ)


@dataclass(frozen=True)
class PolyTable:
    """(M+1) x (N+1) grid of integer-coefficient polynomials in z."""

    kind: str
    entries: tuple[tuple[ExactPoly, ...], ...]

    @property
    def m_max(self) -> int:
        return len(self.entries) - 1

    @property
    def n_max(self) -> int:
        return len(self.entries[0]) - 1

    def at(self, m: int, n: int) -> ExactPoly:
        """Entry accessor; negative indices yield the zero polynomial."""
        if m < 0 or n < 0:
            return _ZERO
        return self.entries[m][n]

    def recheck(self, m: int, n: int) -> bool:
        """Re-verify that entry (m, n) satisfies its defining recurrence."""
        if m == 0 and n == 0:
            return self.entries[0][0] == _ONE
        return self.entries[m][n] == _recurrence_rhs(self.kind, self.at, m, n)


def _recurrence_rhs(kind, at, m, n) -> ExactPoly:
    if kind == "rook":
        return (
            at(m - 1, n).scale(2)
            + at(m, n - 1).scale(2)
            + poly_mul(_Z, at(m - 1, n - 1))
        )
    return (
        at(m - 1, n).scale(2)
        + at(m, n - 1).scale(2)
        - at(m - 1, n - 1)
        - at(m - 2, n - 1).scale(3)
        - at(m - 1, n - 2).scale(3)
        + poly_mul(_Z, at(m - 2, n - 2))
    )


def build_table(kind: str, M: int, N: int) -> PolyTable:
    """Fill the table row-major from its recurrence; all arithmetic exact."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if M < 0 or N < 0:
        raise ValueError("table dimensions must be non-negative")
    grid: list[list[ExactPoly]] = [[_ZERO] * (N + 1) for _ in range(M + 1)]

    def at(i: int, j: int) -> ExactPoly:
        if i < 0 or j < 0:
            return _ZERO
        return grid[i][j]

    grid[0][0] = _ONE
    for m in range(M + 1):
        for n in range(N + 1):
            if m == 0 and n == 0:
                continue
            grid[m][n] = _recurrence_rhs(kind, at, m, n)
    return PolyTable(kind, tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class BivariateTruncation:
    """Truncated double power series in (s, t) with polynomial-in-z entries.

    ``coeffs[m][n]`` is the coefficient of s**m t**n; both grid dimensions are
    maxdeg + 1.  Products are truncated to the same box, which is exact for
    box-coefficient comparisons because the product coefficient at (m, n) only
    involves factors with indices <= (m, n).
    """

    maxdeg: int
    coeffs: tuple[tuple[ExactPoly, ...], ...]

    @classmethod
    def from_table(cls, table: PolyTable, maxdeg: int) -> "BivariateTruncation":
        grid = tuple(
            tuple(table.at(m, n) for n in range(maxdeg + 1)) for m in range(maxdeg + 1)
        )
        return cls(maxdeg, grid)

    @classmethod
    def gf_denominator(cls, kind: str, maxdeg: int) -> "BivariateTruncation":
        """The reciprocal-series denominator of the table's generating function."""
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
        grid = [[_ZERO] * (maxdeg + 1) for _ in range(maxdeg + 1)]
        grid[0][0] = _ONE
        if kind == "rook":
            # 1 - 2s - 2t - z*st
            grid[1][0] = ExactPoly([-2], ZZ)
            grid[0][1] = ExactPoly([-2], ZZ)
            grid[1][1] = ExactPoly([0, -1], ZZ)
        else:
            # 1 - 2(s + t + st) + 3(st + s^2 t + s t^2) - z s^2 t^2
            grid[1][0] = ExactPoly([-2], ZZ)
            grid[0][1] = ExactPoly([-2], ZZ)
            grid[1][1] = ExactPoly([1], ZZ)
            grid[2][1] = ExactPoly([3], ZZ)
            grid[1][2] = ExactPoly([3], ZZ)
            grid[2][2] = ExactPoly([0, -1], ZZ)
        return cls(maxdeg, tuple(tuple(row) for row in grid))

    def mul_truncated(self, other: "BivariateTruncation") -> "BivariateTruncation":
        if self.maxdeg != other.maxdeg:
            raise ValueError("truncation orders differ")
        k = self.maxdeg
        out = [[_ZERO] * (k + 1) for _ in range(k + 1)]
        for m in range(k + 1):
            for n in range(k + 1):
                acc = _ZERO
                for i in range(m + 1):
                    for j in range(n + 1):
                        a = self.coeffs[i][j]
                        if a.is_zero():
                            continue
                        b = other.coeffs[m - i][n - j]
                        if b.is_zero():
                            continue
                        acc = acc + poly_mul(a, b)
                out[m][n] = acc
        return BivariateTruncation(k, tuple(tuple(row) for row in out))

    def first_non_identity(self) -> Optional[tuple[int, int]]:
        """First (m, n) where this differs from the constant series 1."""
        for m in range(self.maxdeg + 1):
            for n in range(self.maxdeg + 1):
                want = _ONE if (m, n) == (0, 0) else _ZERO
                if self.coeffs[m][n] != want:
                    return (m, n)
        return None


@dataclass(frozen=True)
class GFCheckResult:
    ok: bool
    first_mismatch: Optional[tuple[int, int]]

    def __bool__(self) -> bool:
        return self.ok


def gf_check(table: PolyTable, order: int) -> GFCheckResult:
    """Verify denominator * truncated table series == 1 through the box order.

    Falsy results carry the first offending (m, n).
    """
    if order > min(table.m_max, table.n_max):
        raise ValueError("order exceeds the table dimensions")
    series = BivariateTruncation.from_table(table, order)
    den = BivariateTruncation.gf_denominator(table.kind, order)
    bad = den.mul_truncated(series).first_non_identity()
    return GFCheckResult(bad is None, bad)


def diagonal(table: PolyTable, M: int) -> list[ExactPoly]:
    """The diagonal entries table[m][m] for m = 0..M."""
    if M > min(table.m_max, table.n_max):
        raise ValueError("diagonal length exceeds the table dimensions")
    return [table.at(m, m) for m in range(M + 1)]


def legendre(m: int) -> ExactPoly:
    """Legendre polynomial L_m over exact rationals.

    Three-term recurrence: (k+1) L_{k+1} = (2k+1) z L_k - k L_{k-1},
    seeded with L_0 = 1, L_1 = z.
    """
    if m < 0:
        raise ValueError("Legendre index must be non-negative")
    z = ExactPoly([0, 1], QQ)
    prev = ExactPoly([1], QQ)
    if m == 0:
        return prev
    cur = z
    for k in range(1, m):
        nxt = (poly_mul(z, cur).scale(2 * k + 1) - prev.scale(k)).scale(Fraction(1, k + 1))
        prev, cur = cur, nxt
    return cur


def rook_diagonal_expected(m: int) -> ExactPoly:
    """z**m * L_m(8/z + 1) expanded into a polynomial in z (over QQ).

    Writing L_m(w) = sum_k c_k w**k and substituting w = (8 + z)/z gives
    sum_k c_k (8 + z)**k z**(m-k), a genuine polynomial since k <= m.
    """
    L = legendre(m)
    base = ExactPoly([8, 1], QQ)
    acc = ExactPoly([], QQ)
    power = ExactPoly([1], QQ)  # (8 + z)**k, built incrementally
    for k, c in enumerate(L.coeffs):
        if c != 0:
            acc = acc + power.scale(c).shift(m - k)
        if k < L.degree():
            power = poly_mul(power, base)
    return acc


def rook_diagonal_identity_check(m: int, table: Optional[PolyTable] = None) -> bool:
    """Exact comparison of the rook diagonal entry with its Legendre form."""
    if table is None:
        table = build_table("rook", m, m)
    lhs = table.at(m, m).to_fractions()
    return lhs == rook_diagonal_expected(m)
