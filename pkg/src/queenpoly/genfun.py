"""Coefficient extraction from the algebraic generating function D(t, z)**(-alpha).

D is the quartic (in t)

    D(t, z) = t**4 z**2 + t**3 (-2z - 36) + t**2 (49 - 2z) - 14 t + 1,

and F = D**(-alpha) generates a family of polynomial sequences in z: alpha = 1
gives the sequence P_m driving the zero-location certification, alpha = 1/2
reproduces the queen-table diagonal.  Coefficients are extracted through the
first-order relation D F' = -alpha D' F (derivative in t), which needs O(M)
exact polynomial operations instead of expanding a quartic binomial series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exactpoly import QQ, ZZ, ZZ_POLY, ExactPoly, poly_mul

#: Coefficients d_0..d_4 of D(t, z) as integer polynomials in z, ascending t.
DENOMINATOR_COEFFS: tuple[ExactPoly, ...] = (
    ExactPoly([1], ZZ),
    ExactPoly([-14], ZZ),
    ExactPoly([49, -2], ZZ),
    ExactPoly([-36, -2], ZZ),
    ExactPoly([0, 0, 1], ZZ),
)


def denominator_bivariate() -> ExactPoly:
    """D(t, z) as a degree-4 polynomial in t over integer polynomials in z."""
    return ExactPoly(DENOMINATOR_COEFFS, ZZ_POLY)


@dataclass(frozen=True)
class AlphaSeries:
    """Truncated coefficient sequence of D(t, z)**(-alpha).

    ``coeffs[m]`` is the coefficient of t**m, a rational-coefficient
    polynomial in z of degree at most floor(m/2); ``coeffs[0]`` is 1.
    """

    alpha: Fraction
    coeffs: tuple[ExactPoly, ...]

    def __len__(self) -> int:
        return len(self.coeffs)


def alpha_coeffs(alpha: Union[int, Fraction], M: int) -> AlphaSeries:
    """First M+1 coefficients of D**(-alpha) for rational alpha > 0.

    From D F' = -alpha D' F, the coefficients satisfy

        (n+1) c_{n+1} = - sum_{k=1..4} d_k ((n+1-k) + alpha k) c_{n+1-k},

    with c_0 = 1; every step is exact rational arithmetic.
    """
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if M < 0:
        raise ValueError("M must be non-negative")
    d = [p.to_fractions() for p in DENOMINATOR_COEFFS]
    coeffs = [ExactPoly([1], QQ)]
    for n in range(M):
        acc = ExactPoly([], QQ)
        for k in range(1, 5):
            i = n + 1 - k
            if i < 0:
                break
            factor = Fraction(i) + alpha * k
            if factor:
                acc = acc + poly_mul(d[k], coeffs[i]).scale(factor)
        coeffs.append(acc.scale(Fraction(-1, n + 1)))
    return AlphaSeries(alpha, tuple(coeffs))


def pseq(M: int) -> list[ExactPoly]:
    """P_0..P_M of the alpha = 1 sequence by its direct linear recurrence.

    P_m = 14 P_{m-1} - (49 - 2z) P_{m-2} + (2z + 36) P_{m-3} - z**2 P_{m-4},
    with P_0 = 1 and vanishing negative-index terms; integer coefficients
    throughout, avoiding the rational overhead of the general-alpha path.
    """
    if M < 0:
        raise ValueError("M must be non-negative")
    c2 = ExactPoly([49, -2], ZZ)
    c3 = ExactPoly([36, 2], ZZ)
    c4 = ExactPoly([0, 0, 1], ZZ)
    seq = [ExactPoly([1], ZZ)]
    for m in range(1, M + 1):
        acc = seq[m - 1].scale(14)
        if m >= 2:
            acc = acc - poly_mul(c2, seq[m - 2])
        if m >= 3:
            acc = acc + poly_mul(c3, seq[m - 3])
        if m >= 4:
            acc = acc - poly_mul(c4, seq[m - 4])
        seq.append(acc)
    return seq


def degree_check(seq: Union[AlphaSeries, Sequence[ExactPoly], Iterable[ExactPoly]]) -> bool:
    """True iff deg seq[m] <= floor(m/2) for every m."""
    polys = seq.coeffs if isinstance(seq, AlphaSeries) else seq
    return all(p.degree() <= m // 2 for m, p in enumerate(polys))
