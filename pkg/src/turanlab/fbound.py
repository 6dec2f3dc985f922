"""Exact evaluation of the bound difference f(k, theta) = Q/n^4 - R/n^4.

``Q/n^4`` is bounded below by

    (4k^3 - 26k^2 + 42k) x^3 + 17 x^2 + (3k^2 - 17k + 55) x^4,   x = 1/(k-1) - theta

and ``R/n^4`` above by

    (4k^3 - 23k^2 + 22k + 33) y^4 + 48 y^3,                      y = 1/(k-1) + theta.

All arithmetic uses :class:`fractions.Fraction`, so results are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


@dataclass(frozen=True)
class FBound:
    k: int
    theta: Fraction
    q_lower: Fraction
    r_upper: Fraction

    @property
    def value(self) -> Fraction:
        return self.q_lower - self.r_upper


def q_lower(k: int, theta: Fraction | int = 0) -> Fraction:
    x = Fraction(1, k - 1) - Fraction(theta)
    return (4 * k**3 - 26 * k**2 + 42 * k) * x**3 + 17 * x**2 + (3 * k**2 - 17 * k + 55) * x**4


def r_upper(k: int, theta: Fraction | int = 0) -> Fraction:
    y = Fraction(1, k - 1) + Fraction(theta)
    return (4 * k**3 - 23 * k**2 + 22 * k + 33) * y**4 + 48 * y**3


def f_k_theta(k: int, theta: Fraction | int = 0) -> FBound:
    theta = Fraction(theta)
    if k < 4:
        raise ValueError("f(k, theta) is defined for k >= 4")
    if not 0 <= theta < Fraction(1, k - 1):
        raise ValueError("theta must satisfy 0 <= theta < 1/(k-1)")
    return FBound(k, theta, q_lower(k, theta), r_upper(k, theta))


def f_k0_numerator(k: int) -> int:
    """``f(k, 0) * (k-1)^4`` computed term by term over the common denominator."""
    d = k - 1
    return (
        (4 * k**3 - 26 * k**2 + 42 * k) * d
        + 17 * d**2
        + (3 * k**2 - 17 * k + 55)
        - (4 * k**3 - 23 * k**2 + 22 * k + 33)
        - 48 * d
    )


def f_k0(k: int) -> Fraction:
    return Fraction(f_k0_numerator(k), (k - 1) ** 4)


def printed_closed_form(k: int) -> Fraction:
    """The simplified quartic as printed: (4k^4 - 24k^3 + 111k^2 - 163k + 87)/(k-1)^4."""
    return Fraction(4 * k**4 - 24 * k**3 + 111 * k**2 - 163 * k + 87, (k - 1) ** 4)


def simplified_closed_form(k: int) -> Fraction:
    """The quartic the bound terms actually reduce to."""
    return Fraction(4 * k**4 - 34 * k**3 + 111 * k**2 - 163 * k + 87, (k - 1) ** 4)


@dataclass
class FScanReport:
    k_max: int
    all_positive: bool
    minimum: Fraction
    argmin: int
    min_at_4: bool
    f4: Fraction
    closed_form_checked: range
    closed_form_mismatches: list[int]

    @property
    def ok(self) -> bool:
        return self.all_positive and self.min_at_4 and not self.closed_form_mismatches


def f_k0_positive_scan(k_max: int, closed_form_upto: int = 50) -> FScanReport:
    """Check f(k, 0) > 0 and f(k, 0) >= f(4, 0) for 4 <= k <= k_max.

    Comparisons are done on integer numerators over ``(k-1)^4`` so a scan
    to ``k = 10^4`` stays well under a second.  The printed closed form is
    compared with the term-by-term value for ``4 <= k <= closed_form_upto``.
    """
    if k_max < 4:
        raise ValueError("k_max must be at least 4")
    num4, den4 = f_k0_numerator(4), 3**4
    all_pos = True
    best_num, best_den, best_k = num4, den4, 4
    for k in range(4, k_max + 1):
        num, den = f_k0_numerator(k), (k - 1) ** 4
        if num <= 0:
            all_pos = False
        if num * best_den < best_num * den:
            best_num, best_den, best_k = num, den, k
    checked = range(4, min(closed_form_upto, k_max) + 1) if closed_form_upto >= 4 else range(0)
    mismatches = [k for k in checked if printed_closed_form(k) != f_k0(k)]
    return FScanReport(
        k_max=k_max,
        all_positive=all_pos,
        minimum=Fraction(best_num, best_den),
        argmin=best_k,
        min_at_4=best_k == 4,
        f4=Fraction(num4, den4),
        closed_form_checked=checked,
        closed_form_mismatches=mismatches,
    )
