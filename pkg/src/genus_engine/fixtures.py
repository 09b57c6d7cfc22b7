"""Closed-form reference polynomials, stored as coefficient tables in nu.

Row k lists ``(p, c)`` pairs meaning ``c nu**p`` in the coefficient of z0**k.
"""

from __future__ import annotations

from fractions import Fraction

from .symbolics import PolyQ, RationalZ0

Z2_ROWS = (
    ((6, 2), (7, -14), (8, 24)),
    ((3, -12), (4, 148), (5, -546), (6, 758), (7, -252), (8, -96)),
    ((2, 264), (3, -1510), (4, 2551), (5, -500), (6, -1789), (7, 840), (8, 144)),
    ((1, -536), (2, 1396), (3, 912), (4, -4596), (5, 2492), (6, 1296), (7, -868), (8, -96)),
    ((0, 168), (1, 234), (2, -1467), (3, 558), (4, 1902), (5, -1446), (6, -267), (7, 294), (8, 24)),
)

E2_ROWS = (
    ((3, -1), (4, 5), (5, 8)),
    ((2, -1), (3, 41), (4, -24), (5, -16)),
    ((1, 44), (2, -89), (3, 54), (4, -17), (5, 8)),
    ((0, -12), (1, -12), (2, 108), (3, -132), (4, 48)),
    ((0, -12), (1, 48), (2, -72), (3, 48), (4, -12)),
)


def _poly(rows, nu, scale) -> PolyQ:
    return PolyQ([scale * sum(c * nu ** p for p, c in r) for r in rows])


def z2_numerator(nu: int) -> PolyQ:
    """P with ``z_2 = z0 (z0 - 1) P(z0) / u**9``."""
    return _poly(Z2_ROWS, nu, Fraction((nu - 1) * nu, 1440))


def z2_reference(nu: int) -> RationalZ0:
    return RationalZ0(nu, PolyQ([0, -1, 1]) * z2_numerator(nu), 0, 9)


def e2_numerator(nu: int) -> PolyQ:
    """Q with ``e_2 = (z0 - 1) Q(z0) / u**5``."""
    return _poly(E2_ROWS, nu, Fraction(nu - 1, 2880))


def e2_reference(nu: int) -> RationalZ0:
    return RationalZ0(nu, PolyQ([-1, 1]) * e2_numerator(nu), 0, 5)


def z1_coeffs(nu: int) -> tuple[Fraction, Fraction, Fraction]:
    return (Fraction(nu * (nu + 2), 12), Fraction(-nu * (3 * nu + 2), 12), Fraction(nu * nu, 6))
