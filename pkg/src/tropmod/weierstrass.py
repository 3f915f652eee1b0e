"""Elliptic curves ``y^2 = x^3 + a x + b`` over the rationals.

The j-invariant here is normalized as ``4a^3 / (4a^3 + 27b^2)``, without
the customary factor 1728.  Isomorphism classes are the same either way.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class SingularCurveError(ValueError):
    pass


@dataclass(frozen=True)
class WeierstrassCurve:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __str__(self):
        return f"y^2 = x^3 + ({self.a})x + ({self.b})"


def discriminant(E: WeierstrassCurve) -> Fraction:
    return 4 * E.a ** 3 + 27 * E.b ** 2


def is_singular(E: WeierstrassCurve) -> bool:
    return discriminant(E) == 0


def j_invariant(E: WeierstrassCurve) -> Fraction:
    """``4a^3 / (4a^3 + 27b^2)``, exactly.

    >>> j_invariant(WeierstrassCurve(1, 0))
    Fraction(1, 1)
    """
    d = discriminant(E)
    if d == 0:
        raise SingularCurveError(f"singular curve: {E}")
    return 4 * E.a ** 3 / d


def curves_isomorphic(E1: WeierstrassCurve, E2: WeierstrassCurve) -> bool:
    return j_invariant(E1) == j_invariant(E2)
