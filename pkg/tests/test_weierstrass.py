import random
from fractions import Fraction

import pytest

from tropmod.weierstrass import (
    SingularCurveError,
    WeierstrassCurve,
    curves_isomorphic,
    discriminant,
    j_invariant,
)

E = WeierstrassCurve


def test_discriminant_examples():
    assert discriminant(E(-3, 2)) == 0
    assert discriminant(E(0, 0)) == 0
    assert discriminant(E(1, 0)) == 4


def test_j_examples():
    assert j_invariant(E(1, 0)) == 1
    assert j_invariant(E(0, 1)) == 0
    with pytest.raises(SingularCurveError, match="singular"):
        j_invariant(E(-3, 2))


def test_j_is_exact():
    j = j_invariant(E(Fraction(1, 3), 1))
    assert isinstance(j, Fraction)
    assert j == Fraction(4, 27) / (Fraction(4, 27) + 27)


def test_isomorphism_examples():
    assert curves_isomorphic(E(1, 0), E(4, 0))
    assert not curves_isomorphic(E(1, 0), E(0, 1))
    assert curves_isomorphic(E(2, 5), E(2, 5))
    with pytest.raises(SingularCurveError):
        curves_isomorphic(E(-3, 2), E(1, 0))


def test_scaling_homogeneity():
    rng = random.Random(1728)
    for _ in range(100):
        lam = Fraction(rng.choice([-1, 1]) * rng.randint(1, 40), rng.randint(1, 40))
        a = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        b = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        if discriminant(E(a, b)) == 0:
            continue
        scaled = E(lam ** 4 * a, lam ** 6 * b)
        assert discriminant(scaled) == lam ** 12 * discriminant(E(a, b))
        assert j_invariant(scaled) == j_invariant(E(a, b))
