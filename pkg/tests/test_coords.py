import math
from fractions import Fraction

import pytest

from ordspec import Coord, DomainError, INF
from ordspec.coords import rational_above, rational_below, rational_between

from conftest import subseed


def test_rational_comparisons_and_canonical_form():
    assert Coord(1) < Coord(Fraction(3, 2)) < Coord(2)
    assert Coord(Fraction(2, 4)) == Coord(Fraction(1, 2))
    assert Coord(Fraction(-7, 3)) < Coord(-2)


def test_surd_canonicalization():
    assert Coord(0, 1, 8) == Coord(0, 2, 2)
    assert Coord(0, 1, 4) == Coord(2)          # sqrt(4) collapses to rational
    assert Coord(1, 0, 0).is_rational
    assert Coord(0, 1, 12) == Coord(0, 2, 3)
    with pytest.raises(DomainError):
        Coord(0, 1, 1)
    with pytest.raises(DomainError):
        Coord(0, 1, -2)


def test_surd_comparisons_match_floats():
    rng = subseed(1)
    rads = [2, 3, 5, 7]
    for _ in range(400):
        a = Coord(Fraction(rng.randint(-8, 8), rng.randint(1, 4)),
                  Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                  rng.choice(rads))
        b = Coord(Fraction(rng.randint(-8, 8), rng.randint(1, 4)),
                  Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                  rng.choice(rads))
        fa = float(a.rat) + float(a.coef) * math.sqrt(a.rad or 1)
        fb = float(b.rat) + float(b.coef) * math.sqrt(b.rad or 1)
        if abs(fa - fb) > 1e-9:
            assert (a < b) == (fa < fb), (a, b)


def test_equal_surds_detected_exactly():
    # sqrt(2)*3/2 written against sqrt(8)*3/4
    assert Coord(5, Fraction(3, 2), 2) == Coord(5, Fraction(3, 4), 8)
    assert not Coord(0, 1, 2) == Coord(0, 1, 3)


def test_infinity_is_maximum():
    assert Coord(10**9) < INF
    assert INF <= INF and INF == INF
    assert not INF < Coord(0)
    assert INF > Coord(0, 7, 5)


def test_arithmetic_same_radicand():
    s = Coord(1, 2, 3)
    assert s - Coord(1) == Coord(0, 2, 3)
    assert s + Coord(0, -2, 3) == Coord(1)
    assert abs(Coord(0, -1, 2)) == Coord(0, 1, 2)


def test_arithmetic_mixed_radicands_rejected():
    with pytest.raises(DomainError):
        Coord(0, 1, 2) + Coord(0, 1, 3)


def test_floor_exact_at_boundaries():
    assert Coord(3).floor() == 3
    assert Coord(Fraction(-1, 2)).floor() == -1
    assert Coord(0, 1, 2).floor() == 1
    assert Coord(0, -1, 2).floor() == -2
    assert Coord(4, 0, 0).floor() == 4
    # 3 - 2*sqrt(2) = 0.1715...
    assert Coord(3, -2, 2).floor() == 0


def test_rational_between_any_pair():
    rng = subseed(2)
    pairs = [
        (Coord(0), Coord(1)),
        (Coord(0, 1, 2), Coord(0, 1, 3)),
        (Coord(Fraction(7, 5)), Coord(0, 1, 2)),
        (Coord(-3), Coord(0, -1, 2)),
    ]
    for _ in range(50):
        a = Coord(Fraction(rng.randint(-20, 20), rng.randint(1, 9)))
        b = Coord(Fraction(rng.randint(-20, 20), rng.randint(1, 9)))
        if a < b:
            pairs.append((a, b))
    for lo, hi in pairs:
        mid = rational_between(lo, hi)
        assert lo < mid < hi
        assert mid.is_rational
    with pytest.raises(DomainError):
        rational_between(Coord(1), Coord(1))


def test_rational_above_below():
    assert rational_above(Coord(0)) == Coord(1)
    assert rational_above(Coord(Fraction(3, 2))) == Coord(2)
    assert rational_below(Coord(0)) == Coord(-1)
    s = Coord(0, 1, 2)
    assert rational_below(s) < s < rational_above(s)
