"""Exact coordinates on the index line.

A coordinate is either a rational number or a quadratic surd
``rat + coef*sqrt(rad)`` with rational ``rat``, ``coef`` and a squarefree
integer radicand ``rad >= 2``.  All comparisons are decided exactly by sign
analysis; no floating point enters any decision.

``INF`` is the single point at positive infinity used for extended
coordinates; it compares strictly greater than every ``Coord``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import DomainError

_SQUAREFREE_CACHE: dict[int, tuple[int, int]] = {}


def _square_split(n: int) -> tuple[int, int]:
    """Return (s, f) with n = s*s*f and f squarefree."""
    if n in _SQUAREFREE_CACHE:
        return _SQUAREFREE_CACHE[n]
    s, f, m = 1, 1, n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                f *= d
        d += 1
    f *= m
    _SQUAREFREE_CACHE[n] = (s, f)
    return s, f


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_one_radical(a: Fraction, b: Fraction, d: int) -> int:
    """Exact sign of a + b*sqrt(d) for squarefree d >= 2."""
    if b == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    sa, sb = _sign(a), _sign(b)
    if sa == sb:
        return sa
    # Opposite signs: compare a*a against b*b*d.  Equality cannot occur
    # because sqrt(d) is irrational.
    return sa if a * a > b * b * d else sb


def _sign_two_radicals(a: Fraction, b: Fraction, d: int, c: Fraction, e: int) -> int:
    """Exact sign of a + b*sqrt(d) + c*sqrt(e), d != e squarefree, b, c != 0."""
    # Compare x = a + b*sqrt(d) against y = -c*sqrt(e).
    sx = _sign_one_radical(a, b, d)
    sy = -_sign(c)
    if sx != sy:
        if sx > sy:
            return 1
        return -1
    s = sx
    if s == 0:
        return 0
    # Same nonzero sign: compare squares.  x^2 - y^2 = (a^2 + b^2 d - c^2 e) + 2ab*sqrt(d)
    t = _sign_one_radical(a * a + b * b * d - c * c * e, 2 * a * b, d)
    return t if s > 0 else -t


class Coord:
    """Immutable exact coordinate ``rat + coef*sqrt(rad)``."""

    __slots__ = ("rat", "coef", "rad")

    def __init__(self, rat, coef=0, rad: int = 0):
        rat = Fraction(rat)
        coef = Fraction(coef)
        if coef != 0:
            if rad < 2:
                raise DomainError("bad_radicand", f"radicand must be >= 2, got {rad}")
            s, f = _square_split(rad)
            if f == 1:
                rat += coef * s
                coef, rad = Fraction(0), 0
            else:
                coef *= s
                rad = f
        else:
            rad = 0
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "coef", coef)
        object.__setattr__(self, "rad", rad)

    def __setattr__(self, name, value):
        raise AttributeError("Coord is immutable")

    @property
    def is_rational(self) -> bool:
        return self.coef == 0

    def _cmp(self, other: "Coord") -> int:
        a = self.rat - other.rat
        b, d = self.coef, self.rad
        c, e = -other.coef, other.rad
        if b == 0 and c == 0:
            return _sign(a)
        if b == 0:
            return _sign_one_radical(a, c, e)
        if c == 0:
            return _sign_one_radical(a, b, d)
        if d == e:
            return _sign_one_radical(a, b + c, d)
        return _sign_two_radicals(a, b, d, c, e)

    def __eq__(self, other):
        if isinstance(other, Coord):
            return self._cmp(other) == 0
        if isinstance(other, _Infinity):
            return False
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Coord):
            return self._cmp(other) < 0
        if isinstance(other, _Infinity):
            return True
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, Coord):
            return self._cmp(other) <= 0
        if isinstance(other, _Infinity):
            return True
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, Coord):
            return self._cmp(other) > 0
        if isinstance(other, _Infinity):
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, Coord):
            return self._cmp(other) >= 0
        if isinstance(other, _Infinity):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.rat, self.coef, self.rad))

    def __add__(self, other):
        other = as_coord(other)
        if self.coef == 0 or other.coef == 0 or self.rad == other.rad:
            rad = self.rad or other.rad
            return Coord(self.rat + other.rat, self.coef + other.coef, rad)
        raise DomainError(
            "incompatible_radicands",
            f"cannot add coordinates with radicands {self.rad} and {other.rad}",
        )

    def __sub__(self, other):
        return self + (-as_coord(other))

    def __neg__(self):
        return Coord(-self.rat, -self.coef, self.rad)

    def __abs__(self):
        return -self if self._cmp(ZERO) < 0 else self

    def floor(self) -> int:
        """Largest integer <= self, decided exactly."""
        if self.coef == 0:
            return math.floor(self.rat)
        guess = math.floor(self.rat + float(self.coef) * math.sqrt(self.rad))
        g = Coord(guess)
        while g > self:
            guess -= 1
            g = Coord(guess)
        while Coord(guess + 1) <= self:
            guess += 1
        return guess

    def __str__(self):
        if self.coef == 0:
            return str(self.rat)
        tail = f"{self.coef}*sqrt({self.rad})"
        if self.rat == 0:
            return tail
        return f"{self.rat}+{tail}" if self.coef > 0 else f"{self.rat}{tail}"

    def __repr__(self):
        return f"Coord({self})"


class _Infinity:
    """The point at positive infinity.  A singleton; use ``INF``."""

    __slots__ = ()

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __lt__(self, other):
        if isinstance(other, (_Infinity, Coord)):
            return False
        return NotImplemented

    def __le__(self, other):
        return isinstance(other, _Infinity)

    def __gt__(self, other):
        if isinstance(other, _Infinity):
            return False
        if isinstance(other, Coord):
            return True
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (_Infinity, Coord)):
            return True
        return NotImplemented

    def __hash__(self):
        return hash("ordspec.INF")

    def __str__(self):
        return "inf"

    def __repr__(self):
        return "INF"


INF = _Infinity()
ZERO = Coord(0)

ExtCoord = Union[Coord, _Infinity]


def is_inf(x: ExtCoord) -> bool:
    return isinstance(x, _Infinity)


def as_coord(x) -> Coord:
    if isinstance(x, Coord):
        return x
    if isinstance(x, (int, Fraction)):
        return Coord(x)
    raise DomainError("not_a_coordinate", f"cannot interpret {x!r} as a coordinate")


def _scaled_floor(x: Coord, denom: int) -> int:
    """floor(x * denom) computed exactly."""
    return Coord(x.rat * denom, x.coef * denom, x.rad).floor()


def rational_between(lo: Coord, hi: Coord) -> Coord:
    """A rational coordinate strictly between lo and hi (lo < hi required).

    For rational endpoints this is the midpoint.  Otherwise dyadic grids of
    increasing resolution are scanned, so the result is deterministic and
    works for any pair of coordinates regardless of their radicands.
    """
    if not lo < hi:
        raise DomainError("empty_interval", f"no room between {lo} and {hi}")
    if lo.is_rational and hi.is_rational:
        return Coord((lo.rat + hi.rat) / 2)
    denom = 1
    while True:
        k = _scaled_floor(lo, denom) + 1
        cand = Coord(Fraction(k, denom))
        if lo < cand < hi:
            return cand
        denom *= 2


def rational_above(x: Coord) -> Coord:
    """The rational floor(x) + 1, always strictly above x."""
    return Coord(x.floor() + 1)


def rational_below(x: Coord) -> Coord:
    """A rational strictly below x: floor(x), or floor(x) - 1 when x is an integer."""
    f = Coord(x.floor())
    return f if f < x else Coord(x.floor() - 1)
