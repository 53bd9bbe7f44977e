"""The interleaving pseudometric on the spectrum over the dense line.

Sign convention, stated once and prominently: the shift by eps moves
interval data DOWN, because the shifted module evaluates the original one
eps further to the right.  [a, b) becomes [a - eps, b - eps) and the ideal
at coordinate c becomes the ideal at c - eps; the full ideal is fixed.

Two ideals are eps-interleaved exactly when each shifted ideal is contained
in the other, decided by the exact order on the double line; the boundary
eps equal to the coordinate distance is therefore decided rather than
approximated.  The distance between two bounded ideals is the absolute
coordinate difference, flavors invisible; the full ideal sits at infinite
distance from everything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coords import Coord, INF, is_inf
from .errors import DomainError
from .fp_category import FpInterval
from .order_core import DPoint, IndexModel, Ordering, cmp_d, DenseLine, validate_dpoint
from .spectrum import SymbolicSet, Cut, INF_LOW, TOP, finite_cut, _FINITE_KIND


def _require_dense(model: IndexModel):
    if not isinstance(model, DenseLine):
        raise DomainError("dense_only", "interleaving is defined over the dense line models")


def eps_value(value) -> Fraction:
    eps = Fraction(value)
    if eps < 0:
        raise DomainError("bad_eps", "shift amounts must be non-negative")
    return eps


@dataclass(frozen=True)
class ExtDistance:
    """A non-negative exact distance or the infinite value."""

    value: Coord | None  # None encodes infinity

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __str__(self):
        return "inf" if self.value is None else str(self.value)


INFINITE_DISTANCE = ExtDistance(None)


def shift_interval(model: IndexModel, iv: FpInterval, eps) -> FpInterval:
    _require_dense(model)
    eps = eps_value(eps)
    delta = Coord(eps)
    new_end = iv.end if is_inf(iv.end) else iv.end - delta
    return FpInterval(iv.start - delta, new_end)


def shift_ideal(model: IndexModel, p: DPoint, eps) -> DPoint:
    _require_dense(model)
    validate_dpoint(model, p)
    eps = eps_value(eps)
    if is_inf(p.coord):
        return p
    return DPoint(p.coord - Coord(eps), p.flavor)


def is_interleaved(model: IndexModel, i: DPoint, j: DPoint, eps) -> bool:
    """Whether the ideals i and j admit an eps-interleaving.

    Maps between these injectives exist exactly for containments of ideals,
    and the transition maps are never zero, so the interleaving condition
    collapses to shift(j) <= i and shift(i) <= j in the double line order.
    """
    _require_dense(model)
    validate_dpoint(model, i)
    validate_dpoint(model, j)
    eps = eps_value(eps)
    si = shift_ideal(model, i, eps)
    sj = shift_ideal(model, j, eps)
    return (
        cmp_d(model, sj, i) is not Ordering.GREATER
        and cmp_d(model, si, j) is not Ordering.GREATER
    )


def distance(model: IndexModel, i: DPoint, j: DPoint) -> ExtDistance:
    """The interleaving distance: coordinate difference, flavors invisible."""
    _require_dense(model)
    validate_dpoint(model, i)
    validate_dpoint(model, j)
    ii, ji = is_inf(i.coord), is_inf(j.coord)
    if ii and ji:
        return ExtDistance(Coord(0))
    if ii or ji:
        return INFINITE_DISTANCE
    return ExtDistance(abs(i.coord - j.coord))


def ball(model: IndexModel, p: DPoint, eps) -> SymbolicSet:
    """The open metric ball around p; the ball around the full ideal is itself."""
    _require_dense(model)
    validate_dpoint(model, p)
    eps = eps_value(eps)
    if eps == 0:
        raise DomainError("bad_eps", "open balls need a positive radius")
    if is_inf(p.coord):
        return SymbolicSet(((INF_LOW, TOP),))
    delta = Coord(eps)
    lo = finite_cut(model, p.coord - delta, 2)
    hi = Cut(_FINITE_KIND, p.coord + delta, 0)
    return SymbolicSet(((lo, hi),))


@dataclass(frozen=True)
class DistanceBracket:
    """Result of the grid scan: a bracket of width <= step, or infinity."""

    lower: Fraction | None
    upper: Fraction | None

    @property
    def is_infinite(self) -> bool:
        return self.lower is None


INFINITE_BRACKET = DistanceBracket(None, None)


def brute_force_distance(model: IndexModel, i: DPoint, j: DPoint, step) -> DistanceBracket:
    """Bracket the interleaving infimum by scanning eps on a uniform grid.

    Scans 0, step, 2*step, ... with the interleaving decision; the first hit
    at k*step yields the bracket [(k-1)*step, k*step].  Past the documented
    cutoff (coordinate distance plus one, or one when a coordinate is
    infinite) the distance is reported infinite.
    """
    _require_dense(model)
    step = Fraction(step)
    if step <= 0:
        raise DomainError("bad_step", "the scan step must be positive")
    validate_dpoint(model, i)
    validate_dpoint(model, j)
    ii, ji = is_inf(i.coord), is_inf(j.coord)
    if ii and ji:
        cutoff = Fraction(1)
    elif ii or ji:
        cutoff = Fraction(1)
    else:
        gap = abs(i.coord - j.coord)
        if not gap.is_rational:
            raise DomainError(
                "irrational_gap", "the scan cutoff needs a rational coordinate distance"
            )
        cutoff = gap.rat + 1
    k = 0
    eps = Fraction(0)
    while eps <= cutoff:
        if is_interleaved(model, i, j, eps):
            if k == 0:
                return DistanceBracket(Fraction(0), Fraction(0))
            return DistanceBracket((k - 1) * step, k * step)
        k += 1
        eps = k * step
    return INFINITE_BRACKET
