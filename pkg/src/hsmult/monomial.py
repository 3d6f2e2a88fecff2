"""Combinatorics of monomial ideals: staircase counts and Newton polygons."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InternalError, InvalidInput, NotOriginSupported


def minimalize(points: Iterable[tuple]) -> tuple:
    """Drop every exponent vector that is componentwise >= another one."""
    pts = set(tuple(p) for p in points)
    if pts and len(next(iter(pts))) == 2:
        # staircase sweep: by x ascending, keep strictly decreasing y
        kept = []
        for p in sorted(pts):
            if not kept or p[1] < kept[-1][1]:
                kept.append(p)
        return tuple(sorted(kept, reverse=True))
    pts = sorted(pts, key=lambda p: (sum(p), p))
    kept = []
    for p in pts:
        if not any(all(a <= b for a, b in zip(q, p)) for q in kept):
            kept.append(p)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by the exponent vectors of its generators."""

    points: tuple
    dimension: int

    def __init__(self, points: Iterable, dimension: int | None = None):
        pts = [tuple(int(e) for e in p) for p in points]
        if not pts:
            raise InvalidInput("a monomial ideal needs at least one generator")
        if dimension is None:
            dimension = len(pts[0])
        if any(len(p) != dimension or min(p, default=0) < 0 for p in pts):
            raise InvalidInput(f"generators must be {dimension} natural numbers each")
        object.__setattr__(self, "points", minimalize(pts))
        object.__setattr__(self, "dimension", dimension)

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(obj["generators"], obj.get("dimension"))
        except (KeyError, TypeError, AttributeError) as exc:
            raise InvalidInput(f"monomial ideal JSON needs 'generators': {exc}") from None

    @classmethod
    def from_ideal(cls, ideal):
        """Convert an :class:`~hsmult.ideal.IdealPresentation` with monomial generators."""
        if not ideal.is_monomial():
            raise InvalidInput("ideal has non-monomial generators")
        return cls([next(iter(g.terms)) for g in ideal.generators], len(ideal.ambient))

    def to_json(self):
        return {"dimension": self.dimension, "generators": [list(p) for p in self.points]}

    def axis_powers(self):
        """Pure-power exponent on each axis, ``None`` where there is none."""
        out = []
        for v in range(self.dimension):
            pure = [p[v] for p in self.points
                    if all(e == 0 for i, e in enumerate(p) if i != v)]
            out.append(min(pure) if pure else None)
        return out

    def is_origin_primary(self):
        return all(a is not None for a in self.axis_powers())

    def __mul__(self, other):
        if other.dimension != self.dimension:
            raise InvalidInput("dimension mismatch")
        return MonomialIdeal([tuple(a + b for a, b in zip(p, q))
                              for p in self.points for q in other.points], self.dimension)

    def __pow__(self, t):
        out = MonomialIdeal([(0,) * self.dimension], self.dimension)
        for _ in range(t):
            out = out * self
        return out


def _require_primary(ideal):
    if not ideal.is_origin_primary():
        raise NotOriginSupported(f"monomial ideal {ideal.points} is not primary to the origin")


def _count_below(points, dim):
    # lattice points of N^dim not >= any point; points assumed to include axis powers
    if dim == 1:
        return min(p[0] for p in points)
    if any(all(e == 0 for e in p) for p in points):
        return 0
    if dim == 2:
        stairs = sorted(minimalize(points))  # x ascending, y descending
        return sum((b[0] - a[0]) * a[1] for a, b in zip(stairs, stairs[1:]))
    top = min(p[0] for p in points if all(e == 0 for e in p[1:]))
    total = 0
    for v in range(top):
        # slice at first coordinate v: generators with p[0] <= v project away the first coordinate
        sliced = minimalize(p[1:] for p in points if p[0] <= v)
        total += _count_below(sliced, dim - 1)
    return total


def staircase_colength(ideal: MonomialIdeal) -> int:
    """Number of monomials outside the ideal (the colength of an origin-primary ideal)."""
    _require_primary(ideal)
    return _count_below(ideal.points, ideal.dimension)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_boundary(ideal: MonomialIdeal) -> list:
    """Vertices of the compact Newton boundary from the y-axis to the x-axis."""
    if ideal.dimension != 2:
        raise InvalidInput("the Newton polygon route is two-dimensional only")
    _require_primary(ideal)
    pts = sorted(ideal.points)  # by x, then y
    hull = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


def newton_multiplicity_2d(ideal: MonomialIdeal) -> int:
    """Twice the area under the Newton boundary (Teissier's covolume formula).

    >>> newton_multiplicity_2d(MonomialIdeal([(3, 0), (2, 1), (1, 3), (0, 4)]))
    11
    """
    hull = newton_boundary(ideal)
    if hull[0][0] != 0 or hull[-1][1] != 0:
        raise InternalError(f"Newton boundary {hull} does not meet both axes")
    # counterclockwise: origin, x-axis intercept, ..., y-axis intercept
    poly = [(0, 0)] + hull[::-1]
    twice_area = Fraction(0)
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        twice_area += x1 * y2 - x2 * y1
    if twice_area.denominator != 1 or twice_area <= 0:
        raise InternalError(f"non-integral doubled covolume {twice_area}")
    return int(twice_area)
