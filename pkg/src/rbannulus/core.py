"""Domain types shared by every annulus solver.

Boundary semantics, used consistently everywhere: a point on the inner
boundary counts toward the inside region, a point on the outer boundary
counts toward the outside region, and a point strictly between the two
boundaries violates emptiness.  Comparisons use an absolute tolerance
(DEFAULT_EPS); inputs are desk-scale doubles, exact predicates are out
of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

DEFAULT_EPS = 1e-9
INF = float("inf")


class Region(Enum):
    """Where a point sits relative to an annulus."""

    INSIDE = "inside"        # within or on the inner boundary
    INTERIOR = "interior"    # strictly between the boundaries
    OUTSIDE = "outside"      # outside or on the outer boundary


@dataclass(frozen=True)
class ColoredPoint:
    x: float
    y: float
    color: int


def _as_point(p) -> ColoredPoint:
    if isinstance(p, ColoredPoint):
        return p
    x, y, c = p
    return ColoredPoint(float(x), float(y), int(c))


@dataclass(frozen=True)
class PointSet:
    """Immutable colored input with sorted index permutations.

    ``by_x`` / ``by_y`` are index permutations sorting ``points`` by x
    (then y) and by y (then x).  ``color_count[c-1]`` is the multiplicity
    of color c.
    """

    points: tuple[ColoredPoint, ...]
    k: int
    by_x: tuple[int, ...]
    by_y: tuple[int, ...]
    color_count: tuple[int, ...]

    @classmethod
    def build(cls, points, k: int | None = None) -> PointSet:
        """Validate and index a raw point collection.

        Accepts ColoredPoint instances or (x, y, color) triples.  When k
        is omitted it is inferred as the maximum color present.
        """
        pts = tuple(_as_point(p) for p in points)
        if not pts:
            raise ValueError("empty point set")
        for p in pts:
            if not (math.isfinite(p.x) and math.isfinite(p.y)):
                raise ValueError("non-finite coordinate: %r" % (p,))
        kk = max(p.color for p in pts) if k is None else int(k)
        if kk < 1:
            raise ValueError("need at least one color")
        counts = [0] * kk
        for p in pts:
            if not 1 <= p.color <= kk:
                raise ValueError("color %d outside 1..%d" % (p.color, kk))
            counts[p.color - 1] += 1
        short = [c + 1 for c, m in enumerate(counts) if m < 2]
        if short:
            raise ValueError("every color needs at least two points, short: %r" % short)
        if 2 * kk > len(pts):
            raise ValueError("k=%d exceeds n/2 for n=%d" % (kk, len(pts)))
        n = len(pts)
        by_x = tuple(sorted(range(n), key=lambda i: (pts[i].x, pts[i].y)))
        by_y = tuple(sorted(range(n), key=lambda i: (pts[i].y, pts[i].x)))
        return cls(pts, kk, by_x, by_y, tuple(counts))

    @property
    def n(self) -> int:
        return len(self.points)


def is_rainbow(counts) -> bool:
    """True iff every color class has at least one representative."""
    return all(c >= 1 for c in counts)


@dataclass(frozen=True)
class Strip:
    """Empty strip between two parallel axis-aligned lines.

    The lo side is the inside region.  A vertical strip separates on x,
    a horizontal one on y.
    """

    orientation: str
    lo: float
    hi: float

    def __post_init__(self):
        if self.orientation not in ("vertical", "horizontal"):
            raise ValueError("bad strip orientation %r" % self.orientation)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def region_of(self, x: float, y: float, eps: float = DEFAULT_EPS) -> Region:
        c = x if self.orientation == "vertical" else y
        if c <= self.lo + eps:
            return Region.INSIDE
        if c >= self.hi - eps:
            return Region.OUTSIDE
        return Region.INTERIOR


# Per corridor orientation, the sign pair (sx, sy) such that the map
# (x, y) -> (sx*x, sy*y) carries the corridor into the canonical
# down-right frame, where inside = {x >= inner_x, y <= inner_y}.
QUADRANT_SIGNS = {
    "down-right": (1.0, 1.0),
    "down-left": (-1.0, 1.0),
    "up-right": (1.0, -1.0),
    "up-left": (-1.0, -1.0),
}

_QUADRANT_SIGNS = QUADRANT_SIGNS

L_ORIENTATIONS = tuple(QUADRANT_SIGNS)


@dataclass(frozen=True)
class LCorridor:
    """Empty L-shaped corridor with a single uniform leg width.

    (corner_x, corner_y) is the outer corner.  For the down-right
    orientation the inside region is the closed quadrant below-right of
    the inner corner and the outside region is everything left of or
    above the outer boundary.
    """

    orientation: str
    corner_x: float
    corner_y: float
    width: float

    def __post_init__(self):
        if self.orientation not in _QUADRANT_SIGNS:
            raise ValueError("bad corridor orientation %r" % self.orientation)

    @property
    def inner_corner(self) -> tuple[float, float]:
        sx, sy = _QUADRANT_SIGNS[self.orientation]
        return (self.corner_x + sx * self.width, self.corner_y - sy * self.width)

    def region_of(self, x: float, y: float, eps: float = DEFAULT_EPS) -> Region:
        sx, sy = _QUADRANT_SIGNS[self.orientation]
        px, py = sx * x, sy * y
        ox, oy = sx * self.corner_x, sy * self.corner_y
        if px >= ox + self.width - eps and py <= oy - self.width + eps:
            return Region.INSIDE
        if px <= ox + eps or py >= oy - eps:
            return Region.OUTSIDE
        return Region.INTERIOR


def offset_square(sides, delta):
    """Slide each side of an axis-parallel rectangle inward by delta.

    sides = (left, right, bottom, top); sides at infinity stay put.
    """
    l, r, b, t = sides
    return (l + delta, r - delta, b + delta, t - delta)


@dataclass(frozen=True)
class SquareAnnulus:
    """Region between an outer axis-parallel square and its inward offset.

    Sides are the outer square's, any of which may be infinite: a strip
    embeds with three sides at infinity, an L-corridor with two.  delta
    is the annulus width.
    """

    left: float
    right: float
    bottom: float
    top: float
    delta: float

    @property
    def width(self) -> float:
        return self.delta

    @property
    def outer_sides(self) -> tuple[float, float, float, float]:
        return (self.left, self.right, self.bottom, self.top)

    @property
    def inner_sides(self) -> tuple[float, float, float, float]:
        return offset_square(self.outer_sides, self.delta)

    @property
    def infinite_sides(self) -> frozenset:
        out = set()
        if self.left == -INF:
            out.add("left")
        if self.right == INF:
            out.add("right")
        if self.bottom == -INF:
            out.add("bottom")
        if self.top == INF:
            out.add("top")
        return frozenset(out)

    @property
    def center(self) -> tuple[float, float]:
        # meaningful only when all four sides are finite
        return ((self.left + self.right) / 2.0, (self.bottom + self.top) / 2.0)

    @property
    def r_out(self) -> float:
        return (self.right - self.left) / 2.0

    def region_of(self, x: float, y: float, eps: float = DEFAULT_EPS) -> Region:
        il, ir, ib, it = self.inner_sides
        if il - eps <= x <= ir + eps and ib - eps <= y <= it + eps:
            return Region.INSIDE
        if (x <= self.left + eps or x >= self.right - eps
                or y <= self.bottom + eps or y >= self.top - eps):
            return Region.OUTSIDE
        return Region.INTERIOR


@dataclass(frozen=True)
class RectAnnulus:
    """Region between nested axis-parallel rectangles.

    width is the uniform annulus width, which equals every side width
    whose outer side is finite; an outer/inner pair at infinity carries
    the uniform width by convention (their arithmetic difference is
    indeterminate).
    """

    outer_left: float
    outer_right: float
    outer_bottom: float
    outer_top: float
    inner_left: float
    inner_right: float
    inner_bottom: float
    inner_top: float
    width: float

    @property
    def outer_sides(self) -> tuple[float, float, float, float]:
        return (self.outer_left, self.outer_right, self.outer_bottom, self.outer_top)

    @property
    def inner_sides(self) -> tuple[float, float, float, float]:
        return (self.inner_left, self.inner_right, self.inner_bottom, self.inner_top)

    def side_widths(self) -> tuple[float, float, float, float]:
        """(left, right, bottom, top) widths, infinite pairs reporting width."""
        def gap(v):
            return self.width if math.isnan(v) else v

        return (
            gap(self.inner_left - self.outer_left),
            gap(self.outer_right - self.inner_right),
            gap(self.inner_bottom - self.outer_bottom),
            gap(self.outer_top - self.inner_top),
        )

    def region_of(self, x: float, y: float, eps: float = DEFAULT_EPS) -> Region:
        if (self.inner_left - eps <= x <= self.inner_right + eps
                and self.inner_bottom - eps <= y <= self.inner_top + eps):
            return Region.INSIDE
        if (x <= self.outer_left + eps or x >= self.outer_right - eps
                or y <= self.outer_bottom + eps or y >= self.outer_top - eps):
            return Region.OUTSIDE
        return Region.INTERIOR


@dataclass(frozen=True)
class CircularAnnulus:
    center_x: float
    center_y: float
    r_in: float
    r_out: float

    @property
    def width(self) -> float:
        return self.r_out - self.r_in

    def region_of(self, x: float, y: float, eps: float = DEFAULT_EPS) -> Region:
        d = math.hypot(x - self.center_x, y - self.center_y)
        if d <= self.r_in + eps:
            return Region.INSIDE
        if d >= self.r_out - eps:
            return Region.OUTSIDE
        return Region.INTERIOR


@dataclass(frozen=True)
class Line:
    """Line a*x + b*y = c (not both coefficients zero)."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("degenerate line 0x+0y=c")

    @property
    def direction(self) -> tuple[float, float]:
        n = math.hypot(self.a, self.b)
        return (-self.b / n, self.a / n)

    @property
    def origin(self) -> tuple[float, float]:
        """Foot of the perpendicular from (0, 0)."""
        n2 = self.a * self.a + self.b * self.b
        return (self.a * self.c / n2, self.b * self.c / n2)

    def point_at(self, t: float) -> tuple[float, float]:
        ox, oy = self.origin
        dx, dy = self.direction
        return (ox + t * dx, oy + t * dy)


def classify(point, annulus, eps: float = DEFAULT_EPS) -> Region:
    """Region membership of one point, uniformly over all shapes."""
    if isinstance(point, ColoredPoint):
        x, y = point.x, point.y
    else:
        x, y = float(point[0]), float(point[1])
    return annulus.region_of(x, y, eps)


def validate_solution(annulus, pointset: PointSet, eps: float = DEFAULT_EPS) -> bool:
    """True iff the annulus has positive finite width, an empty interior,
    and rainbow inside and outside regions."""
    w = annulus.width
    if not math.isfinite(w) or w <= eps:
        return False
    inside = [0] * pointset.k
    outside = [0] * pointset.k
    for p in pointset.points:
        r = annulus.region_of(p.x, p.y, eps)
        if r is Region.INTERIOR:
            return False
        if r is Region.INSIDE:
            inside[p.color - 1] += 1
        else:
            outside[p.color - 1] += 1
    return is_rainbow(inside) and is_rainbow(outside)
