"""Widest rainbow-bisecting empty L-corridor.

An L-corridor is the set difference of two nested axis-parallel quadrants
whose corners sit on a shared 45-degree diagonal, so both the vertical and
the horizontal part have the same width.  The solver works in a canonical
"down-right" frame (inside quadrant opens to the lower right) and reduces
the other three orientations to it by flipping coordinate signs.

Within one frame, every maximal corridor is pinned in one of two ways:
either its width equals the vertical gap between a point on the inner top
side and a point on the outer top side, or the mirrored statement holds for
the vertical sides.  The first family is found by an upward sweep that
keeps, for each candidate inner-top height, the widest placement of the
vertical part; the second family is the first one after reflecting the
plane across the antidiagonal (x, y) -> (-y, -x), which maps down-right
corridors to down-right corridors with the two roles exchanged.

The sweep leans on three queries, each O(log n):

* boundary pair lookup: for the i-th lowest point, the lowest point whose
  y-gap strictly exceeds the best width so far, plus the rightmost point
  strictly between those heights;
* staircase evaluation: how far right the inner corner may sit while the
  inside quadrant keeps all colors, and how far right the outer corner
  must sit so the outside region keeps all colors;
* widest x-gap among already-swept points inside a clamped interval, which
  decides whether the vertical part fits.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left, bisect_right

from .core import (
    DEFAULT_EPS,
    INF,
    L_ORIENTATIONS,
    LCorridor,
    PointSet,
    QUADRANT_SIGNS,
)

__all__ = [
    "Staircase",
    "MaxCoordTree",
    "GapTree",
    "build_staircases",
    "boundary_points_query",
    "rainbow_range_query",
    "max_xgap_query",
    "max_rblc",
    "max_rblc_all",
]


class Staircase:
    """Monotone chain of corners (x and y both increase along the chain).

    ``x_at(t)`` returns the x-value of the corner governing height ``t``:
    the rightmost corner with y <= t (closed, the default) or y < t
    (strict).  Below the first corner the staircase imposes nothing and the
    sentinel -inf is returned.
    """

    __slots__ = ("corners", "_xs", "_ys")

    def __init__(self, corners):
        self.corners = tuple((float(x), float(y)) for x, y in corners)
        self._xs = [c[0] for c in self.corners]
        self._ys = [c[1] for c in self.corners]

    def x_at(self, t: float, closed: bool = True) -> float:
        cut = bisect_right(self._ys, t) if closed else bisect_left(self._ys, t)
        return self._xs[cut - 1] if cut > 0 else -INF

    def __repr__(self):
        return f"Staircase({list(self.corners)!r})"


def _lower_breaks(by_y, k):
    # Breakpoints of h(t) = min over colors of (max x among that color's
    # points with y <= t); -inf until every color has appeared.  Built in
    # one ascending pass over y-sorted (x, y, color) rows with a
    # lazy-deletion heap keyed by per-color max.
    maxx = [-INF] * (k + 1)
    seen = 0
    heap = []
    ts, vs = [], []
    i, n = 0, len(by_y)
    while i < n:
        y = by_y[i][1]
        while i < n and by_y[i][1] == y:
            x, _, c = by_y[i]
            if maxx[c] == -INF:
                seen += 1
            if x > maxx[c]:
                maxx[c] = x
                heapq.heappush(heap, (x, c))
            i += 1
        if seen == k:
            while heap[0][0] != maxx[heap[0][1]]:
                heapq.heappop(heap)
            v = heap[0][0]
            if not vs or v > vs[-1]:
                ts.append(y)
                vs.append(v)
    return ts, vs


def _upper_breaks(tp, k):
    # Breakpoints of g(T) = max{min-x of color c : max-y of color c < T}.
    # A color whose points all lie below the outer top side must reach the
    # left arm, so it forces the outer corner at least this far right.
    max_y = [-INF] * (k + 1)
    min_x = [INF] * (k + 1)
    for x, y, c in tp:
        if y > max_y[c]:
            max_y[c] = y
        if x < min_x[c]:
            min_x[c] = x
    pairs = sorted((max_y[c], min_x[c]) for c in range(1, k + 1))
    ts, vs = [], []
    run = -INF
    for t, v in pairs:
        if v > run:
            run = v
            if ts and ts[-1] == t:
                vs[-1] = run
            else:
                ts.append(t)
                vs.append(run)
    return ts, vs


def build_staircases(pointset: PointSet):
    """Both coverage frontiers for the down-right frame.

    Returns ``(s_bottom, s_top)``.  ``s_bottom.x_at(t)`` is the rightmost
    inner-corner x at height t that keeps the inside quadrant rainbow;
    ``s_top.x_at(T, closed=False)`` is the leftmost outer-corner x at
    height T that keeps the outside region (left arm union everything
    above) rainbow.
    """
    tp = [(p.x, p.y, p.color) for p in pointset.points]
    bt, bv = _lower_breaks(sorted(tp, key=lambda p: (p[1], p[0])), pointset.k)
    tt, tv = _upper_breaks(tp, pointset.k)
    return Staircase(zip(bv, bt)), Staircase(zip(tv, tt))


class MaxCoordTree:
    """Static segment tree over points ordered by y, answering max-x (with
    a witness payload) on an open y-band."""

    __slots__ = ("_ys", "_size", "_mx", "_arg")

    def __init__(self, items, presorted: bool = False):
        # items: iterable of (x, y, payload), ordered by (y, x) if presorted
        rows = list(items) if presorted else sorted(items, key=lambda it: (it[1], it[0]))
        self._ys = [r[1] for r in rows]
        n = len(rows)
        size = 1
        while size < max(n, 1):
            size *= 2
        self._size = size
        self._mx = [-INF] * (2 * size)
        self._arg = [None] * (2 * size)
        for leaf, (x, _, payload) in enumerate(rows):
            self._mx[size + leaf] = x
            self._arg[size + leaf] = payload
        for v in range(size - 1, 0, -1):
            l, r = 2 * v, 2 * v + 1
            if self._mx[l] >= self._mx[r]:
                self._mx[v], self._arg[v] = self._mx[l], self._arg[l]
            else:
                self._mx[v], self._arg[v] = self._mx[r], self._arg[r]

    def max_in_open_band(self, y_lo: float, y_hi: float):
        """(max x, payload) over points with y_lo < y < y_hi, or (-inf, None)."""
        lo = bisect_right(self._ys, y_lo)
        hi = bisect_left(self._ys, y_hi)
        mx, args = self._mx, self._arg
        best, arg = -INF, None
        l = lo + self._size
        r = hi + self._size
        while l < r:
            if l & 1:
                if mx[l] > best:
                    best, arg = mx[l], args[l]
                l += 1
            if r & 1:
                r -= 1
                if mx[r] > best:
                    best, arg = mx[r], args[r]
            l >>= 1
            r >>= 1
        return best, arg


class GapTree:
    """Activation tree over a fixed sorted universe of x-values.

    Values start inactive; ``insert`` activates one.  ``query(lo, hi)``
    returns the widest open interval free of active values inside
    [lo, hi], counting the two clamped boundary gaps, as
    ``(length, left, right)``.  Ties prefer the leftmost gap.  Active
    values sitting exactly at lo or hi never block (the corridor boundary
    is closed there).
    """

    __slots__ = ("_xs", "_size", "_mn", "_mx", "_gap", "_gl", "_gr", "_index", "_active")

    def __init__(self, xs):
        self._xs = list(xs)
        m = len(self._xs)
        size = 1
        while size < max(m, 1):
            size *= 2
        self._size = size
        self._mn = [INF] * (2 * size)
        self._mx = [-INF] * (2 * size)
        self._gap = [-INF] * (2 * size)
        self._gl = [0.0] * (2 * size)
        self._gr = [0.0] * (2 * size)
        self._index = {x: i for i, x in enumerate(self._xs)}
        self._active = [False] * m

    def insert(self, x: float) -> None:
        i = self._index[x]
        if self._active[i]:
            return
        self._active[i] = True
        mn, mx, gap, gls, grs = self._mn, self._mx, self._gap, self._gl, self._gr
        v = i + self._size
        mn[v] = mx[v] = x
        v >>= 1
        while v:
            l = 2 * v
            r = l + 1
            lmx = mx[l]
            rmn = mn[r]
            mn[v] = mn[l] if mn[l] <= rmn else rmn
            mx[v] = lmx if lmx >= mx[r] else mx[r]
            g, gl, gr = gap[l], gls[l], grs[l]
            if lmx > -INF and rmn < INF:
                cross = rmn - lmx
                if cross > g:
                    g, gl, gr = cross, lmx, rmn
            if gap[r] > g:
                g, gl, gr = gap[r], gls[r], grs[r]
            gap[v], gls[v], grs[v] = g, gl, gr
            v >>= 1

    def _range(self, li, ri):
        # fold tree nodes covering [li, ri] in left-to-right span order so
        # leftmost-gap ties resolve the same way a linear scan would
        l = li + self._size
        r = ri + 1 + self._size
        lefts = []
        rights = []
        while l < r:
            if l & 1:
                lefts.append(l)
                l += 1
            if r & 1:
                r -= 1
                rights.append(r)
            l >>= 1
            r >>= 1
        rights.reverse()
        mns, mxs, gaps, gls, grs = self._mn, self._mx, self._gap, self._gl, self._gr
        mn, mx = INF, -INF
        g, gl, gr = -INF, 0.0, 0.0
        for v in lefts + rights:
            vmn = mns[v]
            if mx > -INF and vmn < INF:
                cross = vmn - mx
                if cross > g:
                    g, gl, gr = cross, mx, vmn
            vg = gaps[v]
            if vg > g:
                g, gl, gr = vg, gls[v], grs[v]
            if vmn < mn:
                mn = vmn
            vmx = mxs[v]
            if vmx > mx:
                mx = vmx
        return mn, mx, g, gl, gr

    def query(self, lo: float, hi: float):
        li = bisect_right(self._xs, lo)
        ri = bisect_left(self._xs, hi) - 1
        if li > ri:
            return hi - lo, lo, hi
        mn, mx, g, gl, gr = self._range(li, ri)
        if mn == INF:
            return hi - lo, lo, hi
        best, bl, br = mn - lo, lo, mn
        if g > best:
            best, bl, br = g, gl, gr
        if hi - mx > best:
            best, bl, br = hi - mx, mx, hi
        return best, bl, br


def boundary_points_query(pointset: PointSet, i: int, w_best: float, tree: MaxCoordTree = None):
    """Boundary pair lookup around the i-th point of the ascending-y order.

    Returns (j, k): j indexes the lowest point whose y exceeds
    y(p_i) + w_best, k the rightmost point strictly between the two
    heights (None when that band is empty).  Returns None when no point
    clears the gap.  Indices refer to ``pointset.by_y`` order.
    """
    pts = pointset.points
    order = pointset.by_y
    ys = [pts[t].y for t in order]
    y_i = ys[i]
    j = bisect_right(ys, y_i + w_best)
    if j >= len(ys):
        return None
    if tree is None:
        tree = MaxCoordTree((pts[t].x, pts[t].y, pos) for pos, t in enumerate(order))
    _, k = tree.max_in_open_band(y_i, ys[j])
    return j, k


def rainbow_range_query(y_i: float, y_j: float, staircases):
    """x-range the vertical part must respect, read off both staircases.

    Returns ``(x_top, x_bottom)``: the horizontal line y = y_j meets the
    upper staircase at x_top (left side of the vertical part goes right of
    it) and y = y_i meets the lower staircase at x_bottom (right side goes
    left of it).  A line missing a staircase yields the -inf sentinel.
    Corner hits count as intersections.
    """
    s_bottom, s_top = staircases
    return s_top.x_at(y_j, closed=True), s_bottom.x_at(y_i, closed=True)


def max_xgap_query(tree: GapTree, lo: float, hi: float):
    """Widest placement slot for the vertical part within [lo, hi].

    Returns ``(gap, (left, right))`` where gap = right - left; boundary
    points clamp but do not block.
    """
    g, l, r = tree.query(lo, hi)
    return g, (l, r)


def _sweep(tp, k, eps):
    # One canonical pass: finds the widest down-right corridor whose width
    # is pinned by the y-gap between an inner-top point and an outer-top
    # point.  Returns (width, outer_x, outer_y) or None.
    by_y = sorted(tp, key=lambda p: (p[1], p[0]))
    sb_t, sb_v = _lower_breaks(by_y, k)
    if not sb_t:
        return None
    st_t, st_v = _upper_breaks(tp, k)
    band = MaxCoordTree(by_y, presorted=True)
    gaps = GapTree(sorted({p[0] for p in tp}))

    level_ys = []
    level_xs = []
    for x, y, _ in by_y:
        if level_ys and level_ys[-1] == y:
            level_xs[-1].append(x)
        else:
            level_ys.append(y)
            level_xs.append([x])
    m = len(level_ys)

    best = None
    w_best = eps
    for li in range(m):
        y_i = level_ys[li]
        for x in level_xs[li]:
            gaps.insert(x)
        cut = bisect_right(sb_t, y_i)
        if cut == 0:
            continue
        hi = sb_v[cut - 1]
        lj = bisect_right(level_ys, y_i + w_best)
        while lj < m:
            y_j = level_ys[lj]
            delta = y_j - y_i
            if delta <= w_best:
                # float rounding can land y_i + w_best short of the level
                # just used; step until the width strictly improves
                lj += 1
                continue
            gcut = bisect_left(st_t, y_j)
            lo = st_v[gcut - 1] if gcut > 0 else -INF
            mid, _ = band.max_in_open_band(y_i, y_j)
            if mid > lo:
                lo = mid
            if hi - lo < delta:
                break
            length, gl, gr = gaps.query(lo, hi)
            if length < delta:
                # Raising y_j only grows delta and pushes lo rightward
                # while hi stays put, so later candidates fail too.
                break
            outer_x = gl if gl > -INF else gr - delta
            best = (delta, outer_x, y_j)
            w_best = delta
            lj = bisect_right(level_ys, y_i + w_best, lj + 1)
    return best


def max_rblc(pointset: PointSet, orientation: str, eps: float = DEFAULT_EPS):
    """Widest rainbow-bisecting empty L-corridor with a fixed orientation.

    Runs the canonical sweep twice, once on the sign-normalized points and
    once after reflecting them across the antidiagonal, which exchanges the
    two ways a maximal corridor can be pinned.  Returns None if no corridor
    of positive width exists.
    """
    sx, sy = QUADRANT_SIGNS[orientation]
    pts = [(sx * p.x, sy * p.y, p.color) for p in pointset.points]
    best = None

    hit = _sweep(pts, pointset.k, eps)
    if hit is not None:
        delta, ox, oy = hit
        best = LCorridor(orientation, sx * ox, sy * oy, delta)

    anti = [(-y, -x, c) for x, y, c in pts]
    hit = _sweep(anti, pointset.k, eps)
    if hit is not None and (best is None or hit[0] > best.width):
        delta, ox, oy = hit
        # undo the antidiagonal reflection, then the sign flips
        best = LCorridor(orientation, sx * -oy, sy * -ox, delta)
    return best


def max_rblc_all(pointset: PointSet, eps: float = DEFAULT_EPS):
    """Widest rainbow-bisecting empty L-corridor over all four orientations."""
    best = None
    for orientation in L_ORIENTATIONS:
        cand = max_rblc(pointset, orientation, eps)
        if cand is not None and (best is None or cand.width > best.width):
            best = cand
    return best
