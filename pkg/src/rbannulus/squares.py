"""Widest rainbow-bisecting empty square annulus.

A maximal square annulus falls into one of three shapes: unbounded on all
but one side (a strip in disguise), unbounded on two adjacent sides (an
L-corridor in disguise), or genuinely bounded with points pinning two
opposite outer sides.  The first two reduce to the strip and corridor
solvers; the bounded case is searched directly here.

For a pinned pair p_i (bottom outer side) and p_j (top outer side) the
outer radius is forced to half their y-gap and the center is confined to a
horizontal segment.  Sliding the center along that segment, the inner
radius is the largest L-inf distance to a point strictly inside the outer
square, a piecewise-linear function whose pieces change only where a point
enters or leaves through the vertical sides.  Each such membership
interval is scanned once; within it the best center is either an endpoint
or the midpoint of the extreme inside x-coordinates.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

from .core import DEFAULT_EPS, INF, QUADRANT_SIGNS, PointSet, SquareAnnulus
from .lcorridor import max_rblc_all
from .strips import max_rbes

__all__ = [
    "c3_center_segment",
    "best_annulus_on_segment",
    "max_rbsa_c3",
    "max_rbsa",
]


def _xy(p):
    if hasattr(p, "x"):
        return float(p.x), float(p.y)
    return float(p[0]), float(p[1])


def c3_center_segment(p_i, p_j):
    """Where the center of an outer square pinned by p_i (bottom side) and
    p_j (top side) may sit.

    Returns (a, b, r): the segment endpoints a, b on the horizontal
    midline and the outer radius r, or None when the x-gap between the two
    points exceeds the side length so no square touches both.
    """
    xi, yi = _xy(p_i)
    xj, yj = _xy(p_j)
    if not yi < yj:
        raise ValueError("bottom point must be strictly below top point")
    r = (yj - yi) / 2.0
    y0 = (yi + yj) / 2.0
    ax = max(xi, xj) - r
    bx = min(xi, xj) + r
    if ax > bx:
        return None
    return (ax, y0), (bx, y0), r


def _scan_segment(xs, dys, cols, totals, k, r, ax, bx, eps):
    # xs/dys/cols: x-sorted points strictly inside the horizontal strip,
    # dys their |y - y0|.  Slides the center t over [ax, bx] and returns
    # the best (width, t); the x-window of inside points moves right with
    # t, so presence counters update in O(1) per point.
    m = len(xs)
    cands = {ax, bx}
    for x in xs:
        for t in (x - r, x + r):
            if ax < t < bx:
                cands.add(t)
    cands = sorted(cands)
    # per membership interval, the unconstrained optimum centers the
    # window: probe the interval interior to find the extreme inside xs
    extra = []
    for a, b in zip(cands, cands[1:]):
        probe = (a + b) / 2.0
        lo = bisect_right(xs, probe - r)
        hi = bisect_left(xs, probe + r) - 1
        if lo <= hi:
            t = (xs[lo] + xs[hi]) / 2.0
            if a < t < b:
                extra.append(t)
    if extra:
        cands = sorted(set(cands).union(extra))

    in_cnt = [0] * (k + 1)
    inside_present = 0
    outside_present = k
    wl, wr = 0, -1  # current window of inside points, indices into xs
    # monotone deque over dys for the window maximum
    dq_idx = []
    dq_head = 0
    best = None
    for t in cands:
        nlo = bisect_right(xs, t - r)
        nhi = bisect_left(xs, t + r) - 1
        while wr < nhi:
            wr += 1
            c = cols[wr]
            in_cnt[c] += 1
            if in_cnt[c] == 1:
                inside_present += 1
            if in_cnt[c] == totals[c]:
                outside_present -= 1
            d = dys[wr]
            while len(dq_idx) > dq_head and dys[dq_idx[-1]] <= d:
                dq_idx.pop()
            dq_idx.append(wr)
        while wl < nlo:
            c = cols[wl]
            if in_cnt[c] == totals[c]:
                outside_present += 1
            in_cnt[c] -= 1
            if in_cnt[c] == 0:
                inside_present -= 1
            wl += 1
        while dq_head < len(dq_idx) and dq_idx[dq_head] < wl:
            dq_head += 1
        if nlo > nhi:
            continue
        if inside_present < k or outside_present < k:
            continue
        r_in = dys[dq_idx[dq_head]]
        if t - xs[nlo] > r_in:
            r_in = t - xs[nlo]
        if xs[nhi] - t > r_in:
            r_in = xs[nhi] - t
        w = r - r_in
        if w > eps and (best is None or w > best[0] or (w == best[0] and t < best[1])):
            best = (w, t)
    return best


def best_annulus_on_segment(pointset: PointSet, p_i, p_j, eps: float = DEFAULT_EPS):
    """Best square annulus whose outer square touches p_i with its bottom
    side and p_j with its top side, or None."""
    seg = c3_center_segment(p_i, p_j)
    if seg is None:
        return None
    (ax, y0), (bx, _), r = seg
    yi = y0 - r
    yj = y0 + r
    strip = sorted(
        ((p.x, abs(p.y - y0), p.color) for p in pointset.points if yi < p.y < yj)
    )
    xs = [s[0] for s in strip]
    dys = [s[1] for s in strip]
    cols = [s[2] for s in strip]
    totals = (0,) + pointset.color_count
    hit = _scan_segment(xs, dys, cols, totals, pointset.k, r, ax, bx, eps)
    if hit is None:
        return None
    w, t = hit
    return SquareAnnulus(t - r, t + r, yi, yj, w)


def _c3_family(rows, k, totals, eps):
    # rows: (x, y, color) tuples; best bounded annulus with the outer
    # bottom and top sides pinned by two of them.  Returns
    # (width, center_x, center_y, r) in this frame, or None.
    by_y = sorted(rows, key=lambda p: (p[1], p[0]))
    n = len(by_y)
    levels = []  # (y, [points at this y]), ascending
    starts = []  # index of first point of each level in by_y
    for idx, p in enumerate(by_y):
        if levels and levels[-1][0] == p[1]:
            levels[-1][1].append(p)
        else:
            levels.append((p[1], [p]))
            starts.append(idx)
    L = len(levels)
    best = None
    for li in range(L - 1):
        y_i = levels[li][0]
        strip_cnt = [0] * (k + 1)
        strip_present = 0
        lo_idx = starts[li] + len(levels[li][1])
        for lj in range(li + 1, L):
            if lj > li + 1:
                for p in levels[lj - 1][1]:
                    c = p[2]
                    strip_cnt[c] += 1
                    if strip_cnt[c] == 1:
                        strip_present += 1
            if strip_present < k:
                continue
            y_j = levels[lj][0]
            r = (y_j - y_i) / 2.0
            y0 = (y_i + y_j) / 2.0
            strip = sorted(
                (p[0], abs(p[1] - y0), p[2])
                for p in by_y[lo_idx : starts[lj]]
            )
            xs = [s[0] for s in strip]
            dys = [s[1] for s in strip]
            cols = [s[2] for s in strip]
            for xi, _, _ in levels[li][1]:
                for xj, _, _ in levels[lj][1]:
                    ax = (xi if xi >= xj else xj) - r
                    bx = (xi if xi <= xj else xj) + r
                    if ax > bx:
                        continue
                    hit = _scan_segment(xs, dys, cols, totals, k, r, ax, bx, eps)
                    if hit is None:
                        continue
                    w, t = hit
                    key = (-w, t, y0)
                    if best is None or key < (-best[0], best[1], best[2]):
                        best = (w, t, y0, r)
    return best


def max_rbsa_c3(pointset: PointSet, eps: float = DEFAULT_EPS):
    """Widest bounded square annulus: two opposite outer sides pinned by
    points, trying both the horizontal and the vertical pair families."""
    rows = [(p.x, p.y, p.color) for p in pointset.points]
    totals = (0,) + pointset.color_count
    best = None  # (width, cx, cy, r) in the original frame
    hit = _c3_family(rows, pointset.k, totals, eps)
    if hit is not None:
        best = hit
    swapped = [(y, x, c) for x, y, c in rows]
    hit = _c3_family(swapped, pointset.k, totals, eps)
    if hit is not None:
        w, cx, cy, r = hit
        cand = (w, cy, cx, r)  # undo the coordinate swap
        if best is None or (-cand[0], cand[1], cand[2]) < (-best[0], best[1], best[2]):
            best = cand
    if best is None:
        return None
    w, cx, cy, r = best
    return SquareAnnulus(cx - r, cx + r, cy - r, cy + r, w)


def _strip_as_square(strip):
    if strip is None:
        return None
    if strip.orientation == "vertical":
        return SquareAnnulus(-INF, strip.hi, -INF, INF, strip.width)
    return SquareAnnulus(-INF, INF, -INF, strip.hi, strip.width)


def _corridor_as_square(cor):
    if cor is None:
        return None
    sx, sy = QUADRANT_SIGNS[cor.orientation]
    cx, cy = cor.corner_x, cor.corner_y
    left, right = (cx, INF) if sx > 0 else (-INF, cx)
    bottom, top = (-INF, cy) if sy > 0 else (cy, INF)
    return SquareAnnulus(left, right, bottom, top, cor.width)


def max_rbsa(pointset: PointSet, eps: float = DEFAULT_EPS):
    """Widest rainbow-bisecting empty square annulus.

    The degenerate families come from the strip and corridor solvers (a
    strip is a square annulus with three sides at infinity, an L-corridor
    one with two); the bounded family is searched directly.  Ties keep the
    earlier, more degenerate candidate.
    """
    candidates = [
        _strip_as_square(max_rbes(pointset, "vertical", eps)),
        _strip_as_square(max_rbes(pointset, "horizontal", eps)),
        _corridor_as_square(max_rblc_all(pointset, eps)),
        max_rbsa_c3(pointset, eps),
    ]
    best = None
    for cand in candidates:
        if cand is not None and (best is None or cand.width > best.width):
            best = cand
    return best
