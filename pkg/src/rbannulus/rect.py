"""Axis-parallel rectangular annuli: the widest empty rectangular ring whose
inside and outside are each rainbow.

Outer sides may sit at infinity, so strips, L-shaped corridors and halfplane
splits all arise as degenerate rectangles and need no separate handling here.
A finite-width optimum can always be normalized so that some point touches the
outer top side and the ring has uniform width; the search therefore anchors
one point on the outer top, walks candidate bottoms and widths in a staircase
(width never decreases, the bottom anchor only moves down), and repeats in the
four axis directions by reflecting the input.

The width-w feasibility question for a fixed anchor pair is answered by
``dp_decision`` (plain scan) and ``dp_decision_fast`` (query structures).
Both return the same witness: the reference scan visits candidate left gaps
in x order and the fast scan jumps between the same gaps through a max
pyramid, so their first feasible placement coincides.
"""

from __future__ import annotations

import bisect
import math
from typing import NamedTuple, Optional

import numpy as np

from .core import DEFAULT_EPS, INF, PointSet, RectAnnulus, offset_square


class DecisionOutcome(NamedTuple):
    feasible: bool
    witness: Optional[RectAnnulus]


class WGap(NamedTuple):
    """Maximal point-free x interval of a slab projection, at least w wide."""

    left_x: float
    right_x: float


class MinimalRainbowInterval(NamedTuple):
    """Inclusion-minimal [a, b] whose slab points cover every color, with a
    drawn from the left candidate pool and b from the right one."""

    a: float
    b: float
    color_counter: dict


class ColorRangeTrees:
    """Per-color x-sorted coordinate arrays over one slab.

    count() is a pure rank query.  The nearest_* queries optionally restrict
    to a y band; the x-ordered tail is scanned until the band is hit, which is
    constant work when the arrays are already band-pure (the solver builds
    them that way) and linear only in the tail otherwise.
    """

    __slots__ = ("k", "xs", "ys")

    def __init__(self, k, xs_by_color, ys_by_color):
        self.k = k
        self.xs = xs_by_color  # index 0 unused
        self.ys = ys_by_color

    @classmethod
    def build(cls, points, k: int) -> "ColorRangeTrees":
        """points: iterable of (x, y, color) with colors in 1..k."""
        buckets = [[] for _ in range(k + 1)]
        for x, y, c in points:
            buckets[c].append((float(x), float(y)))
        xs = [None]
        ys = [None]
        for c in range(1, k + 1):
            buckets[c].sort()
            xs.append(np.array([p[0] for p in buckets[c]], dtype=float))
            ys.append(np.array([p[1] for p in buckets[c]], dtype=float))
        return cls(k, xs, ys)

    @classmethod
    def from_sorted(cls, k, xs_by_color, ys_by_color):
        return cls(k, [None] + list(xs_by_color), [None] + list(ys_by_color))

    def size(self, c: int) -> int:
        return int(self.xs[c].size)

    def count(self, c: int, x_lo: float, x_hi: float) -> int:
        a = self.xs[c]
        lo = int(np.searchsorted(a, x_lo, side="left"))
        hi = int(np.searchsorted(a, x_hi, side="right"))
        return hi - lo

    def nearest_right_in_band(self, c, x0, y_lo=-INF, y_hi=INF, strict=False):
        """Smallest x >= x0 (or > x0) among color-c points with y in
        [y_lo, y_hi], or None."""
        a = self.xs[c]
        side = "right" if strict else "left"
        i0 = int(np.searchsorted(a, x0, side=side))
        if i0 >= a.size:
            return None
        if y_lo == -INF and y_hi == INF:
            return float(a[i0])
        t = self.ys[c][i0:]
        mask = (t >= y_lo) & (t <= y_hi)
        if not mask.any():
            return None
        return float(a[i0 + int(mask.argmax())])

    def nearest_left_in_band(self, c, x0, y_lo=-INF, y_hi=INF):
        """Largest x <= x0 among color-c points with y in [y_lo, y_hi]."""
        a = self.xs[c]
        i0 = int(np.searchsorted(a, x0, side="right"))
        if i0 == 0:
            return None
        if y_lo == -INF and y_hi == INF:
            return float(a[i0 - 1])
        t = self.ys[c][:i0]
        mask = (t >= y_lo) & (t <= y_hi)
        if not mask.any():
            return None
        return float(a[i0 - 1 - int(mask[::-1].argmax())])

    def rightmost_in_band(self, c, y_lo=-INF, y_hi=INF):
        return self.nearest_left_in_band(c, INF, y_lo, y_hi)

    def leftmost_in_band(self, c, y_lo=-INF, y_hi=INF):
        return self.nearest_right_in_band(c, -INF, y_lo, y_hi)

    def insert(self, c, x, y):
        """Add one point; the color's arrays are rebuilt locally."""
        a = self.xs[c]
        p = int(np.searchsorted(a, x, side="right"))
        self.xs[c] = np.insert(a, p, x)
        self.ys[c] = np.insert(self.ys[c], p, y)


class GapPointTree:
    """Gap-point index over an x-sorted slab projection.

    Entry t is the maximal empty interval (gx[t], gr[t]); sentinel gaps run to
    both infinities.  A power-of-two max pyramid over the lengths answers
    leftmost / rightmost gap-at-least-w queries by descent.
    """

    __slots__ = ("gx", "gr", "glen", "_levels")

    def __init__(self, xs_sorted):
        xs = np.asarray(xs_sorted, dtype=float)
        self.gx = np.concatenate((np.array([-INF]), xs))
        self.gr = np.concatenate((xs, np.array([INF])))
        self.glen = self.gr - self.gx
        self._rebuild()

    def _rebuild(self):
        lv = [self.glen]
        cur = self.glen
        while cur.size > 1:
            if cur.size & 1:
                cur = np.concatenate((cur, np.array([-1.0])))
            cur = np.maximum(cur[0::2], cur[1::2])
            lv.append(cur)
        self._levels = lv

    def __len__(self):
        return int(self.gx.size)

    def gap(self, t: int):
        return float(self.gx[t]), float(self.gr[t])

    def gap_len(self, t: int) -> float:
        return float(self.glen[t])

    def _scan(self, lo, hi, min_gap, leftmost):
        # first (leftmost) or last index in [lo, hi) whose length >= min_gap
        if lo >= hi:
            return None
        levels = self._levels
        top = len(levels) - 1

        def rec(level, idx):
            base = idx << level
            if base >= hi or base + (1 << level) <= lo:
                return None
            if levels[level][idx] < min_gap:
                return None
            if level == 0:
                return idx
            first = 2 * idx if leftmost else 2 * idx + 1
            second = 2 * idx + 1 if leftmost else 2 * idx
            got = rec(level - 1, first)
            if got is not None:
                return got
            return rec(level - 1, second)

        return rec(top, 0)

    def leftmost_in_region(self, x_lo, x_hi, min_gap):
        """Index of the leftmost gap with x_lo <= start <= x_hi and length
        >= min_gap, or None."""
        lo = int(np.searchsorted(self.gx, x_lo, side="left"))
        hi = int(np.searchsorted(self.gx, x_hi, side="right"))
        return self._scan(lo, hi, min_gap, True)

    def rightmost_in_region(self, x_lo, x_hi, min_gap):
        lo = int(np.searchsorted(self.gx, x_lo, side="left"))
        hi = int(np.searchsorted(self.gx, x_hi, side="right"))
        return self._scan(lo, hi, min_gap, False)

    def index_of(self, x: float) -> int:
        """Gap containing x: the rightmost entry with start <= x."""
        return int(np.searchsorted(self.gx, x, side="right")) - 1

    def next_at_least(self, t: int, min_gap: float):
        """First index after t with length >= min_gap."""
        return self._scan(t + 1, len(self), min_gap, True)

    def insert(self, x: float):
        """Add a projected point: the gap holding x splits in two."""
        t = self.index_of(x)
        right = float(self.gr[t])
        self.gx = np.insert(self.gx, t + 1, x)
        self.gr = np.insert(self.gr, t + 1, right)
        self.gr[t] = x
        self.glen = self.gr - self.gx
        self._rebuild()


class SlabTrees(NamedTuple):
    colors: ColorRangeTrees
    gaps: GapPointTree


# ---------------------------------------------------------------------------
# internal frame: one orientation of the input, sorted top-down


class _Frame:
    __slots__ = ("n", "k", "X", "Y", "C", "negY", "xorder", "levels",
                 "col_ymin", "col_ymax", "Xl", "Yl", "Cl", "negYl",
                 "xorder_l", "levels_l")


def _make_frame(xs, ys, cs, k: int) -> _Frame:
    X0 = np.asarray(xs, dtype=float)
    Y0 = np.asarray(ys, dtype=float)
    C0 = np.asarray(cs, dtype=np.int64)
    order = np.lexsort((C0, X0, -Y0))  # top-down, ties left-right then color
    fr = _Frame()
    fr.n = int(X0.size)
    fr.k = k
    fr.X = X0[order]
    fr.Y = Y0[order]
    fr.C = C0[order]
    fr.negY = -fr.Y
    fr.xorder = np.lexsort((np.arange(fr.n), fr.X))
    fr.levels = np.unique(fr.Y)
    ymin = np.full(k + 1, INF)
    ymax = np.full(k + 1, -INF)
    for c in range(1, k + 1):
        sel = fr.Y[fr.C == c]
        if sel.size:
            ymin[c] = float(sel.min())
            ymax[c] = float(sel.max())
    fr.col_ymin = ymin
    fr.col_ymax = ymax
    fr.Xl = fr.X.tolist()
    fr.Yl = fr.Y.tolist()
    fr.Cl = fr.C.tolist()
    fr.negYl = fr.negY.tolist()
    fr.xorder_l = fr.xorder.tolist()
    fr.levels_l = fr.levels.tolist()
    return fr


def _frame_identity(pointset: PointSet) -> _Frame:
    pts = pointset.points
    return _make_frame([p.x for p in pts], [p.y for p in pts],
                       [p.color for p in pts], pointset.k)


def _first_below(fr: _Frame, v: float) -> int:
    """First index (top-down order) with y strictly below v."""
    return int(np.searchsorted(fr.negY, -v, side="right"))


def _first_at_most(fr: _Frame, v: float) -> int:
    return int(np.searchsorted(fr.negY, -v, side="left"))


def anchor_ordering(pointset: PointSet):
    """The point order the anchored ops index into: descending y, ties by
    ascending x then color."""
    return sorted(pointset.points, key=lambda p: (-p.y, p.x, p.color))


# ---------------------------------------------------------------------------
# width-w decision, reference scan


def _band_split(bxs, bcs, m, M, k):
    """Partition boundary-band points against the anchor columns m <= M.

    Returns None when a band point lies strictly between the columns (no
    uniform ring can dodge it), else (colors seen, list of (lReq, rReq)
    branch constraints).  Two branches appear only when a band point sits
    exactly on m == M and may be fenced out on either side.
    """
    lReq = -INF
    rReq = INF
    bsat = [False] * (k + 1)
    if m < M:
        for x, c in zip(bxs, bcs):
            bsat[c] = True
            if x <= m:
                if x > lReq:
                    lReq = x
            elif x >= M:
                if x < rReq:
                    rReq = x
            else:
                return None
        return bsat, [(lReq, rReq)]
    amb = False
    for x, c in zip(bxs, bcs):
        bsat[c] = True
        if x < m:
            if x > lReq:
                lReq = x
        elif x > m:
            if x < rReq:
                rReq = x
        else:
            amb = True
    if amb:
        return bsat, [(m, rReq), (lReq, min(rReq, M))]
    return bsat, [(lReq, rReq)]


def _first_R_list(slabxs, Rlo, Rhi, w):
    """Smallest R in [Rlo, Rhi] whose right arm (R - w, R) avoids slabxs."""
    pos = bisect.bisect_right(slabxs, Rlo - w)
    npts = len(slabxs)
    while True:
        gl = slabxs[pos - 1] if pos else -INF
        gr = slabxs[pos] if pos < npts else INF
        R = Rlo if gl + w < Rlo else gl + w
        if R > Rhi:
            return None
        if R <= gr:
            return R
        pos += 1


def _scan_arms_list(slabxs, mcol, satbase, m, M, w, lReq, rReq, k):
    if lReq > m or rReq < M or rReq - lReq < 2.0 * w:
        return None
    npts = len(slabxs)
    for g in range(npts + 1):
        gl = slabxs[g - 1] if g else -INF
        gr = slabxs[g] if g < npts else INF
        L = gl if gl > lReq else lReq
        lim = gr - w
        if m < lim:
            lim = m
        if L > lim:
            continue
        IL = L + w
        IRmin = -INF
        dead = False
        for c in range(1, k + 1):
            arr = mcol[c]
            p = bisect.bisect_left(arr, IL)
            if p == len(arr):
                dead = True
                break
            if arr[p] > IRmin:
                IRmin = arr[p]
        if dead:
            # inner frontier only moves right in later gaps
            return None
        caps = INF
        for c in range(1, k + 1):
            if satbase[c]:
                continue
            arr = mcol[c]
            if arr and arr[0] <= L:
                continue
            if not arr:
                return None
            if arr[-1] < caps:
                caps = arr[-1]
        Rlo = M
        if IRmin + w > Rlo:
            Rlo = IRmin + w
        if L + 2.0 * w > Rlo:
            Rlo = L + 2.0 * w
        Rhi = rReq if rReq < caps else caps
        if Rlo > Rhi:
            continue
        R = _first_R_list(slabxs, Rlo, Rhi, w)
        if R is not None:
            return (L, R)
    return None


def _decide_slow(fr: _Frame, x_i, T, B, x_j, w):
    """Exact width-w decision for outer top T (anchor column x_i on it) and
    outer bottom B holding column x_j; B = -INF / x_j = None for the open
    bottom.  Returns the leftmost witness (L, R) or None."""
    finite = x_j is not None
    if finite and T - B < 2.0 * w:
        return None
    Tw = T - w
    Bw = B + w if finite else -INF
    if finite:
        m, M = (x_i, x_j) if x_i <= x_j else (x_j, x_i)
    else:
        m = M = x_i
    Xl, Yl, Cl, k = fr.Xl, fr.Yl, fr.Cl, fr.k
    slabxs = []
    bxs = []
    bcs = []
    mcol = [None] + [[] for _ in range(k)]
    for t in fr.xorder_l:
        y = Yl[t]
        if y >= T or y <= B:
            continue
        x = Xl[t]
        slabxs.append(x)
        if y > Tw or y < Bw:
            bxs.append(x)
            bcs.append(Cl[t])
        else:
            mcol[Cl[t]].append(x)
    if not any(mcol[1:]):
        return None
    bands = _band_split(bxs, bcs, m, M, k)
    if bands is None:
        return None
    bsat, branches = bands
    satbase = [False] * (k + 1)
    for c in range(1, k + 1):
        satbase[c] = bool(bsat[c] or fr.col_ymax[c] >= T or fr.col_ymin[c] <= B)
    best = None
    for lReq, rReq in branches:
        got = _scan_arms_list(slabxs, mcol, satbase, m, M, w, lReq, rReq, k)
        if got is not None and (best is None or got < best):
            best = got
    return best


# ---------------------------------------------------------------------------
# width-w decision, tree-backed


def _band_split_np(bx, bc, m, M, k):
    lReq = -INF
    rReq = INF
    bsat = [False] * (k + 1)
    if bx.size == 0:
        return bsat, [(lReq, rReq)]
    for c in range(1, k + 1):
        bsat[c] = bool((bc == c).any())
    if m < M:
        if bool(((bx > m) & (bx < M)).any()):
            return None
        lo = bx[bx <= m]
        hi = bx[bx >= M]
        if lo.size:
            lReq = float(lo.max())
        if hi.size:
            rReq = float(hi.min())
        return bsat, [(lReq, rReq)]
    lo = bx[bx < m]
    hi = bx[bx > m]
    if lo.size:
        lReq = float(lo.max())
    if hi.size:
        rReq = float(hi.min())
    if bool((bx == m).any()):
        return bsat, [(m, rReq), (lReq, min(rReq, M))]
    return bsat, [(lReq, rReq)]


def _try_L(ctrees, gtree, y_lo, y_hi, satbase, M, w, L, rReq, k):
    """Evaluate one left-arm position.  Status 0 = witness, 1 = try the next
    gap, 2 = no later gap can work either."""
    IL = L + w
    IRmin = -INF
    for c in range(1, k + 1):
        v = ctrees.nearest_right_in_band(c, IL, y_lo, y_hi)
        if v is None:
            return 2, None
        if v > IRmin:
            IRmin = v
    caps = INF
    for c in range(1, k + 1):
        if satbase[c]:
            continue
        if ctrees.nearest_left_in_band(c, L, y_lo, y_hi) is not None:
            continue
        rm = ctrees.rightmost_in_band(c, y_lo, y_hi)
        if rm is None:
            return 2, None
        if rm < caps:
            caps = rm
    Rlo = M
    if IRmin + w > Rlo:
        Rlo = IRmin + w
    if L + 2.0 * w > Rlo:
        Rlo = L + 2.0 * w
    Rhi = rReq if rReq < caps else caps
    if Rlo > Rhi:
        return 1, None
    R = _first_R_tree(gtree, Rlo, Rhi, w)
    if R is None:
        return 1, None
    return 0, (L, R)


def _first_R_tree(gtree, Rlo, Rhi, w):
    t = gtree.index_of(Rlo - w)
    gl, gr = gtree.gap(t)
    if Rlo <= gr and Rlo <= Rhi:
        return Rlo
    t2 = gtree.leftmost_in_region(Rlo - w, Rhi - w, w)
    if t2 is None:
        return None
    gl2, _ = gtree.gap(t2)
    return gl2 + w


def _scan_arms_tree(ctrees, gtree, y_lo, y_hi, satbase, m, M, w, lReq, rReq, k):
    """Same gap order and outcome as _scan_arms_list, via the structures."""
    if lReq > m or rReq < M or rReq - lReq < 2.0 * w:
        return None
    t = gtree.index_of(lReq)
    while t is not None:
        gl, gr = gtree.gap(t)
        if gl > m:
            return None
        L = gl if gl > lReq else lReq
        lim = gr - w
        if m < lim:
            lim = m
        if L <= lim:
            status, got = _try_L(ctrees, gtree, y_lo, y_hi, satbase, M, w, L,
                                 rReq, k)
            if status == 0:
                return got
            if status == 2:
                return None
        t = gtree.next_at_least(t, w)
    return None


def _decide_fast_impl(fr: _Frame, x_i, T, B, x_j, w, trees=None):
    finite = x_j is not None
    if finite and T - B < 2.0 * w:
        return None
    Tw = T - w
    Bw = B + w if finite else -INF
    if finite:
        m, M = (x_i, x_j) if x_i <= x_j else (x_j, x_i)
    else:
        m = M = x_i
    k = fr.k
    iT = _first_below(fr, T)
    iB = _first_at_most(fr, B) if finite else fr.n
    iTw = _first_at_most(fr, Tw)
    jBw = _first_below(fr, Bw) if finite else iB
    if iTw >= jBw:
        return None
    if finite:
        bx = np.concatenate((fr.X[iT:iTw], fr.X[jBw:iB]))
        bc = np.concatenate((fr.C[iT:iTw], fr.C[jBw:iB]))
    else:
        bx = fr.X[iT:iTw]
        bc = fr.C[iT:iTw]
    bands = _band_split_np(bx, bc, m, M, k)
    if bands is None:
        return None
    bsat, branches = bands
    satbase = [False] * (k + 1)
    for c in range(1, k + 1):
        satbase[c] = bool(bsat[c] or fr.col_ymax[c] >= T or fr.col_ymin[c] <= B)
    if trees is None:
        xo = fr.xorder
        sel = xo[(xo >= iT) & (xo < iB)]
        sxs = fr.X[sel]
        sys_ = fr.Y[sel]
        scs = fr.C[sel]
        mm = (sys_ >= Bw) & (sys_ <= Tw)
        mx = sxs[mm]
        my = sys_[mm]
        mc = scs[mm]
        ctrees = ColorRangeTrees.from_sorted(
            k, [mx[mc == c] for c in range(1, k + 1)],
            [my[mc == c] for c in range(1, k + 1)])
        gtree = GapPointTree(sxs)
        y_lo, y_hi = -INF, INF
    else:
        ctrees, gtree = trees.colors, trees.gaps
        y_lo, y_hi = Bw, Tw
    best = None
    for lReq, rReq in branches:
        got = _scan_arms_tree(ctrees, gtree, y_lo, y_hi, satbase, m, M, w,
                              lReq, rReq, k)
        if got is not None and (best is None or got < best):
            best = got
    return best


# ---------------------------------------------------------------------------
# public decision ops


def _validate_anchors(n, i, j):
    if not isinstance(i, (int, np.integer)) or isinstance(i, bool):
        raise ValueError("top anchor index must be an integer")
    if i < 0 or i >= n:
        raise ValueError("top anchor index out of range")
    if j is None or (isinstance(j, float) and math.isinf(j) and j > 0):
        return int(i), None
    if not isinstance(j, (int, np.integer)) or isinstance(j, bool):
        raise ValueError("bottom anchor must be an index, None, or +inf")
    if j <= i + 1 or j >= n:
        raise ValueError("bottom anchor needs i + 1 < j < n")
    return int(i), int(j)


def _check_width(w):
    try:
        bad = not (w > 0.0) or math.isinf(w)
    except TypeError:
        bad = True
    if bad:
        raise ValueError("width must be a positive finite number")
    return float(w)


def _witness_annulus(L, R, B, T, w) -> RectAnnulus:
    outer = (L, R, B, T)
    return RectAnnulus(*outer, *offset_square(outer, w), w)


def dp_decision(pointset: PointSet, i, j, w) -> DecisionOutcome:
    """Does a uniform width-w rainbow ring exist with point i (descending-y
    order, see anchor_ordering) on the outer top side and point j on the
    outer bottom side?  j = None or +inf drops the bottom side to infinity.
    """
    w = _check_width(w)
    fr = _frame_identity(pointset)
    i, j = _validate_anchors(fr.n, i, j)
    T = fr.Yl[i]
    x_i = fr.Xl[i]
    if j is None:
        B, x_j = -INF, None
    else:
        B, x_j = fr.Yl[j], fr.Xl[j]
    got = _decide_slow(fr, x_i, T, B, x_j, w)
    if got is None:
        return DecisionOutcome(False, None)
    return DecisionOutcome(True, _witness_annulus(got[0], got[1], B, T, w))


def build_slab_trees(pointset: PointSet, i, j) -> SlabTrees:
    """Query structures over the open slab between anchors i and j, reusable
    across widths in dp_decision_fast."""
    fr = _frame_identity(pointset)
    i, j = _validate_anchors(fr.n, i, j)
    T = fr.Yl[i]
    iT = _first_below(fr, T)
    iB = fr.n if j is None else _first_at_most(fr, fr.Yl[j])
    xo = fr.xorder
    sel = xo[(xo >= iT) & (xo < iB)]
    sxs = fr.X[sel]
    sys_ = fr.Y[sel]
    scs = fr.C[sel]
    ctrees = ColorRangeTrees.from_sorted(
        pointset.k, [sxs[scs == c] for c in range(1, pointset.k + 1)],
        [sys_[scs == c] for c in range(1, pointset.k + 1)])
    return SlabTrees(ctrees, GapPointTree(sxs))


def dp_decision_fast(pointset: PointSet, i, j, w, trees=None) -> DecisionOutcome:
    """dp_decision through the slab query structures; same verdict and same
    witness.  Pass trees=build_slab_trees(pointset, i, j) to amortize the
    build across many widths for one anchor pair."""
    w = _check_width(w)
    fr = _frame_identity(pointset)
    i, j = _validate_anchors(fr.n, i, j)
    T = fr.Yl[i]
    x_i = fr.Xl[i]
    if j is None:
        B, x_j = -INF, None
    else:
        B, x_j = fr.Yl[j], fr.Xl[j]
    got = _decide_fast_impl(fr, x_i, T, B, x_j, w, trees=trees)
    if got is None:
        return DecisionOutcome(False, None)
    return DecisionOutcome(True, _witness_annulus(got[0], got[1], B, T, w))


# ---------------------------------------------------------------------------
# minimal rainbow intervals and relevant gaps


def minimal_rainbow_intervals(pointset: PointSet, i, j, left_pool, right_pool):
    """Inclusion-minimal rainbow intervals of the slab between anchors i and
    j, with endpoints restricted to the given x pools.  Ordered left to
    right; empty when some color is missing from the slab or a pool is empty.
    """
    fr = _frame_identity(pointset)
    i, j = _validate_anchors(fr.n, i, j)
    T = fr.Yl[i]
    B = -INF if j is None else fr.Yl[j]
    k = fr.k
    colxs = [None] + [[] for _ in range(k)]
    for t in fr.xorder_l:
        y = fr.Yl[t]
        if B < y < T:
            colxs[fr.Cl[t]].append(fr.Xl[t])
    lp = sorted({float(v) for v in left_pool})
    rp = sorted({float(v) for v in right_pool})
    if not lp or not rp or not all(colxs[1:]):
        return []

    def nright(c, x, strict=False):
        arr = colxs[c]
        p = bisect.bisect_right(arr, x) if strict else bisect.bisect_left(arr, x)
        return arr[p] if p < len(arr) else None

    def nleft(c, x):
        arr = colxs[c]
        p = bisect.bisect_right(arr, x)
        return arr[p - 1] if p else None

    def up(x):
        p = bisect.bisect_left(rp, x)
        return rp[p] if p < len(rp) else None

    def down(x):
        p = bisect.bisect_right(lp, x)
        return lp[p - 1] if p else None

    def req_right(a):
        breq = -INF
        for c in range(1, k + 1):
            v = nright(c, a)
            if v is None:
                return None
            if v > breq:
                breq = v
        return breq

    def req_left(b):
        areq = INF
        for c in range(1, k + 1):
            u = nleft(c, b)
            if u is None:
                return None
            if u < areq:
                areq = u
        return areq

    # Climb a -> down(req_left(up(req_right(a)))).  The step never moves a
    # left (every color meets [a, up(req_right(a))]), so iterating from the
    # smallest pool value past the last emitted interval lands on exactly
    # the next mutually-minimal pair, and a sweeps left_pool at most once.
    out = []
    a = lp[0]
    steps = 0
    while True:
        steps += 1
        if steps > 2 * len(lp) + 4:
            raise RuntimeError("interval chain failed to advance")
        breq = req_right(a)
        if breq is None:
            break
        b = up(breq)
        if b is None:
            break
        areq = req_left(b)
        if areq is None:
            break
        a2 = down(areq)
        if a2 is None or a2 < a:
            break
        if a2 != a:
            a = a2
            continue
        counter = {}
        for c in range(1, k + 1):
            arr = colxs[c]
            counter[c] = (bisect.bisect_right(arr, b)
                          - bisect.bisect_left(arr, a))
        out.append(MinimalRainbowInterval(a, b, counter))
        p = bisect.bisect_right(lp, a)
        if p >= len(lp):
            break
        a = lp[p]
    return out


def _as_wgap(g) -> WGap:
    if isinstance(g, WGap):
        return g
    return WGap(float(g[0]), float(g[1]))


def relevant_w_gaps(intervals, left_gaps, right_gaps):
    """For each minimal interval, the rightmost left gap ending at or before
    its a and the leftmost right gap starting at or after its b.  Deduplicated
    and in interval order; at most two gaps survive per interval."""
    lgs = sorted((_as_wgap(g) for g in left_gaps), key=lambda g: g.right_x)
    rgs = sorted((_as_wgap(g) for g in right_gaps), key=lambda g: g.left_x)
    lre = [g.right_x for g in lgs]
    rle = [g.left_x for g in rgs]
    out = []
    seen = set()
    for iv in intervals:
        a, b = iv[0], iv[1]
        p = bisect.bisect_right(lre, a) - 1
        if p >= 0 and lgs[p] not in seen:
            seen.add(lgs[p])
            out.append(lgs[p])
        q = bisect.bisect_left(rle, b)
        if q < len(rgs) and rgs[q] not in seen:
            seen.add(rgs[q])
            out.append(rgs[q])
    return out


# ---------------------------------------------------------------------------
# anchored staircase walk


def _start_wp_list(ws, barw, eps):
    wp = bisect.bisect_right(ws, eps)
    if barw is not None:
        wp2 = bisect.bisect_left(ws, barw)  # ties revisited to refine placement
        if wp2 > wp:
            wp = wp2
    return wp


def _walk_slow(fr: _Frame, i, eps, bar_fn, emit):
    T = fr.Yl[i]
    x_i = fr.Xl[i]
    lo = bisect.bisect_left(fr.levels_l, T)
    if lo == 0:
        return
    ws = [T - fr.levels_l[t] for t in range(lo - 1, -1, -1)]
    wp = _start_wp_list(ws, bar_fn(), eps)
    nws = len(ws)
    if wp >= nws:
        return
    pos = _first_below(fr, T)
    n = fr.n
    while wp < nws:
        w = ws[wp]
        if pos < n:
            # everything shallower than 2w from the top fails outright
            t2 = bisect.bisect_left(fr.negYl, -(T - 2.0 * w))
            if t2 > pos:
                pos = t2
        if pos >= n:
            got = _decide_slow(fr, x_i, T, -INF, None, w)
            if got is None:
                break
            emit(got[0], got[1], -INF, T, w)
            wp = bisect.bisect_right(ws, w)
        else:
            B = fr.Yl[pos]
            got = _decide_slow(fr, x_i, T, B, fr.Xl[pos], w)
            if got is None:
                pos += 1
            else:
                emit(got[0], got[1], B, T, w)
                wp = bisect.bisect_right(ws, w)


def _walk_fast(fr: _Frame, i, eps, bar_fn, emit):
    T = float(fr.Y[i])
    x_i = float(fr.X[i])
    lo = int(np.searchsorted(fr.levels, T, side="left"))
    if lo == 0:
        return
    ws = (T - fr.levels[:lo])[::-1]  # ascending candidate widths
    nws = int(ws.size)
    barw = bar_fn()
    if barw is not None and float(ws[-1]) < barw:
        return
    wp = int(np.searchsorted(ws, eps, side="right"))
    if barw is not None:
        wp2 = int(np.searchsorted(ws, barw, side="left"))
        if wp2 > wp:
            wp = wp2
    if wp >= nws:
        return
    iT = _first_below(fr, T)
    xj = fr.X[iT:]
    yj = fr.Y[iT:]
    mj = np.minimum(xj, x_i)
    Mj = np.maximum(xj, x_i)
    alive = np.ones(fr.n - iT, dtype=bool)
    while wp < nws and alive.any():
        w = float(ws[wp])
        # a bottom closer than 2w to the top can never work again
        np.logical_and(alive, yj <= T - 2.0 * w, out=alive)
        idxs = np.flatnonzero(alive)
        if idxs.size == 0:
            break
        iTw = _first_at_most(fr, T - w)
        if iTw > iT:
            # fence the top band against each live bottom anchor at once
            bandxs = np.sort(fr.X[iT:iTw])
            mm = mj[idxs]
            MM = Mj[idxs]
            pm = np.searchsorted(bandxs, mm, side="right")
            pM = np.searchsorted(bandxs, MM, side="left")
            bad = pM > pm
            lT = np.where(pm > 0, bandxs[np.maximum(pm - 1, 0)], -INF)
            rT = np.where(pM < bandxs.size, bandxs[np.minimum(pM, bandxs.size - 1)], INF)
            # a band point on coinciding anchor columns may be fenced to
            # either side, so the two-arm span estimate does not apply
            amb = (mm == MM) & (pm > pM)
            bad |= ((rT - lT) < 2.0 * w) & ~amb
            if bad.any():
                alive[idxs[bad]] = False
                idxs = idxs[~bad]
        success = False
        for s in idxs:
            si = int(s)
            got = _decide_fast_impl(fr, x_i, T, float(yj[si]), float(xj[si]), w)
            if got is None:
                alive[si] = False
                continue
            emit(got[0], got[1], float(yj[si]), T, w)
            success = True
            break
        if success:
            wp = int(np.searchsorted(ws, w, side="right"))
    while wp < nws:
        w = float(ws[wp])
        got = _decide_fast_impl(fr, x_i, T, -INF, None, w)
        if got is None:
            break
        emit(got[0], got[1], -INF, T, w)
        wp = int(np.searchsorted(ws, w, side="right"))


def max_anchored_rbra_for_top_point(pointset: PointSet, i,
                                    eps: float = DEFAULT_EPS):
    """Widest uniform rainbow ring with point i (descending-y order) on the
    outer top side, over candidate widths drawn from the level differences
    below the anchor; None when none is feasible.  Ties prefer the smaller
    (left, bottom).  A width pinned by horizontal clearances alone is picked
    up by the rotated frames of the full search, not here."""
    fr = _frame_identity(pointset)
    i, _ = _validate_anchors(fr.n, i, None)
    state = [None, None]

    def emit(L, R, B, T, w):
        key = (-w, L, B)
        if state[1] is None or key < state[1]:
            state[0] = _witness_annulus(L, R, B, T, w)
            state[1] = key

    _walk_slow(fr, i, eps,
               lambda: None if state[0] is None else state[0].width, emit)
    return state[0]


def _orient_arrays(xs, ys, which):
    if which == 0:
        return xs, ys
    if which == 1:
        return xs, -ys
    if which == 2:
        return ys, -xs
    return -ys, xs


def _orient_inverse(which, L, R, B, T):
    if which == 0:
        return (L, R, B, T)
    if which == 1:
        return (L, R, -T, -B)
    if which == 2:
        return (-T, -B, L, R)
    return (B, T, -R, -L)


def max_rbra(pointset: PointSet, fast: bool = False,
             eps: float = DEFAULT_EPS):
    """Maximum-width empty rectangular annulus splitting the colors into two
    rainbow groups, or None when no ring wider than eps exists.

    fast=True runs the same staircase through the query structures with
    vectorized pruning of bottom anchors; verdict and width agree with the
    plain walk, and ties resolve to the same outer rectangle.
    """
    pts = pointset.points
    n = len(pts)
    if n < 2:
        return None
    xs0 = np.array([p.x for p in pts], dtype=float)
    ys0 = np.array([p.y for p in pts], dtype=float)
    cs0 = [p.color for p in pts]
    best = [None, None]

    def bar():
        return None if best[0] is None else best[0].width

    walker = _walk_fast if fast else _walk_slow
    for which in range(4):
        tx, ty = _orient_arrays(xs0, ys0, which)
        fr = _make_frame(tx, ty, cs0, pointset.k)

        def emit(L, R, B, T, w, _o=which):
            ol, orr, ob, ot = _orient_inverse(_o, L, R, B, T)
            key = (-w, ol, ob)
            if best[1] is None or key < best[1]:
                best[0] = _witness_annulus(ol, orr, ob, ot, w)
                best[1] = key

        for i in range(fr.n):
            walker(fr, i, eps, bar, emit)
    return best[0]
