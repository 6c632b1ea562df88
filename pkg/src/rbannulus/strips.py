"""Widest rainbow-bisecting empty strip, one sorted scan per orientation."""

from __future__ import annotations

from .core import DEFAULT_EPS, PointSet, Strip


def max_rbes(pointset: PointSet, orientation: str, eps: float = DEFAULT_EPS):
    """Maximum-width empty strip whose closed sides are each rainbow.

    Walks the coordinate order once, maintaining a prefix color counter
    against a precomputed suffix coverage table; O(n) after the sort
    already stored on the PointSet.  Ties go to the smallest lo.  Returns
    None when no gap separates two rainbows.
    """
    pts = pointset.points
    if orientation == "vertical":
        order = pointset.by_x
        coords = [pts[i].x for i in order]
    elif orientation == "horizontal":
        order = pointset.by_y
        coords = [pts[i].y for i in order]
    else:
        raise ValueError("bad orientation %r" % orientation)
    colors = [pts[i].color for i in order]
    k = pointset.k

    # collapse runs of equal coordinates
    groups: list[tuple[float, list[int]]] = []
    for v, c in zip(coords, colors):
        if groups and groups[-1][0] == v:
            groups[-1][1].append(c)
        else:
            groups.append((v, [c]))
    m = len(groups)

    suffix_rainbow = [False] * m
    seen = [0] * k
    missing = k
    for g in range(m - 1, -1, -1):
        for c in groups[g][1]:
            if seen[c - 1] == 0:
                missing -= 1
            seen[c - 1] += 1
        suffix_rainbow[g] = missing == 0

    best = None
    seen = [0] * k
    missing = k
    for g in range(m - 1):
        for c in groups[g][1]:
            if seen[c - 1] == 0:
                missing -= 1
            seen[c - 1] += 1
        if missing == 0 and suffix_rainbow[g + 1]:
            w = groups[g + 1][0] - groups[g][0]
            if w > eps and (best is None or w > best.width):
                best = Strip(orientation, groups[g][0], groups[g + 1][0])
    return best
