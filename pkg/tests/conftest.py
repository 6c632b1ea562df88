import random

from rbannulus import PointSet


def random_instance(rng: random.Random, n: int, k: int, lo: int = 0, hi: int = 100):
    """Random integer-coordinate instance; first 2k colors dealt in pairs so
    every color has multiplicity >= 2."""
    assert n >= 2 * k
    colors = [c for c in range(1, k + 1) for _ in (0, 1)]
    colors += [rng.randint(1, k) for _ in range(n - len(colors))]
    rng.shuffle(colors)
    pts = [(rng.randint(lo, hi), rng.randint(lo, hi), c) for c in colors]
    return PointSet.build(pts, k)


def rotate90(pointset: PointSet) -> PointSet:
    """(x, y) -> (-y, x)."""
    return PointSet.build([(-p.y, p.x, p.color) for p in pointset.points], pointset.k)


def reflect_x(pointset: PointSet) -> PointSet:
    return PointSet.build([(-p.x, p.y, p.color) for p in pointset.points], pointset.k)
