"""Geodesic convex hulls: halfspace intersection and interval closure."""

from .core import Graph, iter_bits
from .pcube import CutPartition


def _nonempty(s: int) -> None:
    if not s:
        raise ValueError("vertex set must be non-empty")


def hull_halfspace(g: Graph, cp: CutPartition, s: int) -> int:
    """Intersect C(s) over all cuts. Valid only for a partial-cube cut-partition."""
    _nonempty(s)
    out = g.vertices
    for i in range(len(cp)):
        out &= cp.restrict(i, s)
    return out


def hull_closure(g: Graph, s: int) -> int:
    """Least superset of ``s`` closed under shortest-path intervals. Any connected graph.

    Round-based fixpoint; each round only pairs the vertices added in the
    previous round with the whole current set, since older pairs are done.
    """
    _nonempty(s)
    dist = g.distances
    hull, fresh = 0, s
    while fresh:
        hull |= fresh
        grown = hull
        for x in iter_bits(fresh):
            row = dist.interval_row(x)
            for y in iter_bits(hull):
                grown |= row[y]
        fresh = grown & ~hull
    return hull


def is_convex(g: Graph, s: int) -> bool:
    return hull_closure(g, s) == s
