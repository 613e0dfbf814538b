"""Hull number through the cut-side hitting-set reformulation.

A vertex set of a partial cube is a hull set iff it meets both sides of every
cut, so the hull number is a minimum hitting set of the cut sides. The
one-sided variant fixes one vertex ``v`` and hits only the sides avoiding it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .convexity import hull_closure, hull_halfspace
from .core import Graph, iter_bits, members, require_scale
from .errors import PropertyViolation
from .pcube import CutPartition, require_partial_cube

BRUTE_FORCE_MAX_N = 24


@dataclass(frozen=True)
class HittingInstance:
    universe: int
    sets: tuple[int, ...]
    origin: tuple[tuple[int, str], ...]  # (cut id, "+" or "-") per set


class HullNumber(NamedTuple):
    size: int
    witness: int


class OneSided(NamedTuple):
    size: int
    best_v: int
    witness: int


def hitting_instance(g: Graph, cp: CutPartition) -> HittingInstance:
    sets, origin = [], []
    for i, cut in enumerate(cp.cuts):
        sets += [cut.minus, cut.plus]
        origin += [(i, "-"), (i, "+")]
    return HittingInstance(g.n, tuple(sets), tuple(origin))


def far_side_instance(g: Graph, cp: CutPartition, v: int) -> HittingInstance:
    sets, origin = [], []
    for i, cut in enumerate(cp.cuts):
        plus_is_far = not cut.plus >> v & 1
        sets.append(cut.plus if plus_is_far else cut.minus)
        origin.append((i, "+" if plus_is_far else "-"))
    return HittingInstance(g.n, tuple(sets), tuple(origin))


def _reduce(sets) -> list[int]:
    """Drop duplicates and supersets; hitting the subset hits the superset."""
    uniq = sorted(set(sets), key=lambda s: (s.bit_count(), s))
    kept: list[int] = []
    for s in uniq:
        if not any(k & s == k for k in kept):
            kept.append(s)
    return kept


def _packing_bound(sets: list[int]) -> int:
    """Size of a greedy family of pairwise-disjoint sets (smallest first)."""
    used = 0
    count = 0
    for s in sorted(sets, key=int.bit_count):
        if not s & used:
            used |= s
            count += 1
    return count


def _greedy(sets: list[int]) -> list[int]:
    unhit = list(sets)
    chosen = []
    while unhit:
        counts: dict[int, int] = {}
        for s in unhit:
            for v in iter_bits(s):
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda x: (-counts[x], x))
        chosen.append(v)
        unhit = [s for s in unhit if not s >> v & 1]
    return chosen


def _feasible(unhit: list[int], allowed: int, budget: int) -> bool:
    """Can ``budget`` vertices drawn from ``allowed`` hit every set in ``unhit``?"""
    if not unhit:
        return True
    if budget == 0:
        return False
    restricted = []
    for s in unhit:
        s &= allowed
        if not s:
            return False
        restricted.append(s)
    if _packing_bound(restricted) > budget:
        return False
    pivot = min(restricted, key=lambda s: (s.bit_count(), s))
    for v in iter_bits(pivot):
        rest = [s for s in restricted if not s >> v & 1]
        if _feasible(rest, allowed, budget - 1):
            return True
        # later branches may assume v is unused
        allowed &= ~(1 << v)
    return False


def _branch_and_bound(sets: list[int], upper: int) -> int:
    best = upper

    def search(unhit, allowed, depth):
        nonlocal best
        if not unhit:
            best = min(best, depth)
            return
        restricted = []
        for s in unhit:
            s &= allowed
            if not s:
                return
            restricted.append(s)
        if depth + _packing_bound(restricted) >= best:
            return
        pivot = min(restricted, key=lambda s: (s.bit_count(), s))
        for v in iter_bits(pivot):
            search([s for s in restricted if not s >> v & 1], allowed, depth + 1)
            allowed &= ~(1 << v)

    search(sets, (1 << max(s.bit_length() for s in sets)) - 1, 0)
    return best


def _canonical(sets: list[int], k: int) -> list[int]:
    """Lexicographically smallest sorted hitting set of size ``k`` (``k`` optimal)."""
    witness: list[int] = []
    unhit = sets
    floor = 0
    for slots in range(k, 0, -1):
        union = 0
        for s in unhit:
            union |= s
        for c in iter_bits(union >> floor << floor):
            rest = [s for s in unhit if not s >> c & 1]
            allowed = ~((1 << (c + 1)) - 1)
            if _feasible(rest, union & allowed, slots - 1):
                witness.append(c)
                unhit, floor = rest, c + 1
                break
        else:
            raise AssertionError("no hitting set of the claimed optimal size")
    return witness


def min_hitting_set(h: HittingInstance) -> HullNumber:
    """Exact minimum hitting set with the lexicographically smallest optimal witness.

    Depth-first branch and bound on the smallest unhit set, pruned by a
    disjoint-packing lower bound and seeded with a greedy solution.
    """
    if any(s == 0 for s in h.sets):
        raise ValueError("cannot hit an empty set")
    sets = _reduce(h.sets)
    if not sets:
        return HullNumber(0, 0)
    upper = len(_greedy(sets))
    k = _branch_and_bound(sets, upper)
    witness = 0
    for v in _canonical(sets, k):
        witness |= 1 << v
    return HullNumber(k, witness)


def is_hull_set(g: Graph, s: int) -> bool:
    return hull_closure(g, s) == g.vertices


def hull_number_exact(g: Graph) -> HullNumber:
    cp = require_partial_cube(g)
    if not cp.cuts:
        return HullNumber(1, 1)
    res = min_hitting_set(hitting_instance(g, cp))
    if hull_halfspace(g, cp, res.witness) != g.vertices:
        raise PropertyViolation("solver witness is not a hull set", members(res.witness))
    return res


def h_v(g: Graph, cp: CutPartition, v: int) -> HullNumber:
    return min_hitting_set(far_side_instance(g, cp, v))


def hull_number_onesided(g: Graph) -> OneSided:
    """min over v of h_v, plus one; ties go to the smallest v."""
    cp = require_partial_cube(g)
    best = None
    for v in range(g.n):
        res = h_v(g, cp, v)
        if best is None or res.size < best[0]:
            best = (res.size, v, res.witness)
    size, v, witness = best
    return OneSided(size + 1, v, witness | 1 << v)


def hull_number_bruteforce(g: Graph) -> HullNumber:
    """Smallest subset whose interval closure is everything, by exhaustive search."""
    require_scale(g.n, BRUTE_FORCE_MAX_N, "brute-force hull number")
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            if hull_closure(g, s) == g.vertices:
                return HullNumber(k, s)
    raise AssertionError("the full vertex set is always a hull set")
