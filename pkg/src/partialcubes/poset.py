"""Posets, linear extension graphs and dimension as a hull number.

Linear extension graphs are partial cubes whose cuts are the incomparable
pairs; a set of extensions is a realizer iff it is a hull set there.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import NamedTuple

import networkx as nx

from .core import Graph, members
from .errors import ParseError, PropertyViolation, ScaleLimitError
from .hullnum import hitting_instance, min_hitting_set
from .pcube import CutPartition, require_partial_cube

MAX_EXTENSIONS = 10**6
MAX_ELEMENTS = 24
MAX_SUBSET_CHECKS = 20_000_000


@dataclass(frozen=True)
class Poset:
    n: int
    above: tuple[int, ...]  # above[x]: bitmask of y with x <= y (reflexive)

    @classmethod
    def from_relations(cls, n: int, pairs) -> "Poset":
        up = [1 << x for x in range(n)]
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise ParseError(f"relation {a} < {b} out of range for n={n}")
            up[a] |= 1 << b
        # Warshall on bit rows
        for k in range(n):
            for x in range(n):
                if up[x] >> k & 1:
                    up[x] |= up[k]
        for x in range(n):
            for y in members(up[x]):
                if y != x and up[y] >> x & 1:
                    raise ParseError(f"relations contain a cycle through {x} and {y}")
        return cls(n, tuple(up))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.above[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in combinations(range(self.n), 2) if not self.comparable(x, y)]

    def relations(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in members(self.above[x]) if x != y]

    def is_extension(self, perm) -> bool:
        if sorted(perm) != list(range(self.n)):
            return False
        pos = {x: i for i, x in enumerate(perm)}
        return all(pos[x] < pos[y] for x, y in self.relations())


def chain(n: int) -> Poset:
    return Poset.from_relations(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return Poset.from_relations(n, [])


def standard_example(k: int) -> Poset:
    """S_k: a_i = i, b_j = k + j, with a_i < b_j whenever i != j."""
    return Poset.from_relations(2 * k, [(i, k + j) for i in range(k) for j in range(k) if i != j])


def parse_poset(text) -> Poset:
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(t) for t in line.split()]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 1:
                raise ParseError("first line must be the element count", lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise ParseError("relation lines are 'u v' meaning u < v", lineno)
        if nums[0] == nums[1]:
            raise ParseError(f"strict relation {nums[0]} < {nums[0]}", lineno)
        pairs.append(tuple(nums))
    if n is None:
        raise ParseError("empty poset description")
    return Poset.from_relations(n, pairs)


def linear_extensions(p: Poset, limit: int = MAX_EXTENSIONS) -> list[tuple[int, ...]]:
    """All linear extensions in lexicographic order, by backtracking over minimal elements."""
    if p.n > MAX_ELEMENTS:
        raise ScaleLimitError(f"poset has {p.n} > {MAX_ELEMENTS} elements")
    below = [0] * p.n
    for x in range(p.n):
        for y in members(p.above[x]):
            if y != x:
                below[y] |= 1 << x
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend(remaining: int):
        if not remaining:
            out.append(tuple(prefix))
            if len(out) > limit:
                raise ScaleLimitError(f"more than {limit} linear extensions")
            return
        for x in members(remaining):
            if not below[x] & remaining:
                prefix.append(x)
                extend(remaining & ~(1 << x))
                prefix.pop()

    extend((1 << p.n) - 1)
    return out


@dataclass
class LinearExtensionGraph:
    graph: Graph
    perm_of: list[tuple[int, ...]]
    pair_of_cut: list[tuple[int, int]]
    cut_partition: CutPartition


def discordant_pairs(a, b) -> int:
    pos = {x: i for i, x in enumerate(b)}
    return sum(1 for i, j in combinations(range(len(a)), 2) if pos[a[i]] > pos[a[j]])


def linext_graph(p: Poset, sample: int = 200, seed: int = 0) -> LinearExtensionGraph:
    """Graph on linear extensions joined by adjacent transpositions, with cuts labeled."""
    exts = linear_extensions(p)
    index = {e: i for i, e in enumerate(exts)}
    edges = []
    edge_pair = {}
    for i, e in enumerate(exts):
        for k in range(p.n - 1):
            a, b = e[k], e[k + 1]
            if p.comparable(a, b):
                continue
            swapped = e[:k] + (b, a) + e[k + 2:]
            j = index[swapped]
            if i < j:
                edges.append((i, j))
                edge_pair[(i, j)] = (min(a, b), max(a, b))
    g = Graph.from_edges(len(exts), edges)
    cp = require_partial_cube(g)
    pair_of_cut = []
    for cut in cp.cuts:
        pairs = {edge_pair[g.edges[e]] for e in cut.edges}
        if len(pairs) != 1:
            raise PropertyViolation(f"cut mixes incomparable pairs {sorted(pairs)}")
        pair_of_cut.append(pairs.pop())
    if sorted(pair_of_cut) != p.incomparable_pairs():
        raise PropertyViolation("cuts do not biject with incomparable pairs")
    rng = random.Random(seed)
    for _ in range(sample if len(exts) > 1 else 0):
        a, b = rng.randrange(len(exts)), rng.randrange(len(exts))
        if g.distances[a, b] != discordant_pairs(exts[a], exts[b]):
            raise PropertyViolation(f"distance between extensions {a}, {b} is not their discordance")
    return LinearExtensionGraph(g, exts, pair_of_cut, cp)


def is_realizer(p: Poset, exts) -> bool:
    for e in exts:
        if not p.is_extension(tuple(e)):
            raise ValueError(f"{list(e)} is not a linear extension")
    pairs = p.incomparable_pairs()
    for x, y in pairs:
        seen = set()
        for e in exts:
            seen.add(e.index(x) < e.index(y))
        if len(seen) < 2:
            return False
    return True


def _order_masks(p: Poset, exts) -> tuple[list[int], int]:
    pairs = p.incomparable_pairs()
    masks = []
    for e in exts:
        pos = {x: i for i, x in enumerate(e)}
        mask = 0
        for k, (x, y) in enumerate(pairs):
            if pos[x] < pos[y]:
                mask |= 1 << k
        masks.append(mask)
    return masks, (1 << len(pairs)) - 1


def dimension_bruteforce(p: Poset) -> int:
    """Smallest k such that some k extensions realize p, by increasing-k search."""
    exts = linear_extensions(p)
    masks, full = _order_masks(p, exts)
    for k in range(1, len(exts) + 1):
        if math.comb(len(exts), k) > MAX_SUBSET_CHECKS:
            raise ScaleLimitError(f"{math.comb(len(exts), k)} subsets of size {k} to check")
        for combo in combinations(masks, k):
            union, inter = 0, full
            for m in combo:
                union |= m
                inter &= m
            if union == full and inter == 0:
                return k
    raise AssertionError("the set of all extensions is a realizer")


class Dimension(NamedTuple):
    size: int
    realizer: list[tuple[int, ...]]


def dimension_via_hull(p: Poset, lg: LinearExtensionGraph = None) -> Dimension:
    """Dimension as the hull number of the linear extension graph.

    Minimum hitting set of cut sides, mapped back to extensions. The result
    is checked against the bound dim <= floor(log2 #extensions) + 1, which
    follows from dim <= width and width! <= #extensions.
    """
    if lg is None:
        lg = linext_graph(p)
    if not lg.cut_partition.cuts:
        return Dimension(1, [lg.perm_of[0]])
    res = min_hitting_set(hitting_instance(lg.graph, lg.cut_partition))
    realizer = [lg.perm_of[i] for i in members(res.witness)]
    count = len(lg.perm_of)
    if res.size > count.bit_length():
        raise PropertyViolation(f"dimension {res.size} exceeds log bound for {count} extensions")
    if not is_realizer(p, realizer):
        raise PropertyViolation("hull set does not map to a realizer")
    return Dimension(res.size, realizer)


def width(p: Poset) -> int:
    """Largest antichain, as n minus a maximum matching of the strict comparability graph."""
    b = nx.Graph()
    left = [("L", x) for x in range(p.n)]
    b.add_nodes_from(left)
    b.add_nodes_from(("R", x) for x in range(p.n))
    b.add_edges_from((("L", x), ("R", y)) for x, y in p.relations())
    matching = nx.bipartite.hopcroft_karp_matching(b, top_nodes=left)
    return p.n - len(matching) // 2


def canonical_key(p: Poset) -> tuple:
    best = None
    rels = p.relations()
    for perm in permutations(range(p.n)):
        key = tuple(sorted((perm[a], perm[b]) for a, b in rels))
        if best is None or key < best:
            best = key
    return best


def all_posets(n: int) -> list[Poset]:
    """One representative per isomorphism class of posets on n elements.

    Every poset has a natural labeling, so closing subsets of the pairs
    i < j reaches every class.
    """
    pairs = list(combinations(range(n), 2))
    seen = {}
    for bits in range(1 << len(pairs)):
        rel = [pairs[k] for k in range(len(pairs)) if bits >> k & 1]
        p = Poset.from_relations(n, rel)
        key = canonical_key(p)
        if key not in seen:
            seen[key] = Poset.from_relations(n, key)
    return [seen[k] for k in sorted(seen)]


def dimension_to_dict(p: Poset, dim: Dimension, num_extensions: int) -> dict:
    return {"dimension": dim.size, "width": width(p), "num_extensions": num_extensions,
            "realizer": [list(e) for e in dim.realizer]}
