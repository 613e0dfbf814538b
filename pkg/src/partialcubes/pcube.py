"""Djokovic-Winkler classes, partial cube recognition and hypercube embeddings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import Graph, is_bipartite, members
from .errors import NotPartialCube


@dataclass(frozen=True)
class Cut:
    edges: tuple[int, ...]  # edge ids into Graph.edges
    minus: int  # side containing vertex 0
    plus: int

    def side_of(self, v: int) -> int:
        return self.plus if self.plus >> v & 1 else self.minus


@dataclass(frozen=True)
class CutPartition:
    n: int
    class_of: tuple[int, ...]
    cuts: tuple[Cut, ...]

    def __len__(self):
        return len(self.cuts)

    def restrict(self, i: int, s: int) -> int:
        """C_i(s): the side holding all of ``s``, or everything if the cut separates ``s``."""
        cut = self.cuts[i]
        if s & cut.minus and s & cut.plus:
            return (1 << self.n) - 1
        return cut.minus if s & cut.minus else cut.plus

    def far_side(self, i: int, v: int) -> int:
        cut = self.cuts[i]
        return cut.minus if cut.plus >> v & 1 else cut.plus

    def sides(self) -> list[int]:
        out = []
        for cut in self.cuts:
            out += [cut.minus, cut.plus]
        return out


@dataclass(frozen=True)
class HypercubeEmbedding:
    coords: tuple[int, ...]  # bit i set iff the vertex lies on the + side of cut i
    dimension: int

    def word(self, v: int) -> str:
        c = self.coords[v]
        return "".join("1" if c >> i & 1 else "0" for i in range(self.dimension))


@dataclass
class Recognition:
    accepted: bool
    embedding: Optional[HypercubeEmbedding] = None
    cut_partition: Optional[CutPartition] = None
    reason: Optional[str] = None
    witness: Optional[dict] = None


def theta_relation_classes(g: Graph) -> list[list[int]]:
    """Transitive closure of the Djokovic-Winkler relation as lists of edge ids.

    Edges xy and uv are related when d(x,u) + d(y,v) != d(x,v) + d(y,u).
    Classes are ordered by their smallest edge id.
    """
    m = g.m
    if m == 0:
        return []
    d = g.distances.d
    x = np.array([e[0] for e in g.edges])
    y = np.array([e[1] for e in g.edges])
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    block = max(1, 2_000_000 // m)
    for start in range(0, m, block):
        rows = slice(start, min(m, start + block))
        xs, ys = x[rows, None], y[rows, None]
        related = d[xs, x] + d[ys, y] != d[xs, y] + d[ys, x]
        for i, j in zip(*np.nonzero(related)):
            a, b = find(start + int(i)), find(int(j))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for e in range(m):
        groups.setdefault(find(e), []).append(e)
    return sorted(groups.values(), key=lambda c: c[0])


def _components_without(g: Graph, removed: set[int]) -> list[int]:
    comp = [-1] * g.n
    masks = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        cid = len(masks)
        comp[s] = cid
        mask = 1 << s
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in g.adj[a]:
                if comp[b] < 0 and g.edge_index[(a, b)] not in removed:
                    comp[b] = cid
                    mask |= 1 << b
                    queue.append(b)
        masks.append(mask)
    return masks


def theta_classes(g: Graph) -> CutPartition:
    """Djokovic-Winkler classes as a validated cut-partition.

    Raises NotPartialCube when the graph is not bipartite or a class fails
    to split the graph into exactly two sides.
    """
    bip = is_bipartite(g)
    if not bip.bipartite:
        raise NotPartialCube("graph is not bipartite",
                             {"reason": "not_bipartite", "odd_cycle": bip.odd_cycle})
    classes = theta_relation_classes(g)
    class_of = [0] * g.m
    cuts = []
    for cid, cls in enumerate(classes):
        for e in cls:
            class_of[e] = cid
        comps = _components_without(g, set(cls))
        crossing = len(comps) == 2 and all(
            (comps[0] >> g.edges[e][0] & 1) != (comps[0] >> g.edges[e][1] & 1) for e in cls)
        if not crossing:
            raise NotPartialCube(
                f"edge class {cid} is not a cut with two sides",
                {"reason": "bad_cut_class", "class": [list(g.edges[e]) for e in cls],
                 "components": len(comps)})
        minus, plus = (comps[0], comps[1]) if comps[0] & 1 else (comps[1], comps[0])
        cuts.append(Cut(tuple(cls), minus, plus))
    return CutPartition(g.n, tuple(class_of), tuple(cuts))


def embedding_of(cp: CutPartition) -> HypercubeEmbedding:
    coords = [0] * cp.n
    for i, cut in enumerate(cp.cuts):
        for v in members(cut.plus):
            coords[v] |= 1 << i
    return HypercubeEmbedding(tuple(coords), len(cp.cuts))


def isometry_violation(g: Graph, emb: HypercubeEmbedding) -> Optional[tuple[int, int]]:
    d = g.distances.d
    coords = emb.coords
    for u in range(g.n):
        cu = coords[u]
        row = d[u].tolist()
        for w in range(u + 1, g.n):
            if (cu ^ coords[w]).bit_count() != row[w]:
                return (u, w)
    return None


def recognize(g: Graph) -> Recognition:
    """Partial cube test with an exhaustively checked embedding as certificate."""
    try:
        cp = theta_classes(g)
    except NotPartialCube as exc:
        return Recognition(False, reason=exc.witness["reason"], witness=exc.witness)
    emb = embedding_of(cp)
    bad = isometry_violation(g, emb)
    if bad is not None:
        u, w = bad
        return Recognition(False, cut_partition=cp, reason="isometry_violation", witness={
            "pair": [u, w], "graph_distance": g.distances[u, w],
            "hamming_distance": (emb.coords[u] ^ emb.coords[w]).bit_count()})
    return Recognition(True, emb, cp)


def require_partial_cube(g: Graph) -> CutPartition:
    rec = recognize(g)
    if not rec.accepted:
        raise NotPartialCube(f"not a partial cube ({rec.reason})", rec.witness)
    return rec.cut_partition


def verify_cut_conditions(g: Graph, labeling) -> dict:
    """Check both shortest-path conditions of the cut-partition characterization.

    ``labeling`` is a CutPartition or a per-edge sequence of class ids. For
    every ordered source, a DP over the shortest-path DAG keeps the cut sets of
    repeat-free shortest paths and whether any shortest path repeats a cut.
    Condition (i): every pair has a repeat-free shortest path. Condition (ii):
    no shortest path repeats a cut.
    """
    class_of: Sequence[int] = labeling.class_of if isinstance(labeling, CutPartition) else labeling
    d = g.distances.d
    first_i = first_ii = None
    for s in range(g.n):
        order = np.argsort(d[s], kind="stable").tolist()
        dist = d[s].tolist()
        clean: list[set[int]] = [set() for _ in range(g.n)]
        repeats = [False] * g.n
        clean[s].add(0)
        for t in order[1:]:
            for p in g.adj[t]:
                if dist[p] != dist[t] - 1:
                    continue
                bit = 1 << class_of[g.edge_index[(p, t)]]
                if repeats[p]:
                    repeats[t] = True
                for mask in clean[p]:
                    if mask & bit:
                        repeats[t] = True
                    else:
                        clean[t].add(mask | bit)
            if first_i is None and not clean[t]:
                first_i = [s, t]
            if first_ii is None and repeats[t]:
                first_ii = [s, t]
        if first_i is not None and first_ii is not None:
            break
    return {
        "condition_i": {"passed": first_i is None, "violation": first_i},
        "condition_ii": {"passed": first_ii is None, "violation": first_ii},
    }


def embedding_to_dict(g: Graph, rec: Recognition) -> dict:
    if not rec.accepted:
        return {"accepted": False, "reason": rec.reason, "witness": rec.witness}
    emb, cp = rec.embedding, rec.cut_partition
    return {
        "accepted": True,
        "dimension": emb.dimension,
        "coords": {str(v): emb.word(v) for v in range(g.n)},
        "cuts": [
            {"id": i, "edges": [list(g.edges[e]) for e in cut.edges],
             "minus_size": cut.minus.bit_count(), "plus_size": cut.plus.bit_count()}
            for i, cut in enumerate(cp.cuts)
        ],
    }
