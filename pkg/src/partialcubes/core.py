"""Graphs, distances, bipartiteness and shortest-path intervals.

Vertex sets are plain ``int`` bitmasks: bit ``v`` is set iff vertex ``v`` is in
the set. The width is implied by the graph the set belongs to.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import ParseError, ScaleLimitError

# exponential-time routines refuse graphs larger than this
MAX_EXPONENTIAL_N = 4096


def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Sorted vertex ids of a bitmask."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def full_set(n: int) -> int:
    return (1 << n) - 1


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def iter_bits(mask: int):
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


def require_scale(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise ScaleLimitError(f"{what} refuses n={n} (limit {limit})")


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple connected undirected graph on vertices ``0..n-1``.

    Build through :meth:`from_edges` or :func:`load_graph`; both validate.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = field(default=None)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        if n < 1:
            raise ParseError("graph needs at least one vertex")
        seen = set()
        nbrs: list[list[int]] = [[] for _ in range(n)]
        norm = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"edge {u} {v} out of range for n={n}")
            if u == v:
                raise ParseError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ParseError(f"duplicate edge {key[0]} {key[1]}")
            seen.add(key)
            norm.append(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ParseError(f"{len(labels)} labels for {n} vertices")
        g = cls(n, tuple(norm), tuple(tuple(sorted(a)) for a in nbrs), labels)
        if not g.is_connected():
            raise ParseError("graph is disconnected")
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        seen = 1
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if not seen >> y & 1:
                    seen |= 1 << y
                    queue.append(y)
        return seen == full_set(self.n)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        idx = {}
        for i, (u, v) in enumerate(self.edges):
            idx[(u, v)] = i
            idx[(v, u)] = i
        return idx

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return all_pairs_distances(self)

    @property
    def vertices(self) -> int:
        return full_set(self.n)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        d = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for v in range(self.n):
            if self.labels is not None:
                lines.append(f'  {v} [label="{self.labels[v]}"];')
        lines += [f"  {u} -- {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


class DistanceMatrix:
    """All-pairs hop distances plus per-source distance layers as bitmasks."""

    def __init__(self, d: np.ndarray):
        self.d = d
        self.n = d.shape[0]
        self._layers: dict[int, list[int]] = {}
        self._rows: dict[int, list[int]] = {}

    def __getitem__(self, pair) -> int:
        u, w = pair
        return int(self.d[u, w])

    def layers(self, u: int) -> list[int]:
        """``layers(u)[k]`` is the set of vertices at distance ``k`` from ``u``."""
        got = self._layers.get(u)
        if got is None:
            row = self.d[u]
            got = [0] * (int(row.max()) + 1)
            for z, k in enumerate(row.tolist()):
                got[k] |= 1 << z
            self._layers[u] = got
        return got

    def interval(self, u: int, w: int) -> int:
        k = int(self.d[u, w])
        lu, lw = self.layers(u), self.layers(w)
        mask = 0
        for i in range(k + 1):
            mask |= lu[i] & lw[k - i]
        return mask

    def interval_row(self, u: int) -> list[int]:
        """``interval_row(u)[w] == interval(u, w)``, cached per source."""
        row = self._rows.get(u)
        if row is None:
            row = [self.interval(u, w) for w in range(self.n)]
            self._rows[u] = row
        return row

    @property
    def diameter(self) -> int:
        return int(self.d.max())


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    if g.m == 0:
        return DistanceMatrix(np.zeros((g.n, g.n), dtype=np.int64))
    rows = [u for u, v in g.edges] + [v for u, v in g.edges]
    cols = [v for u, v in g.edges] + [u for u, v in g.edges]
    a = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))
    d = shortest_path(a, method="D", directed=False, unweighted=True)
    return DistanceMatrix(d.astype(np.int64))


def interval(g: Graph, u: int, w: int) -> int:
    """Vertices lying on some shortest ``u``-``w`` path."""
    return g.distances.interval(u, w)


class Bipartition(NamedTuple):
    bipartite: bool
    coloring: Optional[list[int]]
    odd_cycle: Optional[list[int]]


def is_bipartite(g: Graph) -> Bipartition:
    """2-color by BFS; on failure return an odd cycle through the offending edge."""
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if color[y] < 0:
                color[y] = 1 - color[x]
                parent[y] = x
                depth[y] = depth[x] + 1
                queue.append(y)
            elif color[y] == color[x]:
                return Bipartition(False, None, _tree_cycle(parent, depth, x, y))
    return Bipartition(True, color, None)


def _tree_cycle(parent, depth, a, b):
    left, right = [a], [b]
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor; right repeats it
    return left + right[-2::-1]


def _parse_edge_list(text: str) -> Graph:
    header = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if len(nums) != 2:
            raise ParseError(f"expected two integers, got {len(nums)}", lineno)
        if header is None:
            header = nums
            if nums[0] < 1 or nums[1] < 0:
                raise ParseError("header must be 'n m' with n >= 1, m >= 0", lineno)
            continue
        u, v = nums
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]} (first at line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append((u, v))
    if header is None:
        raise ParseError("missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from None
    return Graph.from_edges(n, edges, data.get("labels"))


def load_graph(text) -> Graph:
    """Parse the edge-list format (or its JSON alternative) into a validated graph."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_edge_list(text)
