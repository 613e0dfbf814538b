"""Polynomial hull number for plane quadrangulations that are partial cubes.

For a base vertex v, the far sides V \\ C(v) play the role of curve interiors.
Their intersection graph is chordal for the admissible inputs, a minimum
clique cover of it equals the minimum number of vertices hitting every far
side, and the hull number is the best such count over v, plus one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import Graph, members
from .errors import ParseError, PropertyViolation
from .pcube import CutPartition, require_partial_cube


@dataclass
class IntersectionGraph:
    base: int
    far_side: list[int]
    adj: list[set[int]]

    @property
    def size(self) -> int:
        return len(self.far_side)


@dataclass
class CliqueCover:
    cliques: list[list[int]]
    witness: list[int]  # one vertex per clique, inside every far side of the clique
    independent: list[int]


@dataclass
class Elimination:
    chordal: bool
    order: Optional[list[int]] = None
    cycle: Optional[list[int]] = None


@dataclass
class QuadResult:
    size: int
    best_v: int
    witness: int
    h: dict[int, int] = field(default_factory=dict)  # accepted base vertex -> h_v
    rejected: dict[int, str] = field(default_factory=dict)


def parse_rotation(text, n: int) -> list[list[int]]:
    """One line per vertex: ``v: w1 w2 ...`` (or just the neighbor list), clockwise."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    rot: list[Optional[list[int]]] = [None] * n
    implicit = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" in line:
            head, rest = line.split(":", 1)
            try:
                v = int(head)
            except ValueError:
                raise ParseError(f"bad vertex id {head!r}", lineno) from None
        else:
            v, rest = implicit, line
        implicit = v + 1
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range", lineno)
        try:
            rot[v] = [int(t) for t in rest.split()]
        except ValueError:
            raise ParseError("neighbors must be integers", lineno) from None
    missing = [v for v in range(n) if rot[v] is None]
    if missing:
        raise ParseError(f"rotation misses vertices {missing}")
    return rot


def trace_faces(g: Graph, rotation) -> list[list[int]]:
    """Faces of a rotation system: after arriving at v from u, leave toward the
    neighbor following u in v's cyclic order."""
    for v in range(g.n):
        if sorted(rotation[v]) != list(g.adj[v]):
            raise ValueError(f"rotation at {v} is not a permutation of its neighbors")
    succ = {}
    for v in range(g.n):
        ring = rotation[v]
        for k, u in enumerate(ring):
            succ[(v, u)] = ring[(k + 1) % len(ring)]
    seen = set()
    faces = []
    for u, v in sorted(list(g.edges) + [(b, a) for a, b in g.edges]):
        if (u, v) in seen:
            continue
        face = []
        a, b = u, v
        while (a, b) not in seen:
            seen.add((a, b))
            face.append(a)
            a, b = b, succ[(b, a)]
        faces.append(face)
    return faces


def validate_quad(g: Graph, cp: CutPartition = None, rotation=None) -> dict:
    report = {"euler_count": {"ran": True, "m": g.m, "expected": 2 * g.n - 4,
                              "passed": g.m == 2 * g.n - 4}}
    if rotation is not None:
        faces = trace_faces(g, rotation)
        lengths = sorted({len(f) for f in faces})
        report["faces"] = {"ran": True, "count": len(faces), "lengths": lengths,
                           "sphere": g.n - g.m + len(faces) == 2,
                           "passed": lengths == [4] and g.n - g.m + len(faces) == 2}
    else:
        report["faces"] = {"ran": False}
    report["passed"] = all(c["passed"] for c in report.values() if c.get("ran"))
    return report


def intersection_graph(g: Graph, cp: CutPartition, v: int) -> IntersectionGraph:
    far = [cp.far_side(i, v) for i in range(len(cp))]
    adj: list[set[int]] = [set() for _ in far]
    for i in range(len(far)):
        for j in range(i + 1, len(far)):
            if far[i] & far[j]:
                adj[i].add(j)
                adj[j].add(i)
    return IntersectionGraph(v, far, adj)


def _mcs(adj: list[set[int]]) -> list[int]:
    """Maximum cardinality search visit order, ties to the smallest id."""
    n = len(adj)
    weight = [0] * n
    visited = [False] * n
    order = []
    for _ in range(n):
        x = max((y for y in range(n) if not visited[y]), key=lambda y: (weight[y], -y))
        visited[x] = True
        order.append(x)
        for y in adj[x]:
            if not visited[y]:
                weight[y] += 1
    return order


def _chordless_cycle(adj: list[set[int]], a: int, b: int, c: int) -> list[int]:
    """Induced cycle through path a-c-b where a, b are non-adjacent neighbors of c.

    Shortest a-b path avoiding c and c's other neighbors closes a chordless cycle.
    """
    blocked = (adj[c] - {a, b}) | {c}
    prev = {a: None}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for x in frontier:
            for y in sorted(adj[x]):
                if y not in prev and y not in blocked:
                    prev[y] = x
                    nxt.append(y)
        frontier = nxt
    if b not in prev:
        return []
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return [c] + path


def _any_chordless_cycle(adj: list[set[int]]) -> list[int]:
    for c in range(len(adj)):
        nbrs = sorted(adj[c])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if b not in adj[a]:
                    cycle = _chordless_cycle(adj, a, b, c)
                    if cycle:
                        return cycle
    return []


def peo(ig: IntersectionGraph) -> Elimination:
    """Perfect elimination ordering via MCS, or an induced cycle of length >= 4."""
    adj = ig.adj
    order = _mcs(adj)[::-1]
    pos = {x: i for i, x in enumerate(order)}
    for x in order:
        later = [y for y in adj[x] if pos[y] > pos[x]]
        if not later:
            continue
        parent = min(later, key=lambda y: pos[y])
        for y in later:
            if y != parent and y not in adj[parent]:
                cycle = _chordless_cycle(adj, y, parent, x) or _any_chordless_cycle(adj)
                return Elimination(False, cycle=cycle)
    return Elimination(True, order=order)


def min_clique_cover(ig: IntersectionGraph, order: list[int]) -> CliqueCover:
    """Gavril scan along a perfect elimination ordering.

    A node not yet covered joins the independent set and opens the clique of
    itself plus its still-uncovered later neighbors. Each clique gets a vertex
    of the graph lying in all of its far sides.
    """
    pos = {x: i for i, x in enumerate(order)}
    covered: set[int] = set()
    cliques, independent, witness = [], [], []
    for x in order:
        if x in covered:
            continue
        independent.append(x)
        clique = [x] + sorted((y for y in ig.adj[x] if pos[y] > pos[x] and y not in covered),
                              key=lambda y: pos[y])
        covered.update(clique)
        common = -1
        for c in clique:
            common &= ig.far_side[c]
        if not common:
            raise PropertyViolation(f"clique {sorted(clique)} has no common vertex",
                                    {"base": ig.base, "clique": sorted(clique)})
        cliques.append(sorted(clique))
        witness.append((common & -common).bit_length() - 1)
    return CliqueCover(cliques, witness, independent)


def h_v_quad(g: Graph, cp: CutPartition, v: int) -> tuple[int, int, CliqueCover]:
    """h_v by clique cover; raises PropertyViolation when the certificates fail."""
    ig = intersection_graph(g, cp, v)
    elim = peo(ig)
    if not elim.chordal:
        raise PropertyViolation(f"intersection graph at {v} is not chordal",
                                {"base": v, "cycle": elim.cycle})
    cover = min_clique_cover(ig, elim.order)
    if len(cover.cliques) != len(cover.independent):
        raise PropertyViolation("clique cover and independent set sizes differ")
    hitting = 0
    for w in cover.witness:
        hitting |= 1 << w
    return len(cover.cliques), hitting, cover


def hull_number_quad(g: Graph, mode: str = "trusted", rotation=None) -> QuadResult:
    """min over v of the clique-cover h_v, plus one.

    ``strict`` needs a rotation system with all faces 4-cycles and rejects the
    graph at the first base vertex whose certificates fail. ``trusted`` skips
    the face check, records failing base vertices and minimizes over the rest.
    """
    from .hullnum import is_hull_set

    cp = require_partial_cube(g)
    if mode not in ("strict", "trusted"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "strict":
        if rotation is None:
            raise ValueError("strict mode needs a rotation system")
        report = validate_quad(g, cp, rotation)
        if not report["passed"]:
            raise PropertyViolation("not a plane quadrangulation", report)
    if not cp.cuts:
        return QuadResult(1, 0, 1, {0: 0})
    result = QuadResult(0, -1, 0)
    best = None
    for v in range(g.n):
        try:
            size, hitting, _ = h_v_quad(g, cp, v)
        except PropertyViolation as exc:
            if mode == "strict":
                raise
            result.rejected[v] = str(exc)
            continue
        result.h[v] = size
        if best is None or size < best[0]:
            best = (size, v, hitting)
    if best is None:
        raise PropertyViolation("no base vertex passed the certificates",
                                {"rejected": result.rejected})
    size, v, hitting = best
    result.size, result.best_v, result.witness = size + 1, v, hitting | 1 << v
    if not is_hull_set(g, result.witness):
        raise PropertyViolation("clique witnesses do not form a hull set", members(result.witness))
    return result
