"""Named graph families used by tests, examples and the built-in corpus."""

from itertools import combinations

import networkx as nx

from .core import Graph


def hypercube(d: int) -> Graph:
    """Q_d with vertex ids equal to their coordinate words."""
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return Graph.from_edges(n, edges)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid(rows: int, cols: int) -> Graph:
    """rows x cols grid; vertex (r, c) has id r * cols + c."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def fan(k: int) -> Graph:
    """Hub 0 joined to every vertex of the path 1..k."""
    edges = [(0, i) for i in range(1, k + 1)] + [(i, i + 1) for i in range(1, k)]
    return Graph.from_edges(k + 1, edges)


def cycle_with_chord(n: int, a: int, b: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] + [(a, b)])


def trees(max_n: int):
    """All unlabeled trees on 1..max_n vertices, one canonical labeling each."""
    out = [Graph.from_edges(1, [])]
    for n in range(2, max_n + 1):
        for t in nx.nonisomorphic_trees(n):
            out.append(Graph.from_edges(n, sorted(tuple(sorted(e)) for e in t.edges())))
    return out


def from_networkx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges()])


def _arrangement_cells(normals, offsets, delta=1e-5):
    """Sign vectors of the cells around every crossing of a simple arrangement.

    Returns {sign vector: list of (crossing point, sample point)}; the caller
    picks the geometry (sphere or plane).
    """
    import numpy as np

    k, dim = normals.shape
    cells: dict[tuple, list] = {}
    crossings = []
    for i, j in combinations(range(k), 2):
        a = normals[[i, j]]
        if dim == 3:
            p = np.cross(a[0], a[1])
            p /= np.linalg.norm(p)
            points = [p, -p]
        else:
            points = [np.linalg.solve(a, offsets[[i, j]])]
        # directions moving off line i (resp. j) while staying on the other
        steer = np.linalg.pinv(a)
        for q in points:
            crossings.append(q)
            vals = normals @ q - offsets
            others = [t for t in range(k) if t not in (i, j)]
            if any(abs(vals[t]) < 1e-6 for t in others):
                raise ValueError("arrangement is not simple")
            for si, sj in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                x = q + delta * (steer @ np.array([si, sj], dtype=float))
                sign = tuple(1 if v > 0 else -1 for v in normals @ x - offsets)
                cells.setdefault(sign, []).append((len(crossings) - 1, x))
    return cells, crossings


def _region_graph(cells):
    keys = sorted(cells)
    index = {s: i for i, s in enumerate(keys)}
    edges = []
    for s in keys:
        for t in range(len(s)):
            flipped = s[:t] + (-s[t],) + s[t + 1:]
            if flipped in index and index[s] < index[flipped]:
                edges.append((index[s], index[flipped]))
    return keys, index, Graph.from_edges(len(keys), edges)


def sphere_arrangement(k: int, seed: int = 0):
    """Region graph of k random great circles, plus a rotation system.

    Simple arrangements of k >= 2 great circles give quadrangulations of the
    sphere that are partial cubes (zonotope skeleta) with k(k-1)+2 vertices.
    """
    import numpy as np

    rng = np.random.default_rng(seed)
    while True:
        normals = rng.normal(size=(k, 3))
        normals /= np.linalg.norm(normals, axis=1)[:, None]
        if all(abs(np.linalg.det(normals[list(t)])) > 1e-2 for t in combinations(range(k), 3)):
            break
    cells, crossings = _arrangement_cells(normals, np.zeros(k))
    keys, index, g = _region_graph(cells)
    rotation = []
    for s in keys:
        v = index[s]
        corners = {c for c, _ in cells[s]}
        center = sum(x for _, x in cells[s])
        center /= np.linalg.norm(center)
        e1 = np.cross(center, [1.0, 0.0, 0.0])
        if np.linalg.norm(e1) < 1e-3:
            e1 = np.cross(center, [0.0, 1.0, 0.0])
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(center, e1)
        angle = {}
        for w in g.adj[v]:
            shared = corners & {c for c, _ in cells[keys[w]]}
            mid = sum(crossings[c] for c in shared)
            if np.linalg.norm(mid) < 1e-9:
                # two-circle lune: both facets span antipodal corners
                mid = sum(x for _, x in cells[keys[w]])
            angle[w] = float(np.arctan2(mid @ e2, mid @ e1))
        rotation.append(sorted(g.adj[v], key=lambda w: angle[w]))
    return g, rotation


def line_arrangement(k: int, seed: int = 0) -> Graph:
    """Region graph of k random lines in general position in the plane."""
    import numpy as np

    rng = np.random.default_rng(seed)
    normals = rng.normal(size=(k, 2))
    offsets = rng.normal(size=k)
    cells, _ = _arrangement_cells(normals, offsets)
    return _region_graph(cells)[2]


def polyomino(cells_count: int, seed: int = 0) -> Graph:
    """Vertex-edge graph of a random edge-connected polyomino without holes."""
    import random

    rng = random.Random(seed)
    cells = {(0, 0)}
    while len(cells) < cells_count:
        r, c = rng.choice(sorted(cells))
        dr, dc = rng.choice(((0, 1), (1, 0), (0, -1), (-1, 0)))
        cand = (r + dr, c + dc)
        if cand in cells:
            continue
        trial = cells | {cand}
        if not _has_hole(trial):
            cells = trial
    corners = sorted({(r + a, c + b) for r, c in cells for a in (0, 1) for b in (0, 1)})
    index = {p: i for i, p in enumerate(corners)}
    edges = set()
    for r, c in cells:
        for p, q in (((r, c), (r, c + 1)), ((r, c), (r + 1, c)),
                     ((r + 1, c), (r + 1, c + 1)), ((r, c + 1), (r + 1, c + 1))):
            edges.add((index[p], index[q]))
    return Graph.from_edges(len(corners), sorted(edges))


def _has_hole(cells) -> bool:
    rows = [r for r, _ in cells]
    cols = [c for _, c in cells]
    box = {(r, c) for r in range(min(rows) - 1, max(rows) + 2)
           for c in range(min(cols) - 1, max(cols) + 2)}
    empty = box - cells
    start = (min(rows) - 1, min(cols) - 1)
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in empty and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) != len(empty)


def rotation_from_positions(g: Graph, pos) -> list[list[int]]:
    """Counterclockwise neighbor order around the outward normal of a convex polytope."""
    import numpy as np

    pos = np.asarray(pos, dtype=float)
    center = pos.mean(axis=0)
    rotation = []
    for v in range(g.n):
        normal = pos[v] - center
        normal /= np.linalg.norm(normal)
        e1 = pos[g.adj[v][0]] - pos[v]
        e1 -= (e1 @ normal) * normal
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(normal, e1)
        angle = {w: float(np.arctan2((pos[w] - pos[v]) @ e2, (pos[w] - pos[v]) @ e1))
                 for w in g.adj[v]}
        rotation.append(sorted(g.adj[v], key=lambda w: angle[w]))
    return rotation


def hypercube3_rotation() -> list[list[int]]:
    q3 = hypercube(3)
    pos = [[(v >> b & 1) * 2 - 1 for b in range(3)] for v in range(8)]
    return rotation_from_positions(q3, pos)


def cycle_rotation(n: int) -> list[list[int]]:
    return [[(v - 1) % n, (v + 1) % n] for v in range(n)]
