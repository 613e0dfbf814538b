"""Slow, obviously-correct reference implementations used only by tests."""

from collections import deque
from itertools import combinations


def bfs_distances(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    out = []
    for s in range(n):
        d = [-1] * n
        d[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if d[y] < 0:
                    d[y] = d[x] + 1
                    q.append(y)
        out.append(d)
    return out


def all_shortest_paths(n, edges, s, t):
    """Every shortest s-t path as a vertex list, by DFS over paths of length d(s, t)."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    d = bfs_distances(n, edges)[s][t]
    paths = []

    def walk(path):
        x = path[-1]
        if len(path) - 1 == d:
            if x == t:
                paths.append(list(path))
            return
        for y in adj[x]:
            if y not in path:
                path.append(y)
                walk(path)
                path.pop()

    walk([s])
    return paths


def interval_set(n, edges, u, w):
    return {x for p in all_shortest_paths(n, edges, u, w) for x in p}


def closure(n, edges, s):
    """Repeat interval union until nothing changes."""
    d = bfs_distances(n, edges)
    cur = set(s)
    while True:
        nxt = set(cur)
        for a in cur:
            for b in cur:
                nxt |= {z for z in range(n) if d[a][z] + d[z][b] == d[a][b]}
        if nxt == cur:
            return cur
        cur = nxt


def hull_number(n, edges):
    for k in range(1, n + 1):
        for c in combinations(range(n), k):
            if len(closure(n, edges, c)) == n:
                return k, list(c)


def min_hitting(sets, n):
    for k in range(0, n + 1):
        for c in combinations(range(n), k):
            if all(set(c) & s for s in sets):
                return k, list(c)


def convex_sets(n, edges):
    out = {frozenset()}
    for k in range(1, n + 1):
        for c in combinations(range(n), k):
            if closure(n, edges, c) == set(c):
                out.add(frozenset(c))
    return out


def bits(s):
    return sum(1 << v for v in s)
