from itertools import combinations

import pytest

from partialcubes import families as fam
from partialcubes.errors import NotPartialCube
from partialcubes.pcube import (embedding_to_dict, recognize, require_partial_cube, theta_classes,
                                theta_relation_classes, verify_cut_conditions)

import oracles


def theta_brute(g):
    """Closure of the raw relation, one pair at a time."""
    d = oracles.bfs_distances(g.n, g.edges)
    m = g.m
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for i, j in combinations(range(m), 2):
        (x, y), (u, v) = g.edges[i], g.edges[j]
        if d[x][u] + d[y][v] != d[x][v] + d[y][u]:
            parent[find(i)] = find(j)
    groups = {}
    for e in range(m):
        groups.setdefault(find(e), []).append(e)
    return sorted(sorted(c) for c in groups.values())


def conditions_brute(g, class_of):
    ok_i = ok_ii = True
    for s in range(g.n):
        for t in range(g.n):
            clean = False
            for p in oracles.all_shortest_paths(g.n, g.edges, s, t):
                used = [class_of[g.edge_index[tuple(sorted(e))]] for e in zip(p, p[1:])]
                if len(set(used)) == len(used):
                    clean = True
                else:
                    ok_ii = False
            ok_i = ok_i and clean
    return ok_i, ok_ii


def edge_sets(g, cp):
    return sorted(sorted(tuple(g.edges[e]) for e in c.edges) for c in cp.cuts)


def test_c4_cuts():
    g = fam.cycle(4)
    assert edge_sets(g, theta_classes(g)) == [[(0, 1), (2, 3)], [(0, 3), (1, 2)]]


def test_q3_cuts_are_coordinates():
    g = fam.hypercube(3)
    cp = theta_classes(g)
    assert len(cp) == 3 and all(len(c.edges) == 4 for c in cp.cuts)
    for c in cp.cuts:
        flips = {g.edges[e][0] ^ g.edges[e][1] for e in c.edges}
        assert len(flips) == 1


def test_tree_cuts_are_singletons():
    for t in fam.trees(7):
        cp = theta_classes(t)
        assert len(cp) == t.n - 1 and all(len(c.edges) == 1 for c in cp.cuts)


def test_side_of_zero_is_minus():
    cp = theta_classes(fam.grid(3, 3))
    assert all(c.minus & 1 for c in cp.cuts)
    assert all(c.minus | c.plus == (1 << 9) - 1 and not c.minus & c.plus for c in cp.cuts)


@pytest.mark.parametrize("g", [fam.cycle(6), fam.hypercube(3), fam.grid(2, 4), fam.complete_bipartite(2, 3),
                               fam.cycle(5), fam.fan(3), fam.complete(4), fam.cycle_with_chord(6, 0, 2)],
                         ids=["C6", "Q3", "grid2x4", "K23", "C5", "fan3", "K4", "C6chord"])
def test_relation_matches_pairwise_oracle(g):
    assert sorted(sorted(c) for c in theta_relation_classes(g)) == theta_brute(g)


def test_recognize_q3_and_c6():
    for g in (fam.hypercube(3), fam.cycle(6)):
        rec = recognize(g)
        assert rec.accepted and rec.embedding.dimension == 3
        d = oracles.bfs_distances(g.n, g.edges)
        words = [rec.embedding.word(v) for v in range(g.n)]
        for a in range(g.n):
            for b in range(g.n):
                assert sum(x != y for x, y in zip(words[a], words[b])) == d[a][b]


def test_rejections_carry_witnesses():
    rec = recognize(fam.complete_bipartite(2, 3))
    assert not rec.accepted and rec.reason == "bad_cut_class" and rec.witness["components"] != 2
    rec = recognize(fam.cycle(5))
    assert rec.reason == "not_bipartite" and len(rec.witness["odd_cycle"]) == 5
    for g in (fam.cycle_with_chord(6, 0, 2), fam.fan(3)):
        assert not recognize(g).accepted
    with pytest.raises(NotPartialCube):
        require_partial_cube(fam.complete_bipartite(2, 3))


def test_antipodal_chord_gives_partial_cube():
    assert recognize(fam.cycle_with_chord(6, 0, 3)).accepted


def test_embedding_json():
    g = fam.cycle(4)
    d = embedding_to_dict(g, recognize(g))
    assert d["accepted"] and d["dimension"] == 2 and len(d["coords"]) == 4


def test_cut_conditions_q3_c6():
    for g in (fam.hypercube(3), fam.cycle(6)):
        rep = verify_cut_conditions(g, theta_classes(g))
        assert rep["condition_i"]["passed"] and rep["condition_ii"]["passed"]


def test_cut_conditions_k23_fails_ii():
    g = fam.complete_bipartite(2, 3)
    labels = [0] * g.m
    for k, cls in enumerate(theta_relation_classes(g)):
        for e in cls:
            labels[e] = k
    rep = verify_cut_conditions(g, labels)
    assert not rep["condition_ii"]["passed"]
    s, t = rep["condition_ii"]["violation"]
    assert not all(len(set(labels[g.edge_index[tuple(sorted(e))]] for e in zip(p, p[1:]))) == len(p) - 1
                   for p in oracles.all_shortest_paths(g.n, g.edges, s, t))


@pytest.mark.parametrize("g", [fam.cycle(6), fam.grid(2, 3), fam.complete_bipartite(2, 3), fam.cycle(4),
                               fam.cycle_with_chord(6, 0, 2)], ids=["C6", "grid", "K23", "C4", "C6chord"])
def test_cut_conditions_match_path_enumeration(g):
    import random
    rng = random.Random(1)
    for trial in range(4):
        if trial == 0:
            labels = [0] * g.m
            for k, cls in enumerate(theta_relation_classes(g)):
                for e in cls:
                    labels[e] = k
        else:
            labels = [rng.randrange(3) for _ in range(g.m)]
        rep = verify_cut_conditions(g, labels)
        assert (rep["condition_i"]["passed"], rep["condition_ii"]["passed"]) == conditions_brute(g, labels)
