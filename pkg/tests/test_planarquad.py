import pytest

from partialcubes import families as fam
from partialcubes.core import members
from partialcubes.errors import ParseError, PropertyViolation
from partialcubes.hullnum import h_v, hull_number_exact
from partialcubes.pcube import theta_classes
from partialcubes.planarquad import (IntersectionGraph, h_v_quad, hull_number_quad, intersection_graph,
                                     min_clique_cover, parse_rotation, peo, trace_faces, validate_quad)


def ig_from(n, edges):
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return IntersectionGraph(0, [-1] * n, adj)


def test_validate_examples():
    c4 = fam.cycle(4)
    rep = validate_quad(c4, rotation=fam.cycle_rotation(4))
    assert rep["euler_count"]["passed"] and rep["faces"]["count"] == 2 and rep["passed"]
    assert validate_quad(fam.hypercube(3), rotation=fam.hypercube3_rotation())["passed"]
    assert not validate_quad(fam.star(3))["euler_count"]["passed"]


def test_trace_faces_q3():
    faces = trace_faces(fam.hypercube(3), fam.hypercube3_rotation())
    assert len(faces) == 6 and all(len(f) == 4 for f in faces)


def test_bad_rotation():
    with pytest.raises(ValueError):
        trace_faces(fam.cycle(4), [[1, 2], [0, 2], [1, 3], [0, 2]])


def test_parse_rotation():
    assert parse_rotation("0: 1 3\n1: 0 2\n2: 1 3\n3: 2 0\n", 4)[3] == [2, 0]
    assert parse_rotation("1 3\n0 2\n1 3\n2 0\n", 4)[0] == [1, 3]
    with pytest.raises(ParseError):
        parse_rotation("0: 1 3\n", 4)
    with pytest.raises(ParseError):
        parse_rotation("9: 1\n", 4)


def test_intersection_graph_examples():
    c4 = fam.cycle(4)
    ig = intersection_graph(c4, theta_classes(c4), 0)
    assert ig.adj == [{1}, {0}]
    q3 = fam.hypercube(3)
    for v in range(8):
        ig = intersection_graph(q3, theta_classes(q3), v)
        assert all(len(a) == 2 for a in ig.adj)
        assert all(f >> (7 ^ v) & 1 for f in ig.far_side)
    star = fam.star(3)
    assert all(not a for a in intersection_graph(star, theta_classes(star), 0).adj)


def test_peo_examples():
    assert peo(ig_from(3, [(0, 1), (1, 2), (0, 2)])).chordal
    assert peo(ig_from(3, [])).chordal
    res = peo(ig_from(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert not res.chordal and sorted(res.cycle) == [0, 1, 2, 3]


def test_peo_cycle_is_induced():
    # C5 with a pendant triangle; the certificate must be a chordless cycle
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 5)]
    g = ig_from(6, edges)
    res = peo(g)
    assert not res.chordal
    cyc = res.cycle
    assert len(cyc) >= 4
    for i, a in enumerate(cyc):
        for j, b in enumerate(cyc):
            adjacent = abs(i - j) in (1, len(cyc) - 1)
            assert (b in g.adj[a]) == adjacent or i == j


def test_clique_cover_examples():
    q3 = fam.hypercube(3)
    ig = intersection_graph(q3, theta_classes(q3), 0)
    cover = min_clique_cover(ig, peo(ig).order)
    assert len(cover.cliques) == 1 and cover.witness == [7] and len(cover.independent) == 1
    star = fam.star(3)
    ig = intersection_graph(star, theta_classes(star), 0)
    cover = min_clique_cover(ig, peo(ig).order)
    assert len(cover.cliques) == 3 and sorted(cover.witness) == [1, 2, 3]
    c4 = fam.cycle(4)
    ig = intersection_graph(c4, theta_classes(c4), 0)
    assert min_clique_cover(ig, peo(ig).order).witness == [2]


def test_empty_witness_is_rejected():
    ig = IntersectionGraph(0, [0b011, 0b110, 0b101], [{1, 2}, {0, 2}, {0, 1}])
    with pytest.raises(PropertyViolation):
        min_clique_cover(ig, [0, 1, 2])


def test_quad_hull_number_examples():
    assert hull_number_quad(fam.cycle(4), "strict", fam.cycle_rotation(4)).size == 2
    q = hull_number_quad(fam.hypercube(3), "strict", fam.hypercube3_rotation())
    assert q.size == 2 and members(q.witness) == [0, 7]
    assert hull_number_quad(fam.grid(2, 3)).size == 2


def test_trusted_mode_records_rejections():
    g = fam.grid(3, 3)
    q = hull_number_quad(g, "trusted")
    assert 4 in q.rejected and q.size == hull_number_exact(g).size


def test_strict_mode_guards():
    with pytest.raises(ValueError):
        hull_number_quad(fam.grid(2, 3), "strict")
    with pytest.raises(PropertyViolation):
        hull_number_quad(fam.star(3), "strict", [[1, 2, 3], [0], [0], [0]])


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_sphere_arrangements(k):
    g, rot = fam.sphere_arrangement(k, seed=k)
    assert g.n == k * (k - 1) + 2
    q = hull_number_quad(g, "strict", rot)
    assert q.size == hull_number_exact(g).size
    cp = theta_classes(g)
    for v, size in q.h.items():
        assert size == h_v(g, cp, v).size == h_v_quad(g, cp, v)[0]


def test_polyominoes_and_lines():
    for seed in range(6):
        for g in (fam.polyomino(7, seed), fam.line_arrangement(4, seed)):
            assert hull_number_quad(g).size == hull_number_exact(g).size
