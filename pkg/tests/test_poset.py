from itertools import permutations

import pytest

from partialcubes.errors import ParseError, ScaleLimitError
from partialcubes.pcube import recognize
from partialcubes.poset import (all_posets, antichain, chain, dimension_bruteforce,
                                dimension_to_dict, dimension_via_hull, discordant_pairs, is_realizer,
                                linear_extensions, linext_graph, parse_poset, standard_example, width)

import oracles


def test_parse_examples():
    p = parse_poset("3\n0 1\n1 2")
    assert p.leq(0, 2) and not p.leq(2, 0)
    assert parse_poset("2").incomparable_pairs() == [(0, 1)]
    with pytest.raises(ParseError):
        parse_poset("2\n0 1\n1 0")
    with pytest.raises(ParseError):
        parse_poset("2\n0 5")


def test_extensions_examples():
    assert linear_extensions(chain(3)) == [(0, 1, 2)]
    assert linear_extensions(antichain(2)) == [(0, 1), (1, 0)]
    assert len(linear_extensions(standard_example(2))) == 6


def test_extensions_match_filtered_permutations():
    for n in range(1, 5):
        for p in all_posets(n):
            want = [q for q in permutations(range(n)) if p.is_extension(q)]
            assert linear_extensions(p) == want


def test_linext_graph_examples():
    lg = linext_graph(antichain(2))
    assert (lg.graph.n, lg.graph.m, lg.pair_of_cut) == (2, 1, [(0, 1)])
    assert linext_graph(chain(3)).graph.n == 1
    lg = linext_graph(antichain(3))
    assert lg.graph.n == 6 and len(lg.cut_partition) == 3
    assert sorted(len(lg.graph.adj[v]) for v in range(6)) == [2] * 6


def test_linext_distance_is_discordance():
    p = standard_example(2)
    lg = linext_graph(p)
    d = oracles.bfs_distances(lg.graph.n, lg.graph.edges)
    for a, ea in enumerate(lg.perm_of):
        for b, eb in enumerate(lg.perm_of):
            assert d[a][b] == discordant_pairs(ea, eb)


def test_realizer_examples():
    a2 = antichain(2)
    assert is_realizer(a2, [(0, 1), (1, 0)])
    assert not is_realizer(a2, [(0, 1)])
    s2 = standard_example(2)
    assert is_realizer(s2, [(0, 3, 1, 2), (1, 2, 0, 3)])
    with pytest.raises(ValueError):
        is_realizer(s2, [(2, 0, 1, 3)])


def test_dimension_examples():
    assert dimension_bruteforce(chain(4)) == 1 == dimension_via_hull(chain(4)).size
    assert dimension_bruteforce(antichain(2)) == 2
    dim = dimension_via_hull(antichain(2))
    assert dim.size == 2 and sorted(dim.realizer) == [(0, 1), (1, 0)]
    assert dimension_via_hull(antichain(3)).size == 2
    assert dimension_bruteforce(standard_example(3)) == 3
    dim = dimension_via_hull(standard_example(3))
    assert dim.size == 3 and is_realizer(standard_example(3), dim.realizer)


def test_width_examples():
    assert width(chain(3)) == 1
    assert width(antichain(3)) == 3
    assert width(standard_example(2)) == 2


def brute_width(p):
    best = 0
    for mask in range(1 << p.n):
        xs = [x for x in range(p.n) if mask >> x & 1]
        if all(not p.comparable(a, b) for a in xs for b in xs if a < b):
            best = max(best, len(xs))
    return best


def test_width_matches_antichain_search():
    for n in range(1, 6):
        for p in all_posets(n):
            assert width(p) == brute_width(p)


def test_poset_counts():
    assert [len(all_posets(n)) for n in range(1, 6)] == [1, 2, 5, 16, 63]


def test_linext_graphs_are_partial_cubes():
    for p in all_posets(4):
        assert recognize(linext_graph(p).graph).accepted


def test_dimension_json():
    p = standard_example(2)
    lg = linext_graph(p)
    d = dimension_to_dict(p, dimension_via_hull(p, lg), len(lg.perm_of))
    assert d["dimension"] == 2 and d["width"] == 2 and d["num_extensions"] == 6


def test_scale_limit():
    with pytest.raises(ScaleLimitError):
        linear_extensions(antichain(25))
    with pytest.raises(ScaleLimitError):
        linear_extensions(antichain(9), limit=1000)
