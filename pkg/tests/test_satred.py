from itertools import combinations

import pytest

from partialcubes.convexity import hull_closure
from partialcubes.core import members
from partialcubes.errors import ParseError, PropertyViolation
from partialcubes.hullnum import hull_number_bruteforce, is_hull_set
from partialcubes.pcube import recognize
from partialcubes.satred import (CnfFormula, assignment_to_hull_set, brute_force_sat, build_gadget,
                                 cut_census, gadget_to_dict, hull_set_to_assignment, parse_dimacs,
                                 preprocess_pure_literals, role_label, verify_reduction)

F1 = CnfFormula(2, ((1, 2), (-1, -2)))
CONTRA = CnfFormula(1, ((1,), (-1,)))


def test_parse_f1():
    f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0")
    assert f.clauses == F1.clauses and f.n == 2 and f.m == 2
    assert parse_dimacs(f.to_dimacs()).clauses == f.clauses


def test_parse_comments_and_multiline():
    f = parse_dimacs("c hi\np cnf 2 2\n1\n2 0 -1 -2 0\n%\n0\n")
    assert f.clauses == F1.clauses


@pytest.mark.parametrize("text", ["p cnf 4 1\n1 2 3 4 0", "p cnf 2 4\n1 0\n1 2 0\n-1 0\n1 -2 0",
                                  "p cnf 1 1\n0", "p cnf 2 2\n1 2 0", "1 2 0", "p cnf 2 1\n1 x 0"],
                         ids=["long_clause", "four_occurrences", "empty_clause", "count", "no_header", "junk"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_dimacs(text)


def test_pure_literals():
    reduced, fixed = preprocess_pure_literals(CnfFormula(2, ((1, 2), (1, -2))))
    assert not reduced.clauses and fixed == {1: True}
    assert preprocess_pure_literals(F1) == (F1, {})
    reduced, fixed = preprocess_pure_literals(CONTRA)
    assert reduced.clauses == CONTRA.clauses and not fixed


def test_pure_literal_cascade_and_tautology():
    f = CnfFormula(3, ((1, -1, 2), (2, 3), (-3, 1)))
    reduced, fixed = preprocess_pure_literals(f)
    assert not reduced.clauses
    for k, v in fixed.items():
        assert isinstance(v, bool)
    assert f.satisfied_by({**{x: False for x in (1, 2, 3)}, **fixed})


def test_f1_gadget_shape():
    gg = build_gadget(F1)
    assert gg.graph.n == 10
    census = cut_census(gg)
    assert census == {"total": 5, "expected": 5, "uu_prime": 1, "clause": 2, "variable": 2}
    assert recognize(gg.graph).accepted
    labels = [role_label(r) for r in gg.role_of]
    assert labels[:2] == ["u", "u'"] and "d1" in labels and "u@x1" in labels


def test_contradiction_gadget_shape():
    gg = build_gadget(CONTRA)
    assert gg.graph.n == 7 and cut_census(gg)["total"] == 4


def test_shared_literal_vertex():
    f = CnfFormula(2, ((1, 2), (1, -2), (-1,)))
    gg = build_gadget(f)
    assert (0, 1) in gg.shared_vertex
    assert cut_census(gg)["total"] == f.n + f.m + 1


def test_assignment_to_hull_set():
    gg = build_gadget(F1)
    h = assignment_to_hull_set(gg, {1: True, 2: False})
    assert members(h) == sorted([gg.u_prime, gg.v_lit[1], gg.v_lit[-2]])
    h2 = assignment_to_hull_set(gg, {1: True, 2: True})
    assert members(h2) == sorted([gg.u_prime, gg.v_lit[1], gg.v_lit[2]])
    assert is_hull_set(gg.graph, h)
    assert not is_hull_set(gg.graph, h2)
    with pytest.raises(ValueError):
        assignment_to_hull_set(gg, {1: True})


def test_hull_set_to_assignment_roundtrip():
    gg = build_gadget(F1)
    h = assignment_to_hull_set(gg, {1: True, 2: False})
    assert hull_set_to_assignment(gg, h) == {1: True, 2: False}


def test_every_small_hull_set_decodes_to_a_model():
    gg = build_gadget(F1)
    g = gg.graph
    count = 0
    for combo in combinations(range(g.n), 3):
        h = sum(1 << v for v in combo)
        if hull_closure(g, h) == g.vertices:
            a = hull_set_to_assignment(gg, h)
            assert F1.satisfied_by(a)
            count += 1
    assert count > 0


def test_example_set_with_copy_of_u_is_not_hull():
    # u', u_x, v_y: the x block holds only the copy of u
    gg = build_gadget(F1)
    h = 1 << gg.u_prime | 1 << gg.copy_u[1] | 1 << gg.v_lit[2]
    assert not is_hull_set(gg.graph, h)
    with pytest.raises(PropertyViolation):
        hull_set_to_assignment(gg, h)


def test_decoder_rejects_oversized_sets():
    gg = build_gadget(F1)
    with pytest.raises(PropertyViolation):
        hull_set_to_assignment(gg, 0b1111)


def test_verify_reduction_examples():
    r = verify_reduction(F1)
    assert r["satisfiable"] and r["hull_number"] == 3 == r["n_plus_1"] and r["biconditional_holds"]
    r = verify_reduction(CONTRA)
    assert not r["satisfiable"] and r["hull_number"] > r["n_plus_1"] and r["biconditional_holds"]
    r = verify_reduction(CnfFormula(2, ((1, 2), (1, -2))))
    assert r["satisfiable"] and not r["gadget_built"]


def test_hull_numbers_match_brute_force_on_small_gadgets():
    for f in (F1, CONTRA, CnfFormula(2, ((1,), (-1, 2), (-2,)))):
        gg = build_gadget(f)
        r = verify_reduction(f)
        assert hull_number_bruteforce(gg.graph).size == r["hull_number"]
        assert (brute_force_sat(f) is not None) == r["satisfiable"]


def test_gadget_json_has_roles():
    d = gadget_to_dict(build_gadget(F1))
    assert d["n"] == 10 and len(d["roles"]) == 10 and len(d["cut_roles"]) == 5
    assert set(d["literal_anchors"]) == {"1", "-1", "2", "-2"}
