"""Acceptance gate: one test and one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the status lines bypass
output capture so they appear in the log even when everything passes.
"""

import json
import subprocess
import sys
import time

import pytest

from partialcubes import corpus as cp
from partialcubes import families as fam
from partialcubes.hullnum import hull_number_exact
from partialcubes.planarquad import hull_number_quad


@pytest.fixture(scope="module")
def corpus():
    return cp.build_corpus(cp.DEFAULT_SEED)


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'}: {detail}")
    return emit


def brief(result):
    return json.dumps(result.get("failures", [])[:2], sort_keys=True)


def test_criterion_1_recognition_corpus(report):
    start = time.perf_counter()
    c = cp.Corpus(cp.DEFAULT_SEED, cp.base_partial_cubes(),
                  cp.gadget_instances(cp.am3_exhaustive(), "gadgetX")
                  + cp.gadget_instances(cp.am3_random(seed=cp.DEFAULT_SEED), "gadgetR"),
                  [], [], cp.rejection_corpus(), [], [], [])
    r = cp.check_recognition(c)
    elapsed = time.perf_counter() - start
    ok = r["passed"] and elapsed < 10 and len(r["rejected"]) == 4
    report(1, ok, f"{r['accepted']} accepted, rejected {r['rejected']}, {elapsed:.1f}s (limit 10s) {brief(r)}")
    assert ok


def test_criterion_2_halfspace_equals_closure(corpus, report):
    r = cp.check_hull_equality(corpus)
    report(2, r["passed"], f"{r['checked']} sets over {r['graphs']} graphs with n <= 32 {brief(r)}")
    assert r["passed"]


def test_criterion_3_hull_number_routes(corpus, report):
    r = cp.check_hull_numbers(corpus)
    report(3, r["passed"], f"onesided = exact = brute force on {r['graphs']} graphs with n <= 16 {brief(r)}")
    assert r["passed"]


def test_criterion_4_sat_equivalence(corpus, report):
    start = time.perf_counter()
    r = cp.check_reduction(corpus)
    elapsed = time.perf_counter() - start
    ok = r["passed"] and r["random"] == 200 and elapsed < 300
    report(4, ok, f"{r['exhaustive']} exhaustive + {r['random']} random formulas, "
                  f"{r['satisfiable']} satisfiable, {elapsed:.1f}s (limit 300s) {brief(r)}")
    assert ok


def test_criterion_5_poset_dimension(corpus, report):
    r = cp.check_dimension(corpus)
    literal = r["ceil_log2_bound"]
    ok = r["passed"] and literal["passed"] and r["S3"] == 3
    detail = (f"via hull = brute force and <= width on {r['posets']} posets, S3 = {r['S3']}; "
              f"dim <= ceil(log2 #extensions) violated on {literal['failed']} of {literal['checked']} posets, "
              f"e.g. {json.dumps(literal['failures'][:2], sort_keys=True)}")
    report(5, ok, detail)
    # The ceil(log2) clause is false for chains (1 extension, dimension 1) and
    # for the 2-antichain (2 extensions, dimension 2). It is checked as stated.
    assert r["passed"] and r["S3"] == 3
    assert literal["passed"], "dimension <= ceil(log2 #extensions) does not hold"


def test_criterion_6_quadrangulations(corpus, report):
    r = cp.check_quadrangulations(corpus)
    named = {"C4": fam.cycle(4), "Q3": fam.hypercube(3), "grid2x3": fam.grid(2, 3), "grid3x3": fam.grid(3, 3)}
    trusted = {k: hull_number_quad(g, "trusted").size == hull_number_exact(g).size for k, g in named.items()}
    ok = r["passed"] and all(trusted.values())
    report(6, ok, f"{len(r['instances'])} quadrangulations, trusted-mode named cases {trusted}, "
                  f"{r['checked']} certificate checks {brief(r)}")
    assert ok


def test_criterion_7_convex_lattices(corpus, report):
    r = cp.check_lattices(corpus)
    report(7, r["passed"], f"{r['graphs']} graphs with n <= 16, K2,3 failing bases {r['k23_failing_bases']} "
                           f"{brief(r)}")
    assert r["passed"]


def test_criterion_8_determinism(report):
    argv = [sys.executable, "-m", "partialcubes.cli", "corpus"]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    ok = first.stdout == second.stdout and len(first.stdout) > 0
    report(8, ok, f"two corpus runs, {len(first.stdout)} bytes, identical={first.stdout == second.stdout}, "
                  f"exit codes {first.returncode}/{second.returncode}")
    assert ok
