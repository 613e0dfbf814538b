"""Built-in instance corpus and the cross-validation suite run over it.

Every check compares two independent routes (or a route against a brute-force
oracle) and records the first few disagreements. Output is plain JSON data
with no timings, so two runs with the same seed are byte-identical.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Optional

from . import families as fam
from .convexity import hull_closure, hull_halfspace, is_convex
from .core import Graph, members
from .hullnum import (h_v, hull_number_bruteforce, hull_number_exact, hull_number_onesided,
                      is_hull_set)
from .lattice import (build_lattice_above, build_lattice_graph, hasse_graph, hull_number_lattice,
                      is_uld, verify_embedding)
from .pcube import recognize, theta_relation_classes, verify_cut_conditions
from .planarquad import hull_number_quad, intersection_graph, min_clique_cover, peo
from .poset import (Poset, all_posets, dimension_bruteforce, dimension_via_hull, linext_graph,
                    standard_example, width)
from .satred import CnfFormula, build_gadget, preprocess_pure_literals, verify_reduction

DEFAULT_SEED = 20140301
MAX_FAILURES = 5


@dataclass
class Instance:
    name: str
    graph: Graph
    rotation: Optional[list] = None


# ---------------------------------------------------------------- formulas

def _clause_pool(n: int) -> list[frozenset]:
    lits = [l for v in range(1, n + 1) for l in (v, -v)]
    pool = []
    for k in (1, 2, 3):
        for c in combinations(lits, k):
            if len({abs(l) for l in c}) == k:
                pool.append(frozenset(c))
    return pool


def am3_exhaustive(max_vars: int = 4, max_clauses: int = 4) -> list[CnfFormula]:
    """Every AM3 formula with both polarities per variable, up to renaming and negation.

    Clauses are distinct and tautology-free. Symmetry is broken by requiring
    the first clause to be the smallest member of its orbit; survivors are
    deduplicated by their lexicographically least image.
    """
    out = []
    for n in range(1, max_vars + 1):
        pool = _clause_pool(n)
        index = {c: i for i, c in enumerate(pool)}
        images = []
        for perm in permutations(range(1, n + 1)):
            for flips in product((1, -1), repeat=n):
                images.append([index[frozenset(perm[abs(l) - 1] * flips[abs(l) - 1] * (1 if l > 0 else -1)
                                               for l in c)] for c in pool])
        reps = {min(img[i] for img in images) for i in range(len(pool))}
        count = [0] * (n + 1)
        pos = [0] * (n + 1)
        neg = [0] * (n + 1)
        seen = set()
        chosen: list[int] = []

        def grow(start):
            if chosen and all(pos[v] and neg[v] for v in range(1, n + 1)):
                seen.add(min(tuple(sorted(img[i] for i in chosen)) for img in images))
            if len(chosen) == max_clauses:
                return
            for i in range(start, len(pool)):
                if not chosen and i not in reps:
                    continue
                c = pool[i]
                if any(count[abs(l)] >= 3 for l in c):
                    continue
                for l in c:
                    count[abs(l)] += 1
                    (pos if l > 0 else neg)[abs(l)] += 1
                chosen.append(i)
                grow(i + 1)
                chosen.pop()
                for l in c:
                    count[abs(l)] -= 1
                    (pos if l > 0 else neg)[abs(l)] -= 1

        grow(0)
        for key in sorted(seen):
            clauses = tuple(tuple(sorted(pool[i], key=lambda l: (abs(l), l))) for i in key)
            out.append(CnfFormula(n, clauses))
    return out


def am3_random(count: int = 200, max_vars: int = 6, seed: int = DEFAULT_SEED) -> list[CnfFormula]:
    """Seeded random AM3 formulas, pure-literal reduced, with 1..max_vars variables left."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_vars)
        m = rng.randint(1, 3 * n)
        used = [0] * (n + 1)
        clauses = []
        for _ in range(m):
            free = [v for v in range(1, n + 1) if used[v] < 3]
            if not free:
                break
            size = min(len(free), rng.choice((1, 2, 2, 3, 3, 3)))
            vs = rng.sample(free, size)
            for v in vs:
                used[v] += 1
            clauses.append(tuple(sorted((v if rng.random() < 0.5 else -v for v in vs),
                                        key=lambda l: (abs(l), l))))
        reduced, _ = preprocess_pure_literals(CnfFormula(n, tuple(clauses)))
        if reduced.clauses and reduced.n <= max_vars:
            out.append(reduced)
    return out


# ---------------------------------------------------------------- graphs

def gadget_instances(formulas, prefix) -> list[Instance]:
    return [Instance(f"{prefix}{i}", build_gadget(f).graph) for i, f in enumerate(formulas)]


def poset_corpus() -> list[tuple[str, Poset]]:
    out = []
    for n in range(1, 6):
        for i, p in enumerate(all_posets(n)):
            out.append((f"poset{n}_{i}", p))
    out += [("S2", standard_example(2)), ("S3", standard_example(3))]
    return out


def quadrangulations(seed: int = DEFAULT_SEED) -> list[Instance]:
    rng = random.Random(seed)
    out = [Instance("C4", fam.cycle(4), fam.cycle_rotation(4)),
           Instance("Q3", fam.hypercube(3), fam.hypercube3_rotation())]
    for k in range(2, 7):
        g, rot = fam.sphere_arrangement(k, seed=rng.randrange(1 << 30))
        out.append(Instance(f"sphere{k}", g, rot))
    out += [Instance("grid2x3", fam.grid(2, 3)), Instance("grid3x3", fam.grid(3, 3)),
            Instance("grid4x4", fam.grid(4, 4))]
    for k in range(3, 7):
        out.append(Instance(f"lines{k}", fam.line_arrangement(k, seed=rng.randrange(1 << 30))))
    for cells in (4, 6, 8, 10, 12):
        for j in range(3):
            out.append(Instance(f"polyomino{cells}_{j}", fam.polyomino(cells, seed=rng.randrange(1 << 30))))
    return out


def base_partial_cubes() -> list[Instance]:
    out = [Instance(f"Q{d}", fam.hypercube(d)) for d in range(1, 7)]
    out += [Instance(f"C{n}", fam.cycle(n)) for n in range(4, 13, 2)]
    out += [Instance(f"tree{i}_n{t.n}", t) for i, t in enumerate(fam.trees(10))]
    out += [Instance(f"grid{r}x{c}", fam.grid(r, c)) for r in range(2, 5) for c in range(r, 5)]
    return out


def rejection_corpus() -> list[Instance]:
    return [Instance("K2,3", fam.complete_bipartite(2, 3)), Instance("C5", fam.cycle(5)),
            Instance("C6+chord", fam.cycle_with_chord(6, 0, 2)), Instance("fan3", fam.fan(3))]


@dataclass
class Corpus:
    seed: int
    base: list[Instance]
    gadgets: list[Instance]
    linext: list[Instance]
    quads: list[Instance]
    rejects: list[Instance]
    exhaustive: list[CnfFormula]
    random_formulas: list[CnfFormula]
    posets: list[tuple[str, Poset]]

    def partial_cubes(self) -> list[Instance]:
        """Distinct partial cubes used by the convexity, hull and lattice checks."""
        quads = [q for q in self.quads if q.name.startswith(("sphere", "lines", "polyomino"))]
        return self.base + self.gadgets + self.linext + quads


def build_corpus(seed: int = DEFAULT_SEED) -> Corpus:
    exhaustive = am3_exhaustive()
    randoms = am3_random(seed=seed)
    posets = poset_corpus()
    linext = []
    for name, p in posets:
        g = linext_graph(p).graph
        if g.n > 1:
            linext.append(Instance(f"linext_{name}", g))
    return Corpus(seed, base_partial_cubes(),
                  gadget_instances(exhaustive, "gadgetX") + gadget_instances(randoms, "gadgetR"),
                  linext, quadrangulations(seed), rejection_corpus(), exhaustive, randoms, posets)


# ---------------------------------------------------------------- checks

class _Tally:
    def __init__(self):
        self.checked = 0
        self.failed = 0
        self.failures: list = []

    def check(self, ok: bool, detail):
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(detail)
        return ok

    def result(self, **extra) -> dict:
        out = {"passed": not self.failed, "checked": self.checked, "failed": self.failed,
               "failures": self.failures}
        out.update(extra)
        return out


def check_recognition(c: Corpus) -> dict:
    t = _Tally()
    accepted = 0
    for inst in c.base + c.gadgets:
        rec = recognize(inst.graph)
        accepted += rec.accepted
        t.check(rec.accepted, {"instance": inst.name, "reason": rec.reason})
        classes = theta_relation_classes(inst.graph)
        labels = [0] * inst.graph.m
        for k, cls in enumerate(classes):
            for e in cls:
                labels[e] = k
        report = verify_cut_conditions(inst.graph, labels)
        agree = report["condition_i"]["passed"] and report["condition_ii"]["passed"]
        t.check(agree == rec.accepted, {"instance": inst.name, "routes_disagree": True})
    rejected = {}
    for inst in c.rejects:
        rec = recognize(inst.graph)
        t.check(not rec.accepted and rec.witness is not None, {"instance": inst.name})
        rejected[inst.name] = rec.reason
    return t.result(accepted=accepted, rejected=rejected)


def check_hull_equality(c: Corpus, max_n: int = 32, random_sets: int = 100) -> dict:
    t = _Tally()
    graphs = 0
    for inst in c.partial_cubes():
        g = inst.graph
        if g.n > max_n:
            continue
        graphs += 1
        cp = recognize(g).cut_partition
        for k in range(1, min(3, g.n) + 1):
            for combo in combinations(range(g.n), k):
                s = sum(1 << v for v in combo)
                t.check(hull_halfspace(g, cp, s) == hull_closure(g, s),
                        {"instance": inst.name, "set": list(combo)})
        rng = random.Random(f"{c.seed}:{inst.name}")
        if g.n > 4:
            for _ in range(random_sets):
                s = sum(1 << v for v in rng.sample(range(g.n), rng.randint(4, g.n)))
                t.check(hull_halfspace(g, cp, s) == hull_closure(g, s),
                        {"instance": inst.name, "set": members(s)})
    return t.result(graphs=graphs)


def check_hull_numbers(c: Corpus, max_n: int = 16) -> dict:
    t = _Tally()
    values = {}
    for inst in c.partial_cubes():
        g = inst.graph
        if g.n > max_n:
            continue
        exact = hull_number_exact(g)
        one = hull_number_onesided(g)
        brute = hull_number_bruteforce(g)
        values[inst.name] = exact.size
        t.check(exact.size == one.size == brute.size,
                {"instance": inst.name, "exact": exact.size, "onesided": one.size, "brute": brute.size})
        t.check(exact.witness == brute.witness, {"instance": inst.name, "witness_mismatch": True})
        t.check(is_hull_set(g, exact.witness) and is_hull_set(g, one.witness),
                {"instance": inst.name, "witness_not_hull": True})
    return t.result(graphs=len(values), hull_numbers=values)


def check_reduction(c: Corpus) -> dict:
    t = _Tally()
    sat_count = 0
    for tag, formulas in (("exhaustive", c.exhaustive), ("random", c.random_formulas)):
        for i, f in enumerate(formulas):
            r = verify_reduction(f)
            sat_count += r["satisfiable"]
            ok = (r["biconditional_holds"] and r["partial_cube"]
                  and r["cuts"]["total"] == f.n + f.m + 1 == r["cuts"]["expected"])
            if r["satisfiable"]:
                ok = ok and r["assignment_hull_set"] and r["hull_number"] == f.n + 1
            t.check(ok, {"family": tag, "index": i, "clauses": [list(cl) for cl in f.clauses]})
    return t.result(exhaustive=len(c.exhaustive), random=len(c.random_formulas),
                    satisfiable=sat_count)


def check_dimension(c: Corpus) -> dict:
    t = _Tally()
    literal_log = _Tally()
    dims = {}
    for name, p in c.posets:
        lg = linext_graph(p)
        count = len(lg.perm_of)
        via = dimension_via_hull(p, lg).size
        brute = dimension_bruteforce(p)
        w = width(p)
        dims[name] = via
        t.check(via == brute, {"poset": name, "via_hull": via, "brute": brute})
        t.check(via <= w, {"poset": name, "dimension": via, "width": w})
        t.check(via <= count.bit_length(), {"poset": name, "dimension": via, "extensions": count})
        literal_log.check(via <= math.ceil(math.log2(count)),
                          {"poset": name, "dimension": via, "extensions": count})
    t.check(dims["S3"] == 3, {"poset": "S3", "dimension": dims["S3"]})
    return t.result(posets=len(dims), S3=dims["S3"], ceil_log2_bound=literal_log.result())


def check_quadrangulations(c: Corpus) -> dict:
    t = _Tally()
    results = {}
    for inst in c.quads:
        g = inst.graph
        mode = "strict" if inst.rotation is not None else "trusted"
        q = hull_number_quad(g, mode, inst.rotation)
        exact = hull_number_exact(g)
        results[inst.name] = {"mode": mode, "hull_number": q.size, "rejected_bases": sorted(q.rejected)}
        t.check(q.size == exact.size, {"instance": inst.name, "quad": q.size, "exact": exact.size})
        cp = recognize(g).cut_partition
        for v in sorted(q.h):
            ig = intersection_graph(g, cp, v)
            elim = peo(ig)
            t.check(elim.chordal, {"instance": inst.name, "base": v, "not_chordal": True})
            cover = min_clique_cover(ig, elim.order)
            t.check(len(cover.cliques) == len(cover.independent),
                    {"instance": inst.name, "base": v, "cover_vs_independent": True})
            far = [cp.far_side(i, v) for i in range(len(cp))]
            t.check(all((far[i] & far[j] != 0) == (j in ig.adj[i])
                        for i in range(len(far)) for j in range(len(far)) if i != j),
                    {"instance": inst.name, "base": v, "adjacency": True})
            t.check(q.h[v] == h_v(g, cp, v).size,
                    {"instance": inst.name, "base": v, "quad_h": q.h[v]})
        if mode == "strict":
            t.check(not q.rejected, {"instance": inst.name, "strict_rejections": sorted(q.rejected)})
    return t.result(instances=results)


def check_lattices(c: Corpus, max_n: int = 16) -> dict:
    t = _Tally()
    graphs = 0
    for inst in c.partial_cubes():
        g = inst.graph
        if g.n > max_n:
            continue
        graphs += 1
        full = build_lattice_graph(g)
        size, _ = hull_number_lattice(full)
        exact = hull_number_exact(g).size
        t.check(size == exact and 2 ** size <= full.size,
                {"instance": inst.name, "lattice": size, "exact": exact, "elements": full.size})
        for v in range(g.n):
            lat = build_lattice_above(g, v)
            uld, at = is_uld(lat)
            emb = verify_embedding(g, v, lat)
            t.check(uld and emb["passed"] and recognize(hasse_graph(lat)).accepted,
                    {"instance": inst.name, "base": v, "uld": uld, "embedding": emb["passed"]})
    k23 = fam.complete_bipartite(2, 3)
    failing = []
    for v in range(k23.n):
        lat = build_lattice_above(k23, v)
        if not is_uld(lat)[0] or not verify_embedding(k23, v, lat)["passed"]:
            failing.append(v)
    t.check(bool(failing), {"instance": "K2,3", "no_failing_base": True})
    return t.result(graphs=graphs, k23_failing_bases=failing)


def check_side_convexity(c: Corpus, max_n: int = 64) -> dict:
    t = _Tally()
    for inst in c.partial_cubes():
        g = inst.graph
        if g.n > max_n:
            continue
        cp = recognize(g).cut_partition
        for i, cut in enumerate(cp.cuts):
            t.check(is_convex(g, cut.minus) and is_convex(g, cut.plus), {"instance": inst.name, "cut": i})
    return t.result()


CHECKS = {
    "recognition": check_recognition,
    "halfspace_equals_closure": check_hull_equality,
    "hull_number_routes": check_hull_numbers,
    "sat_reduction": check_reduction,
    "poset_dimension": check_dimension,
    "quadrangulations": check_quadrangulations,
    "convex_lattices": check_lattices,
    "cut_sides_convex": check_side_convexity,
}


def run_suite(seed: int = DEFAULT_SEED, only=None) -> dict:
    c = build_corpus(seed)
    out = {"seed": seed, "paper_ref": "cross-validation of all results over the built-in corpus",
           "corpus": {"base": len(c.base), "gadgets": len(c.gadgets), "linext": len(c.linext),
                      "quads": len(c.quads), "rejects": len(c.rejects),
                      "formulas": len(c.exhaustive) + len(c.random_formulas), "posets": len(c.posets)},
           "checks": {}}
    for name, fn in CHECKS.items():
        if only is None or name in only:
            out["checks"][name] = fn(c)
    out["passed"] = all(r["passed"] for r in out["checks"].values())
    return out
