"""SAT-AM3 formulas and the partial cube gadget whose hull number encodes them.

A formula with n variables and m clauses (each clause at most three literals,
each variable in at most three clauses, both polarities present) becomes a
partial cube G_F with n + m + 1 cuts such that F is satisfiable iff G_F has a
hull set of size n + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

from .core import Graph, members, require_scale
from .errors import ParseError, PropertyViolation, ScaleLimitError
from .hullnum import hull_number_exact, is_hull_set
from .pcube import CutPartition, recognize

SAT_BRUTE_FORCE_MAX_VARS = 8


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]  # DIMACS literals: +v / -v, v >= 1

    @property
    def variables(self) -> list[int]:
        return sorted({abs(l) for c in self.clauses for l in c})

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def m(self) -> int:
        return len(self.clauses)

    def occurrences(self, lit: int) -> list[int]:
        return [i for i, c in enumerate(self.clauses) if lit in c]

    def satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {self.m}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def check_am3(f: CnfFormula) -> None:
    for i, c in enumerate(f.clauses):
        if not c:
            raise ParseError(f"clause {i + 1} is empty")
        if len(c) > 3:
            raise ParseError(f"AM3 violation: clause {i + 1} has {len(c)} literals")
        if len(set(c)) != len(c):
            raise ParseError(f"clause {i + 1} repeats a literal")
    for v in f.variables:
        k = sum(1 for c in f.clauses if v in c or -v in c)
        if k > 3:
            raise ParseError(f"AM3 violation: variable {v} occurs in {k} clauses")


def parse_dimacs(text) -> CnfFormula:
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    header = None
    clauses = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected a single 'p cnf <vars> <clauses>' line", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("non-integer in problem line", lineno) from None
            continue
        if header is None:
            raise ParseError("clause before problem line", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", lineno)
                clauses.append(tuple(dict.fromkeys(current)))
                current = []
            elif abs(lit) > header[0]:
                raise ParseError(f"literal {lit} exceeds declared {header[0]} variables", lineno)
            else:
                current.append(lit)
    if header is None:
        raise ParseError("missing problem line")
    if current:
        clauses.append(tuple(dict.fromkeys(current)))
    if len(clauses) != header[1]:
        raise ParseError(f"problem line announces {header[1]} clauses, found {len(clauses)}")
    f = CnfFormula(header[0], tuple(clauses))
    check_am3(f)
    return f


def preprocess_pure_literals(f: CnfFormula) -> tuple[CnfFormula, dict[int, bool]]:
    """Eliminate pure literals (and tautological clauses) until none remain.

    Returns the reduced formula, in which every variable occurs in both
    polarities, and the forced partial assignment.
    """
    clauses = [c for c in f.clauses if not any(-l in c for l in c)]
    fixed: dict[int, bool] = {}
    while True:
        lits = {l for c in clauses for l in c}
        pure = sorted(l for l in lits if -l not in lits)
        if not pure:
            break
        for l in pure:
            fixed[abs(l)] = l > 0
        clauses = [c for c in clauses if not any(l in c for l in pure)]
    return CnfFormula(f.num_vars, tuple(clauses)), fixed


def brute_force_sat(f: CnfFormula) -> Optional[dict[int, bool]]:
    """First satisfying assignment in binary counting order (False before True)."""
    vs = f.variables
    if len(vs) > SAT_BRUTE_FORCE_MAX_VARS:
        raise ScaleLimitError(f"brute-force SAT refuses {len(vs)} variables")
    for bits in product((False, True), repeat=len(vs)):
        a = dict(zip(vs, bits))
        if f.satisfied_by(a):
            return a
    return None


@dataclass
class GadgetGraph:
    formula: CnfFormula
    graph: Graph
    role_of: list[tuple]
    cut_partition: CutPartition
    cut_role: list[tuple]
    u: int
    u_prime: int
    clause_vertex: list[int]
    shared_vertex: dict[tuple[int, int], int]
    copy_u: dict[int, int]
    copies: dict[tuple[int, int], int]  # (original vertex, variable) -> copy
    v_lit: dict[int, int]  # literal -> its anchor vertex

    def copy_block(self, x: int) -> int:
        mask = 0
        for (orig, var), c in self.copies.items():
            if var == x:
                mask |= 1 << c
        return mask


def role_label(role: tuple) -> str:
    kind = role[0]
    if kind == "U":
        return "u"
    if kind == "UPrime":
        return "u'"
    if kind == "Clause":
        return f"d{role[1] + 1}"
    if kind == "Shared":
        return f"d{role[1] + 1},{role[2] + 1}"
    if kind == "CopyU":
        return f"u@x{role[1]}"
    if kind == "CopyClause":
        return f"d{role[1] + 1}@x{role[2]}"
    return f"d{role[1] + 1},{role[2] + 1}@x{role[3]}"


def build_gadget(f: CnfFormula) -> GadgetGraph:
    """Construct G_F, recognize it and label its n + m + 1 cuts.

    Raises PropertyViolation when the result is not a partial cube or its
    cut structure deviates from the expected census.
    """
    variables = f.variables
    if not variables:
        raise ValueError("formula has no variables")
    for x in variables:
        if not f.occurrences(x) or not f.occurrences(-x):
            raise ValueError(f"variable {x} is pure; preprocess first")
    check_am3(f)

    roles: list[tuple] = [("U",), ("UPrime",)]
    edges: list[tuple[int, int]] = [(0, 1)]
    u, u_prime = 0, 1
    clause_vertex = []
    for i in range(f.m):
        clause_vertex.append(len(roles))
        roles.append(("Clause", i))
        edges.append((u, clause_vertex[i]))
    shared_vertex: dict[tuple[int, int], int] = {}
    shared_lits: dict[tuple[int, int], set[int]] = {}
    for i, j in combinations(range(f.m), 2):
        common = set(f.clauses[i]) & set(f.clauses[j])
        if common:
            w = len(roles)
            shared_vertex[(i, j)] = w
            shared_lits[(i, j)] = common
            roles.append(("Shared", i, j))
            edges += [(clause_vertex[i], w), (clause_vertex[j], w)]
    base_edges = list(edges)

    copy_u: dict[int, int] = {}
    copies: dict[tuple[int, int], int] = {}
    matching: dict[int, list[tuple[int, int]]] = {}
    for x in variables:
        block = [u]
        block += [clause_vertex[i] for i, c in enumerate(f.clauses) if x in c or -x in c]
        block += [w for (i, j), w in shared_vertex.items()
                  if x in shared_lits[(i, j)] or -x in shared_lits[(i, j)]]
        inside = set(block)
        for orig in block:
            c = len(roles)
            copies[(orig, x)] = c
            r = roles[orig]
            if r[0] == "U":
                roles.append(("CopyU", x))
                copy_u[x] = c
            elif r[0] == "Clause":
                roles.append(("CopyClause", r[1], x))
            else:
                roles.append(("CopyShared", r[1], r[2], x))
        for a, b in base_edges:
            if a in inside and b in inside:
                edges.append((copies[(a, x)], copies[(b, x)]))
        matching[x] = [(orig, copies[(orig, x)]) for orig in block]
        edges += matching[x]

    v_lit: dict[int, int] = {}
    for x in variables:
        for lit in (x, -x):
            occ = f.occurrences(lit)
            if len(occ) == 1:
                v_lit[lit] = copies[(clause_vertex[occ[0]], x)]
            else:
                v_lit[lit] = copies[(shared_vertex[(occ[0], occ[1])], x)]

    g = Graph.from_edges(len(roles), edges, [role_label(r) for r in roles])
    rec = recognize(g)
    if not rec.accepted:
        raise PropertyViolation(f"gadget is not a partial cube ({rec.reason})", rec.witness)
    cp = rec.cut_partition
    cut_role = _label_cuts(g, f, cp, clause_vertex, shared_vertex, copies, matching)
    return GadgetGraph(f, g, roles, cp, cut_role, u, u_prime, clause_vertex,
                       shared_vertex, copy_u, copies, v_lit)


def _label_cuts(g, f, cp, clause_vertex, shared_vertex, copies, matching):
    expected = f.n + f.m + 1
    if len(cp) != expected:
        raise PropertyViolation(f"gadget has {len(cp)} cuts, expected {expected}",
                                {"cuts": len(cp), "expected": expected})

    def cut_of(a, b):
        return cp.class_of[g.edge_index[(a, b)]]

    roles: list[Optional[tuple]] = [None] * len(cp)

    def claim(cid, role):
        if roles[cid] is not None:
            raise PropertyViolation(f"cut {cid} carries two roles {roles[cid]} and {role}")
        roles[cid] = role

    claim(cut_of(0, 1), ("UUPrime",))
    for i, d in enumerate(clause_vertex):
        cid = cut_of(0, d)
        claim(cid, ("ClauseCut", i))
        want = {g.edge_index[(0, d)]}
        for (a, b), w in shared_vertex.items():
            if i in (a, b):
                other = clause_vertex[b if a == i else a]
                want.add(g.edge_index[(w, other)])
        originals = [g.edges[e] for e in want]
        for x in matching:
            for p, q in originals:
                if (p, x) in copies and (q, x) in copies:
                    want.add(g.edge_index[(copies[(p, x)], copies[(q, x)])])
        if not want <= set(cp.cuts[cid].edges):
            raise PropertyViolation(f"clause cut {i + 1} misses expected edges")
    for x, pairs in matching.items():
        cid = cut_of(*pairs[0])
        claim(cid, ("VarCut", x))
        if set(cp.cuts[cid].edges) != {g.edge_index[p] for p in pairs}:
            raise PropertyViolation(f"variable cut {x} differs from its matching")
    return roles


def assignment_to_hull_set(gg: GadgetGraph, assignment: dict[int, bool]) -> int:
    missing = [x for x in gg.formula.variables if x not in assignment]
    if missing:
        raise ValueError(f"assignment misses variables {missing}")
    h = 1 << gg.u_prime
    for x in gg.formula.variables:
        h |= 1 << gg.v_lit[x if assignment[x] else -x]
    return h


def hull_set_to_assignment(gg: GadgetGraph, h: int) -> dict[int, bool]:
    """Read a satisfying assignment off a hull set of size at most n + 1.

    The hull vertex inside each copy block is normalized to the literal anchor
    whose shortest path to u' passes through it.
    """
    f, g = gg.formula, gg.graph
    if h.bit_count() > f.n + 1:
        raise PropertyViolation(f"hull set has {h.bit_count()} > n + 1 = {f.n + 1} vertices")
    if not is_hull_set(g, h):
        raise PropertyViolation("vertex set is not a hull set", members(h))
    if not h >> gg.u_prime & 1:
        raise PropertyViolation("hull set misses u'")
    dist = g.distances
    assignment = {}
    for x in f.variables:
        inside = members(h & gg.copy_block(x))
        if len(inside) != 1:
            raise PropertyViolation(f"hull set has {len(inside)} vertices in the block of x{x}")
        hx = inside[0]
        if dist.interval(gg.u_prime, gg.v_lit[x]) >> hx & 1:
            assignment[x] = True
        elif dist.interval(gg.u_prime, gg.v_lit[-x]) >> hx & 1:
            assignment[x] = False
        else:
            raise PropertyViolation(f"vertex {hx} is on no shortest path from u' to a literal anchor")
    if not f.satisfied_by(assignment):
        raise PropertyViolation("decoded assignment does not satisfy the formula", assignment)
    return assignment


def cut_census(gg: GadgetGraph) -> dict:
    kinds = [r[0] for r in gg.cut_role]
    return {"total": len(kinds), "expected": gg.formula.n + gg.formula.m + 1,
            "uu_prime": kinds.count("UUPrime"), "clause": kinds.count("ClauseCut"),
            "variable": kinds.count("VarCut")}


def verify_reduction(f: CnfFormula) -> dict:
    """Check sat(F) <=> hn(G_F) <= n + 1 by brute force on both sides."""
    reduced, fixed = preprocess_pure_literals(f)
    report = {"n": reduced.n, "m": reduced.m,
              "fixed": {str(k): v for k, v in sorted(fixed.items())}}
    if not reduced.clauses:
        report.update(satisfiable=True, gadget_built=False, hull_number=None,
                      n_plus_1=1, biconditional_holds=True, cuts=None,
                      note="reduced formula is empty; satisfiable outright")
        return report
    if reduced.n > SAT_BRUTE_FORCE_MAX_VARS:
        raise ScaleLimitError(f"verification refuses n={reduced.n} > {SAT_BRUTE_FORCE_MAX_VARS}")
    sat = brute_force_sat(reduced)
    gg = build_gadget(reduced)
    require_scale(gg.graph.n, 4096, "exact hull number")
    hn = hull_number_exact(gg.graph)
    report.update(
        satisfiable=sat is not None,
        gadget_built=True,
        vertices=gg.graph.n,
        partial_cube=True,
        hull_number=hn.size,
        n_plus_1=reduced.n + 1,
        biconditional_holds=(sat is not None) == (hn.size <= reduced.n + 1),
        cuts=cut_census(gg),
    )
    if sat is not None:
        report["assignment_hull_set"] = is_hull_set(gg.graph, assignment_to_hull_set(gg, sat))
    if hn.size == reduced.n + 1:
        decoded = hull_set_to_assignment(gg, hn.witness)
        report["decoded_assignment"] = {str(k): v for k, v in sorted(decoded.items())}
    return report


def gadget_to_dict(gg: GadgetGraph) -> dict:
    d = gg.graph.to_dict()
    d["roles"] = [list(r) for r in gg.role_of]
    d["cut_roles"] = [list(r) for r in gg.cut_role]
    d["literal_anchors"] = {str(l): v for l, v in sorted(gg.v_lit.items())}
    return d
