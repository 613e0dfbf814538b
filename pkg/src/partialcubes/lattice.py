"""Lattices of convex subgraphs: Hasse diagrams, ULD test, embeddings and hull number."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .convexity import hull_closure
from .core import Graph, members, require_scale
from .errors import PropertyViolation, ScaleLimitError
from .pcube import recognize

GENERAL_GRAPH_MAX_N = 20
MAX_ELEMENTS = 200_000


def _canonical(mask: int) -> tuple:
    return (mask.bit_count(), members(mask))


@dataclass
class ConvexLattice:
    """Finite lattice of vertex sets closed under intersection, ordered by containment.

    Element ids follow (cardinality, sorted members). Meets are intersections;
    the join of a family is the smallest element containing its union.
    """

    elements: list[int]
    upper: list[list[int]] = field(repr=False)
    lower: list[list[int]] = field(repr=False)
    bottom: int = 0
    top: int = 0

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def atoms(self) -> list[int]:
        return list(self.upper[self.bottom])

    @property
    def index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.elements)}

    def covers(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.size) for j in self.upper[i]]

    def join_mask(self, mask: int) -> int:
        for i, e in enumerate(self.elements):
            if e & mask == mask:
                return i
        raise PropertyViolation("no upper bound; not a lattice")

    def join(self, ids) -> int:
        mask = 0
        for i in ids:
            mask |= self.elements[i]
        if not ids:
            return self.bottom
        return self.join_mask(mask)

    def meet(self, ids) -> int:
        mask = self.elements[self.top]
        for i in ids:
            mask &= self.elements[i]
        return self.index[mask]


def build_lattice(sets, check_atomistic: bool = False) -> ConvexLattice:
    elements = sorted(set(sets), key=_canonical)
    if not elements:
        raise PropertyViolation("empty family")
    if len(elements) > MAX_ELEMENTS:
        raise ScaleLimitError(f"{len(elements)} lattice elements")
    present = set(elements)
    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            if a & b not in present:
                raise PropertyViolation(f"family not closed under intersection: {members(a)} & {members(b)}")
    top = elements[-1]
    if any(e & top != e for e in elements):
        raise PropertyViolation("family has no largest member")
    upper: list[list[int]] = [[] for _ in elements]
    lower: list[list[int]] = [[] for _ in elements]
    for i, a in enumerate(elements):
        found: list[int] = []
        for j in range(i + 1, len(elements)):
            b = elements[j]
            if b & a == a and b != a and not any(elements[c] & b == elements[c] for c in found):
                found.append(j)
        upper[i] = found
        for j in found:
            lower[j].append(i)
    lat = ConvexLattice(elements, upper, lower, 0, len(elements) - 1)
    if check_atomistic and not is_atomistic(lat):
        raise PropertyViolation("lattice is not atomistic")
    return lat


def is_atomistic(lat: ConvexLattice) -> bool:
    atoms = lat.atoms
    for i, e in enumerate(lat.elements):
        below = [a for a in atoms if lat.elements[a] & e == lat.elements[a]]
        if lat.join(below) != i:
            return False
    return True


def convex_subgraphs(g: Graph) -> list[int]:
    """All convex vertex sets including the empty set.

    Partial cubes: closure under intersection of the cut sides and V.
    Other graphs (n <= 20): every hull(C + v) grown from the empty set.
    """
    rec = recognize(g)
    if rec.accepted:
        family = {g.vertices}
        for side in rec.cut_partition.sides():
            family |= {c & side for c in family}
            if len(family) > MAX_ELEMENTS:
                raise ScaleLimitError(f"more than {MAX_ELEMENTS} convex sets")
        family.add(0)
        return sorted(family, key=_canonical)
    require_scale(g.n, GENERAL_GRAPH_MAX_N, "convex set enumeration on a non-partial cube")
    family = {0}
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for v in range(g.n):
            if not c >> v & 1:
                h = hull_closure(g, c | 1 << v)
                if h not in family:
                    family.add(h)
                    queue.append(h)
    return sorted(family, key=_canonical)


def build_lattice_graph(g: Graph) -> ConvexLattice:
    return build_lattice(convex_subgraphs(g), check_atomistic=True)


def build_lattice_above(g: Graph, v: int) -> ConvexLattice:
    return build_lattice([s for s in convex_subgraphs(g) if s >> v & 1])


def meet_irreducibles(lat: ConvexLattice) -> list[int]:
    return [i for i in range(lat.size) if len(lat.upper[i]) == 1]


def is_uld(lat: ConvexLattice) -> tuple[bool, Optional[int]]:
    """Unique minimal meet-irreducible representation at every element.

    m in M(x) is essential when dropping it changes the meet; x is fine iff
    the essentials alone already meet to x.
    """
    irreducible = meet_irreducibles(lat)
    top_mask = lat.elements[lat.top]
    for i, x in enumerate(lat.elements):
        above = [lat.elements[m] for m in irreducible if lat.elements[m] & x == x]

        def meet(masks):
            out = top_mask
            for m in masks:
                out &= m
            return out

        if meet(above) != x:
            return False, i
        essential = [m for k, m in enumerate(above) if meet(above[:k] + above[k + 1:]) != x]
        if meet(essential) != x:
            return False, i
    return True, None


def hull_number_lattice(lat: ConvexLattice) -> tuple[int, list[int]]:
    """Fewest atoms joining to the top, searched by size up to log2 |L|.

    Returns the size and the lexicographically first atom-id witness.
    """
    if not is_atomistic(lat):
        raise PropertyViolation("hull number needs an atomistic lattice")
    atoms = lat.atoms
    top_mask = lat.elements[lat.top]
    if lat.size == 1:
        return 0, []
    bound = math.floor(math.log2(lat.size))
    for k in range(1, bound + 1):
        found = _atoms_reaching_top(lat, atoms, k, top_mask)
        if found is not None:
            return k, found
    raise PropertyViolation(f"no {bound} atoms join to the top; lattice size bound violated")


def _atoms_reaching_top(lat, atoms, k, top_mask):
    chosen: list[int] = []

    def search(start, mask):
        if len(chosen) == k:
            return lat.elements[lat.join_mask(mask)] == top_mask
        for pos in range(start, len(atoms) - (k - len(chosen)) + 1):
            a = atoms[pos]
            chosen.append(a)
            grown = lat.elements[lat.join_mask(mask | lat.elements[a])]
            if search(pos + 1, grown):
                return True
            chosen.pop()
        return False

    return list(chosen) if search(0, 0) else None


def hasse_graph(lat: ConvexLattice) -> Graph:
    return Graph.from_edges(lat.size, lat.covers())


def verify_embedding(g: Graph, v: int, lat: ConvexLattice) -> dict:
    """Check that u -> hull{v, u} is an isometric embedding into the Hasse diagram."""
    index = lat.index
    phi = []
    report = {}
    for u in range(g.n):
        h = hull_closure(g, 1 << v | 1 << u)
        if h not in index:
            report["in_lattice"] = {"passed": False, "violation": u}
            return report
        phi.append(index[h])
    report["in_lattice"] = {"passed": True, "violation": None}
    dup = None
    seen = {}
    for u, e in enumerate(phi):
        if e in seen:
            dup = [seen[e], u]
            break
        seen[e] = u
    report["injective"] = {"passed": dup is None, "violation": dup}
    bad_edge = None
    for a, b in g.edges:
        x, y = phi[a], phi[b]
        if y not in lat.upper[x] and x not in lat.upper[y]:
            bad_edge = [a, b]
            break
    report["edges_to_covers"] = {"passed": bad_edge is None, "violation": bad_edge}
    hasse = hasse_graph(lat).distances
    bad_pair = None
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if hasse[phi[a], phi[b]] != g.distances[a, b]:
                bad_pair = [a, b]
                break
        if bad_pair:
            break
    report["isometric"] = {"passed": bad_pair is None, "violation": bad_pair}
    report["passed"] = all(c["passed"] for c in report.values())
    return report


def lattice_to_dict(lat: ConvexLattice) -> dict:
    return {"elements": [members(e) for e in lat.elements], "covers": [list(c) for c in lat.covers()],
            "atoms": lat.atoms, "bottom": lat.bottom, "top": lat.top}


def lattice_from_dict(data: dict) -> ConvexLattice:
    lat = build_lattice([sum(1 << x for x in e) for e in data["elements"]])
    given = data.get("covers")
    if given is not None:
        # ids may be ordered differently in the input; compare as set pairs
        old = [sum(1 << x for x in e) for e in data["elements"]]
        want = {(old[a], old[b]) for a, b in given}
        have = {(lat.elements[a], lat.elements[b]) for a, b in lat.covers()}
        if want != have:
            raise PropertyViolation("supplied cover relation disagrees with containment")
    return lat
