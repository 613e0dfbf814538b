"""Command-line entry point.

JSON results go to stdout (or ``-o``); diagnostics go to stderr. Exit codes:
0 success, 1 bad input, 2 property violation, 3 scale limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .convexity import hull_closure, hull_halfspace
from .core import Graph, load_graph, members, vset
from .errors import ParseError, PartialCubeError, PropertyViolation
from .hullnum import hull_number_bruteforce, hull_number_exact, hull_number_onesided
from .lattice import (build_lattice_above, build_lattice_graph, hasse_graph, hull_number_lattice,
                      is_uld, lattice_from_dict, lattice_to_dict, verify_embedding)
from .pcube import embedding_to_dict, recognize
from .planarquad import hull_number_quad, parse_rotation
from .poset import dimension_to_dict, dimension_via_hull, linext_graph, parse_poset
from .satred import build_gadget, gadget_to_dict, parse_dimacs, preprocess_pure_literals, verify_reduction


class Result:
    """Payload plus exit code; DOT text, when present, is written to --dot."""

    def __init__(self, data: dict, code: int = 0, dot: str = None):
        self.data, self.code, self.dot = data, code, dot


def _read(path) -> bytes:
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _graph(args) -> Graph:
    return load_graph(_read(args.input))


def _vertex_list(text: str, n: int) -> int:
    try:
        ids = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad vertex list {text!r}") from None
    if not ids:
        raise ParseError("vertex list is empty")
    bad = [v for v in ids if not 0 <= v < n]
    if bad:
        raise ParseError(f"vertices {bad} out of range for n={n}")
    return vset(ids)


def cmd_recognize(args) -> Result:
    g = _graph(args)
    rec = recognize(g)
    data = embedding_to_dict(g, rec)
    data["paper_ref"] = "cut-partition characterization of partial cubes"
    return Result(data, 0 if rec.accepted else 2, g.to_dot())


def cmd_hull(args) -> Result:
    g = _graph(args)
    s = _vertex_list(args.set, g.n)
    closure = hull_closure(g, s)
    data = {"set": members(s), "hull": members(closure), "convex": closure == s,
            "paper_ref": "hull as the intersection of cut sides C(V')"}
    rec = recognize(g)
    if rec.accepted:
        half = hull_halfspace(g, rec.cut_partition, s)
        data["halfspace_agrees"] = half == closure
    return Result(data)


def cmd_hullnum(args) -> Result:
    g = _graph(args)
    method = args.method
    data = {"method": method, "paper_ref": "hull sets as hitting sets of cut sides"}
    if method in ("exact", "all"):
        exact = hull_number_exact(g)
        data.update(hull_number=exact.size, witness=members(exact.witness))
    if method in ("onesided", "all"):
        one = hull_number_onesided(g)
        data.update(onesided={"hull_number": one.size, "best_v": one.best_v,
                              "witness": members(one.witness)})
        data.setdefault("hull_number", one.size)
        data.setdefault("witness", members(one.witness))
        data["paper_ref"] = "hull number as min over v of h_v plus one"
    if method in ("brute", "all"):
        brute = hull_number_bruteforce(g)
        data.update(brute={"hull_number": brute.size, "witness": members(brute.witness)})
        data.setdefault("hull_number", brute.size)
        data.setdefault("witness", members(brute.witness))
    if method == "all":
        agree = data["hull_number"] == data["onesided"]["hull_number"] == data["brute"]["hull_number"]
        data["methods_agree"] = agree
        if not agree:
            return Result(data, 2)
    return Result(data)


def cmd_sat_gadget(args) -> Result:
    f = parse_dimacs(_read(args.input))
    reduced, fixed = preprocess_pure_literals(f)
    if not reduced.clauses:
        raise PropertyViolation("formula is empty after pure-literal elimination; no gadget to build")
    gg = build_gadget(reduced)
    data = gadget_to_dict(gg)
    data["fixed"] = {str(k): v for k, v in sorted(fixed.items())}
    data["paper_ref"] = "SAT-AM3 gadget graph G_F"
    return Result(data, dot=gg.graph.to_dot())


def cmd_sat_verify(args) -> Result:
    report = verify_reduction(parse_dimacs(_read(args.input)))
    report["paper_ref"] = "SAT-AM3 equivalence sat(F) iff hn(G_F) <= n+1"
    return Result(report, 0 if report["biconditional_holds"] else 2)


def cmd_poset_dim(args) -> Result:
    p = parse_poset(_read(args.input))
    lg = linext_graph(p)
    data = dimension_to_dict(p, dimension_via_hull(p, lg), len(lg.perm_of))
    data["paper_ref"] = "poset dimension as hull number of the linear extension graph"
    return Result(data, dot=lg.graph.to_dot())


def cmd_quad_hullnum(args) -> Result:
    g = _graph(args)
    if args.mode == "strict" and not args.rotation:
        raise ParseError("strict mode needs --rotation")
    rotation = parse_rotation(_read(args.rotation), g.n) if args.rotation else None
    try:
        q = hull_number_quad(g, args.mode, rotation)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    data = {"mode": args.mode, "hull_number": q.size, "best_v": q.best_v,
            "witness": members(q.witness), "h": {str(v): h for v, h in sorted(q.h.items())},
            "rejected": {str(v): r for v, r in sorted(q.rejected.items())},
            "paper_ref": "hull number of plane quadrangulations via chordal clique covers"}
    return Result(data)


def cmd_lattice(args) -> Result:
    raw = _read(args.input)
    if args.lattice_json:
        try:
            lat = lattice_from_dict(json.loads(raw))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad lattice JSON: {exc}") from None
        size, atoms = hull_number_lattice(lat)
        return Result({"hull_number": size, "atoms": atoms, "elements": lat.size,
                       "paper_ref": "hull number of an atomistic convex geometry lattice"})
    g = load_graph(raw)
    if args.base is None:
        lat = build_lattice_graph(g)
        data = {"base": None}
    else:
        if not 0 <= args.base < g.n:
            raise ParseError(f"base vertex {args.base} out of range for n={g.n}")
        lat = build_lattice_above(g, args.base)
        data = {"base": args.base}
    data["lattice"] = lattice_to_dict(lat)
    data["paper_ref"] = "lattice of convex subgraphs and its ULD structure"
    code = 0
    if args.check_uld:
        ok, at = is_uld(lat)
        data["uld"] = {"passed": ok, "violation": None if ok else members(lat.elements[at])}
        code = code or (0 if ok else 2)
    if args.verify_embedding:
        if args.base is None:
            raise ParseError("--verify-embedding needs --base")
        report = verify_embedding(g, args.base, lat)
        data["embedding"] = report
        code = code or (0 if report["passed"] else 2)
    if args.hullnum:
        full = lat if args.base is None else build_lattice_graph(g)
        size, atoms = hull_number_lattice(full)
        data["hull_number"] = {"value": size, "atoms": [members(full.elements[a]) for a in atoms]}
    return Result(data, code, hasse_graph(lat).to_dot())


def cmd_corpus(args) -> Result:
    from .corpus import run_suite

    data = run_suite(args.seed)
    return Result(data, 0 if data["passed"] else 2)


COMMANDS = {
    "recognize": cmd_recognize,
    "hull": cmd_hull,
    "hullnum": cmd_hullnum,
    "sat-gadget": cmd_sat_gadget,
    "sat-verify": cmd_sat_verify,
    "poset-dim": cmd_poset_dim,
    "quad-hullnum": cmd_quad_hullnum,
    "lattice": cmd_lattice,
    "corpus": cmd_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    from .corpus import DEFAULT_SEED

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="input file (default: stdin)")
    common.add_argument("-o", "--output", help="output file (default: stdout)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--dot", metavar="FILE", help="also write the graph or Hasse diagram as DOT")

    parser = argparse.ArgumentParser(prog="partialcubes",
                                     description="Convexity tools for partial cubes.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("recognize", parents=[common], help="recognize a partial cube")
    p = sub.add_parser("hull", parents=[common], help="convex hull of a vertex set")
    p.add_argument("--set", required=True, help="vertex ids, comma or space separated")
    p = sub.add_parser("hullnum", parents=[common], help="hull number")
    p.add_argument("--method", choices=("exact", "onesided", "brute", "all"), default="exact")
    sub.add_parser("sat-gadget", parents=[common], help="build G_F from DIMACS")
    sub.add_parser("sat-verify", parents=[common], help="check the SAT equivalence for a formula")
    sub.add_parser("poset-dim", parents=[common], help="poset dimension via hull number")
    p = sub.add_parser("quad-hullnum", parents=[common], help="hull number of a plane quadrangulation")
    p.add_argument("--mode", choices=("strict", "trusted"), default="trusted")
    p.add_argument("--rotation", help="rotation system file")
    p = sub.add_parser("lattice", parents=[common], help="lattice of convex subgraphs")
    p.add_argument("--base", type=int)
    p.add_argument("--check-uld", action="store_true")
    p.add_argument("--verify-embedding", action="store_true")
    p.add_argument("--hullnum", action="store_true")
    p.add_argument("--lattice-json", action="store_true",
                   help="input is an exported lattice; report its hull number")
    p = sub.add_parser("corpus", parents=[common], help="run the cross-validation suite")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def _text(data, indent="") -> str:
    lines = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_text(value, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(l for l in lines if l)


def render(data: dict, fmt: str) -> str:
    if fmt == "text":
        return _text(data) + "\n"
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _emit(text: str, path) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except PartialCubeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        data = {"error": type(exc).__name__, "message": str(exc)}
        witness = getattr(exc, "witness", None)
        if witness is not None:
            data["witness"] = witness
        _emit(render(data, args.format), args.output)
        return exc.exit_code
    _emit(render(result.data, args.format), args.output)
    if args.dot and result.dot:
        with open(args.dot, "w") as fh:
            fh.write(result.dot)
    if result.code:
        print(f"{args.command}: property check failed", file=sys.stderr)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
