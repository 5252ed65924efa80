"""Command-line front door.

Exit codes: 0 success/feasible, 1 certified infeasible/obstructed (also
unknown verdicts), 2 usage or precondition error, 3 internal error or an
uncertified solver stall.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from math import ceil, floor
from pathlib import Path
from typing import Optional

from . import generators
from .avd import advd2_bipartite_delta6, advd2_degree_gap, degree_gap_vertices
from .avd import vc2_bipartite
from .degree_lists import (
    DEFAULT_PAIR_CONSTANTS,
    DEFAULT_SINGLE_CONSTANT,
    bipartite_two_value_spec,
    generic_spec,
    pair_single_c_spec,
    pair_spec,
    triple_spec,
    validate_spec,
)
from .errors import (
    BudgetExceeded,
    ColoringUnavailable,
    FactorWeightError,
    Infeasible,
    InternalBoundExceeded,
    MalformedInputError,
    Obstructed,
    PreconditionViolated,
    SpecInvalid,
)
from .factor_search import solve_list_factor
from .graph import Graph, bipartition, format_edge_list, parse_edge_list, parse_graph6
from .group_weighting import vertex_coloring_weighting_zr
from .oracle import ADJACENT_VD, VERTEX_COLORING, OracleBudget, enumerate_l_factors, enumerate_weightings
from .report import FACTOR_KIND, WEIGHTING_KIND, Report, WitnessDoc
from .weighting import is_adjacent_vd, is_vertex_coloring

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _read_graph(path: str) -> Graph:
    text = Path(path).read_text()
    stripped = text.strip()
    if stripped.startswith("graph6:"):
        return parse_graph6(stripped[len("graph6:"):])
    return parse_edge_list(text)


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def _parse_lists(text: str, n: int):
    out = [None] * n
    for part in text.split():
        v, _, vals = part.partition(":")
        out[int(v)] = [int(x) for x in vals.split(",")]
    missing = [v for v in range(n) if out[v] is None]
    if missing:
        raise SpecInvalid(f"lists missing for vertices {missing}")
    return out


def _auto_pair_windows(g, c1, c2, c3):
    lows, highs = [], []
    for v in range(g.n):
        d = g.degree(v)
        lo = ceil(c1 * d)
        hi = ceil(c2 * d)
        if lo > floor(c2 * d) or hi > floor(c3 * d):
            raise SpecInvalid(
                f"vertex {v} (degree {d}) admits no anchors for constants "
                f"({c1},{c2},{c3})")
        lows.append(lo)
        highs.append(hi)
    return lows, highs


def _build_factor_spec(args, g: Graph):
    if args.spec == "pair":
        constants = (args.c1, args.c2, args.c3)
        if args.auto:
            lows, highs = _auto_pair_windows(g, *constants)
            return pair_spec(g, lows, highs, constants)
        if args.aminus is None or args.aplus is None:
            raise SpecInvalid("pair spec needs --aminus/--aplus or --auto")
        return pair_spec(g, args.aminus, args.aplus, constants)
    if args.spec == "pairc":
        if args.auto:
            lows = [floor(args.c * g.degree(v)) for v in range(g.n)]
            highs = [lo + 1 for lo in lows]
            return pair_single_c_spec(g, lows, highs, args.c)
        if args.aminus is None or args.aplus is None:
            raise SpecInvalid("pairc spec needs --aminus/--aplus or --auto")
        return pair_single_c_spec(g, args.aminus, args.aplus, args.c)
    if args.spec == "triple":
        if args.auto:
            a1 = [ceil(Fraction(3, 10) * g.degree(v)) for v in range(g.n)]
            a2 = [ceil(Fraction(4, 10) * g.degree(v)) for v in range(g.n)]
            a3 = [ceil(Fraction(6, 10) * g.degree(v)) for v in range(g.n)]
            return triple_spec(g, a1, a2, a3)
        if args.a1 is None or args.a2 is None or args.a3 is None:
            raise SpecInvalid("triple spec needs --a1/--a2/--a3 or --auto")
        return triple_spec(g, args.a1, args.a2, args.a3)
    if args.spec == "bip2":
        bip = bipartition(g)
        if bip is None:
            raise PreconditionViolated("bip2 spec needs a bipartite graph")
        if args.auto:
            ylo = [max(0, g.degree(v) // 2 - 1) for v in range(g.n)]
            yhi = [g.degree(v) // 2 + 2 for v in range(g.n)]
            return bipartite_two_value_spec(g, bip, ylo, yhi, args.c)
        if args.aminus is None or args.aplus is None:
            raise SpecInvalid("bip2 spec needs --aminus/--aplus or --auto")
        return bipartite_two_value_spec(g, bip, args.aminus, args.aplus, args.c)
    if args.spec == "generic":
        if not args.lists:
            raise SpecInvalid("generic spec needs --lists")
        return generic_spec(g, _parse_lists(args.lists, g.n))
    raise SpecInvalid(f"unknown spec kind {args.spec}")


def _cmd_factor(args, report: Report) -> int:
    g = _read_graph(args.infile)
    report.graph = g
    spec = _build_factor_spec(args, g)
    validation = validate_spec(g, spec)
    report.notes.append(
        "hypotheses: " + ("hold" if validation.hypotheses_hold else "fail"))
    try:
        solution = solve_list_factor(g, spec, oracle_limit=args.oracle_limit)
    except Infeasible as exc:
        report.verdict = "infeasible" if exc.certified else "stalled"
        report.notes.append(exc.reason)
        return EXIT_NEGATIVE if exc.certified else EXIT_INTERNAL
    doc = WitnessDoc.for_factor(g, spec.allowed_all(), solution.edges)
    report.add_check("edges-subset-of-graph", set(solution.edges) <= set(g.edges))
    report.add_check("degrees-within-lists", solution.satisfies(g, spec))
    report.verdict = "feasible"
    report.witness = doc
    _maybe_write(args, doc)
    return EXIT_OK


def _cmd_weight(args, report: Report) -> int:
    g = _read_graph(args.infile)
    report.graph = g
    if args.group is not None:
        try:
            w = vertex_coloring_weighting_zr(g, args.group)
        except Obstructed as exc:
            report.verdict = "obstructed"
            report.notes.append(str(exc))
            return EXIT_NEGATIVE
        except ColoringUnavailable as exc:
            report.verdict = "coloring-unavailable"
            report.notes.append(str(exc))
            return EXIT_USAGE
        report.add_check("weights-total", w.is_total_on(g))
        report.add_check("induced-sums-proper", is_vertex_coloring(g, w))
    elif args.avd2:
        if g.min_degree() >= 6 and bipartition(g) is not None:
            w = advd2_bipartite_delta6(g)
        else:
            gaps = degree_gap_vertices(g)
            if not gaps:
                report.verdict = "unknown"
                report.notes.append("no min-degree-6 route and no degree-gap vertex")
                return EXIT_NEGATIVE
            w = advd2_degree_gap(g, gaps[0])
        report.add_check("weights-total", w.is_total_on(g))
        report.add_check("neighbors-distinguished", is_adjacent_vd(g, w))
    else:  # vc2
        w = vc2_bipartite(g, oracle_limit=args.oracle_limit)
        if w is None:
            report.verdict = "unknown"
            report.notes.append("no recognized condition and the exhaustive budget ran out")
            return EXIT_NEGATIVE
        report.add_check("weights-total", w.is_total_on(g))
        report.add_check("induced-sums-proper", is_vertex_coloring(g, w))
    doc = WitnessDoc.for_weighting(g, w)
    report.verdict = "feasible"
    report.witness = doc
    _maybe_write(args, doc)
    return EXIT_OK


def _cmd_check(args, report: Report) -> int:
    doc = WitnessDoc.parse(Path(args.witness).read_text())
    g = doc.graph()
    report.graph = g
    if args.pred == "factor":
        if doc.kind != FACTOR_KIND:
            raise MalformedInputError("factor check needs a factor witness")
        ok_subset = all(g.has_edge(u, v) for u, v in doc.edges)
        deg = [0] * g.n
        for u, v in doc.edges:
            deg[u] += 1
            deg[v] += 1
        ok_lists = len(doc.lists) == g.n and all(
            deg[v] in doc.lists[v] for v in range(g.n))
        report.add_check("edges-subset-of-graph", ok_subset)
        report.add_check("degrees-within-lists", ok_lists)
        ok = ok_subset and ok_lists
    else:
        if doc.kind != WEIGHTING_KIND:
            raise MalformedInputError("vc/avd check needs a weighting witness")
        w = doc.to_weighting()
        ok_total = w.is_total_on(g)
        report.add_check("weights-total", ok_total)
        if args.pred == "vc":
            ok_pred = ok_total and is_vertex_coloring(g, w)
            report.add_check("induced-sums-proper", ok_pred)
        else:
            ok_pred = ok_total and is_adjacent_vd(g, w)
            report.add_check("neighbors-distinguished", ok_pred)
        ok = ok_total and ok_pred
    report.verdict = "verified" if ok else "failed"
    if ok:
        report.witness = doc
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_oracle(args, report: Report) -> int:
    g = _read_graph(args.infile)
    report.graph = g
    budget = OracleBudget(max_enumerations=args.budget)
    if args.lfactor:
        lists = _parse_lists(args.lfactor, g.n)
        count, witness = enumerate_l_factors(
            g, [frozenset(x) for x in lists], budget)
        report.notes.append(f"count: {count}")
        if witness is not None:
            doc = WitnessDoc.for_factor(g, lists, witness)
            report.add_check("edges-subset-of-graph", True)
            report.add_check("degrees-within-lists", True)
            report.witness = doc
            _maybe_write(args, doc)
    else:
        pred = VERTEX_COLORING if args.pred == "vc" else ADJACENT_VD
        count, witness = enumerate_weightings(g, args.k, pred, budget)
        report.notes.append(f"count: {count}")
        if witness is not None:
            doc = WitnessDoc.for_weighting(g, witness)
            report.add_check("weights-total", True)
            report.add_check(
                "induced-sums-proper" if args.pred == "vc" else "neighbors-distinguished",
                True)
            report.witness = doc
            _maybe_write(args, doc)
    report.verdict = "feasible" if count > 0 else "infeasible"
    return EXIT_OK if count > 0 else EXIT_NEGATIVE


def _cmd_gen(args, report: Report) -> Optional[int]:
    kind = args.kind
    if kind == "complete-bipartite":
        g = generators.complete_bipartite(args.a, args.b)
    elif kind == "cycle":
        g = generators.cycle(args.n)
    elif kind == "path":
        g = generators.path(args.n)
    elif kind == "random-bipartite":
        g = generators.random_bipartite(args.a, args.b, args.p, args.delta, args.seed)
    elif kind == "random-planar":
        g = generators.random_planar_triangulation(args.n, args.seed)
    else:
        raise MalformedInputError(f"unknown generator {kind!r}")
    sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def _maybe_write(args, doc: WitnessDoc) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(doc.render())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorweight",
        description="degree-list factors and distinguishing edge weightings")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_factor = sub.add_parser("factor", help="find a degree-list factor")
    p_factor.add_argument("--spec", required=True,
                          choices=["pair", "triple", "pairc", "bip2", "generic"])
    p_factor.add_argument("--in", dest="infile", required=True)
    p_factor.add_argument("--aminus", type=int)
    p_factor.add_argument("--aplus", type=int)
    p_factor.add_argument("--a1", type=int)
    p_factor.add_argument("--a2", type=int)
    p_factor.add_argument("--a3", type=int)
    p_factor.add_argument("--c1", type=_fraction, default=DEFAULT_PAIR_CONSTANTS[0])
    p_factor.add_argument("--c2", type=_fraction, default=DEFAULT_PAIR_CONSTANTS[1])
    p_factor.add_argument("--c3", type=_fraction, default=DEFAULT_PAIR_CONSTANTS[2])
    p_factor.add_argument("--c", type=_fraction, default=DEFAULT_SINGLE_CONSTANT)
    p_factor.add_argument("--lists")
    p_factor.add_argument("--auto", action="store_true",
                          help="derive per-vertex anchors from the constants")
    p_factor.add_argument("--out", help="write the witness document here")
    p_factor.add_argument("--oracle-limit", type=int, default=2 ** 18)

    p_weight = sub.add_parser("weight", help="build a distinguishing weighting")
    group = p_weight.add_mutually_exclusive_group(required=True)
    group.add_argument("--group", type=int, help="labels 1..R, proper induced sums")
    group.add_argument("--avd2", action="store_true",
                       help="two labels, neighbors get distinct multisets")
    group.add_argument("--vc2", action="store_true",
                       help="two labels, proper induced sums (bipartite)")
    p_weight.add_argument("--in", dest="infile", required=True)
    p_weight.add_argument("--out", help="write the witness document here")
    p_weight.add_argument("--oracle-limit", type=int, default=2 ** 20)

    p_check = sub.add_parser("check", help="re-verify a witness document")
    p_check.add_argument("--witness", required=True)
    p_check.add_argument("--pred", required=True, choices=["vc", "avd", "factor"])

    p_oracle = sub.add_parser("oracle", help="exhaustive counts and witnesses")
    p_oracle.add_argument("--in", dest="infile", required=True)
    p_oracle.add_argument("--k", type=int, default=2)
    p_oracle.add_argument("--pred", choices=["vc", "avd"], default="vc")
    p_oracle.add_argument("--lfactor", help="per-vertex lists, e.g. '0:1,2 1:0,1'")
    p_oracle.add_argument("--budget", type=int, default=2 ** 30)
    p_oracle.add_argument("--out", help="write the witness document here")

    p_gen = sub.add_parser("gen", help="deterministic seeded generators")
    p_gen.add_argument("--kind", required=True,
                       choices=["complete-bipartite", "cycle", "path",
                                "random-bipartite", "random-planar"])
    p_gen.add_argument("--n", type=int, default=8)
    p_gen.add_argument("--a", type=int, default=3)
    p_gen.add_argument("--b", type=int, default=3)
    p_gen.add_argument("--p", type=float, default=0.5)
    p_gen.add_argument("--delta", type=int, default=0)
    p_gen.add_argument("--seed", type=int, default=0)
    return parser


def dispatch(argv) -> int:
    """Run one command; prints a canonical report (or graph text for gen)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    report = Report(command=" ".join(["factorweight"] + list(argv)))
    started = time.perf_counter()
    try:
        if args.cmd == "gen":
            return _cmd_gen(args, report)
        handler = {
            "factor": _cmd_factor,
            "weight": _cmd_weight,
            "check": _cmd_check,
            "oracle": _cmd_oracle,
        }[args.cmd]
        code = handler(args, report)
    except (MalformedInputError, SpecInvalid, PreconditionViolated,
            ColoringUnavailable, FileNotFoundError) as exc:
        report.verdict = "error"
        report.notes.append(str(exc))
        code = EXIT_USAGE
    except (InternalBoundExceeded, BudgetExceeded) as exc:
        report.verdict = "internal-error"
        report.notes.append(str(exc))
        code = EXIT_INTERNAL
    except FactorWeightError as exc:
        report.verdict = "error"
        report.notes.append(str(exc))
        code = EXIT_INTERNAL
    report.time_ms = int((time.perf_counter() - started) * 1000)
    sys.stdout.write(report.render())
    return code


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
