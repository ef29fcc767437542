"""Command-line front end.

Exit codes: 0 success / member, 1 negative result (non-member, failed
verification, lift hypothesis failure), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import os
import sys
from math import factorial
from pathlib import Path

from . import formats
from .conefacets import (ConeDescription, FacetNormal, enumerate_facets, facet_degree,
                         facet_normal, is_facet_normal, sample_facet)
from .errors import HypothesisError, InvalidInputError, VerificationError
from .exactalg import standard_form
from .families import (CutPartition, binary_star_facet, cut_facet, lex_product_c4,
                       mod3_category, sign_extremes_check, star_facet, trivial_facet,
                       vertex_split)
from .graphcore import WeightedGraph, n_from_length
from .membership import (decide_membership, facetize, metric_polytope_contains,
                         verify_certificate)
from .symmetry import classify, stabilizer_order

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def _out(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _threads(args) -> int:
    return args.threads if args.threads else (os.cpu_count() or 1)


def _class_table(classes, total: int) -> str:
    lines = [f"{len(classes)} classes, {total} facets"]
    for c in classes:
        deg = "-" if c.degree is None else str(c.degree)
        lines.append(f"({', '.join(map(str, c.as_ints()))})  #={c.count}  stab={c.stabilizer_order}"
                     f"  cat={c.category}  deg={deg}")
    return "\n".join(lines) + "\n"


def _classes_with_degrees(cone: ConeDescription, classes):
    out = []
    for c in classes:
        rep = cone.facets[cone.index(c.canonical_rep)]
        out.append(c.with_degree(facet_degree(rep, cone)))
    return out


def cmd_enumerate(args) -> int:
    n = args.n
    if not 5 <= n <= 8:
        print("enumerate supports 5 <= n <= 8", file=sys.stderr)
        return EXIT_USAGE
    if n == 8 and not args.allow_long:
        print("n = 8 takes several minutes; pass --allow-long", file=sys.stderr)
        return EXIT_USAGE
    cone = enumerate_facets(n, ordering=args.ordering, progress=args.progress)
    if args.out:
        formats.write_facet_list(args.out, n, cone.vectors())
    classes = classify(cone.facets, workers=_threads(args))
    if not args.no_degree:
        classes = _classes_with_degrees(cone, classes)
    if args.classes:
        Path(args.classes).write_text(formats.format_class_csv(classes))
    sys.stdout.write(_class_table(classes, len(cone)))
    return EXIT_OK


def cmd_classify(args) -> int:
    n, vecs = formats.read_facet_list(args.facets)
    graphs = [standard_form(WeightedGraph(n, v)) for v in vecs]
    classes = classify(graphs, workers=_threads(args))
    if args.degrees:
        cone = ConeDescription(n, [facet_normal(g) for g in graphs])
        classes = _classes_with_degrees(cone, classes)
    if args.out:
        Path(args.out).write_text(formats.format_class_csv(classes))
    sys.stdout.write(_class_table(classes, len(graphs)))
    return EXIT_OK


def cmd_member(args) -> int:
    g = formats.read_graph(args.graph)
    res = decide_membership(g)
    assert verify_certificate(g, res)
    if res.is_member:
        print("member")
        if args.certificate:
            Path(args.certificate).write_text(formats.format_member_certificate(res.coefficients))
        return EXIT_OK
    sep = res.separator
    if args.facetize:
        sep = facetize(g)
    print("non-member")
    print(f"separator: {formats.format_vector(sep.weights)}")
    val = sum(a * b for a, b in zip(sep.weights, g.weights))
    print(f"<separator, g> = {val}")
    if args.certificate:
        Path(args.certificate).write_text(formats.format_vector(sep.weights) + "\n")
    return EXIT_NEGATIVE


def _read_vector(args) -> WeightedGraph:
    if args.vector:
        vec = formats.parse_vector(args.vector)
        n = args.n if args.n else n_from_length(len(vec))
        return WeightedGraph.from_vector(vec, n)
    text = Path(args.file).read_text()
    if text.lstrip().startswith("n "):
        n, vecs = formats.parse_facet_list(text)
        if len(vecs) != 1:
            raise InvalidInputError("expected exactly one vector in the file")
        return WeightedGraph(n, vecs[0])
    vec = formats.parse_vector(text)
    return WeightedGraph.from_vector(vec, args.n)


def cmd_verify_facet(args) -> int:
    y = _read_vector(args)
    rep = is_facet_normal(y)
    lines = []
    if rep.is_facet:
        s = standard_form(y)
        stab = stabilizer_order(s)
        ext = sign_extremes_check(s)
        lines.append(f"facet: yes; stabilizer: {stab}; category: {mod3_category(s)}")
        lines.append(f"facet: yes; orbit {factorial(y.n) // stab} under S_{y.n}")
        lines.append(f"zero triangles: {rep.zero_count}; zero-set rank: {rep.zero_rank} "
                     f"(dimension {rep.dimension})")
        if ext.applicable:
            lines.append(f"sign extremes: a={ext.a} b={ext.b} bounds hold: {ext.bounds_hold}")
        else:
            lines.append("sign extremes: not applicable (no negative entry)")
    else:
        why = ("empty zero set" if rep.zero_count == 0 else
               "not supporting" if not rep.is_supporting else
               f"zero-set rank {rep.zero_rank} < {rep.dimension - 1}")
        lines.append(f"facet: no ({why})")
        lines.append(f"supporting: {'yes' if rep.is_supporting else 'no'}; zero triangles: "
                     f"{rep.zero_count}; zero-set rank: {rep.zero_rank}")
    print("\n".join(lines))
    return EXIT_OK if rep.is_facet else EXIT_NEGATIVE


def cmd_lift(args) -> int:
    args.vector, args.file, args.n = None, args.facet, None
    y = facet_normal(_read_vector(args))
    try:
        lifted = vertex_split(y)
    except HypothesisError as exc:
        print(f"lift: hypothesis failure: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    _out(args.out, formats.format_facet_list(y.n + 1, [lifted.as_ints()]))
    return EXIT_OK


def cmd_family(args) -> int:
    kind = args.kind
    if kind == "c4k":
        if args.m is None:
            raise InvalidInputError("family c4k needs --m")
        _out(args.out, formats.format_graph(lex_product_c4(args.m)))
        return EXIT_OK
    if args.n is None:
        raise InvalidInputError(f"family {kind} needs --n")
    n = args.n
    if kind == "trivial":
        f = trivial_facet(n, tuple(args.edge) if args.edge else (1, 2))
    elif kind == "star":
        f = star_facet(n, args.center if args.center else n, args.neg)
    elif kind == "cut":
        side = args.side if args.side else list(range(1, n // 2 + 1))
        f = cut_facet(CutPartition(n, frozenset(side)))
    elif kind == "binary-star":
        A = args.A if args.A else list(range(3, 3 + (n - 2) // 2))
        B = args.B if args.B else [v for v in range(3, n + 1) if v not in A]
        f = binary_star_facet(n, A, B)
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidInputError(kind)
    _out(args.out, formats.format_facet_list(n, [f.as_ints()]))
    return EXIT_OK


def cmd_sample(args) -> int:
    facets: list[FacetNormal] = [sample_facet(args.n, args.seed + i, args.bound)
                                 for i in range(args.count)]
    if args.out:
        formats.write_facet_list(args.out, args.n, [f.as_ints() for f in facets])
    classes = classify(facets, workers=_threads(args))
    print(f"{len(facets)} verified facets of tau_{args.n} in {len(classes)} classes")
    for c in sorted(classes, key=lambda c: (-c.count, c.as_ints())):
        print(f"{c.count}\t({', '.join(map(str, c.as_ints()))})")
    return EXIT_OK


def cmd_metric_check(args) -> int:
    d = formats.read_graph(args.graph)
    rep = metric_polytope_contains(d)
    print(f"metric cone: {'yes' if rep.in_metric_cone else 'no'}; "
          f"metric polytope: {'yes' if rep.in_metric_polytope else 'no'}; "
          f"tight perimeters: {len(rep.tight_perimeters)}")
    for v in rep.violations:
        print(f"violated: {v}")
    return EXIT_OK if rep.in_metric_polytope else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for classification (default: all cores)")
    common.add_argument("--seed", type=int, default=0)
    p = argparse.ArgumentParser(prog="tricone", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[common],
                       help="all facets of tau_n with classification")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", help="facet list output file")
    s.add_argument("--classes", help="class CSV output file")
    s.add_argument("--progress", action="store_true", help="ray counts per insertion on stderr")
    s.add_argument("--allow-long", action="store_true", help="permit n = 8")
    s.add_argument("--ordering", choices=["colex", "most-violated"], default="colex")
    s.add_argument("--no-degree", action="store_true", help="skip facet degrees")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("classify", parents=[common],
                       help="isomorphism classes of a facet list")
    s.add_argument("--facets", required=True)
    s.add_argument("--out")
    s.add_argument("--degrees", action="store_true",
                   help="compute degrees, treating the input as a complete facet list")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("member", parents=[common],
                       help="decide membership in tau_n with a certificate")
    s.add_argument("--graph", required=True)
    s.add_argument("--certificate")
    s.add_argument("--facetize", action="store_true",
                   help="replace the Farkas separator by a separating facet normal")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("verify-facet", parents=[common],
                       help="check the facet-normal conditions")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--vector", help="colex vector, e.g. '1 1 0 1 0 0 -1 0 0 0'")
    g.add_argument("--file")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_verify_facet)

    s = sub.add_parser("lift", parents=[common],
                       help="vertex-split a facet of tau_n into tau_{n+1}")
    s.add_argument("--facet", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("family", parents=[common],
                       help="emit a named facet family member or C4.K_{6m+3}")
    s.add_argument("kind", choices=["trivial", "star", "cut", "binary-star", "c4k"])
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--edge", type=int, nargs=2)
    s.add_argument("--center", type=int)
    s.add_argument("--neg", type=int, default=1)
    s.add_argument("--side", type=int, nargs="+")
    s.add_argument("--A", type=int, nargs="+")
    s.add_argument("--B", type=int, nargs="+")
    s.add_argument("--out")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("sample", parents=[common],
                       help="random facets via exact LP")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--bound", type=int, default=1000)
    s.add_argument("--out")
    s.set_defaults(func=cmd_sample)

    s = sub.add_parser("metric-check", parents=[common],
                       help="metric cone / metric polytope membership")
    s.add_argument("--graph", required=True)
    s.set_defaults(func=cmd_metric_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInputError, VerificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
