"""Command-line interface.

Every computation of the library is reachable from here with
machine-readable output: JSON by default, `--format plain` for aligned
text, `--format dot` on graph commands.  All counts are serialized as
decimal strings so arbitrary precision survives any JSON reader, and
infinite counts appear as the string "infinite".

Exit codes: 0 on success, 1 when --verify detects a mismatch between a
closed-form count and its brute-force oracle, 2 on usage errors.
"""

import argparse
import json
import os
import sys

from . import INFINITE, affine, d4, digraph, incidence, markov, necklace, typea


def _count_str(x) -> str:
    return "infinite" if x is INFINITE else str(x)


def _emit(doc, fmt):
    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
        return
    # plain: flat key/value lines, one row per line for tables
    def lines(obj, prefix=""):
        if isinstance(obj, dict):
            for k in sorted(obj):
                yield from lines(obj[k], f"{prefix}{k}.")
        elif isinstance(obj, list):
            for i, item in enumerate(obj):
                yield from lines(item, f"{prefix}{i}.")
        else:
            yield f"{prefix.rstrip('.')}\t{obj}"

    for line in lines(doc):
        print(line)


def _verify_failed(name, lhs, rhs):
    print(
        f"verification failed for {name}: formula={_count_str(lhs)}, "
        f"oracle={_count_str(rhs)}",
        file=sys.stderr,
    )
    return 1


def thread_cap() -> int:
    """Optional cap on internal parallelism; all current enumerations are
    serial, so the cap is validated and respected trivially."""
    raw = os.environ.get("NC_COUNT_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise SystemExit(f"NC_COUNT_THREADS must be an integer, got {raw!r}")
    if cap < 1:
        raise SystemExit("NC_COUNT_THREADS must be >= 1")
    return cap


# --- subcommand handlers ------------------------------------------------------


def _cmd_an_count(args):
    if args.group == "id":
        count = typea.count_id(args.k, args.vertices)
        if args.verify:
            brute = len(typea.enum_seqs(args.vertices - 1, args.k))
            if brute != count:
                return _verify_failed("an count", count, brute)
    else:
        count = typea.count_orbits_formula(args.k, args.vertices)
        if args.verify:
            brute = typea.count_orbits_brute(args.k, args.vertices)
            if brute != count:
                return _verify_failed("an count", count, brute)
    _emit({"count": _count_str(count)}, args.format)
    return 0


def _cmd_an_orbits(args):
    parts = typea.orbit_partition(args.vertices - 1, args.k)
    census = {}
    for orb in parts:
        census[len(orb)] = census.get(len(orb), 0) + 1
    doc = {
        "k": args.k,
        "vertices": args.vertices,
        "orbit_count": _count_str(len(parts)),
        "orbits_by_size": [
            {"size": s, "count": _count_str(c)} for s, c in sorted(census.items())
        ],
    }
    _emit(doc, args.format)
    return 0


def _cmd_an_genus(args):
    count = typea.count_genus(args.genus, args.vertices, args.group)
    if args.verify:
        n = args.vertices - 1
        if args.genus == 0:
            brute = (
                len(typea.enum_seqs(n, 2))
                if args.group == "id"
                else typea.count_orbits_brute(2, args.vertices)
            )
        else:
            pairs = typea.enum_genus_minus1(n)
            brute = (
                len(pairs)
                if args.group == "id"
                else len(typea.genus_minus1_orbits(n))
            )
        if brute != count:
            return _verify_failed("an genus", count, brute)
    _emit({"count": _count_str(count)}, args.format)
    return 0


def _graph_out(g, args):
    if args.format == "dot":
        sys.stdout.write(digraph.export(g, "dot"))
    elif args.format == "json":
        sys.stdout.write(digraph.export(g, "json"))
    else:
        v, one, two = g.census()
        _emit(
            {"category": g.category, "vertices": v,
             "one_sided_edges": one, "double_sided_edges": two},
            "plain",
        )
    return 0


def _cmd_an_graph(args):
    return _graph_out(digraph.build_point_graph(f"a{args.vertices}"), args)


def _cmd_necklace_count(args):
    try:
        count = necklace.count_subgon_classes(args.m, args.s)
    except AssertionError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    _emit({"count": _count_str(count)}, args.format)
    return 0


def _cmd_d4_table(args):
    tables = d4.d4_tables()
    doc = {
        kind: {g: _count_str(v) for g, v in row.items()}
        for kind, row in tables.items()
    }
    _emit(doc, args.format)
    return 0


def _cmd_d4_graph(args):
    if args.kind == "points":
        g = digraph.build_point_graph("d4")
    else:
        g = digraph.build_curve_graph("d4")
    return _graph_out(g, args)


_D4_KINDS = {
    "points": "points",
    "genus0": "genus0",
    "genus-1": "genusMinus1",
    "triples-a3": "triples-A3",
    "triples-a1cubed": "triples-A1cubed",
}


def _cmd_d4_enum(args):
    gens = d4.d4_enum(_D4_KINDS[args.kind])
    _emit({"kind": args.kind, "subcategories": [str(g) for g in gens]}, args.format)
    return 0


_AFF_KINDS = {
    "genus-1": "genus-1",
    "genus0": "genus0",
    "genus1": "genus1",
    "triples-a3": "triples-A3",
    "triples-q1": "triples-Q1",
}


def _cmd_affine_count(args):
    count = affine.aff_count(args.quiver, _AFF_KINDS[args.kind], args.group)
    _emit({"count": _count_str(count)}, args.format)
    return 0


def _cmd_affine_graph(args):
    window = (0, args.window - 1)
    if args.kind == "points":
        g = digraph.build_point_graph(args.quiver, window)
    else:
        g = digraph.build_curve_graph(args.quiver, window)
    return _graph_out(g, args)


def _cmd_markov_table(args):
    rows = []
    for m in markov.markov_numbers(args.limit):
        full = markov.count_c(m, "full")
        rows.append(
            {"m": _count_str(m), "count": _count_str(full),
             "serre_count": _count_str(3 * full)}
        )
    _emit({"rows": rows}, args.format)
    return 0


def _cmd_markov_slopes(args):
    slopes = sorted(
        markov.exceptional_slopes(args.max_rank),
        key=lambda mu: (mu.denominator, mu.numerator),
    )
    doc = {
        "slopes": [f"{mu.numerator}/{mu.denominator}" for mu in slopes],
        "ranks": [_count_str(mu.denominator) for mu in slopes],
    }
    _emit(doc, args.format)
    return 0


def _cmd_markov_tree(args):
    triples = markov.markov_triples(args.limit)
    _emit({"triples": [list(map(_count_str, t)) for t in triples]}, args.format)
    return 0


def _cmd_markov_tyurin(args):
    rows = markov.tyurin_scan(args.max_rank)
    doc = {
        "rows": [
            {"m": _count_str(m), "count": _count_str(c), "ok": ok}
            for m, c, ok in rows
        ],
        "all_ok": all(ok for _, _, ok in rows),
    }
    _emit(doc, args.format)
    if args.verify and not doc["all_ok"]:
        return 1
    return 0


def _cmd_incidence(args):
    struct = incidence.incidence_structure(args.category)
    if args.format == "json":
        sys.stdout.write(incidence.export_incidence(struct))
        return 0
    _emit(
        {
            "points": len(struct.points),
            "lines": len(struct.lines),
            "incidences": len(struct.incidences()),
        },
        "plain",
    )
    return 0


def _cmd_graph(args):
    window = None if args.window is None else (0, args.window - 1)
    return _graph_out(digraph.build_point_graph(args.category, window), args)


def _cmd_sc(args):
    window = None if args.window is None else (0, args.window - 1)
    g = digraph.build_point_graph(args.category, window)
    simps = digraph.sc_simplices(g, args.max_dim)
    by_dim = {}
    for s in simps:
        by_dim[len(s) - 1] = by_dim.get(len(s) - 1, 0) + 1
    doc = {
        "category": args.category,
        "simplices": [list(s) for s in simps],
        "counts_by_dim": {str(d): c for d, c in sorted(by_dim.items())},
    }
    _emit(doc, args.format)
    return 0


# --- parser -------------------------------------------------------------------


def _add_format(p, choices=("json", "plain")):
    p.add_argument("--format", choices=choices, default="json")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="nccount",
        description="exact counting of exceptional-collection subcategories",
    )
    sub = top.add_subparsers(dest="command", required=True)

    an = sub.add_parser("an", help="A-type categories").add_subparsers(
        dest="sub", required=True
    )
    p = an.add_parser("count", help="subcategory counts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--group", choices=("id", "full"), default="id")
    p.add_argument("--verify", action="store_true")
    _add_format(p)
    p.set_defaults(func=_cmd_an_count)

    p = an.add_parser("orbits", help="Serre orbit census")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_an_orbits)

    p = an.add_parser("genus", help="noncommutative curve counts")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--group", choices=("id", "full"), default="id")
    p.add_argument("--verify", action="store_true")
    _add_format(p)
    p.set_defaults(func=_cmd_an_genus)

    p = an.add_parser("graph", help="derived-point graph")
    p.add_argument("--vertices", type=int, required=True)
    _add_format(p, ("json", "plain", "dot"))
    p.set_defaults(func=_cmd_an_graph)

    nk = sub.add_parser("necklace", help="polygon rotation classes").add_subparsers(
        dest="sub", required=True
    )
    p = nk.add_parser("count")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--verify", action="store_true")  # always dual-computed
    _add_format(p)
    p.set_defaults(func=_cmd_necklace_count)

    d4p = sub.add_parser("d4", help="the D4 category").add_subparsers(
        dest="sub", required=True
    )
    p = d4p.add_parser("table")
    _add_format(p)
    p.set_defaults(func=_cmd_d4_table)
    p = d4p.add_parser("graph")
    p.add_argument("--kind", choices=("points", "curves"), default="points")
    _add_format(p, ("json", "plain", "dot"))
    p.set_defaults(func=_cmd_d4_graph)
    p = d4p.add_parser("enum")
    p.add_argument("--kind", choices=tuple(_D4_KINDS), required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_d4_enum)

    aff = sub.add_parser("affine", help="the two affine quivers").add_subparsers(
        dest="sub", required=True
    )
    p = aff.add_parser("count")
    p.add_argument("--quiver", choices=("q1", "q2"), required=True)
    p.add_argument("--kind", choices=tuple(_AFF_KINDS), required=True)
    p.add_argument("--group", choices=("id", "serre", "full"), default="id")
    _add_format(p)
    p.set_defaults(func=_cmd_affine_count)
    p = aff.add_parser("graph")
    p.add_argument("--quiver", choices=("q1", "q2"), required=True)
    p.add_argument("--kind", choices=("points", "curves"), default="points")
    p.add_argument("--window", type=int, default=5)
    _add_format(p, ("json", "plain", "dot"))
    p.set_defaults(func=_cmd_affine_graph)

    mk = sub.add_parser("markov", help="the projective plane").add_subparsers(
        dest="sub", required=True
    )
    p = mk.add_parser("table")
    p.add_argument("--limit", type=int, default=200)
    _add_format(p)
    p.set_defaults(func=_cmd_markov_table)
    p = mk.add_parser("slopes")
    p.add_argument("--max-rank", type=int, default=200)
    _add_format(p)
    p.set_defaults(func=_cmd_markov_slopes)
    p = mk.add_parser("tree")
    p.add_argument("--limit", type=int, default=200)
    _add_format(p)
    p.set_defaults(func=_cmd_markov_tree)
    p = mk.add_parser("tyurin")
    p.add_argument("--max-rank", type=int, default=200)
    p.add_argument("--verify", action="store_true")
    _add_format(p)
    p.set_defaults(func=_cmd_markov_tyurin)

    p = sub.add_parser("incidence", help="point/line incidence structures")
    p.add_argument("--category", choices=("a3", "d4"), required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_incidence)

    p = sub.add_parser("graph", help="point graph of any category")
    p.add_argument("--category", required=True,
                   help="aN, d4, q1, q2 or npL (L >= -1)")
    p.add_argument("--window", type=int)
    _add_format(p, ("json", "plain", "dot"))
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("sc", help="simplicial complex of a point graph")
    p.add_argument("--category", required=True)
    p.add_argument("--window", type=int)
    p.add_argument("--max-dim", type=int, default=2)
    _add_format(p)
    p.set_defaults(func=_cmd_sc)

    return top


def run(argv) -> int:
    thread_cap()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        parser.exit(2, f"error: {exc}\n")


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
