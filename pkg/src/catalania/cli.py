"""Command-line front end: enumerate, polynomial, graph, sgraph, classify, degenerate, verify."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .cache import TableCache
from .degeneration import (
    CoefficientAssignment,
    DegenerationError,
    coalesce_pair,
    degenerate_zero,
    parse_chain,
    quotient_by_equal_functions,
    simplex_limit,
)
from .enumeration import (
    CapacityError,
    DEFAULT_MAX_ORDER,
    catalan,
    catalan_polynomial,
    catalan_polynomial_recursive,
    column_formula,
    count_by_column,
    cumulative_counts,
    enumerate_classes,
)
from .graph import LabeledGraph
from .hypercube import classify
from .links import ConstructionError, check_properties, graph_of_links
from .sgraph import LinearOrderC, OrderSyntaxError, build_sgraph, is_S_graph
from .verify import UnknownSuiteError, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _graph_json(g: LabeledGraph) -> dict:
    out = g.to_json()
    out["meta"] = g.meta
    return out


def _export(args, g: LabeledGraph, name: str) -> None:
    _write(args.dot, g.to_dot(name))
    if args.json:
        _write(args.json, _dump(_graph_json(g)))


def _summary(g: LabeledGraph) -> list[str]:
    vc = g.vertex_label_counts()
    ec = g.edge_label_counts()
    return [
        f"vertices {len(g)}  by label " + " ".join(f"{k}:{vc[k]}" for k in sorted(vc)),
        f"edges {len(g.edges)}  by label " + " ".join(f"{k}:{ec[k]}" for k in sorted(ec) if ec[k]),
    ]


def _cache(args) -> TableCache | None:
    if getattr(args, "no_cache", False):
        return None
    return TableCache(args.cache)


def _table(args, order: int):
    cache = _cache(args)
    tbl = enumerate_classes(order, cache=cache)
    if cache is not None:
        cache.spot_check(range(1, order))
    return tbl


# -- commands ---------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    n = args.order
    tbl = _table(args, n)
    out = []
    if args.by_column:
        got, want = count_by_column(tbl), column_formula(n)
        for j in range(1, n + 1):
            out.append(f"{j}\t{got[j]}\t{want[j]}")
        ok = got == want
        out.append(f"# by column {'=' if ok else '!='} C_(j-1) C_(t-j+1)")
    else:
        for k in tbl:
            out.append(f"{','.join(map(str, k.deplete.heights))}\tj={k.strongly_extremal}\tr={k.class_height}")
        ok = len(tbl) == catalan(n)
        out.append(f"# classes {len(tbl)}, C_{n} = {catalan(n)}")
        by_jr = " ".join(f"({j},{r}):{len(ks)}" for (j, r), ks in tbl.index.items())
        out.append(f"# by (j, r) {by_jr}")
    print("\n".join(out))
    if args.json:
        _write(args.json, _dump(tbl.to_json()))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_polynomial(args) -> int:
    n = args.order
    enum = catalan_polynomial(_table(args, n))
    rec = catalan_polynomial_recursive(n)
    cum = [cumulative_counts(n, r) for r in range(n)]
    ok = enum == rec and sum(enum) == catalan(n) and all(cum[r] == sum(enum[: r + 1]) for r in range(n))
    print("enumerated " + " ".join(map(str, enum)))
    print("recursive  " + " ".join(map(str, rec)))
    print("cumulative " + " ".join(map(str, cum)))
    print(f"# value at 1: {sum(enum)}, C_{n} = {catalan(n)}")
    if args.json:
        _write(args.json, _dump({"order": n, "enumerated": enum, "recursive": rec, "cumulative": cum}))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_graph(args) -> int:
    if args.order > DEFAULT_MAX_ORDER:
        raise CapacityError(f"order {args.order} exceeds the configured maximum {DEFAULT_MAX_ORDER}")
    g = graph_of_links(args.order)
    rep = check_properties(g)
    print("\n".join(_summary(g)))
    print(f"# {rep}")
    _export(args, g, f"links{args.order}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _order_arg(args) -> LinearOrderC:
    text = args.chain if args.chain is not None else args.order_text
    if text is None:
        raise UsageError("an order such as 2<1<3 is required")
    return LinearOrderC.parse(text)


def cmd_sgraph(args) -> int:
    order = _order_arg(args)
    g = build_sgraph(order)
    rep = is_S_graph(g, order)
    print(f"G({order})")
    print("\n".join(_summary(g)))
    print(f"# {rep}")
    _export(args, g, "S")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_classify(args) -> int:
    blocks = classify(args.order)
    for b in blocks:
        orders = " ".join(str(o) for o in b.orders)
        print(f"{','.join(map(str, b.normal_form))}\tp={','.join(map(str, b.vertex_powers))}"
              f"\tq={','.join(map(str, b.edge_powers))}\t{orders}")
    print(f"# blocks {len(blocks)}, C_{args.order} = {catalan(args.order)}")
    if args.json:
        _write(args.json, _dump([
            {"normal_form": list(b.normal_form), "orders": [str(o) for o in b.orders],
             "vertex_powers": list(b.vertex_powers), "edge_powers": list(b.edge_powers)}
            for b in blocks
        ]))
    return EXIT_OK if len(blocks) == catalan(args.order) else EXIT_FAIL


def _strict(groups: list[list[int]], tie: list[int]) -> LinearOrderC:
    """A linear refinement of the weak chain, breaking ``tie`` by index."""
    perm = []
    for grp in groups:
        perm.extend(sorted(grp) if grp is tie else grp)
    return LinearOrderC(tuple(perm))


def cmd_degenerate(args) -> int:
    if args.chain is None:
        raise UsageError("degenerate needs --chain")
    groups = parse_chain(args.chain)
    t = sum(len(x) for x in groups)
    if args.order is not None and args.order != t:
        raise UsageError(f"--order {args.order} does not match the chain of length {t}")
    values = CoefficientAssignment.parse(args.values, t) if args.values else None
    if values is not None and values.weak_order() != [sorted(g) for g in groups]:
        raise UsageError(f"values {values.values} do not realise the chain {args.chain}")
    ties = [grp for grp in groups if len(grp) > 1]
    if not ties:
        order = LinearOrderC(tuple(i for grp in groups for i in grp))
        if values is not None and values[order.perm[0]] == 0:
            forms = degenerate_zero(order)
            for f in sorted(forms, key=lambda f: f.rows):
                print(f.describe())
            print(f"# {len(forms)} functions at c{order.perm[0]}=0")
            return EXIT_OK
        g = quotient_by_equal_functions(build_sgraph(order), values or CoefficientAssignment(order.generic_values()))
        print(f"G({order})")
        print("\n".join(_summary(g)))
        _export(args, g, "Q")
        return EXIT_OK if not g.meta["conflicts"] else EXIT_FAIL
    if len(ties) == 1 and len(ties[0]) == t:
        g = simplex_limit(LinearOrderC(tuple(range(1, t + 1))), values.values[0] if values else 1)
        print(f"all-equal limit, t={t}")
        print("\n".join(_summary(g)))
        _export(args, g, "K")
        return EXIT_OK
    if len(ties) == 1 and ties[0] is groups[-1] and len(ties[0]) == 2:
        order = _strict(groups, ties[0])
        co = coalesce_pair(order, values)
        print(f"G_c for {args.chain} (r={co.r})")
        print("\n".join(_summary(co.graph)))
        print(f"# quotients of G({order}) and its top swap agree with G_c")
        _export(args, co.graph, "Gc")
        return EXIT_OK
    raise UsageError("supported chains: strict, all tied, or a single tied top pair")


def cmd_verify(args) -> int:
    report = verify(args.suite, args.max_t, args.jobs)
    print("\n".join(report.lines()))
    print(f"# {'PASS' if report.ok else 'FAIL'} {sum(c.status == 'pass' for c in report.checks)}/{len(report.checks)}")
    if args.json:
        _write(args.json, _dump(report.to_json()))
    return EXIT_OK if report.ok else EXIT_FAIL


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="catalania", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def outputs(sp, dot=True):
        if dot:
            sp.add_argument("--dot", metavar="PATH", help="write a DOT rendering")
        sp.add_argument("--json", metavar="PATH", help="write JSON")

    def cached(sp):
        sp.add_argument("--cache", metavar="DIR", help="table cache directory (default: $CATALANIA_CACHE or the user cache)")
        sp.add_argument("--no-cache", action="store_true", help="always enumerate afresh")

    sp = sub.add_parser("enumerate", help="list the classes of one order")
    sp.add_argument("--order", "-t", type=int, required=True, help="number of columns t+1")
    sp.add_argument("--by-column", action="store_true", help="count classes per strongly extremal column")
    outputs(sp, dot=False)
    cached(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("polynomial", help="class-height polynomial, enumerated and recursive")
    sp.add_argument("--order", "-t", type=int, required=True, help="number of columns t+1")
    outputs(sp, dot=False)
    cached(sp)
    sp.set_defaults(func=cmd_polynomial)

    sp = sub.add_parser("graph", help="graph of links on all classes of one order")
    sp.add_argument("--order", "-t", type=int, required=True, help="number of columns t+1")
    outputs(sp)
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("sgraph", help="the subgraph attached to a linear order such as 2<1<3")
    sp.add_argument("order_text", nargs="?", metavar="ORDER")
    sp.add_argument("--chain", help="the order, as an option")
    outputs(sp)
    sp.set_defaults(func=cmd_sgraph)

    sp = sub.add_parser("classify", help="group the t! orders by their labelled graph")
    sp.add_argument("--order", "-t", type=int, required=True, help="number of coefficients t")
    outputs(sp, dot=False)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("degenerate", help="specialise coefficients: zero, coalesce or all equal")
    sp.add_argument("--order", "-t", type=int, help="number of coefficients t (checked against the chain)")
    sp.add_argument("--chain", help='weak chain such as "1<4<2=3"')
    sp.add_argument("--values", help='coefficient values such as "c1=1,c4=2,c2=9,c3=9"')
    outputs(sp)
    sp.set_defaults(func=cmd_degenerate)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", default="all", help="counts, classes, links, sgraph, classify, hypercube, "
                                                   "degeneration, uniqueness, fixtures or all")
    sp.add_argument("--max-t", type=int, help="lower every suite's size bound to this t")
    sp.add_argument("--jobs", type=int, default=1, help="run suites in this many processes")
    outputs(sp, dot=False)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrderSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownSuiteError as exc:
        print(f"error: unknown suite {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    except (CapacityError, UsageError, DegenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
