"""Named verification suites with witness-carrying results."""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from . import fixtures
from .degeneration import (
    CoefficientAssignment,
    coalesce_pair,
    coalesced_graph,
    degenerate_zero,
    is_unbranched_path,
    limit_tree,
    separation_check,
    simplex_limit,
)
from .diagram import closure, is_complete, is_deplete, is_reduced
from .enumeration import (
    catalan,
    catalan_polynomial,
    catalan_polynomial_recursive,
    column_formula,
    count_by_column,
    cumulative_counts,
    enumerate_classes,
)
from .hypercube import classify, embed, multiplicities
from .links import check_properties, graph_of_links, pointed_chain, triad_kinds
from .sgraph import (
    as_order,
    all_orders,
    build_sgraph,
    is_S_graph,
    ordered_path_witnesses,
    select_compatible,
    unique_ssubgraph_search,
)

Witness = object
CheckFn = Callable[[], Witness]


@dataclass
class CheckResult:
    id: str
    description: str
    status: str
    witness: str | None = None
    duration: float = 0.0


@dataclass
class VerifyReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            line = f"{c.status.upper():4} {c.id}  {c.description}"
            if c.witness is not None:
                line += f"  [{c.witness}]"
            out.append(line)
        return out

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "checks": [asdict(c) for c in self.checks]}


def run_check(cid: str, description: str, fn: CheckFn) -> CheckResult:
    start = time.perf_counter()
    try:
        witness = fn()
    except Exception as exc:  # a raised assertion is a failure with its message as witness
        witness = f"{type(exc).__name__}: {exc}"
    dt = time.perf_counter() - start
    if witness is None:
        return CheckResult(cid, description, "pass", None, dt)
    return CheckResult(cid, description, "fail", repr(witness) if not isinstance(witness, str) else witness, dt)


# -- individual checks -------------------------------------------------------------


def _counts(max_order: int):
    for n in range(1, max_order + 1):
        got = len(enumerate_classes(n))
        if got != catalan(n):
            return {"order": n, "classes": got, "expected": catalan(n)}
    return None


def _columns(max_order: int):
    for n in range(1, max_order + 1):
        got, want = count_by_column(enumerate_classes(n)), column_formula(n)
        if got != want:
            return {"order": n, "by_column": got, "expected": want}
    return None


def _polynomial(max_order: int):
    for n in range(1, max_order + 1):
        enum = catalan_polynomial(enumerate_classes(n))
        rec = catalan_polynomial_recursive(n)
        if enum != rec or sum(enum) != catalan(n) or enum[0] != 1 or enum[-1] != 1:
            return {"order": n, "enumerated": enum, "recursive": rec}
        for r in range(n):
            if cumulative_counts(n, r) != sum(enum[: r + 1]):
                return {"order": n, "r": r, "cumulative": cumulative_counts(n, r)}
    return None


def _bfs_classes(max_order: int):
    for n in range(1, max_order + 1):
        for key in enumerate_classes(n):
            reach = closure(key.deplete, key.class_height + 3)
            depl = [d for d in reach if is_deplete(d)]
            comp = sorted((d for d in reach if is_complete(d) and is_reduced(d)), key=lambda d: d.height)
            h = comp[0].height if comp else None
            if depl != [key.deplete] or len(comp) != 2 or [d.height for d in comp] != [h, h + 1]:
                return {"class": key, "deplete": depl, "complete_reduced": comp}
    return None


def _figures():
    for spec, order in ((fixtures.G3, 3), (fixtures.G4, 4)):
        g = graph_of_links(order)
        if not g.labelled_isomorphic(fixtures.load(spec)):
            return {"figure": spec[0]}
    return None


def _link_properties(max_t: int):
    for t in range(1, max_t + 1):
        rep = check_properties(graph_of_links(t + 1))
        if not rep.ok:
            return {"t": t, "report": str(rep)}
        pointed_chain(graph_of_links(t + 1))
    return None


def _sgraphs(max_t: int):
    for t in range(1, max_t + 1):
        for o in all_orders(t):
            g = build_sgraph(o)
            if len(g) != 2 ** t:
                return {"order": str(o), "vertices": len(g)}
            rep = is_S_graph(g, o)
            if not rep.ok:
                return {"order": str(o), "report": str(rep)}
            if g.key_set() != select_compatible(o):
                return {"order": str(o), "select_compatible": "differs"}
    return None


def _sgraph_figures():
    pairs = [("1<2", fixtures.SQUARE_12), ("2<1", fixtures.SQUARE_21), ("2<1<3", fixtures.OCTAGON)]
    for o, spec in pairs:
        if not build_sgraph(o).labelled_isomorphic(fixtures.load(spec)):
            return {"order": o, "figure": spec[0]}
    return None


def _classify(max_t: int):
    for t in range(1, max_t + 1):
        blocks = classify(t)
        if len(blocks) != catalan(t):
            return {"t": t, "blocks": len(blocks)}
    return None


def _hypercube(max_t: int):
    for t in range(1, max_t + 1):
        for o in all_orders(t):
            embed(o)
            multiplicities(o)
    return None


def _zero(max_t: int):
    for t in range(1, max_t + 1):
        for o in all_orders(t):
            degenerate_zero(o)
    return None


def _coalesce_examples():
    ex1 = coalesce_pair("1<2<3")
    if not ex1.graph.labelled_isomorphic(fixtures.load(fixtures.COALESCED_T3)):
        return {"example": 1}
    ex2 = coalesce_pair("1<4<2<3", CoefficientAssignment((1, 9, 9, 2)))
    if not ex2.graph.labelled_isomorphic(fixtures.load(fixtures.COALESCED_T4)):
        return {"example": 2}
    g1, g2 = build_sgraph("1<4<2<3"), build_sgraph("1<4<3<2")
    if not g1.labelled_isomorphic(fixtures.load(fixtures.G1_T4)) or not g2.labelled_isomorphic(fixtures.load(fixtures.G2_T4)):
        return {"example": 2, "part": "G_1/G_2"}
    return None


def _coalesce_all(max_t: int):
    for t in range(2, max_t + 1):
        for o in all_orders(t):
            a, b = o.perm[-2:]
            if abs(a - b) == 1:
                coalesce_pair(o)
    return None


def _simplex(max_t: int):
    if not simplex_limit("1<2<3").labelled_isomorphic(fixtures.load(fixtures.SIMPLEX_3), edge_labels=False):
        return {"figure": "3-simplex"}
    for t in range(1, max_t + 1):
        for o in all_orders(t):
            simplex_limit(o)
            if not is_unbranched_path(limit_tree(o)):
                return {"order": str(o), "limit": "branched"}
    return None


SEPARATION_PRIMES = (2, 3, 5, 7)
SEPARATION_TOPS = (11, 13)


def separation_assignments(order) -> Iterator[CoefficientAssignment]:
    """Tied top pair above distinct primes that increase along the order."""
    order = as_order(order)
    rest = order.perm[:-2]
    for chosen in itertools.combinations(SEPARATION_PRIMES, len(rest)):
        for top in SEPARATION_TOPS:
            vals = [0] * order.t
            for i, v in zip(rest, chosen):
                vals[i - 1] = v
            for i in order.perm[-2:]:
                vals[i - 1] = top
            yield CoefficientAssignment(tuple(vals))


def _separation(max_t: int):
    for t in range(2, max_t + 1):
        for o in all_orders(t):
            a, b = o.perm[-2:]
            if abs(a - b) != 1:
                continue
            gc = coalesced_graph(o)
            for c in separation_assignments(o):
                if not separation_check(gc, c):
                    return {"order": str(o), "values": c.values}
    return None


def _uniqueness(max_t: int):
    for t in range(1, max_t + 1):
        for o in all_orders(t):
            found = unique_ssubgraph_search(o)
            if len(found) != 1 or not found[0].same_subgraph(build_sgraph(o)):
                return {"order": str(o), "found": len(found)}
    return None


def _fixtures():
    rep = is_S_graph(fixtures.load(fixtures.PENDANT_OCTAGON), "2<3<1")
    if not rep.ok:
        return {"pendant octagon": str(rep)}
    g = fixtures.load(fixtures.TWO_OCTAGONS)
    v = [x.tag for x in g.vertices].index(fixtures.TWO_OCTAGONS_MIDDLE)
    paths = ordered_path_witnesses(g, v, 1, as_order("2<3<1"))
    if len(paths) != 2:
        return {"ordered paths to label 1": len(paths)}
    if not {(1, 2), (2, 1)} <= triad_kinds(g):
        return {"triads": sorted(triad_kinds(g))}
    return None


# -- suites ----------------------------------------------------------------------------

# suite -> (default max_t, check builder)
Builder = Callable[[int], list[tuple[str, str, CheckFn]]]


def _counts_suite(m: int):
    n = min(m + 1, 7)
    return [
        ("counts.total", f"|H^(t+1)| = C_(t+1), orders 1..{n}", lambda: _counts(n)),
        ("counts.columns", f"|H^(t+1)_j| = C_(j-1) C_(t-j+1), orders 1..{n}", lambda: _columns(n)),
        ("counts.polynomial", f"class-height polynomial by enumeration and recursion, orders 1..{n}", lambda: _polynomial(n)),
    ]


def _classes_suite(m: int):
    n = min(m + 1, 5)
    return [("classes.bfs", f"one deplete and two complete reduced diagrams per class, orders 1..{n}", lambda: _bfs_classes(n))]


def _links_suite(m: int):
    return [
        ("links.figures", "G_3 and G_4 match the reference figures", _figures),
        ("links.properties", f"P1 P2 P3 P5 P6 and the pointed chain, t <= {m}", lambda: _link_properties(m)),
    ]


def _sgraph_suite(m: int):
    return [
        ("sgraph.build", f"2^t vertices, S-graph axioms, compatible-class filter, t <= {m}", lambda: _sgraphs(m)),
        ("sgraph.figures", "t=2 and t=3 graphs match the reference figures", _sgraph_figures),
    ]


def _classify_suite(m: int):
    return [("classify.catalan", f"C_t labelled graphs, equal to normal-form fibers, t <= {m}", lambda: _classify(m))]


def _hypercube_suite(m: int):
    return [("hypercube.embed", f"hypercube coordinates and label multiplicities, t <= {m}", lambda: _hypercube(m))]


def _degeneration_suite(m: int):
    return [
        ("degeneration.zero", f"zeroing the smallest coefficient, t <= {m}", lambda: _zero(m)),
        ("degeneration.examples", "coalesced graphs of both worked examples", _coalesce_examples),
        ("degeneration.coalesce", f"constructed and quotient coalesced graphs agree, t <= {m}", lambda: _coalesce_all(m)),
        ("degeneration.simplex", f"all-equal limit is the labelled simplex, t <= {m}", lambda: _simplex(m)),
        ("degeneration.separation", f"coalesced graphs separate tied-top assignments, t <= {m}", lambda: _separation(m)),
    ]


def _uniqueness_suite(m: int):
    return [("uniqueness.search", f"exactly one S-subgraph per order, t <= {m}", lambda: _uniqueness(m))]


def _fixtures_suite(m: int):
    return [("fixtures.examples", "pendant octagon and two-octagon examples", _fixtures)]


SUITES: dict[str, tuple[int, Builder]] = {
    "counts": (6, _counts_suite),
    "classes": (4, _classes_suite),
    "links": (5, _links_suite),
    "sgraph": (5, _sgraph_suite),
    "classify": (5, _classify_suite),
    "hypercube": (5, _hypercube_suite),
    "degeneration": (4, _degeneration_suite),
    "uniqueness": (3, _uniqueness_suite),
    "fixtures": (3, _fixtures_suite),
}


class UnknownSuiteError(KeyError):
    pass


def suite_names(name: str) -> list[str]:
    if name == "all":
        return list(SUITES)
    if name not in SUITES:
        raise UnknownSuiteError(name)
    return [name]


def _run_suite(name: str, max_t: int | None) -> list[CheckResult]:
    default, builder = SUITES[name]
    m = default if max_t is None else min(max_t, default)
    return [run_check(cid, desc, fn) for cid, desc, fn in builder(m)]


def verify(suite: str = "all", max_t: int | None = None, jobs: int = 1) -> VerifyReport:
    """Run one suite (or ``all``); ``max_t`` lowers each suite's default bound."""
    names = suite_names(suite)
    report = VerifyReport(suite)
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run_suite, names, [max_t] * len(names)))
    else:
        results = [_run_suite(n, max_t) for n in names]
    for r in results:
        report.checks.extend(r)
    return report
