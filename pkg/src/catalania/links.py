"""The graph of links on all classes of a given order, and its structural checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .diagram import (
    ClassKey,
    Diagram,
    DiagramError,
    canonicalize,
    check_boundary,
    complete_representatives,
    is_complete,
    strongly_extremal_column,
)
from .enumeration import ClassTable, enumerate_classes
from .graph import LabeledGraph, Triad
from .tableau import LinearForm, Tableau, class_function, label_tableau, partial_order


class ConstructionError(AssertionError):
    pass


def quasi_extremal_columns(d: Diagram | Tableau) -> list[int]:
    """1-indexed columns that are not strongly extremal but dominate one side."""
    if isinstance(d, Tableau):
        d = d.diagram
    if not is_complete(d):
        raise DiagramError(f"{d} is not complete")
    hs = d.heights
    top = d.height
    se = strongly_extremal_column(d)
    out = []
    for k, h in enumerate(hs, start=1):
        if k == se:
            continue
        if all(x <= h for x in hs[: k - 1]) or all(x <= h for x in hs[k:]):
            out.append(k)
    for k in out:
        h = hs[k - 1]
        assert h >= top - 1, (d, k)
        if h == top - 1:
            assert (k < se) == (top % 2 == 1), (d, k)
        else:
            assert (k > se) == (top % 2 == 1), (d, k)
    return out


def link_targets(key: ClassKey) -> list[tuple[int, int, ClassKey]]:
    """(column, edge label, target class) for every block placement on ``key``."""
    d = complete_representatives(key, 1)[1]
    out = []
    for k in quasi_extremal_columns(d):
        hs = list(d.heights)
        hs[k - 1] += 1
        new = Diagram(hs)
        if not check_boundary(new):
            # a full-height quasi-extremal column leaves the old strongly
            # extremal column as an extremal column of the wrong parity
            if d.heights[k - 1] != d.height:
                raise ConstructionError(f"placing a block on column {k} of {d} breaks the boundary conditions")
            continue
        label = label_tableau(new).labels[(k, hs[k - 1])]
        if label is None:
            raise ConstructionError(f"new block on column {k} of {d} is blank")
        target = canonicalize(new)
        if target.strongly_extremal != k:
            raise ConstructionError(f"{new} should have strongly extremal column {k}")
        out.append((k, label, target))
    return out


def p3_difference(t: int, i: int, j: int, k: int) -> LinearForm:
    """c_i (r^j - r^k)."""
    rows = [[0] * (t + 1) for _ in range(t)]
    rows[i - 1][j - 1] += 1
    rows[i - 1][k - 1] -= 1
    return LinearForm.from_r_rows(rows)


def build_graph_of_links(order: int, table: ClassTable | None = None) -> LabeledGraph:
    t = order - 1
    if table is None:
        table = enumerate_classes(order)
    keys = list(table.classes)
    index = {k: n for n, k in enumerate(keys)}
    forms = [class_function(k) for k in keys]
    edges: dict[tuple[int, int], int] = {}
    for n, key in enumerate(keys):
        for col, lab, target in link_targets(key):
            m = index[target]
            pair = (min(n, m), max(n, m))
            if edges.setdefault(pair, lab) != lab:
                raise ConstructionError(f"two labels on the link {key} -- {target}")
            want = p3_difference(t, lab, key.strongly_extremal, target.strongly_extremal)
            if forms[n] - forms[m] != want:
                raise ConstructionError(f"link {key} -{lab}- {target} fails the evaluation identity")
    g = LabeledGraph.build(
        t,
        [k.strongly_extremal for k in keys],
        [(u, v, lab) for (u, v), lab in edges.items()],
        keys,
        forms,
        meta={"kind": "graph of links", "order": order},
    )
    _check_difference_edges(g)
    return g


@lru_cache(maxsize=None)
def graph_of_links(order: int) -> LabeledGraph:
    """Cached :func:`build_graph_of_links` on the full enumeration."""
    return build_graph_of_links(order)


def _check_difference_edges(g: LabeledGraph) -> None:
    """Every pair whose functions differ by a single c_i(r^j - r^k) is an edge."""
    t = g.t
    by_diff: dict[LinearForm, int] = {}
    for i in range(1, t + 1):
        for j in range(1, t + 2):
            for k in range(1, t + 2):
                if j != k:
                    by_diff[p3_difference(t, i, j, k)] = i
    have = {(e.u, e.v): e.label for e in g.edges}
    for a in range(len(g)):
        for b in range(a + 1, len(g)):
            diff = g.vertices[a].form - g.vertices[b].form
            lab = by_diff.get(diff)
            if lab is None:
                if (a, b) in have:
                    raise ConstructionError(f"edge {a}-{b} has no single-term difference")
                continue
            la, lb = g.label(a), g.label(b)
            if diff != p3_difference(t, lab, la, lb):
                continue
            if have.get((a, b)) != lab:
                raise ConstructionError(
                    f"vertices {g.vertices[a].key} and {g.vertices[b].key} differ by a link term but are not linked"
                )


# -- properties ------------------------------------------------------------


@dataclass
class PropertyReport:
    results: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def record(self, name: str, witness) -> None:
        self.results[name] = witness is None
        if witness is not None:
            self.witnesses[name] = witness

    def __str__(self) -> str:
        parts = []
        for k, v in self.results.items():
            parts.append(f"{k}:{'ok' if v else 'FAIL ' + repr(self.witnesses[k])}")
        return " ".join(parts)


def _p1(g: LabeledGraph):
    for e in g.edges:
        if g.label(e.u) == g.label(e.v):
            return e
    return None


def _p2(g: LabeledGraph):
    for v in range(len(g)):
        seen = set()
        for _, lab in g.neighbours(v):
            if lab in seen:
                return (v, lab)
            seen.add(lab)
    return None


def _p3(g: LabeledGraph):
    for e in g.edges:
        fu, fv = g.vertices[e.u].form, g.vertices[e.v].form
        if fu is None or fv is None:
            return ("missing form", e)
        if fu - fv != p3_difference(g.t, e.label, g.label(e.u), g.label(e.v)):
            return e
    return None


def _p5(g: LabeledGraph):
    comps = g.components()
    return None if len(comps) == 1 else ("components", len(comps))


def _p6(g: LabeledGraph):
    for tr in g.triads():
        a, _, _, d = tr.vertices
        if g.label(a) != g.label(d):
            return tr
    return None


CHECKS = {"P1": _p1, "P2": _p2, "P3": _p3, "P5": _p5, "P6": _p6}


def check_properties(g: LabeledGraph, which: Iterable[str] = ("P1", "P2", "P3", "P5", "P6")) -> PropertyReport:
    rep = PropertyReport()
    for name in which:
        rep.record(name, CHECKS[name](g))
    return rep


def pointed_chain(g: LabeledGraph) -> tuple[int, ...]:
    chains = g.pointed_chains()
    if len(chains) != 1:
        raise ConstructionError(f"expected one pointed chain, found {len(chains)}")
    return chains[0]


def triad_order(g: LabeledGraph, tr: Triad) -> tuple[int, int]:
    """(i, j) such that the triad defines c_i < c_j."""
    a, _, _, d = tr.vertices
    ka, kd = g.vertices[a].key, g.vertices[d].key
    if ka is None or kd is None:
        raise ValueError("triad_order needs class-backed end vertices")
    i, j = tr.outer, tr.inner
    hits = [partial_order(k).contains(i, j) for k in (ka, kd)]
    if sum(hits) != 1:
        raise ConstructionError(f"c{i}<c{j} lies in {sum(hits)} of the two end classes of {tr}")
    return i, j


def triad_kinds(g: LabeledGraph) -> set[tuple[int, int]]:
    """(outer, inner) label pairs over all triads."""
    return {(tr.outer, tr.inner) for tr in g.triads()}


def chain_classes(order: int) -> list[ClassKey]:
    g = build_graph_of_links(order)
    return [g.vertices[v].key for v in pointed_chain(g)]
