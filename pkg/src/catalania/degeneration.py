"""Specialising coefficients to zero or to a common value, on function sets and on graphs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

import networkx as nx
import numpy as np

from .enumeration import enumerate_classes
from .graph import LabeledGraph
from .links import ConstructionError, p3_difference
from .sgraph import LinearOrderC, OrderSyntaxError, as_order, build_sgraph, orient_to_sinks
from .tableau import LinearForm, class_function, driving_function, evaluate, partial_order


class DegenerationError(ValueError):
    pass


@dataclass(frozen=True)
class CoefficientAssignment:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise ValueError(f"negative coefficient in {vals}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def parse(cls, text: str, t: int | None = None) -> "CoefficientAssignment":
        """Read ``"c1=1,c4=2,c2=9,c3=9"``."""
        found: dict[int, int] = {}
        for m in re.finditer(r"[^,]+", text):
            item = m.group(0).strip()
            mm = re.fullmatch(r"c?(\d+)\s*=\s*(\d+)", item)
            if not mm:
                raise OrderSyntaxError(text, m.start(), f"cannot read {item!r}")
            i, v = int(mm.group(1)), int(mm.group(2))
            if i in found:
                raise OrderSyntaxError(text, m.start(), f"c{i} given twice")
            found[i] = v
        n = max(found, default=0) if t is None else t
        if set(found) != set(range(1, n + 1)):
            raise OrderSyntaxError(text, len(text), f"need values for c1..c{n}")
        return cls(tuple(found[i] for i in range(1, n + 1)))

    @property
    def t(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i - 1]

    def injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def all_positive(self) -> bool:
        return all(v > 0 for v in self.values)

    def all_equal(self) -> bool:
        return len(set(self.values)) <= 1

    def weak_order(self) -> list[list[int]]:
        """Indices grouped by value, smallest value first."""
        groups: dict[int, list[int]] = {}
        for i, v in enumerate(self.values, start=1):
            groups.setdefault(v, []).append(i)
        return [groups[v] for v in sorted(groups)]

    def representative(self, i: int) -> int:
        """Smallest index sharing the value of c_i."""
        return min(j for j in range(1, self.t + 1) if self[j] == self[i])

    def compatible_with(self, order: LinearOrderC) -> bool:
        along = [self[i] for i in order.perm]
        return all(a <= b for a, b in zip(along, along[1:]))


def parse_chain(text: str) -> list[list[int]]:
    """Read a weak chain such as ``"1<4<2=3"`` into groups of tied indices."""
    groups = []
    pos = 0
    for part in text.split("<"):
        grp = []
        for item in part.split("="):
            s = item.strip().removeprefix("c")
            if not s.isdigit():
                raise OrderSyntaxError(text, pos, f"expected an index, found {item.strip()!r}")
            grp.append(int(s))
            pos += len(item) + 1
        groups.append(grp)
    flat = [i for g in groups for i in g]
    if sorted(flat) != list(range(1, len(flat) + 1)):
        raise OrderSyntaxError(text, 0, "indices must be 1..t, each once")
    return groups


# -- zeroing the smallest coefficient -----------------------------------------------


def _embed_form(f: LinearForm, t: int, shift: int) -> LinearForm:
    """Rename c_k -> c_{k+shift} and r^i -> r^{i+shift} inside t coefficients."""
    rows = [[0] * (t + 1) for _ in range(t)]
    for k, row in enumerate(f.r_rows()):
        for i, x in enumerate(row):
            rows[k + shift][i + shift] += x
    return LinearForm.from_r_rows(rows)


def _compatible_forms(order_t: int, perm: tuple[int, ...]) -> list[LinearForm]:
    if order_t == 0:
        return [LinearForm.zero(0)]
    table = enumerate_classes(order_t + 1)
    return [class_function(k) for k in table if partial_order(k).compatible_with(perm)]


def _induced(order: LinearOrderC, keep: range) -> tuple[int, ...]:
    lo = keep.start
    return tuple(i - lo + 1 for i in order.perm if i in keep)


def degenerate_zero(order: LinearOrderC | str | Sequence[int], r: int | None = None) -> frozenset[LinearForm]:
    """Functions of G(c) at c_r = 0, built both directly and from the two sub-orders.

    Returns the common set after asserting equality.
    """
    order = as_order(order)
    t = order.t
    if r is None:
        r = order.perm[0]
    if r != order.perm[0]:
        raise DegenerationError(f"c_{r} is not the smallest element of {order}")
    h = driving_function(t)
    g = build_sgraph(order)
    direct = frozenset((h + v.form).with_coefficient_zero(r) for v in g.vertices)
    h0 = h.with_coefficient_zero(r)
    left = _compatible_forms(r - 1, _induced(order, range(1, r)))
    right = _compatible_forms(t - r, _induced(order, range(r + 1, t + 1)))
    composite = set()
    for f1 in left:
        e1 = _embed_form(f1, t, 0) if f1.t else LinearForm.zero(t)
        for f2 in right:
            e2 = _embed_form(f2, t, r) if f2.t else LinearForm.zero(t)
            composite.add(h0 + e1 + e2)
    composite = frozenset(composite)
    if direct != composite:
        raise AssertionError(f"zeroing c_{r} in G({order}): {len(direct)} direct vs {len(composite)} composite functions")
    return direct


def erased_components(order: LinearOrderC | str | Sequence[int], r: int | None = None) -> int:
    order = as_order(order)
    r = order.perm[0] if r is None else r
    g = build_sgraph(order)
    return len(g.without_edges(g.edges_with_label(r)).components())


# -- quotients ------------------------------------------------------------------------


def _vertex_values(g: LabeledGraph, a: CoefficientAssignment) -> list[tuple[int, ...]]:
    if all(v.form is not None for v in g.vertices):
        return [evaluate(v.form, a.values) for v in g.vertices]
    vals = propagate_values(g, a)
    if vals is None:
        raise DegenerationError("graph has no consistent evaluation")
    return vals


def propagate_values(g: LabeledGraph, a: CoefficientAssignment, root: int = 0) -> list[tuple[int, ...]] | None:
    """Evaluated functions forced by the evaluation identity from ``root``."""
    t = g.t
    zero = LinearForm.zero(t)
    vals: list[np.ndarray | None] = [None] * len(g)
    vals[root] = np.zeros(t + 1, dtype=np.int64)
    todo = [root]
    while todo:
        x = todo.pop()
        for y, lab in g.neighbours(x):
            step = np.array(evaluate(zero + p3_difference(t, lab, g.label(x), g.label(y)), a.values))
            want = vals[x] - step
            if vals[y] is None:
                vals[y] = want
                todo.append(y)
            elif not np.array_equal(vals[y], want):
                return None
    if any(v is None for v in vals):
        return None
    return [tuple(int(x) for x in v) for v in vals]  # type: ignore[union-attr]


def quotient_by_equal_functions(g: LabeledGraph, a: CoefficientAssignment) -> LabeledGraph:
    """Merge vertices with equal evaluated functions; tied edge labels go to the smallest index."""
    if a.t != g.t:
        raise ValueError(f"assignment has {a.t} values, graph has t={g.t}")
    vals = _vertex_values(g, a)
    classes = sorted(set(vals))
    which = [classes.index(v) for v in vals]
    labels: list[int | None] = [None] * len(classes)
    conflicts = []
    members: list[list[int]] = [[] for _ in classes]
    for v, c in enumerate(which):
        members[c].append(v)
        if labels[c] is None:
            labels[c] = g.label(v)
        elif labels[c] != g.label(v):
            conflicts.append(("vertex", c, labels[c], g.label(v)))
    edges: dict[tuple[int, int], set[int]] = {}
    for e in g.edges:
        u, v = which[e.u], which[e.v]
        if u == v:
            continue
        edges.setdefault((min(u, v), max(u, v)), set()).add(e.label)
    out = []
    merged = {}
    for pair, labs in sorted(edges.items()):
        reps = {a.representative(x) for x in labs}
        if len(reps) > 1:
            conflicts.append(("edge", pair, sorted(labs)))
        out.append((pair[0], pair[1], min(reps)))
        merged[f"{pair[0]}-{pair[1]}"] = sorted(labs)
    tags = []
    for ms in members:
        keys = [g.vertices[m].key for m in ms]
        if all(k is not None for k in keys):
            tags.append("+".join(",".join(map(str, k.deplete.heights)) for k in keys))
        else:
            tags.append("+".join(g.vertices[m].tag or str(m) for m in ms))
    q = LabeledGraph.build(
        g.t, [x if x is not None else 0 for x in labels], out, tags=tags,
        meta={
            "kind": "quotient",
            "values": [list(c) for c in classes],
            "members": members,
            "edge_labels": merged,
            "conflicts": conflicts,
        },
    )
    return q


# -- coalescing the top pair ----------------------------------------------------------


def coalesced_graph(order: LinearOrderC | str | Sequence[int]) -> LabeledGraph:
    """G_c: three relabelled copies of G(c'') with label-r triangles.

    ``order`` must have its two largest elements at indices r and r+1.
    """
    order = as_order(order)
    t = order.t
    if t < 2:
        raise DegenerationError("coalescing needs t >= 2")
    a, b = order.perm[-2], order.perm[-1]
    if abs(a - b) != 1:
        raise DegenerationError(f"top pair c_{a}, c_{b} of {order} are not adjacent indices")
    r = min(a, b)
    inner = tuple(i if i < r else i - 2 for i in order.perm[:-2])
    base = build_sgraph(LinearOrderC(inner)) if inner else None
    if base is None:
        labels0, edges0 = [1], []
    else:
        labels0 = [v.label for v in base.vertices]
        edges0 = [(e.u, e.v, e.label) for e in base.edges]
    n = len(labels0)

    def vlabel(x, i):
        if x < r:
            return x
        if x == r:
            return r + i - 1
        return x + 2

    def elabel(x):
        return x if x < r else x + 2

    labels, edges = [], []
    for i in (1, 2, 3):
        labels += [vlabel(x, i) for x in labels0]
        edges += [(u + (i - 1) * n, v + (i - 1) * n, elabel(lab)) for u, v, lab in edges0]
    for v in range(n):
        if labels0[v] == r:
            x, y, z = v, v + n, v + 2 * n
            edges += [(x, y, r), (y, z, r), (x, z, r)]
    tags = [f"{i}:{v}" for i in (1, 2, 3) for v in range(n)]
    return LabeledGraph.build(t, labels, edges, tags=tags, meta={"kind": "coalesced", "order": str(order), "r": r})


def coalescing_assignment(order: LinearOrderC, top: int | None = None) -> CoefficientAssignment:
    """Distinct small values along the order, with the top pair raised to a common larger value."""
    t = order.t
    vals = [0] * t
    for p, i in enumerate(order.perm[:-2]):
        vals[i - 1] = p + 1
    c = top if top is not None else t + 5
    vals[order.perm[-2] - 1] = vals[order.perm[-1] - 1] = c
    return CoefficientAssignment(tuple(vals))


@dataclass(frozen=True)
class Coalescence:
    graph: LabeledGraph
    quotient_1: LabeledGraph
    quotient_2: LabeledGraph
    r: int


def coalesce_pair(order: LinearOrderC | str | Sequence[int], assignment: CoefficientAssignment | None = None) -> Coalescence:
    """Build G_c and check it against the quotients of both orders of the pair."""
    order = as_order(order)
    gc = coalesced_graph(order)
    r = gc.meta["r"]
    o1 = order
    o2 = LinearOrderC(order.perm[:-2] + (order.perm[-1], order.perm[-2]))
    if assignment is None:
        assignment = coalescing_assignment(order)
    if assignment[r] != assignment[r + 1]:
        raise DegenerationError(f"assignment {assignment.values} does not tie c_{r} and c_{r + 1}")
    q1 = quotient_by_equal_functions(build_sgraph(o1), assignment)
    q2 = quotient_by_equal_functions(build_sgraph(o2), assignment)
    for q, o in ((q1, o1), (q2, o2)):
        if q.meta["conflicts"]:
            raise ConstructionError(f"quotient of G({o}) has conflicts {q.meta['conflicts']}")
        if not q.labelled_isomorphic(gc):
            raise ConstructionError(f"quotient of G({o}) is not the coalesced graph")
    return Coalescence(gc, q1, q2, r)


def separation_check(g: LabeledGraph, assignment: CoefficientAssignment) -> bool:
    """True iff the evaluated vertex functions are pairwise distinct."""
    vals = _vertex_values(g, assignment)
    return len(set(vals)) == len(vals)


def coalesced_assignments_ok(order: LinearOrderC, assignment: CoefficientAssignment) -> bool:
    """The setting of the separation statement: tied top value above distinct positive others."""
    top = order.perm[-2:]
    rest = [assignment[i] for i in order.perm[:-2]]
    c = assignment[top[0]]
    return (
        assignment[top[1]] == c
        and all(0 < x < c for x in rest)
        and len(set(rest)) == len(rest)
    )


# -- the all-equal limit ------------------------------------------------------------------


def simplex_limit(order: LinearOrderC | str | Sequence[int], value: int = 1) -> LabeledGraph:
    order = as_order(order)
    t = order.t
    q = quotient_by_equal_functions(build_sgraph(order), CoefficientAssignment((value,) * t))
    if sorted(q.label(v) for v in range(len(q))) != list(range(1, t + 2)):
        raise ConstructionError(f"limit of G({order}) has labels {[q.label(v) for v in range(len(q))]}")
    if len(q.edges) != (t + 1) * t // 2:
        raise ConstructionError(f"limit of G({order}) is not complete")
    return q


def limit_tree(order: LinearOrderC | str | Sequence[int], value: int = 1) -> nx.DiGraph:
    """Hasse diagram of the all-equal limit under the function order.

    Each edge of G(c) points from its higher label to its lower one (the
    function increases along it); the image in the limit is transitively
    reduced.  Nodes are vertex labels.
    """
    order = as_order(order)
    g = build_sgraph(order)
    vals = _vertex_values(g, CoefficientAssignment((value,) * order.t))
    image = nx.DiGraph()
    image.add_nodes_from(range(1, order.t + 2))
    for e in g.edges:
        hi, lo = (e.u, e.v) if g.label(e.u) > g.label(e.v) else (e.v, e.u)
        if vals[hi] != vals[lo]:
            image.add_edge(g.label(hi), g.label(lo))
    if not nx.is_directed_acyclic_graph(image):
        raise ConstructionError(f"limit image of G({order}) has a cycle")
    return nx.transitive_reduction(image)


def forest_image(order: LinearOrderC | str | Sequence[int], value: int = 1) -> nx.DiGraph:
    """Image of the sink forest of G(c) in the all-equal limit, transitively reduced."""
    order = as_order(order)
    g = build_sgraph(order)
    vals = _vertex_values(g, CoefficientAssignment((value,) * order.t))
    image = nx.DiGraph()
    image.add_nodes_from(range(1, order.t + 2))
    for x, y in orient_to_sinks(g, order).edges:
        if vals[x] != vals[y]:
            image.add_edge(g.label(x), g.label(y))
    return nx.transitive_reduction(image)


def is_unbranched_path(dg: nx.DiGraph) -> bool:
    n = dg.number_of_nodes()
    return (
        dg.number_of_edges() == n - 1
        and all(dg.in_degree(v) <= 1 and dg.out_degree(v) <= 1 for v in dg.nodes)
        and nx.is_weakly_connected(dg)
    )
