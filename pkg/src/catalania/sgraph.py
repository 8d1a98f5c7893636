"""The subgraphs G(c) attached to linear orders on the coefficients, and S-graph axioms."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import networkx as nx

from .diagram import ClassKey
from .enumeration import enumerate_classes
from .graph import LabeledGraph
from .links import ConstructionError, PropertyReport, check_properties, graph_of_links, p3_difference, pointed_chain
from .tableau import LinearForm, partial_order

MAX_SEARCH_T = 3


class OrderSyntaxError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class AmbiguousPathError(ValueError):
    def __init__(self, msg: str, witnesses):
        super().__init__(msg)
        self.witnesses = witnesses


@dataclass(frozen=True)
class LinearOrderC:
    """``perm = (i_1, ..., i_t)`` means c_{i_1} < ... < c_{i_t}."""

    perm: tuple[int, ...]
    values: tuple[int, ...] | None = None

    def __post_init__(self):
        perm = tuple(int(x) for x in self.perm)
        object.__setattr__(self, "perm", perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
        if self.values is not None:
            vals = tuple(int(x) for x in self.values)
            object.__setattr__(self, "values", vals)
            if len(vals) != len(perm) or any(v < 0 for v in vals):
                raise ValueError(f"values {vals} do not fit t={len(perm)}")
            along = [vals[i - 1] for i in perm]
            if any(a > b for a, b in zip(along, along[1:])):
                raise ValueError(f"values {vals} are not monotone along {self}")

    @classmethod
    def parse(cls, text: str) -> "LinearOrderC":
        """Read ``"2<1<3"`` (a leading ``c`` on each index is allowed)."""
        perm = []
        pos = 0
        for m in re.finditer(r"[^<]+|<", text):
            tok = m.group(0)
            if tok == "<":
                continue
            pos = m.start()
            item = tok.strip()
            if item.startswith("c"):
                item = item[1:]
            if not item.isdigit():
                raise OrderSyntaxError(text, pos, f"expected an index, found {tok.strip()!r}")
            perm.append(int(item))
        bad = re.search(r"^\s*<|<\s*<|<\s*$", text)
        if bad:
            raise OrderSyntaxError(text, bad.end() - 1, "malformed chain")
        if not perm:
            raise OrderSyntaxError(text, 0, "empty chain")
        try:
            return cls(tuple(perm))
        except ValueError as e:
            raise OrderSyntaxError(text, 0, str(e)) from None

    @property
    def t(self) -> int:
        return len(self.perm)

    @property
    def rank(self) -> dict[int, int]:
        return {i: p for p, i in enumerate(self.perm)}

    @property
    def maximal(self) -> int:
        return self.perm[-1]

    def stripped(self) -> "LinearOrderC":
        """Drop the maximal element and close up the indices above it."""
        s = self.maximal
        return LinearOrderC(tuple(i if i < s else i - 1 for i in self.perm[:-1]))

    def generic_values(self) -> tuple[int, ...]:
        """Distinct positive values realising the order."""
        out = [0] * self.t
        for p, i in enumerate(self.perm):
            out[i - 1] = p + 1
        return tuple(out)

    def __str__(self) -> str:
        return "<".join(map(str, self.perm))


def all_orders(t: int) -> list[LinearOrderC]:
    return [LinearOrderC(p) for p in itertools.permutations(range(1, t + 1))]


@dataclass(frozen=True)
class OrderedPath:
    vertices: tuple[int, ...]
    labels: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.labels)


# -- the recursive construction ------------------------------------------------


def _construct(perm: tuple[int, ...]) -> tuple[list[int], list[tuple[int, int, int]], list[str]]:
    """Labels, edges and copy bits of G(c), built from the single vertex of t=0."""
    if not perm:
        return [1], [], [""]
    s = perm[-1]
    labels, edges, bits = _construct(tuple(i if i < s else i - 1 for i in perm[:-1]))
    n = len(labels)

    def up(x):
        return x if x < s else x + 1

    plus = [up(x) for x in labels]
    minus = [s if x == s + 1 else x for x in plus]
    out = [(u, v, up(lab)) for u, v, lab in edges]
    out += [(u + n, v + n, up(lab)) for u, v, lab in edges]
    out += [(v, v + n, s) for v in range(n) if plus[v] == s + 1]
    return plus + minus, out, [b + "0" for b in bits] + [b + "1" for b in bits]


def propagate_forms(g: LabeledGraph, root: int, root_form: LinearForm | None = None) -> list[LinearForm] | None:
    """Forms forced by the evaluation identity from ``root``; None on a conflict."""
    forms: list[LinearForm | None] = [None] * len(g)
    forms[root] = root_form if root_form is not None else LinearForm.zero(g.t)
    todo = [root]
    while todo:
        x = todo.pop()
        for y, lab in g.neighbours(x):
            want = forms[x] - p3_difference(g.t, lab, g.label(x), g.label(y))
            if forms[y] is None:
                forms[y] = want
                todo.append(y)
            elif forms[y] != want:
                return None
    if any(f is None for f in forms):
        return None
    return forms  # type: ignore[return-value]


@lru_cache(maxsize=None)
def _build(perm: tuple[int, ...]) -> LabeledGraph:
    order = LinearOrderC(perm)
    t = order.t
    labels, edges, bits = _construct(perm)
    abstract = LabeledGraph.build(t, labels, edges, tags=bits)
    root = bits.index("0" * t)
    assert labels[root] == t + 1
    forms = propagate_forms(abstract, root)
    if forms is None:
        raise ConstructionError(f"G({order}) is not an evaluation graph")
    big = graph_of_links(t + 1)
    by_form = {v.form: v for v in big.vertices}
    keys = []
    for v, f in enumerate(forms):
        hit = by_form.get(LinearForm(f.rows))
        if hit is None:
            raise ConstructionError(f"vertex {bits[v]} of G({order}) has a form {f.describe()} outside the graph of links")
        if hit.label != labels[v]:
            raise ConstructionError(f"vertex {bits[v]} has label {labels[v]} but its class {hit.key} has {hit.label}")
        keys.append(hit.key)
    if len(set(keys)) != len(keys):
        raise ConstructionError(f"G({order}) maps two vertices to one class")
    for e in abstract.edges:
        other = big.edge_between(big.index_of_key(keys[e.u]), big.index_of_key(keys[e.v]))
        if other is None or other.label != e.label:
            raise ConstructionError(f"edge {e} of G({order}) is not a link")
    return LabeledGraph.build(
        t, labels, [(e.u, e.v, e.label) for e in abstract.edges], keys,
        [LinearForm(f.rows, f"f[{k.deplete.heights}]") for f, k in zip(forms, keys)], bits,
        meta={"kind": "S-graph", "order": str(order)},
    )


def build_sgraph(order: LinearOrderC | str | Sequence[int]) -> LabeledGraph:
    order = as_order(order)
    return _build(order.perm)


def as_order(order) -> LinearOrderC:
    if isinstance(order, LinearOrderC):
        return order
    if isinstance(order, str):
        return LinearOrderC.parse(order)
    return LinearOrderC(tuple(order))


def select_compatible(order: LinearOrderC | str | Sequence[int], check: bool = True) -> frozenset[ClassKey]:
    """Classes whose assigned partial order holds in ``order``."""
    order = as_order(order)
    table = enumerate_classes(order.t + 1)
    out = frozenset(k for k in table if partial_order(k).compatible_with(order.perm))
    if check:
        built = build_sgraph(order).key_set()
        if built != out:
            extra = sorted(out - built, key=lambda k: k.deplete.heights)
            missing = sorted(built - out, key=lambda k: k.deplete.heights)
            raise ConstructionError(f"G({order}) and the compatible classes differ: {extra} vs {missing}")
    return out


# -- ordered paths ---------------------------------------------------------------


def ordered_path_witnesses(g: LabeledGraph, v: int, k: int, order: LinearOrderC) -> list[OrderedPath]:
    """All ordered paths from ``v`` ending at a vertex of label ``k``."""
    out = []
    for verts, labels in g.ordered_paths(v, order.rank):
        if g.label(verts[-1]) == k:
            out.append(OrderedPath(verts, labels))
    return out


def ordered_path(g: LabeledGraph, v: int, k: int, order: LinearOrderC | str | Sequence[int]) -> OrderedPath:
    """The ordered path from ``v`` to the unique reachable vertex of label ``k``."""
    order = as_order(order)
    paths = ordered_path_witnesses(g, v, k, order)
    if not paths:
        raise ValueError(f"no ordered path from {v} to label {k}")
    if len({p.end for p in paths}) > 1 or len(paths) > 1:
        raise AmbiguousPathError(f"{len(paths)} ordered paths from {v} to label {k}", paths)
    p = paths[0]
    assert len(set(p.labels)) == len(p.labels)
    assert len({g.label(x) for x in p.vertices}) == len(p.vertices), p
    return p


def _p7(g: LabeledGraph, order: LinearOrderC):
    rank = order.rank
    for v in range(len(g)):
        reach = {g.label(verts[-1]) for verts, _ in g.ordered_paths(v, rank)}
        missing = set(range(1, g.t + 2)) - reach
        if missing:
            return (v, min(missing))
    return None


def is_S_graph(g: LabeledGraph, order: LinearOrderC | str | Sequence[int]) -> PropertyReport:
    """P1, P2, P3, P5, P6 and P7 for ``order``.

    Without attached forms, P3 is checked by propagating forms from vertex 0.
    """
    order = as_order(order)
    rep = check_properties(g, ("P1", "P2"))
    if len(g) == 0:
        rep.record("nonempty", "empty graph")
        return rep
    if all(v.form is not None for v in g.vertices):
        rep.results.update(check_properties(g, ("P3",)).results)
        rep.witnesses.update(check_properties(g, ("P3",)).witnesses)
    else:
        rep.record("P3", None if propagate_forms(g, 0) is not None else "forms conflict around a cycle")
    p = check_properties(g, ("P5", "P6"))
    rep.results.update(p.results)
    rep.witnesses.update(p.witnesses)
    rep.record("P7", _p7(g, order))
    return rep


# -- sinks and components ----------------------------------------------------------


def orient_to_sinks(g: LabeledGraph, order: LinearOrderC | str | Sequence[int]) -> nx.DiGraph:
    """Arrows along every ordered path to a top-label vertex; a forest of in-trees."""
    order = as_order(order)
    top = g.t + 1
    dg = nx.DiGraph()
    dg.add_nodes_from(range(len(g)))
    for v in range(len(g)):
        p = ordered_path(g, v, top, order)
        for a, b in zip(p.vertices, p.vertices[1:]):
            dg.add_edge(a, b)
    for v in dg.nodes:
        if dg.out_degree(v) > 1:
            raise ConstructionError(f"vertex {v} has two outgoing arrows")
    roots = {v for v in dg.nodes if dg.out_degree(v) == 0}
    if roots != set(g.vertices_with_label(top)):
        raise ConstructionError(f"sinks {sorted(roots)} are not the top-label vertices")
    if not nx.is_directed_acyclic_graph(dg):
        raise ConstructionError("orientation has a cycle")
    return dg


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    coefficient: tuple[int, ...]
    labels: frozenset[int]
    linked_labels: frozenset[int]

    @property
    def kind(self) -> str:
        return "zero" if not any(self.coefficient) else "shifted"


def split_components(g: LabeledGraph, s: int) -> list[Component]:
    """Components after deleting the label-``s`` edges, with their c_s coefficient."""
    cut = g.without_edges(g.edges_with_label(s))
    t = g.t
    shifted = [0] * (t + 1)
    shifted[s - 1], shifted[s] = 1, -1
    out = []
    for comp in cut.components():
        rows = {tuple(g.vertices[v].form.r_rows()[s - 1]) for v in comp}
        if len(rows) != 1:
            raise ConstructionError(f"c_{s} coefficient varies on component {comp}")
        row = rows.pop()
        if any(row) and list(row) != shifted:
            raise ConstructionError(f"component {comp} has c_{s} coefficient {row}")
        members = set(comp)
        linked = frozenset(
            g.label(e.other(v)) for v in comp for e in g.incidence[v]
            if e.label == s and e.other(v) not in members
        )
        labels = frozenset(g.label(v) for v in comp)
        if labels | linked != set(range(1, t + 2)):
            raise ConstructionError(f"component {comp} misses labels {set(range(1, t + 2)) - labels - linked}")
        out.append(Component(tuple(comp), row, labels, linked))
    return out


# -- coincidences ------------------------------------------------------------------


def swapped_top(order: LinearOrderC) -> LinearOrderC | None:
    """Order with the two largest entries exchanged, when their indices differ by more than one."""
    if order.t < 2:
        return None
    a, b = order.perm[-2], order.perm[-1]
    if abs(a - b) <= 1:
        return None
    return LinearOrderC(order.perm[:-2] + (b, a))


def triad_relations(g: LabeledGraph) -> set[tuple[int, int]]:
    """The relations c_i < c_j defined by the triads of a class-backed graph."""
    from .links import triad_order

    return {triad_order(g, tr) for tr in g.triads()}


def cover_and_intersection(t: int) -> tuple[frozenset[ClassKey], frozenset[ClassKey]]:
    sets = [build_sgraph(o).key_set() for o in all_orders(t)]
    return frozenset().union(*sets), frozenset.intersection(*sets)


# -- exhaustive uniqueness search ---------------------------------------------------


class SearchCapacityError(ValueError):
    pass


def unique_ssubgraph_search(order: LinearOrderC | str | Sequence[int], max_t: int = MAX_SEARCH_T) -> list[LabeledGraph]:
    """Every S-subgraph of the graph of links satisfying P7 for ``order``.

    Candidates are edge sets containing the pointed chain; a vertex subset is
    the set of endpoints.  Supersets of a found S-graph are skipped only after
    being tested, so minimality is observed rather than assumed.
    """
    order = as_order(order)
    t = order.t
    if t > max_t:
        raise SearchCapacityError(f"t={t} exceeds the search bound {max_t}")
    big = graph_of_links(t + 1)
    chain = pointed_chain(big)
    chain_edges = {big.edge_between(a, b) for a, b in zip(chain, chain[1:])}
    rest = [e for e in big.edges if e not in chain_edges]
    found = []
    for n in range(len(rest) + 1):
        for extra in itertools.combinations(rest, n):
            edges = chain_edges | set(extra)
            sub = big.edge_subgraph(sorted(edges))
            if is_S_graph(sub, order).ok:
                found.append(sub)
    return found
