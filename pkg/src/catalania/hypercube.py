"""Hypercube coordinates on G(c), canonical sequences and label multiplicities."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .enumeration import catalan
from .graph import LabeledGraph
from .links import pointed_chain
from .sgraph import LinearOrderC, all_orders, as_order, build_sgraph
from .tableau import Comparison, LinearForm, compare


@dataclass(frozen=True)
class HypercubeEmbedding:
    order: LinearOrderC
    graph: LabeledGraph
    coords: tuple[tuple[int, ...], ...]

    def hamming(self, a: int, b: int) -> int:
        return sum(x != y for x, y in zip(self.coords[a], self.coords[b]))

    @property
    def v_h(self) -> int:
        return pointed_chain(self.graph)[0]

    @property
    def v_h_star(self) -> int:
        return pointed_chain(self.graph)[-1]


def cone_rays(order: LinearOrderC) -> list[tuple[int, ...]]:
    """Extreme rays of {0 <= c_{i_1} <= ... <= c_{i_t}}: indicators of upper sets."""
    out = []
    for m in range(order.t):
        c = [0] * order.t
        for i in order.perm[m:]:
            c[i - 1] = 1
        out.append(tuple(c))
    return out


def dominates(f: LinearForm, g: LinearForm, order: LinearOrderC) -> bool:
    """f > g for every assignment weakly increasing along ``order``.

    A linear condition holds on the cone iff it holds on its extreme rays.
    """
    if f == g:
        return False
    return all(compare(f, g, c) in (Comparison.GREATER, Comparison.EQUAL) for c in cone_rays(order))


def embed(order: LinearOrderC | str | Sequence[int]) -> HypercubeEmbedding:
    """Coordinates from the copy bits of the recursive construction; invariants asserted."""
    order = as_order(order)
    g = build_sgraph(order)
    coords = tuple(tuple(int(b) for b in v.tag) for v in g.vertices)
    emb = HypercubeEmbedding(order, g, coords)
    t = order.t
    assert len(set(coords)) == 2 ** t
    for a, b in itertools.combinations(range(len(g)), 2):
        linked = g.edge_between(a, b) is not None
        if emb.hamming(a, b) == 1:
            assert linked == (g.label(a) != g.label(b)), (order, a, b)
        else:
            assert not linked, (order, a, b)
    vh, vs = emb.v_h, emb.v_h_star
    assert coords[vh] == (0,) * t, coords[vh]
    assert all(x + y == 1 for x, y in zip(coords[vh], coords[vs]))
    for a, b in itertools.permutations(range(len(g)), 2):
        if dominates(g.vertices[a].form, g.vertices[b].form, order):
            assert all(x >= y for x, y in zip(coords[a], coords[b])), (order, a, b)
    return emb


# -- canonical sequences ---------------------------------------------------------


def canonical_sequence(order: LinearOrderC | str | Sequence[int]) -> tuple[int, ...]:
    """n(k_i) = k_i - #{j > i : k_j < k_i} over the increasing listing k."""
    k = as_order(order).perm
    return tuple(x - sum(1 for y in k[i + 1:] if y < x) for i, x in enumerate(k))


def order_from_canonical(cs: Sequence[int]) -> LinearOrderC:
    """Rebuild (k_1..k_t) by shifting entries >= each new term and appending it."""
    cur: list[int] = []
    for i, n in enumerate(cs, start=1):
        if not 1 <= n <= i:
            raise ValueError(f"entry {n} at position {i} is out of range")
        cur = [x + 1 if x >= n else x for x in cur] + [n]
    return LinearOrderC(tuple(cur))


def _step_p(p: list[int], n: int) -> list[int]:
    out = [0] * (len(p) + 1)
    for k in range(1, len(p) + 1):
        if k < n:
            out[k - 1] = p[k - 1] + 1
        elif k == n:
            out[k - 1] = out[k] = p[k - 1]
        else:
            out[k] = p[k - 1] + 1
    return out


def _step_q(q: list[int], p_old: list[int], n: int) -> list[int]:
    """Edge powers after adjoining a new maximal index n.

    Old labels >= n move up by one and double; the new label n has as many
    edges as there were label-n vertices before the step.
    """
    out = [0] * (len(q) + 1)
    for k in range(1, len(q) + 1):
        if k < n:
            out[k - 1] = q[k - 1] + 1
        else:
            out[k] = q[k - 1] + 1
    out[n - 1] = p_old[n - 1]
    return out


def _step_q_printed(q: list[int], n: int) -> list[int]:
    """The edge recursion read literally: no shift, and 0 for a fresh label."""
    out = []
    for k in range(1, len(q) + 2):
        if k == n:
            out.append(q[k - 1] if k <= len(q) else 0)
        elif k <= len(q):
            out.append(q[k - 1] + 1)
        else:
            out.append(0)
    return out


def sequence_multiplicities(cs: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(p(k)_t for k in 1..t+1, q(k)_t for k in 1..t) from a canonical sequence."""
    if not cs:
        return (0,), ()
    if cs[0] != 1:
        raise ValueError("a canonical sequence starts with 1")
    p, q = [0, 0], [0]
    for n in cs[1:]:
        q = _step_q(q, p, n)
        p = _step_p(p, n)
    return tuple(p), tuple(q)


def printed_edge_recursion(cs: Sequence[int]) -> tuple[int, ...]:
    q = [0]
    for n in cs[1:]:
        q = _step_q_printed(q, n)
    return tuple(q)


def _log2(n: int) -> int:
    if n <= 0 or n & (n - 1):
        raise AssertionError(f"{n} is not a power of two")
    return n.bit_length() - 1


def direct_multiplicities(order: LinearOrderC | str | Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    g = build_sgraph(order)
    vc, ec = g.vertex_label_counts(), g.edge_label_counts()
    return tuple(_log2(vc[k]) for k in sorted(vc)), tuple(_log2(ec[k]) for k in sorted(ec))


def multiplicities(order: LinearOrderC | str | Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Vertex and edge powers by recursion, asserted against direct counts."""
    order = as_order(order)
    rec = sequence_multiplicities(canonical_sequence(order))
    direct = direct_multiplicities(order)
    if rec != direct:
        raise AssertionError(f"recursion {rec} and counts {direct} disagree for {order}")
    g = build_sgraph(order)
    s = order.maximal
    assert len(g.edges_with_label(s)) == len(g.vertices_with_label(s))
    return rec


def increasing_normal_form(cs: Sequence[int], check: bool = True) -> tuple[int, ...]:
    """Swap r_i > r_{i+1} to r_{i+1}, r_i + 1 until weakly increasing."""
    cur = list(cs)
    base = sequence_multiplicities(cur) if check else None
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i] + 1
                break
        else:
            break
        if check:
            assert sequence_multiplicities(cur) == base, (cs, cur)
    assert all(r <= i for i, r in enumerate(cur, start=1)), (cs, cur)
    return tuple(cur)


def increasing_sequences(t: int) -> list[tuple[int, ...]]:
    """1 <= r_1 <= ... <= r_t with r_i <= i."""
    out = []

    def grow(prefix):
        i = len(prefix) + 1
        if i > t:
            out.append(tuple(prefix))
            return
        for r in range(prefix[-1] if prefix else 1, i + 1):
            grow(prefix + [r])

    grow([])
    return out


# -- classification ------------------------------------------------------------------


@dataclass(frozen=True)
class GraphClass:
    normal_form: tuple[int, ...]
    orders: tuple[LinearOrderC, ...]
    vertex_powers: tuple[int, ...]
    edge_powers: tuple[int, ...]


def classify(t: int) -> list[GraphClass]:
    """Partition of the t! orders by the labelled subgraph G(c).

    The partition is asserted to equal the normal-form fibers, to have C_t
    blocks, and to agree with label-preserving isomorphism.
    """
    orders = all_orders(t)
    by_graph: dict[tuple, list[LinearOrderC]] = {}
    for o in orders:
        by_graph.setdefault(build_sgraph(o).encoding(), []).append(o)
    by_nf: dict[tuple[int, ...], list[LinearOrderC]] = {}
    for o in orders:
        by_nf.setdefault(increasing_normal_form(canonical_sequence(o)), []).append(o)
    blocks = sorted(sorted(map(str, b)) for b in by_graph.values())
    fibers = sorted(sorted(map(str, b)) for b in by_nf.values())
    if blocks != fibers:
        raise AssertionError(f"graph classes {blocks} differ from normal-form fibers {fibers}")
    if len(blocks) != catalan(t):
        raise AssertionError(f"{len(blocks)} classes at t={t}, expected {catalan(t)}")
    if set(by_nf) != set(increasing_sequences(t)):
        raise AssertionError("normal forms are not the increasing sequences")
    reps = [build_sgraph(b[0]) for b in by_graph.values()]
    for a, b in itertools.combinations(reps, 2):
        if a.labelled_isomorphic(b):
            raise AssertionError("two classes are isomorphic as labelled graphs")
    out = []
    seen_mult = set()
    for nf in sorted(by_nf):
        p, q = multiplicities(by_nf[nf][0])
        if (p, q) in seen_mult:
            raise AssertionError(f"normal form {nf} repeats multiplicities")
        seen_mult.add((p, q))
        out.append(GraphClass(nf, tuple(sorted(by_nf[nf], key=lambda o: o.perm)), p, q))
    return out


def isomorphism_partition(t: int) -> list[list[str]]:
    """Orders grouped by label-preserving isomorphism of G(c), via networkx."""
    groups: list[tuple[LabeledGraph, list[str]]] = []
    for o in all_orders(t):
        g = build_sgraph(o)
        for rep, members in groups:
            if g.labelled_isomorphic(rep):
                members.append(str(o))
                break
        else:
            groups.append((g, [str(o)]))
    return sorted(sorted(m) for _, m in groups)
