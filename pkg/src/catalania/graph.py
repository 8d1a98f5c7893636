"""Vertex- and edge-labelled graphs with the searches shared by every construction."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Any, Iterable, Iterator, Mapping, Sequence

import networkx as nx

from .diagram import ClassKey
from .tableau import LinearForm


@dataclass(frozen=True)
class Vertex:
    id: int
    label: int
    key: ClassKey | None = None
    form: LinearForm | None = None
    tag: str = ""


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int
    label: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"self-loop at {self.u}")
        if self.u > self.v:
            a, b = self.v, self.u
            object.__setattr__(self, "u", a)
            object.__setattr__(self, "v", b)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class Triad:
    vertices: tuple[int, int, int, int]
    outer: int
    inner: int


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    t: int
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    meta: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        ids = [v.id for v in self.vertices]
        if ids != list(range(len(ids))):
            raise ValueError("vertex ids must be 0..n-1 in order")
        seen = set()
        for e in self.edges:
            if e.v >= len(ids):
                raise ValueError(f"edge {e} references a missing vertex")
            if (e.u, e.v, e.label) in seen:
                raise ValueError(f"parallel edge {e}")
            seen.add((e.u, e.v, e.label))

    @classmethod
    def build(
        cls,
        t: int,
        labels: Sequence[int],
        edges: Iterable[tuple[int, int, int]],
        keys: Sequence[ClassKey | None] | None = None,
        forms: Sequence[LinearForm | None] | None = None,
        tags: Sequence[str] | None = None,
        meta: Mapping[str, Any] | None = None,
    ) -> "LabeledGraph":
        n = len(labels)
        verts = tuple(
            Vertex(i, labels[i], keys[i] if keys else None, forms[i] if forms else None, tags[i] if tags else "")
            for i in range(n)
        )
        es = tuple(sorted({Edge(u, v, lab) for u, v, lab in edges}))
        return cls(t, verts, es, dict(meta or {}))

    # -- basic views -------------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def label(self, v: int) -> int:
        return self.vertices[v].label

    @cached_property
    def incidence(self) -> tuple[tuple[Edge, ...], ...]:
        inc: list[list[Edge]] = [[] for _ in self.vertices]
        for e in self.edges:
            inc[e.u].append(e)
            inc[e.v].append(e)
        return tuple(tuple(x) for x in inc)

    def neighbours(self, v: int) -> Iterator[tuple[int, int]]:
        """(neighbour, edge label) pairs."""
        for e in self.incidence[v]:
            yield e.other(v), e.label

    def vertices_with_label(self, k: int) -> list[int]:
        return [v.id for v in self.vertices if v.label == k]

    def edges_with_label(self, k: int) -> list[Edge]:
        return [e for e in self.edges if e.label == k]

    def vertex_label_counts(self) -> dict[int, int]:
        return {k: len(self.vertices_with_label(k)) for k in range(1, self.t + 2)}

    def edge_label_counts(self) -> dict[int, int]:
        return {k: len(self.edges_with_label(k)) for k in range(1, self.t + 1)}

    def edge_between(self, a: int, b: int) -> Edge | None:
        for e in self.incidence[a]:
            if e.other(a) == b:
                return e
        return None

    def index_of_key(self, key: ClassKey) -> int:
        return self._key_index[key]

    @cached_property
    def _key_index(self) -> dict[ClassKey, int]:
        return {v.key: v.id for v in self.vertices if v.key is not None}

    def key_set(self) -> frozenset[ClassKey]:
        return frozenset(v.key for v in self.vertices if v.key is not None)

    def with_forms(self, forms: Sequence[LinearForm | None]) -> "LabeledGraph":
        verts = tuple(replace(v, form=f) for v, f in zip(self.vertices, forms))
        return LabeledGraph(self.t, verts, self.edges, dict(self.meta))

    def without_edges(self, drop: Iterable[Edge]) -> "LabeledGraph":
        gone = set(drop)
        return LabeledGraph(self.t, self.vertices, tuple(e for e in self.edges if e not in gone), dict(self.meta))

    def induced(self, keep: Iterable[int]) -> "LabeledGraph":
        keep = sorted(set(keep))
        remap = {old: new for new, old in enumerate(keep)}
        verts = tuple(replace(self.vertices[old], id=new) for old, new in remap.items())
        es = tuple(sorted(Edge(remap[e.u], remap[e.v], e.label) for e in self.edges if e.u in remap and e.v in remap))
        return LabeledGraph(self.t, verts, es, dict(self.meta))

    def edge_subgraph(self, edges: Iterable[Edge]) -> "LabeledGraph":
        """Keep only ``edges`` and the vertices they touch (ids renumbered)."""
        edges = list(edges)
        touched = sorted({e.u for e in edges} | {e.v for e in edges})
        sub = self.without_edges(set(self.edges) - set(edges))
        return sub.induced(touched)

    # -- connectivity --------------------------------------------------------

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for start in range(len(self)):
            if start in seen:
                continue
            comp, todo = [], [start]
            seen.add(start)
            while todo:
                x = todo.pop()
                comp.append(x)
                for y, _ in self.neighbours(x):
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self) > 0 and len(self.components()) == 1

    # -- searches ------------------------------------------------------------

    def triads(self) -> list[Triad]:
        """Paths a-b-c-d on four distinct vertices whose outer edges share a label."""
        out = []
        for mid in self.edges:
            for b, c in ((mid.u, mid.v), (mid.v, mid.u)):
                for a, i in self.neighbours(b):
                    if a in (b, c):
                        continue
                    for d, i2 in self.neighbours(c):
                        if i2 != i or d in (a, b, c):
                            continue
                        quad = (a, b, c, d)
                        if quad <= quad[::-1]:
                            out.append(Triad(quad, i, mid.label))
        return sorted(set(out), key=lambda tr: tr.vertices)

    def pointed_chains(self) -> list[tuple[int, ...]]:
        """Paths with vertex labels t+1, t, ..., 1 joined by edges t, ..., 1."""
        chains = []

        def grow(path):
            k = self.label(path[-1])
            if k == 1:
                chains.append(tuple(path))
                return
            for y, lab in self.neighbours(path[-1]):
                if lab == k - 1 and self.label(y) == k - 1:
                    grow(path + [y])

        for v in self.vertices_with_label(self.t + 1):
            grow([v])
        return chains

    def ordered_paths(self, v: int, rank: Mapping[int, int]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Simple paths from ``v`` with edge labels strictly increasing in ``rank``.

        Yields (vertices, edge labels), starting with the empty path.
        """
        def grow(path, labels, last):
            yield tuple(path), tuple(labels)
            for y, lab in self.neighbours(path[-1]):
                if rank[lab] > last and y not in path:
                    path.append(y)
                    labels.append(lab)
                    yield from grow(path, labels, rank[lab])
                    path.pop()
                    labels.pop()

        yield from grow([v], [], -1)

    # -- comparison ------------------------------------------------------------

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        for v in self.vertices:
            g.add_node(v.id, label=v.label)
        for e in self.edges:
            g.add_edge(e.u, e.v, label=e.label)
        return g

    def labelled_isomorphic(self, other: "LabeledGraph", edge_labels: bool = True) -> bool:
        if (len(self), len(self.edges)) != (len(other), len(other.edges)):
            return False
        if self.vertex_label_counts() != other.vertex_label_counts():
            return False
        em = (lambda a, b: a["label"] == b["label"]) if edge_labels else None
        return nx.is_isomorphic(
            self.to_networkx(), other.to_networkx(),
            node_match=lambda a, b: a["label"] == b["label"],
            edge_match=em,
        )

    def encoding(self) -> tuple:
        """Canonical encoding of a class-backed graph: sorted keys and keyed edges."""
        if any(v.key is None for v in self.vertices):
            raise ValueError("encoding needs class-backed vertices")
        verts = tuple(sorted((v.key.deplete.heights, v.label) for v in self.vertices))
        es = tuple(sorted(
            tuple(sorted((self.vertices[e.u].key.deplete.heights, self.vertices[e.v].key.deplete.heights))) + (e.label,)
            for e in self.edges
        ))
        return verts, es

    def same_subgraph(self, other: "LabeledGraph") -> bool:
        return self.encoding() == other.encoding()

    # -- export ------------------------------------------------------------

    def to_json(self) -> dict:
        verts = []
        for v in self.vertices:
            item: dict[str, Any] = {"id": v.id, "label": v.label}
            if v.key is not None:
                item["class"] = v.key.to_json()
            if v.form is not None:
                item["form"] = v.form.to_json()
            if v.tag:
                item["tag"] = v.tag
            verts.append(item)
        return {
            "t": self.t,
            "vertices": verts,
            "edges": [{"u": e.u, "v": e.v, "label": e.label} for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LabeledGraph":
        vs = sorted(data["vertices"], key=lambda x: x["id"])
        keys = [ClassKey.from_json(x["class"]) if "class" in x else None for x in vs]
        forms = [LinearForm.from_json(x["form"]) if "form" in x else None for x in vs]
        return cls.build(
            data["t"], [x["label"] for x in vs],
            [(e["u"], e["v"], e["label"]) for e in data["edges"]],
            keys, forms, [x.get("tag", "") for x in vs],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            attrs = [f'label="{v.label}"']
            if v.key is not None:
                attrs.append(f'tooltip="{",".join(map(str, v.key.deplete.heights))}"')
            elif v.tag:
                attrs.append(f'tooltip="{v.tag}"')
            lines.append(f"  v{v.id} [{', '.join(attrs)}];")
        for e in self.edges:
            lines.append(f'  v{e.u} -- v{e.v} [label="{e.label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
