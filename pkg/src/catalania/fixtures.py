"""Hand-transcribed reference graphs.

Each graph is written as ``nodes`` ("name label" pairs) and ``edges``
("u-v:label").  Unlabelled edges are written without the ``:label`` part and
get label 0.
"""

from __future__ import annotations

from .graph import LabeledGraph


def parse_graph(t: int, nodes: str, edges: str, name: str = "") -> LabeledGraph:
    names, labels = [], []
    for tok in nodes.split():
        i = len(tok.rstrip("0123456789"))
        names.append(tok[:i])
        labels.append(int(tok[i:]))
    index = {n: k for k, n in enumerate(names)}
    if len(index) != len(names):
        raise ValueError(f"duplicate node name in {nodes!r}")
    es = []
    for tok in edges.split():
        pair, _, lab = tok.partition(":")
        u, v = pair.split("-")
        es.append((index[u], index[v], int(lab) if lab else 0))
    return LabeledGraph.build(t, labels, es, tags=names, meta={"fixture": name})


G2 = ("G_2", 1, "a1 b2", "a-b:1")

G3 = ("G_3", 2, "a2 b1 c1 d3 A3", "c-A:2 b-d:1 a-d:2 a-c:1")

G4 = (
    "G_4", 3,
    "a1 b2 c3 d4 e4 f4 g1 A4 B3 C2 D1 E1 F1 G4",
    "a-b:1 a-c:2 d-c:3 A-B:3 A-C:2 D-C:1 b-B:2 d-D:2 a-e:3 A-E:1 b-f:3 B-F:1 f-g:1 F-G:3",
)

SQUARE_12 = ("G(1<2)", 2, "a1 b3 c1 d2", "a-b:1 c-d:1 d-b:2")

SQUARE_21 = ("G(2<1)", 2, "a2 b3 c1 d3", "a-b:2 c-d:2 c-a:1")

OCTAGON = (
    "G(2<1<3)", 3,
    "a2 b4 c1 d4 A2 B3 C1 D3",
    "a-b:2 a-c:1 d-c:2 A-B:2 A-C:1 D-C:2 b-B:3 d-D:3",
)

PENDANT_OCTAGON = (
    "octagon with pendant path", 3,
    OCTAGON[2] + " P4 Q3",
    OCTAGON[3] + " A-P:3 P-Q:2",
)

TWO_OCTAGONS = (
    "two octagons", 3,
    "a2 b3 c4 d1 e2 f3 p4 q1 r2 s2 P4 Q1 R3 S3 A1 B4 C3 D2",
    "a-b:1 a-c:2 d-c:3 A-B:3 A-C:2 D-C:1 b-B:2 d-D:2 A-e:1 e-f:2 p-f:3 "
    "p-r:2 p-q:1 s-q:2 P-R:2 P-Q:1 S-Q:2 r-R:3 s-S:3",
)

# vertex of label 2 on the chain joining the two octagons
TWO_OCTAGONS_MIDDLE = "e"

COALESCED_T3 = ("G_c, t=3", 3, "a3 b4 c2 A1 B1 C1", "a-b:2 a-c:2 b-c:2 A-a:1 c-C:1 b-B:1")

G_23 = ("G_{2,3}", 3, "a1 b4 c2 d1 A1 B3 C2 D1", "a-b:1 d-c:1 b-c:2 A-B:1 D-C:1 C-B:2 b-B:3")

G_32 = ("G_{3,2}", 3, "a1 b4 c3 d1 A1 B4 C2 D1", "a-b:1 d-c:1 b-c:3 A-B:1 D-C:1 C-B:3 c-C:2")

SIMPLEX_3 = ("3-simplex", 3, "a3 b4 c2 A1", "a-b a-c b-c A-a c-A b-A")

OCTAGON_COALESCED = (
    "octagon at c2=c3", 3,
    "a4 b3 c1 A4 B3 C2",
    "a-b:2 a-c:2 b-c:2 A-B:2 A-C:2 C-B:2 C-c:1",
)

COALESCED_T4 = (
    "G_c, t=4", 4,
    "a3 b4 c2 A1 X5 Y1 B1 U5 V1 C1 W5 Z1",
    "a-b:2 a-c:2 b-c:2 A-a:1 c-C:1 b-B:1 X-a:4 c-W:4 b-U:4 X-Y:1 W-Z:1 U-V:1",
)

_PENDANTS = "A-a:1 b-B:1 c-C:1 d-D:1 P-p:1 Q-q:1 R-r:1 S-s:1"

G1_T4 = (
    "G(1<4<2<3)", 4,
    "a1 b1 c1 d1 A5 B4 C3 D5 P5 Q2 R2 S5 p1 q1 r1 s1",
    _PENDANTS + " A-B:4 B-C:3 C-D:4 B-Q:2 C-R:2 P-Q:4 R-S:4",
)

G2_T4 = (
    "G(1<4<3<2)", 4,
    "a1 b1 c1 d1 A5 B4 C4 D5 P5 Q2 R3 S5 p1 q1 r1 s1",
    _PENDANTS + " A-B:4 C-D:4 B-Q:3 C-R:3 P-Q:4 Q-R:2 R-S:4",
)

ALL = {
    spec[0]: spec
    for spec in (G2, G3, G4, SQUARE_12, SQUARE_21, OCTAGON, PENDANT_OCTAGON, TWO_OCTAGONS, COALESCED_T3,
                 G_23, G_32, SIMPLEX_3, OCTAGON_COALESCED, COALESCED_T4, G1_T4, G2_T4)
}


def load(spec) -> LabeledGraph:
    name, t, nodes, edges = spec
    return parse_graph(t, nodes, edges, name)
