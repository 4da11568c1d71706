"""Combinatorial refinement graph of the two twisted-product fans.

For small alpha the common refinement of the two maps has a purely
combinatorial description: the vertices of both lattices plus the crossings
of non-vertical edges of the first map with vertical d-gons of the second
(and the mirror family), joined by edge pieces, triangle sections, and
d-gon/d-gon sections.  Every node carries an integer level label: lattice
points of the first map sit at 0, those of the second at 2 + q/2, and
crossings count inward from the ends of their edge.  The graph augmented by
all pairs at adjacent levels realizes the label as a graph distance, which
pins the pair-of-maps width combinatorially.

Everything is integer arithmetic on doubled torus coordinates mod 2m; no
geometry enters.  The level rules for crossings encode the figure-schema of
the construction (walk from both edge endpoints toward the midpoint); they
are validated behaviorally by verify_d_lemma and by the width cross-check
against the assembled prismatoid.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .twisted import TorusLattice

# edge kinds, as doubled-coordinate displacement builders
_VERT = "V"
_HOR = "H"
_SHORT = "S"


def _delta(kind, q: int):
    if kind == _VERT:
        return (0, 2 * q)
    if kind == _HOR:
        return (2 * q, 0)
    if kind == _SHORT:
        return (2, 2)
    _, s = kind
    return (2 * s, 2 * s - 2 * q)


def _edge_kinds(q: int, side: int):
    """Edge kinds of one lattice, with their crossing counts on the other.

    Side 0 edges cross vertical d-gons of the other map (odd a-values), so
    the crossing count is the a-extent; side 1 edges cross horizontal d-gons
    (even b-values), so it is the b-extent.
    """
    kinds = [(_VERT, 0 if side == 0 else q),
             (_HOR, q if side == 0 else 0),
             (_SHORT, 1)]
    for s in range(1, q):
        kinds.append(((("C", s)), s if side == 0 else q - s))
    return kinds


@dataclass
class RefinementGraph:
    d: int
    q: int
    nodes: list  # node ids; index is the handle used everywhere else
    d_label: list
    adjacency: list  # H-edges only; the level augmentation stays implicit
    index: dict = field(default_factory=dict)

    @property
    def m(self) -> int:
        return self.d * self.q

    def v_nodes(self, side: int) -> list:
        return [i for i, n in enumerate(self.nodes) if n[0] == "v" and n[1] == side]

    def label_classes(self) -> dict:
        out: dict = {}
        for i, lab in enumerate(self.d_label):
            out.setdefault(lab, []).append(i)
        return out


def refinement_graph(d: int, q: int) -> RefinementGraph:
    if q % 2:
        raise ValueError("the refinement construction needs even q")
    lat0 = TorusLattice(d, q, "plus")
    lat1 = TorusLattice(d, q, "minus")
    m2 = 2 * d * q
    top_label = 2 + q // 2

    nodes: list = []
    index: dict = {}

    def node(nid) -> int:
        if nid in index:
            return index[nid]
        index[nid] = len(nodes)
        nodes.append(nid)
        return index[nid]

    labels: dict = {}
    adj: list = []

    def connect(i: int, j: int):
        adj.append((i, j))

    for side, lat in ((0, lat0), (1, lat1)):
        for p in lat.points():
            labels[node(("v", side, p))] = 0 if side == 0 else top_label

    def crossing_label(side: int, kind, count: int, t: int) -> int:
        if kind == _SHORT:
            return 1 if side == 0 else top_label
        inward = min(t, count + 1 - t)
        return inward if side == 0 else top_label - inward

    # families 1-4: lattice edges and their crossing-cut pieces
    for side, lat in ((0, lat0), (1, lat1)):
        for kind, count in _edge_kinds(q, side):
            da, db = _delta(kind, q)
            for p in lat.points():
                a = node(("v", side, p))
                b = node(("v", side, lat.shift(p, da, db)))
                if count == 0:
                    connect(a, b)
                    continue
                chain = [a]
                for t in range(1, count + 1):
                    x = node(("x", side, p, kind, t))
                    labels[x] = crossing_label(side, kind, count, t)
                    chain.append(x)
                chain.append(b)
                for u, v in zip(chain, chain[1:]):
                    connect(u, v)

    # families 5-6: triangle sections.  Each triangle is a short edge plus an
    # apex one helix away; the section at each grid line joins the crossings
    # on the two sides that span it.
    def triangle_sections(side: int, lat: TorusLattice):
        # sides are (base point, kind, count, ordinal origin) descriptors;
        # ordinals measure from the base endpoint of the edge
        coord = 0 if side == 0 else 1  # the coordinate the cutting grid fixes
        for y in lat.points():
            for t in range(1, q + 1):
                # type I triangle: y, y+(2,2), y+(2t, 2t-2q)
                sides = [(y, _SHORT)]
                sides.append((y, ("C", t) if t < q else _HOR))
                if t == 1:
                    third = None  # vertical side never crosses on side 0
                    if side == 1:
                        third = (lat.shift(y, 2, 2 - 2 * q), _VERT)
                else:
                    third = (lat.shift(y, 2, 2), ("C", t - 1))
                _emit_sections(side, lat, [s for s in [sides[0], sides[1], third] if s],
                               coord, q, node, labels, connect, crossing_label)
            for u in range(0, q):
                # type II triangle: y, y+(2,2), y+(-2u, 2q-2u)
                apex = lat.shift(y, -2 * u, 2 * q - 2 * u)
                sides = [(y, _SHORT)]
                if u == 0:
                    if side == 0:
                        sides.append(None)
                    else:
                        sides.append((y, _VERT))
                else:
                    sides.append((apex, ("C", u)))
                sides.append((apex, ("C", u + 1) if u + 1 < q else _HOR))
                _emit_sections(side, lat, [s for s in sides if s],
                               coord, q, node, labels, connect, crossing_label)

    triangle_sections(0, lat0)
    triangle_sections(1, lat1)

    # family 7: horizontal d-gons of the first map meet vertical d-gons of
    # the second in a segment joining one crossing of each kind
    for b0 in range(0, m2, 2):
        for a0 in range(1, m2, 2):
            r = (a0 - b0) % (2 * q)
            base_h = ((a0 - r) % m2, b0)
            t_h = (r + 1) // 2
            r2 = (b0 - a0 + q) % (2 * q)
            base_v = (a0, (b0 - r2) % m2)
            t_v = (r2 + 1) // 2
            i = node(("x", 0, base_h, _HOR, t_h))
            j = node(("x", 1, base_v, _VERT, t_v))
            connect(i, j)

    nlist = list(range(len(nodes)))
    d_label = [labels[i] for i in nlist]
    adjacency = [[] for _ in nlist]
    for i, j in adj:
        if j not in adjacency[i]:
            adjacency[i].append(j)
            adjacency[j].append(i)
    return RefinementGraph(d, q, nodes, d_label, adjacency, index)


def _emit_sections(side, lat, sides, coord, q, node, labels, connect, crossing_label):
    """Join the crossings of a triangle's sides along every cutting line.

    A cutting line fixes one torus coordinate at an off-lattice parity; the
    triangle's boundary meets it in exactly two points, each a crossing node
    on one of the sides.
    """
    events: dict = {}
    for base, kind in sides:
        da, db = _delta(kind, q)
        span = (da if coord == 0 else db)
        start = base[coord]
        if span == 0:
            continue
        count = abs(span) // 2
        total = crossing_count = count
        for t in range(1, crossing_count + 1):
            if span > 0:
                c = (start + 2 * t - 1) % (2 * lat.m)
            else:
                c = (start - 2 * t + 1) % (2 * lat.m)
            x = node(("x", side, base, kind, t))
            if x not in labels:
                labels[x] = crossing_label(side, kind, total, t)
            events.setdefault(c, []).append(x)
    for c, xs in events.items():
        assert len(xs) == 2, f"a cutting line must meet a triangle boundary twice: {xs}"
        connect(xs[0], xs[1])


def verify_d_lemma(G: RefinementGraph) -> dict:
    """Check the three label properties and that labels equal graph distance.

    Property 1: the first map's lattice nodes are exactly the level-0 nodes.
    Property 2: every other node sees level d(v)-1, through a graph edge or
    through the level augmentation (some node of that level exists).
    Property 3: no graph edge drops the level by two or more.
    Finally a breadth-first search over the augmented graph (edges plus
    whole-level jumps) must reproduce the labels.
    """
    report = {"property1": True, "property2": True, "property3": True,
              "distance_matches": True, "witnesses": []}
    classes = G.label_classes()
    v_plus = set(G.v_nodes(0))
    for i in v_plus:
        if G.d_label[i] != 0:
            report["property1"] = False
            report["witnesses"].append(("property1", G.nodes[i]))
    for i, lab in enumerate(G.d_label):
        if i in v_plus:
            continue
        if lab - 1 not in classes and \
                all(G.d_label[j] != lab - 1 for j in G.adjacency[i]):
            report["property2"] = False
            report["witnesses"].append(("property2", G.nodes[i]))
    for i in range(len(G.nodes)):
        for j in G.adjacency[i]:
            if abs(G.d_label[i] - G.d_label[j]) >= 2:
                report["property3"] = False
                report["witnesses"].append(("property3", G.nodes[i], G.nodes[j]))

    dist = [-1] * len(G.nodes)
    queue = deque()
    for i in v_plus:
        dist[i] = 0
        queue.append(i)
    flushed = set()
    while queue:
        v = queue.popleft()
        for w in G.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
        for c in (G.d_label[v] - 1, G.d_label[v] + 1):
            if c in classes and c not in flushed:
                flushed.add(c)
                for w in classes[c]:
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        queue.append(w)
    if dist != G.d_label:
        report["distance_matches"] = False
        bad = next(i for i in range(len(dist)) if dist[i] != G.d_label[i])
        report["witnesses"].append(("distance", G.nodes[bad], dist[bad], G.d_label[bad]))
    report["ok"] = all(report[k] for k in
                       ("property1", "property2", "property3", "distance_matches"))
    report["distance_plus_minus"] = min(G.d_label[i] for i in G.v_nodes(1))
    return report
