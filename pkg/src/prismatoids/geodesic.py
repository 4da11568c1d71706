"""Central fans of 4-polytopes as geodesic maps on the 3-sphere.

A map is stored through its source polytope: cells of the map correspond to
facets (cones over facets), vertices of the map to vertex rays.  Ray
location, vertex-in-cell incidence patterns, the transversality test, and
the exhaustive incidence-pattern oracle all live here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cones import intersect_cone
from .exact import QQ, lcm_all, rank
from .geometry import FacetList, VPolytope, mask_to_indices
from .hull import facet_enumeration


@dataclass
class GeodesicMap:
    """Central fan of a 4-polytope with the origin in its interior."""

    source: VPolytope
    facets: FacetList
    funcs: list = field(default_factory=list)  # per facet: (integer normal, offset)

    @property
    def cone_count(self) -> int:
        return len(self.facets.facets)


def central_fan(P: VPolytope) -> GeodesicMap:
    if P.dim != 4:
        raise ValueError("geodesic maps are built from 4-polytopes")
    F = facet_enumeration(P)
    funcs = []
    for f in F.facets:
        if f.plane.offset <= 0:
            raise ValueError("origin is not strictly interior")
        mult = lcm_all([QQ(a).denominator for a in f.plane.normal] +
                       [QQ(f.plane.offset).denominator])
        n = tuple(int(QQ(a) * mult) for a in f.plane.normal)
        b = int(QQ(f.plane.offset) * mult)
        funcs.append((n, b))
    return GeodesicMap(P, F, funcs)


def locate_ray(G: GeodesicMap, w) -> tuple[list[int], bool]:
    """Facets F with w in cone(F); the hit is interior iff it is unique.

    Membership: <n_F, w>/b_F realizes the maximum over all facets and is
    positive.  Comparisons are exact via cross-multiplication.
    """
    w = tuple(QQ(x) for x in w)
    if all(x == 0 for x in w):
        raise ValueError("cannot locate the zero vector")
    best: list[int] = []
    bn, bb = None, None
    for i, (n, b) in enumerate(G.funcs):
        v = sum(a * x for a, x in zip(n, w))
        if not best:
            best, bn, bb = [i], v, b
            continue
        # compare v/b with bn/bb
        lhs = v * bb
        rhs = bn * b
        if lhs > rhs:
            best, bn, bb = [i], v, b
        elif lhs == rhs:
            best.append(i)
    assert bn > 0, "a nonzero ray must exit through some facet cone"
    return best, len(best) == 1


@dataclass
class IncidencePattern:
    nodes_plus: list
    nodes_minus: list
    arrows: set  # pairs (("plus", i), ("minus", j)) in either direction
    boundary_hits: list = field(default_factory=list)

    def out_neighbors(self, node):
        return [b for a, b in self.arrows if a == node]

    def in_degree(self, node):
        return sum(1 for _a, b in self.arrows if b == node)

    def node_list(self):
        return [("plus", i) for i in self.nodes_plus] + \
               [("minus", j) for j in self.nodes_minus]


def incidence_pattern(Gp: GeodesicMap, Gm: GeodesicMap) -> IncidencePattern:
    """Arrows C -> D whenever a vertex ray of cell C lies interior to cell D."""
    arrows = set()
    boundary = []

    def one_direction(src: GeodesicMap, dst: GeodesicMap, src_tag, dst_tag):
        for vi, v in enumerate(src.source.vertices):
            ids, interior = locate_ray(dst, v)
            if not interior:
                boundary.append((src_tag, vi, tuple(ids)))
                continue
            target = (dst_tag, ids[0])
            for fi, f in enumerate(src.facets.facets):
                if f.incident >> vi & 1:
                    arrows.add(((src_tag, fi), target))

    one_direction(Gp, Gm, "plus", "minus")
    one_direction(Gm, Gp, "minus", "plus")
    return IncidencePattern(
        nodes_plus=list(range(Gp.cone_count)),
        nodes_minus=list(range(Gm.cone_count)),
        arrows=arrows,
        boundary_hits=boundary,
    )


def reduce_pattern(P: IncidencePattern) -> IncidencePattern:
    """Induced subgraph on cells that contain a vertex of the other map."""
    kept = {b for _a, b in P.arrows}
    arrows = {(a, b) for a, b in P.arrows if a in kept and b in kept}
    return IncidencePattern(
        nodes_plus=[i for i in P.nodes_plus if ("plus", i) in kept],
        nodes_minus=[j for j in P.nodes_minus if ("minus", j) in kept],
        arrows=arrows,
        boundary_hits=list(P.boundary_hits),
    )


def two_cycle_check(P: IncidencePattern) -> bool:
    """True when some pair of cells points at each other."""
    return any((b, a) in P.arrows for a, b in P.arrows)


def check_thm26_inequalities(params, allow_a_equals_e: bool = False) -> bool:
    """The five inequality groups on the eight cube parameters.

    params = (a, b, c, d, e, f, g, h), all positive.  With the variant flag
    the first comparison weakens to a >= e, which merges facets but keeps
    the reduced incidence pattern.
    """
    a, b, c, d, e, f, g, h = (QQ(x) for x in params)
    if min(a, b, c, d, e, f, g, h) <= 0:
        raise ValueError("parameters must be positive")
    first = a >= e if allow_a_equals_e else a > e
    return (
        first and b > f and c > g and d < h
        and e / c > max(h / a, g / b, f / d)
        and b / c > max(a / d, c / a, d / b)
        and b / h > max(d / e, c / f, a / g)
        and e / h > max(f / g, g / e, h / f)
    )


# ---------------------------------------------------------------------------
# Transversality
# ---------------------------------------------------------------------------


def _faces_of(F: FacetList):
    """All nonempty proper faces: (vertex mask, facet index set, cone dim).

    Faces are meets of facets; the meet closure of the facet incidence
    masks enumerates exactly the face lattice.  The cone over a face has
    dimension (affine dim of the face) + 1.
    """
    P = F.source
    facet_masks = [f.incident for f in F.facets]
    seen = set(facet_masks)
    queue = list(facet_masks)
    while queue:
        m = queue.pop()
        for fm in facet_masks:
            mm = m & fm
            if mm and mm not in seen:
                seen.add(mm)
                queue.append(mm)
    out = []
    for m in seen:
        idx = mask_to_indices(m)
        pts = [P.vertices[i] for i in idx]
        if len(pts) == 1:
            adim = 0
        else:
            v0 = pts[0]
            adim = rank([[x - y for x, y in zip(v, v0)] for v in pts[1:]])
        S = frozenset(i for i, fm in enumerate(facet_masks) if m & fm == m)
        out.append((m, S, adim + 1))
    return out


def _cone_system(G: GeodesicMap, S):
    """H-description of the cone over the face carried by facet set S.

    Equalities force the support ratios of all members of S to agree;
    inequalities dominate every facet outside S.
    """
    S = sorted(S)
    s0 = S[0]
    n0, b0 = G.funcs[s0]
    eqs, ineqs = [], []
    for i in range(G.cone_count):
        ni, bi = G.funcs[i]
        row = tuple(x * bi - y * b0 for x, y in zip(n0, ni))
        if i == s0:
            continue
        if i in S:
            eqs.append(row)
        else:
            ineqs.append(row)
    return eqs, ineqs


def transversality_check(Gp: GeodesicMap, Gm: GeodesicMap, witnesses=None) -> bool:
    """Dimension identity for every pair of cells whose relative interiors meet.

    For cones over faces, the identity reads dim C+ + dim C- = dim(C+ cap C-)
    + 4.  Pairs are pruned top-down: once two facet cones intersect only in
    the origin, every pair of their subfaces does too.
    """
    faces_p = _faces_of(Gp.facets)
    faces_m = _faces_of(Gm.facets)
    sys_p = {S: _cone_system(Gp, S) for _m, S, _d in faces_p
             for S in [S] if len(S) == 1}
    sys_m = {S: _cone_system(Gm, S) for _m, S, _d in faces_m
             for S in [S] if len(S) == 1}

    dead = set()
    facet_pairs_alive = []
    ok = True

    def record(dp, dm, cone, fp, fm):
        nonlocal ok
        if cone.strict_feasible and dp + dm != cone.dim + 4:
            ok = False
            if witnesses is not None:
                witnesses.append((fp, fm, dp, dm, cone.dim))

    for fp in range(Gp.cone_count):
        ep, ip = sys_p[frozenset((fp,))]
        for fm in range(Gm.cone_count):
            em, im = sys_m[frozenset((fm,))]
            cone = intersect_cone(ep + em, ip + im, 4)
            if cone.dim == 0:
                dead.add((fp, fm))
            else:
                record(4, 4, cone, ("plus", fp), ("minus", fm))
                facet_pairs_alive.append((fp, fm))
    if not ok and witnesses is None:
        return False

    for (mp, Sp, dp), (mm, Sm, dm) in itertools.product(faces_p, faces_m):
        if dp == 4 and dm == 4:
            continue
        if any((a, b) in dead for a in Sp for b in Sm):
            continue
        ep, ip = _cone_system(Gp, Sp)
        em, im = _cone_system(Gm, Sm)
        cone = intersect_cone(ep + em, ip + im, 4)
        if cone.dim == 0:
            continue
        record(dp, dm, cone, ("plus", sorted(Sp)), ("minus", sorted(Sm)))
        if not ok and witnesses is None:
            return False
    return ok


# ---------------------------------------------------------------------------
# Exhaustive oracle for minimal incidence patterns
# ---------------------------------------------------------------------------


def _column_states(p: int):
    """Ternary columns over p rows with out-degree >= 2 on the column node.

    State per cross pair: 0 no arrow, 1 row->column, 2 column->row; a column
    node needs at least two 2-entries.
    """
    out = []
    for col in itertools.product((0, 1, 2), repeat=p):
        if sum(1 for s in col if s == 2) >= 2:
            out.append(col)
    return out


def _canonical(p, q, cols, allow_side_swap: bool) -> tuple:
    best = None
    variants = [cols]
    if allow_side_swap and p == q:
        swapped_rows = [tuple({0: 0, 1: 2, 2: 1}[cols[j][i]] for j in range(q))
                        for i in range(p)]
        variants.append(swapped_rows)
    for mat in variants:
        for perm in itertools.permutations(range(p)):
            form = tuple(sorted(tuple(col[i] for i in perm) for col in mat))
            if best is None or form < best:
                best = form
    return best


def pattern_classes(p: int, q: int) -> list[tuple]:
    """Canonical forms of 2-cycle-free bipartite digraphs with min out-degree 2.

    Enumerates multisets of valid columns (quotient by column relabeling),
    filters on row out-degrees, and canonicalizes under row permutations and,
    for p = q, side swap.
    """
    states = _column_states(p)
    classes = set()
    for combo in itertools.combinations_with_replacement(states, q):
        if all(sum(1 for j in range(q) if combo[j][i] == 1) >= 2 for i in range(p)):
            classes.add(_canonical(p, q, combo, allow_side_swap=True))
    return sorted(classes)


def minimal_pattern_oracle(max_nodes: int, splits=None) -> dict:
    """Exhaustive scan of feasible reduced-incidence-pattern shapes.

    Returns feasibility and isomorphism-class counts per side split, the
    minimum feasible node count, and the feasible splits at that count.
    """
    if max_nodes > 9:
        raise ValueError("exhaustive search is limited to 9 nodes")
    if splits is None:
        splits = [(p, s - p) for s in range(2, max_nodes + 1)
                  for p in range(1, s // 2 + 1)]
    per_split = {}
    for p, q in splits:
        if p + q > max_nodes:
            raise ValueError(f"split {p}+{q} exceeds max_nodes")
        classes = pattern_classes(p, q)
        per_split[(p, q)] = len(classes)
    feasible = sorted(k for k, v in per_split.items() if v)
    minimum = min((p + q for p, q in feasible), default=None)
    return {
        "per_split": per_split,
        "minimum_nodes": minimum,
        "splits_at_minimum": [s for s in feasible if sum(s) == minimum],
        "classes_4_4": per_split.get((4, 4)),
    }


def pattern_canonical_form(P: IncidencePattern) -> tuple:
    """Canonical form of a 2-cycle-free pattern for isomorphism comparison."""
    assert not two_cycle_check(P), "canonical form requires a 2-cycle-free pattern"
    plus = sorted(P.nodes_plus)
    minus = sorted(P.nodes_minus)
    p, q = len(plus), len(minus)
    cols = []
    for j in minus:
        col = []
        for i in plus:
            if (("plus", i), ("minus", j)) in P.arrows:
                col.append(1)
            elif (("minus", j), ("plus", i)) in P.arrows:
                col.append(2)
            else:
                col.append(0)
        cols.append(tuple(col))
    return (p, q, _canonical(p, q, cols, allow_side_swap=p == q))


def reference_sixteen_arrow_pattern() -> IncidencePattern:
    """The reduced pattern with cells A1 A2 C1 C2 against B1 B2 D1 D2.

    Arrows are A_i -> B_j, B_i -> C_j, C_i -> D_j, D_i -> A_j for all i, j;
    plus side carries the A and C cells.
    """
    a = [("plus", 0), ("plus", 1)]
    c = [("plus", 2), ("plus", 3)]
    b = [("minus", 0), ("minus", 1)]
    d = [("minus", 2), ("minus", 3)]
    arrows = set()
    for x, y in itertools.product(a, b):
        arrows.add((x, y))
    for x, y in itertools.product(b, c):
        arrows.add((x, y))
    for x, y in itertools.product(c, d):
        arrows.add((x, y))
    for x, y in itertools.product(d, a):
        arrows.add((x, y))
    return IncidencePattern([0, 1, 2, 3], [0, 1, 2, 3], arrows)


# ---------------------------------------------------------------------------
# Octagon structure and base fattening
# ---------------------------------------------------------------------------


def _polygon_corner_mask(points2d):
    """Indices of points projecting onto corners of their 2-D convex hull.

    Corners are strict turns: points interior to hull edges do not count,
    but every input point sitting exactly on a corner does.
    """
    distinct = sorted(set(points2d))
    if len(distinct) < 3:
        corners = set(distinct)
    else:
        def half(pts):
            out = []
            for pt in pts:
                while len(out) >= 2:
                    (x1, y1), (x2, y2) = out[-2], out[-1]
                    cross = (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1)
                    if cross >= 0:  # right turn or straight: drop middle point
                        out.pop()
                    else:
                        break
                out.append(pt)
            return out[:-1]

        lower = half(distinct)
        upper = half(list(reversed(distinct)))
        corners = set(lower + upper)
    return [i for i, pt in enumerate(points2d) if pt in corners]


def octagon_vertices(Q: VPolytope, plane: str) -> list[int]:
    """Vertices of Q projecting onto corners of the named coordinate-plane shadow."""
    if Q.dim != 4:
        raise ValueError("expected a 4-polytope")
    j0, j1 = (2, 3) if plane == "34" else (0, 1)
    pts = [(v[j0], v[j1]) for v in Q.vertices]
    return _polygon_corner_mask(pts)


def octagon_properties_check(Qp: VPolytope, Qm: VPolytope) -> bool:
    """Eight shadow-corner vertices per base, lying in the right coordinate plane.

    For Q+ the shadow is onto coordinates 3,4 and the corner vertices must
    satisfy x1 = x2 = 0; for Q- the roles of the planes swap.
    """
    if Qp.dim != 4 or Qm.dim != 4:
        raise ValueError("expected 4-polytopes")
    sp = octagon_vertices(Qp, "34")
    if len(sp) != 8 or any(Qp.vertices[i][0] != 0 or Qp.vertices[i][1] != 0 for i in sp):
        return False
    sm = octagon_vertices(Qm, "12")
    if len(sm) != 8 or any(Qm.vertices[i][2] != 0 or Qm.vertices[i][3] != 0 for i in sm):
        return False
    return True


def fatten(Qp: VPolytope, Qm: VPolytope, factor):
    """Scale coordinates 3,4 of Q+ and 1,2 of Q- by a factor > 1.

    A positive diagonal map, so both face lattices are untouched; large
    factors pull every map vertex of one fan into the eight-cell band of
    the other.
    """
    factor = QQ(factor)
    if factor <= 1:
        raise ValueError("factor must exceed 1")
    if Qp.dim != 4 or Qm.dim != 4:
        raise ValueError("expected 4-polytopes")
    qp = VPolytope(4, tuple((v[0], v[1], v[2] * factor, v[3] * factor)
                            for v in Qp.vertices))
    qm = VPolytope(4, tuple((v[0] * factor, v[1] * factor, v[2], v[3])
                            for v in Qm.vertices))
    return qp, qm


def fatten_containment_check(Qp: VPolytope, Qm: VPolytope) -> bool:
    """All map vertices of each fan lie in the other base's eight-cell band.

    Map vertices of the fan of Q are its facet-normal rays; the band of the
    other base is the union of the normal cells of its eight shadow-corner
    vertices.  Cell location reduces to an argmax over vertices.
    """
    sp = set(octagon_vertices(Qp, "34"))
    sm = set(octagon_vertices(Qm, "12"))

    def rays_in_band(src: VPolytope, dst: VPolytope, band) -> bool:
        for f in facet_enumeration(src).facets:
            ray = f.plane.normal
            best = None
            ids = []
            for i, v in enumerate(dst.vertices):
                val = sum(a * x for a, x in zip(ray, v))
                if best is None or val > best:
                    best, ids = val, [i]
                elif val == best:
                    ids.append(i)
            if not set(ids) <= band:
                return False
        return True

    return rays_in_band(Qp, Qm, sm) and rays_in_band(Qm, Qp, sp)
