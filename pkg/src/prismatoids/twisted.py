"""The twisted product of two polygons and its two-copy prismatoids.

Vertices live on the flat torus inside the 3-sphere: lattice points (i, j)
with i - j fixed mod q map to exact rational sphere points through rational
circle points.  The facet structure is predicted combinatorially (vertical
and horizontal antiprisms plus diagonal tetrahedra) and verified against the
exact hull; two rotated copies assemble into a 5-prismatoid whose width is
computed from the common refinement of the two normal fans.

Internally torus coordinates are doubled so both the integer lattice and
the half-integer-shifted one are plain integers mod 2m.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .exact import (
    QQ,
    CirclePoint,
    lcm_all,
    primitive_vector,
    rank,
    rational_circle_point,
)
from .facetgraph import bfs_distance, build_adjacency
from .geodesic import _faces_of
from .geometry import Facet, FacetList, Hyperplane, VPolytope, mask_to_indices
from .hull import facet_enumeration, validate_facets
from .prismatoid import Prismatoid


class TwistedError(RuntimeError):
    pass


@dataclass(frozen=True)
class TorusLattice:
    """Lattice W on the torus, in doubled integer coordinates mod 2m.

    parity "plus" is the integer lattice {i - j = 0 mod q}; "minus" shifts
    by (1/2, 1/2) and uses residue q/2, so q must be even there.  Doubled
    points satisfy a = b = parity (mod 2) and a - b = parity * q (mod 2q).
    """

    d: int
    q: int
    parity: str

    def __post_init__(self):
        if self.d < 3 or self.q < 1:
            raise ValueError("need d >= 3 and q >= 1")
        if self.parity not in ("plus", "minus"):
            raise ValueError("parity must be plus or minus")
        if self.parity == "minus" and self.q % 2:
            raise ValueError("the shifted lattice requires even q")

    @property
    def m(self) -> int:
        return self.d * self.q

    @property
    def par(self) -> int:
        return 0 if self.parity == "plus" else 1

    def points(self) -> list[tuple[int, int]]:
        """All lattice points as doubled pairs, lexicographically sorted."""
        m2 = 2 * self.m
        par = self.par
        out = []
        for a in range(par, m2, 2):
            for b in range(par, m2, 2):
                if (a - b - par * self.q) % (2 * self.q) == 0:
                    out.append((a, b))
        return out

    def shift(self, p, da: int, db: int) -> tuple[int, int]:
        m2 = 2 * self.m
        return ((p[0] + da) % m2, (p[1] + db) % m2)


def lattice_points(d: int, q: int, parity: str = "plus") -> TorusLattice:
    L = TorusLattice(d, q, parity)
    assert len(L.points()) == L.m * d
    return L


@dataclass(frozen=True)
class CombFacet:
    """A predicted facet: kind tag plus its lattice vertex set."""

    kind: tuple  # ("vertical", i) | ("horizontal", j) | ("diagonal", i, j, k)
    vertices: frozenset


def predicted_facets(d: int, q: int, parity: str = "plus") -> list[CombFacet]:
    """The m vertical, m horizontal, and m(m-d) diagonal facets."""
    L = TorusLattice(d, q, parity)
    pts = L.points()
    by_a: dict[int, list] = {}
    by_b: dict[int, list] = {}
    for p in pts:
        by_a.setdefault(p[0], []).append(p)
        by_b.setdefault(p[1], []).append(p)
    m2 = 2 * L.m
    out = []
    for a in sorted(by_a):
        out.append(CombFacet(("vertical", a),
                             frozenset(by_a[a]) | frozenset(by_a[(a + 2) % m2])))
    for b in sorted(by_b):
        out.append(CombFacet(("horizontal", b),
                             frozenset(by_b[b]) | frozenset(by_b[(b + 2) % m2])))
    for p in pts:
        for k in range(1, q):
            quad = frozenset({
                p,
                L.shift(p, 2, 2),
                L.shift(p, 2 * (q - k), -2 * k),
                L.shift(p, 2 * (q - k) + 2, -2 * k + 2),
            })
            out.append(CombFacet(("diagonal", p[0], p[1], k), quad))
    assert len(out) == L.m * (L.m - d + 2)
    return out


def torus_circle_points(L: TorusLattice, tol) -> dict[int, CirclePoint]:
    """Circle points for every doubled coordinate value used by the lattice.

    Doubled value a stands for the angle a / (2m) turns.  Raises when the
    approximations fail to stay in distinct, correctly ordered positions.
    """
    m2 = 2 * L.m
    values = sorted({v for p in L.points() for v in p})
    out = {}
    for a in values:
        out[a] = rational_circle_point(QQ(a, m2), tol)
    seen = set()
    for a in values:
        key = (out[a].c, out[a].s)
        if key in seen:
            raise TwistedError("tolerance too coarse: circle points collide")
        seen.add(key)
    return out


def twisted_vertices(L: TorusLattice, alpha: CirclePoint, tol) -> VPolytope:
    """Exact rational sphere points of the lattice, as a 4-polytope.

    Every vertex satisfies x1^2 + x2^2 + x3^2 + x4^2 = 1 exactly because the
    two circle-point factors do.
    """
    if alpha.c <= 0 or alpha.s <= 0:
        raise ValueError("alpha must have positive cosine and sine")
    circ = torus_circle_points(L, tol)
    verts = []
    for (a, b) in L.points():
        ca, cb = circ[a], circ[b]
        verts.append((alpha.c * ca.c, alpha.c * ca.s, alpha.s * cb.c, alpha.s * cb.s))
    return VPolytope(4, tuple(verts))


@dataclass
class TwistedHull:
    lattice: TorusLattice
    polytope: VPolytope
    facets: FacetList
    kinds: list  # kind tag per facet, aligned with facets order
    point_index: dict  # lattice point -> vertex index
    passed: bool
    mismatches: list = field(default_factory=list)


DEFAULT_ALPHA_TURNS = QQ(1, 100)


def _default_tol(L: TorusLattice):
    return QQ(1, 64 * L.m)


def verify_twisted_hull(d: int, q: int, alpha: CirclePoint | None = None,
                        tol=None, parity: str = "plus") -> TwistedHull:
    """Exact hull of the twisted vertices against the predicted facet list.

    PASS means the computed facet incidence sets equal the predicted sets
    exactly; otherwise the mismatches are reported so the caller can tighten
    the tolerance or move alpha.
    """
    L = lattice_points(d, q, parity)
    if tol is None:
        tol = _default_tol(L)
    if alpha is None:
        alpha = rational_circle_point(QQ(1, 8), tol)
    P = twisted_vertices(L, alpha, tol)
    pts = L.points()
    index = {p: i for i, p in enumerate(pts)}
    F = facet_enumeration(P)
    predicted = {}
    for cf in predicted_facets(d, q, parity):
        mask = 0
        for p in cf.vertices:
            mask |= 1 << index[p]
        predicted[mask] = cf.kind
    got = {f.incident for f in F.facets}
    mismatches = []
    for mask in sorted(predicted.keys() - got):
        mismatches.append(("missing", predicted[mask], mask))
    for mask in sorted(got - predicted.keys()):
        mismatches.append(("extra", None, mask))
    kinds = [predicted.get(f.incident) for f in F.facets]
    return TwistedHull(L, P, F, kinds, index, not mismatches, mismatches)


# ---------------------------------------------------------------------------
# Two rotated copies assembled into a 5-prismatoid
# ---------------------------------------------------------------------------


def _polar_vertices(F: FacetList):
    out = []
    for f in F.facets:
        b = f.plane.offset
        if b <= 0:
            raise TwistedError("origin must be interior to the twisted hull")
        out.append(tuple(a / b for a in f.plane.normal))
    return out


def _facet_functionals(F: FacetList):
    """Integer (normal, offset) pairs per facet for exact support queries."""
    out = []
    for f in F.facets:
        entries = list(f.plane.normal) + [f.plane.offset]
        mult = lcm_all(QQ(e).denominator for e in entries)
        ints = [int(QQ(e) * mult) for e in entries]
        out.append((tuple(ints[:-1]), ints[-1]))
    return out


def _argmax_support(funcs, w):
    """Indices of facets maximizing <n_F, w>/b_F, by exact cross-comparison."""
    best: list[int] = []
    bn = bb = None
    for i, (nf, bf) in enumerate(funcs):
        v = sum(a * x for a, x in zip(nf, w))
        if not best:
            best, bn, bb = [i], v, bf
            continue
        lhs = v * bb
        rhs = bn * bf
        if lhs > rhs:
            best, bn, bb = [i], v, bf
        elif lhs == rhs:
            best.append(i)
    return best, QQ(bn, bb)


def _refinement_rays(hull_p: TwistedHull, hull_m: TwistedHull):
    """Primitive ray directions of the common refinement of the two fans.

    Rays are vertex rays of either polytope plus the transversal crossings
    of edge cones of one fan with 2-face cones of the other.  Candidates
    come from an exact sign test on the 2-face's wall functional and are
    deduplicated by primitive direction.
    """
    rays = {}

    def add(vec):
        qs = [QQ(x) for x in vec]
        mult = lcm_all(x.denominator for x in qs)
        rays[primitive_vector(int(x * mult) for x in qs)] = True

    for P in (hull_p, hull_m):
        for vert in P.polytope.vertices:
            add(vert)

    def crossings(src: TwistedHull, dst: TwistedHull):
        faces = _faces_of(dst.facets)
        funcs = _facet_functionals(dst.facets)
        walls = []
        for _mask, S, conedim in faces:
            if conedim != 3:
                continue
            s = sorted(S)
            assert len(s) == 2, "a 2-face cone must bound exactly two facets"
            (n1, b1), (n2, b2) = funcs[s[0]], funcs[s[1]]
            walls.append(tuple(x * b2 - y * b1 for x, y in zip(n1, n2)))
        efaces = [mask for mask, _S, conedim in _faces_of(src.facets) if conedim == 2]
        everts = []
        for mask in efaces:
            i, j = mask_to_indices(mask)
            everts.append((src.polytope.vertices[i], src.polytope.vertices[j]))
        for (v1, v2) in everts:
            for wall in walls:
                e1 = sum(a * x for a, x in zip(wall, v1))
                e2 = sum(a * x for a, x in zip(wall, v2))
                if (e1 > 0 > e2) or (e1 < 0 < e2):
                    # positive combination of the endpoints on the wall
                    add(tuple(abs(e2) * x + abs(e1) * y for x, y in zip(v1, v2)))

    crossings(hull_p, hull_m)
    crossings(hull_m, hull_p)
    return list(rays)


def assemble_two_copies(hull_p: TwistedHull, hull_m: TwistedHull,
                        threads: int = 1) -> Prismatoid:
    """Prismatoid over the polars of the two twisted hulls.

    Facets are read off the common refinement of the two normal fans: each
    refinement ray supports one side facet, whose incident vertices are the
    support-maximizing facets of either hull.  The resulting facet list is
    certified by the standard validator, which makes the enumeration
    complete by the two-facets-per-ridge argument.
    """
    t0 = time.perf_counter()
    qp = _polar_vertices(hull_p.facets)
    qm = _polar_vertices(hull_m.facets)
    np_, nm = len(qp), len(qm)
    body = VPolytope(5, tuple([v + (QQ(1),) for v in qp] +
                              [v + (QQ(-1),) for v in qm]))
    funcs_p = _facet_functionals(hull_p.facets)
    funcs_m = _facet_functionals(hull_m.facets)

    facets = []
    seen = set()
    for w in _refinement_rays(hull_p, hull_m):
        top, hp = _argmax_support(funcs_p, w)
        bottom, hm = _argmax_support(funcs_m, w)
        mask = 0
        for i in top:
            mask |= 1 << i
        for j in bottom:
            mask |= 1 << (np_ + j)
        if mask in seen:
            continue
        seen.add(mask)
        # A candidate direction supports a genuine facet only when its
        # contact set spans dimension 4; wall crossings that leave the
        # 2-face cone stop at lower-dimensional faces and are dropped.
        verts = [body.vertices[i] for i in mask_to_indices(mask)]
        if len(verts) < 5:
            continue
        v0 = verts[0]
        if rank([[x - y for x, y in zip(v, v0)] for v in verts[1:]]) != 4:
            continue
        t = (hm - hp) / 2
        b = (hm + hp) / 2
        facets.append(Facet(Hyperplane(tuple(w) + (t,), b).canonical(), mask))

    top_mask = (1 << np_) - 1
    bottom_mask = ((1 << nm) - 1) << np_
    zeros = (QQ(0),) * 4
    facets.append(Facet(Hyperplane(zeros + (QQ(1),), QQ(1)), top_mask))
    facets.append(Facet(Hyperplane(zeros + (QQ(-1),), QQ(1)), bottom_mask))

    flist = FacetList(body, facets, 5)
    report = validate_facets(flist)
    if not report.ok:
        raise TwistedError(f"refinement facet list failed validation: {report.problems[:3]}")
    dual = build_adjacency(flist, threads)
    return Prismatoid(body, len(facets) - 2, len(facets) - 1, flist, dual,
                      time.perf_counter() - t0)


def two_copies_prismatoid(d: int, q: int, alpha: CirclePoint | None = None,
                          tol=None, max_retries: int = 4,
                          threads: int = 1) -> Prismatoid:
    """The width-(4 + q/2) prismatoid from two rotated twisted products.

    alpha defaults to the circle point nearest 1/100 turn with denominator
    at most 10^4 and is halved (angle-wise) when the refinement structure
    does not validate, which is the loud version of "alpha small enough".
    """
    if q % 2:
        raise ValueError("the two-copy construction needs even q")
    L = lattice_points(d, q, "plus")
    if tol is None:
        tol = _default_tol(L)
    turns = None
    if alpha is None:
        turns = DEFAULT_ALPHA_TURNS
        alpha = rational_circle_point(turns, QQ(1, 10**4))
    last = None
    for _ in range(max_retries):
        hull_p = verify_twisted_hull(d, q, alpha=alpha, tol=tol, parity="plus")
        hull_m = verify_twisted_hull(d, q, alpha=alpha.swapped(), tol=tol,
                                     parity="minus")
        if hull_p.passed and hull_m.passed:
            try:
                prism = assemble_two_copies(hull_p, hull_m, threads)
                expected = L.m * (L.m - d + 2)
                top, bottom = prism.base_masks()
                if top.bit_count() == expected and bottom.bit_count() == expected:
                    return prism
                last = TwistedError("base vertex counts differ from the facet count formula")
            except TwistedError as exc:
                last = exc
        else:
            last = TwistedError(f"twisted hull mismatches: "
                                f"{(hull_p.mismatches or hull_m.mismatches)[:2]}")
        turns = (turns or DEFAULT_ALPHA_TURNS) / 2
        alpha = rational_circle_point(turns, QQ(1, 10**4))
    raise TwistedError(f"no sufficiently small alpha found: {last}")


def cross_check_lemma_maps(d: int, q: int, alpha: CirclePoint | None = None,
                           tol=None, threads: int = 1) -> dict:
    """Width of the assembled prismatoid against the combinatorial refinement.

    The prismatoid width must equal two plus the refinement-graph distance
    between the two lattices, and both must equal 4 + q/2.
    """
    from .facetgraph import bfs_distance as _bfs
    from .refinement import refinement_graph, verify_d_lemma

    prism = two_copies_prismatoid(d, q, alpha=alpha, tol=tol, threads=threads)
    w = _bfs(prism.dual, prism.base_top, prism.base_bottom)
    G = refinement_graph(d, q)
    lemma = verify_d_lemma(G)
    dist = lemma["distance_plus_minus"]
    expected = 4 + q // 2
    return {
        "d": d,
        "q": q,
        "width": w,
        "refinement_distance": dist,
        "expected_width": expected,
        "lemma_ok": lemma["ok"],
        "consistent": lemma["ok"] and w == 2 + dist == expected,
    }
