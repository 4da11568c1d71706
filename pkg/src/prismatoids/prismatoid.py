"""Prismatoid assembly, base detection, width and excess computation.

A prismatoid is a polytope with two parallel facets (the bases) that carry
all vertices; its width is the dual-graph distance between the bases.  The
gallery holds the explicit small constructions plus the published
20-dimensional tower output.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import data
from .exact import QQ
from .facetgraph import DualGraph, bfs_distance, build_adjacency
from .geometry import FacetList, Hyperplane, VPolytope, affine_dimension
from .hull import facet_enumeration, polar_dual


@dataclass
class Prismatoid:
    body: VPolytope
    base_top: int
    base_bottom: int
    facets: FacetList
    dual: DualGraph
    elapsed: float = 0.0

    @property
    def dim(self) -> int:
        return self.body.dim

    @property
    def n(self) -> int:
        return self.body.n

    def base_masks(self) -> tuple[int, int]:
        return (self.facets.facets[self.base_top].incident,
                self.facets.facets[self.base_bottom].incident)


@dataclass
class WidthReport:
    n: int
    d: int
    width: int
    prismatoid_excess: object
    hirsch_excess_of_dual: object
    elapsed: float

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "dim": self.d,
            "width": self.width,
            "prismatoid_excess": str(QQ(self.prismatoid_excess)),
            "hirsch_excess": str(QQ(self.hirsch_excess_of_dual)),
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


class NotAPrismatoid(ValueError):
    pass


def _base_plane(dim: int, sign: int) -> Hyperplane:
    normal = tuple(QQ(0) if j < dim - 1 else QQ(sign) for j in range(dim))
    return Hyperplane(normal, QQ(1))


def from_lifted_vertices(P: VPolytope, threads: int = 1) -> Prismatoid:
    """Prismatoid from vertices whose last coordinate is +-1.

    The designated bases are the facets in the hyperplanes x_last = 1 and
    x_last = -1; they must exist and cover every vertex.
    """
    t0 = time.perf_counter()
    facets = facet_enumeration(P)
    dual = build_adjacency(facets, threads)
    try:
        top = facets.base_index(_base_plane(P.dim, 1))
        bottom = facets.base_index(_base_plane(P.dim, -1))
    except KeyError as exc:
        raise NotAPrismatoid("lifted bases are not facets") from exc
    cover = facets.facets[top].incident | facets.facets[bottom].incident
    if cover != (1 << P.n) - 1:
        raise NotAPrismatoid("base facets do not contain all vertices")
    return Prismatoid(P, top, bottom, facets, dual, time.perf_counter() - t0)


def assemble(qplus: VPolytope, qminus: VPolytope, threads: int = 1) -> Prismatoid:
    """conv(Q+ x {1}, Q- x {-1}) with bases identified and dual graph built."""
    if qplus.dim != qminus.dim:
        raise ValueError("bases must live in the same dimension")
    d = qplus.dim
    if affine_dimension(qplus) != d or affine_dimension(qminus) != d:
        raise ValueError("bases must be full-dimensional")
    verts = [v + (QQ(1),) for v in qplus.vertices]
    verts += [v + (QQ(-1),) for v in qminus.vertices]
    body = VPolytope(d + 1, tuple(verts))
    if affine_dimension(body) != d + 1:
        raise ValueError("lifted vertex set is not full-dimensional")
    return from_lifted_vertices(body, threads)


def detect_bases(P: VPolytope, facets: FacetList) -> list[tuple[int, int]]:
    """All unordered facet pairs that are parallel and jointly cover all vertices."""
    full = (1 << P.n) - 1
    keys = [f.plane.parallel_key() for f in facets.facets]
    out = []
    for i in range(len(facets.facets)):
        for j in range(i + 1, len(facets.facets)):
            if keys[i] == keys[j] and \
                    facets.facets[i].incident | facets.facets[j].incident == full:
                out.append((i, j))
    return out


def width(P: Prismatoid) -> WidthReport:
    t0 = time.perf_counter()
    w = bfs_distance(P.dual, P.base_top, P.base_bottom)
    elapsed = P.elapsed + (time.perf_counter() - t0)
    n, d = P.n, P.dim
    return WidthReport(
        n=n,
        d=d,
        width=w,
        prismatoid_excess=QQ(w - d, n - d),
        hirsch_excess_of_dual=QQ(w, n - d) - 1,
        elapsed=elapsed,
    )


def check_width_bound(P: Prismatoid, width_value: int | None = None) -> bool:
    """Width bound for 5-dimensional prismatoids: width <= n/3 + 1, exactly."""
    if P.dim != 5:
        raise ValueError("the width bound applies to 5-dimensional prismatoids")
    w = width(P).width if width_value is None else width_value
    return QQ(w) <= QQ(P.n, 3) + 1


GALLERY_NAMES = ("q40", "q32", "q28", "q20", "table1_20dim")


def gallery(name: str) -> VPolytope:
    """Vertex data of the named prismatoid.

    q40 is assembled from the polars of its printed base polytopes; the
    others are stored verbatim as printed.
    """
    if name == "q40":
        qp = polar_dual(VPolytope(4, tuple(data.P_PLUS_Q40)))
        qm = polar_dual(VPolytope(4, tuple(data.P_MINUS_Q40)))
        verts = [v + (QQ(1),) for v in qp.vertices]
        verts += [v + (QQ(-1),) for v in qm.vertices]
        return VPolytope(5, tuple(verts))
    if name == "q32":
        return VPolytope(5, tuple(data.Q32_ROWS))
    if name == "q28":
        return VPolytope(5, tuple(data.Q28_ROWS))
    if name == "q20":
        return VPolytope(5, tuple(data.Q20_ROWS))
    if name == "table1_20dim":
        return VPolytope(20, tuple(data.TABLE1_ROWS))
    raise KeyError(f"unknown gallery name {name!r}; expected one of {GALLERY_NAMES}")


def gallery_prismatoid(name: str, threads: int = 1) -> Prismatoid:
    P = gallery(name)
    if name == "table1_20dim":
        # bases split by the sign of the first column; move it last so the
        # designated-base convention (x_last = +-1) applies
        verts = tuple(v[1:] + (v[0],) for v in P.vertices)
        P = VPolytope(P.dim, verts)
    return from_lifted_vertices(P, threads)


def gallery_pair(name: str) -> tuple[VPolytope, VPolytope]:
    """The printed 4-polytope pair (P+, P-) whose central fans drive a gallery entry."""
    pairs = {
        "q40": (data.P_PLUS_Q40, data.P_MINUS_Q40),
        "q32": (data.P_PLUS_Q32, data.P_MINUS_Q32),
        "q28": (data.P_PLUS_Q28, data.P_MINUS_Q28),
    }
    if name not in pairs:
        raise KeyError(f"no printed base pair for {name!r}")
    p, m = pairs[name]
    return VPolytope(4, tuple(p)), VPolytope(4, tuple(m))
