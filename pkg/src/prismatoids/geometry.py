"""Core geometric types: vectors, hyperplanes, vertex polytopes, facet lists.

Coordinates are exact rationals throughout.  A facet stores its supporting
hyperplane plus the incident vertices as a bit mask (bit i set = vertex i
lies on the hyperplane), which is the representation the adjacency kernel
operates on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import QQ, gcd_all, lcm_all, primitive_vector, rank, rational_to_string


def vector(coords) -> tuple:
    return tuple(QQ(c) for c in coords)


def format_vector(v) -> str:
    return " ".join(rational_to_string(c) for c in v)


def mask_to_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def indices_to_mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Hyperplane:
    """The half-space <normal, x> <= offset."""

    normal: tuple
    offset: object

    def __post_init__(self):
        n = vector(self.normal)
        if all(c == 0 for c in n):
            raise ValueError("hyperplane normal must be nonzero")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", QQ(self.offset))

    def value(self, point):
        s = QQ(0)
        for a, x in zip(self.normal, point):
            s += a * x
        return s

    def canonical(self) -> "Hyperplane":
        """Primitive integer coefficients; the half-space is unchanged."""
        entries = list(self.normal) + [self.offset]
        mult = lcm_all(QQ(e).denominator for e in entries)
        ints = [int(QQ(e).numerator) * (mult // int(QQ(e).denominator)) for e in entries]
        g = gcd_all(ints)
        if g > 1:
            ints = [v // g for v in ints]
        return Hyperplane(tuple(QQ(v) for v in ints[:-1]), QQ(ints[-1]))

    def key(self) -> tuple:
        """Hashable identity of the half-space."""
        c = self.canonical()
        return tuple(int(x) for x in c.normal) + (int(c.offset),)

    def parallel_key(self) -> tuple:
        """Hashable identity of the normal direction, ignoring orientation.

        Sign is fixed by the first nonzero coefficient, so opposite facets
        of a prismatoid (offsets of either sign) compare equal.
        """
        ints = primitive_vector(
            int(QQ(a).numerator) * (lcm_all(QQ(b).denominator for b in self.normal)
                                    // int(QQ(a).denominator))
            for a in self.normal
        )
        lead = next(v for v in ints if v)
        if lead < 0:
            ints = tuple(-v for v in ints)
        return ints


@dataclass(frozen=True)
class VPolytope:
    """A polytope given by its vertex list."""

    dim: int
    vertices: tuple

    def __post_init__(self):
        verts = tuple(vector(v) for v in self.vertices)
        for v in verts:
            if len(v) != self.dim:
                raise ValueError("vertex length does not match ambient dimension")
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertices")
        object.__setattr__(self, "vertices", verts)

    @property
    def n(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Facet:
    plane: Hyperplane
    incident: int  # vertex-index bit mask

    @property
    def vertex_count(self) -> int:
        return self.incident.bit_count()

    def indices(self) -> list[int]:
        return mask_to_indices(self.incident)


@dataclass
class FacetList:
    source: VPolytope
    facets: list[Facet]
    polytope_dim: int

    def __len__(self) -> int:
        return len(self.facets)

    def base_index(self, plane: Hyperplane) -> int:
        key = plane.canonical().key()
        for i, f in enumerate(self.facets):
            if f.plane.key() == key:
                return i
        raise KeyError(f"no facet with hyperplane {plane}")


@dataclass
class ValidationReport:
    ok: bool
    checks: dict = field(default_factory=dict)
    problems: list = field(default_factory=list)

    def fail(self, message: str):
        self.ok = False
        self.problems.append(message)


def affine_dimension(P: VPolytope) -> int:
    """Dimension of the affine hull of the vertex set."""
    if P.n == 0:
        raise ValueError("empty polytope")
    v0 = P.vertices[0]
    rows = [[x - y for x, y in zip(v, v0)] for v in P.vertices[1:]]
    if not rows:
        return 0
    return rank(rows)


def interior_point(P: VPolytope) -> tuple:
    """Vertex centroid: strictly interior whenever the polytope is full-dimensional."""
    if affine_dimension(P) != P.dim:
        raise ValueError("polytope is not full-dimensional")
    n = P.n
    return tuple(sum((v[j] for v in P.vertices), QQ(0)) / n for j in range(P.dim))
