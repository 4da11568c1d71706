import itertools
import random

import pytest

from conftest import cross_polytope, cube, random_polytope, simplex

from prismatoids.exact import QQ
from prismatoids.geometry import Hyperplane, VPolytope, affine_dimension, interior_point
from prismatoids.hull import (
    DegenerateInput,
    facet_enumeration,
    polar_dual,
    validate_facets,
)


def brute_force_facets(P: VPolytope):
    """Supporting-hyperplane oracle: test every dim-subset of points.

    Independent of the pivoting engine; returns a set of
    (hyperplane key, incidence mask) pairs.
    """
    from prismatoids.exact import kernel_vector, scale_columns_to_integers

    pts, _ = scale_columns_to_integers(P.vertices)
    hom = [tuple(p) + (1,) for p in pts]
    out = {}
    for subset in itertools.combinations(range(P.n), P.dim):
        rows = [hom[i] for i in subset]
        u = kernel_vector(rows, P.dim + 1)
        if u is None:
            continue
        vals = [sum(a * b for a, b in zip(u, h)) for h in hom]
        if any(v != 0 for v in vals):
            if all(v <= 0 for v in vals):
                pass
            elif all(v >= 0 for v in vals):
                u = tuple(-x for x in u)
                vals = [-v for v in vals]
            else:
                continue
        else:
            continue
        mask = sum(1 << i for i, v in enumerate(vals) if v == 0)
        out[u] = mask
    # u is primitive and oriented, so it is already a canonical key
    return set(out.items())


def engine_facet_set(P: VPolytope):
    from prismatoids.exact import scale_columns_to_integers
    from prismatoids.hull import _enumerate_int

    pts, _ = scale_columns_to_integers(P.vertices)
    return {(f, m) for f, m in _enumerate_int(pts, P.dim)}


def test_cube_facets():
    F = facet_enumeration(cube(3))
    assert len(F) == 6
    assert all(f.vertex_count == 4 for f in F.facets)
    assert validate_facets(F).ok


def test_simplex_facets():
    F = facet_enumeration(simplex(4))
    assert len(F) == 5
    assert all(f.vertex_count == 4 for f in F.facets)


def test_cross_polytope_facets():
    F = facet_enumeration(cross_polytope(4))
    assert len(F) == 16
    assert validate_facets(F).ok


def test_cube_4d():
    F = facet_enumeration(cube(4))
    assert len(F) == 8
    assert all(f.vertex_count == 8 for f in F.facets)
    assert validate_facets(F).ok


def test_degenerate_input_rejected():
    square_in_3d = VPolytope(3, (
        (0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0),
    ))
    assert affine_dimension(square_in_3d) == 2
    with pytest.raises(DegenerateInput):
        facet_enumeration(square_in_3d)


def test_affine_dimension_point():
    assert affine_dimension(VPolytope(3, ((1, 2, 3),))) == 0


def test_interior_point_cube():
    assert interior_point(cube(3)) == (0, 0, 0)


def test_interior_point_simplex():
    assert interior_point(simplex(2)) == (QQ(1, 3), QQ(1, 3))


def test_polar_cube_is_cross_polytope():
    Q = polar_dual(cube(3))
    assert set(Q.vertices) == set(cross_polytope(3).vertices)


def test_polar_involution_on_shifted_simplex():
    # simplex translated so the origin is interior
    shift = QQ(-1, 4)
    P = VPolytope(3, tuple(tuple(c + shift for c in v) for v in simplex(3).vertices))
    PP = polar_dual(polar_dual(P))
    assert set(PP.vertices) == set(P.vertices)


def test_validator_catches_dropped_facet():
    from prismatoids.geometry import FacetList

    F = facet_enumeration(cube(3))
    broken = FacetList(F.source, F.facets[:-1], F.polytope_dim)
    report = validate_facets(broken)
    assert not report.ok
    assert any("ridge" in p for p in report.problems)


def test_validator_catches_wrong_incidence():
    from prismatoids.geometry import Facet, FacetList

    F = facet_enumeration(cube(3))
    f0 = F.facets[0]
    tampered = [Facet(f0.plane, f0.incident ^ 1)] + F.facets[1:]
    report = validate_facets(FacetList(F.source, tampered, F.polytope_dim))
    assert not report.ok


@pytest.mark.parametrize("dim,npoints", [(3, 8), (3, 10), (4, 10), (4, 12), (5, 10), (5, 12)])
def test_oracle_equivalence_random(dim, npoints):
    rng = random.Random(1000 * dim + npoints)
    for _ in range(4):
        P = random_polytope(rng, dim, npoints)
        assert engine_facet_set(P) == brute_force_facets(P)


def test_oracle_equivalence_degenerate_grid():
    # 0/1 coordinates maximize coplanarity and exercise the tie handling
    rng = random.Random(7)
    for _ in range(6):
        P = random_polytope(rng, 3, 7, coord_range=1)
        assert engine_facet_set(P) == brute_force_facets(P)
        assert validate_facets(facet_enumeration(P)).ok
