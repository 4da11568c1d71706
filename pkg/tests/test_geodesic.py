import itertools
import random

import pytest

from conftest import cube

from prismatoids import data
from prismatoids.exact import QQ
from prismatoids.geodesic import (
    central_fan,
    check_thm26_inequalities,
    fatten,
    fatten_containment_check,
    incidence_pattern,
    locate_ray,
    minimal_pattern_oracle,
    octagon_properties_check,
    pattern_canonical_form,
    reduce_pattern,
    reference_sixteen_arrow_pattern,
    transversality_check,
    two_cycle_check,
)
from prismatoids.geometry import VPolytope
from prismatoids.hull import polar_dual
from prismatoids.prismatoid import gallery_pair


@pytest.fixture(scope="session")
def q40_fans():
    Pp, Pm = gallery_pair("q40")
    return central_fan(Pp), central_fan(Pm)


@pytest.fixture(scope="session")
def q28_fans():
    Pp, Pm = gallery_pair("q28")
    return central_fan(Pp), central_fan(Pm)


def test_central_fan_counts(q40_fans, q28_fans):
    assert q40_fans[0].cone_count == 20
    assert q40_fans[1].cone_count == 20
    # ten printed rows carrying +- signs expand to fourteen facets
    assert q28_fans[0].cone_count == 14
    assert q28_fans[1].cone_count == 14


def test_central_fan_requires_interior_origin():
    shifted = VPolytope(4, tuple(
        tuple(c + 10 for c in v) for v in cube(4).vertices
    ))
    with pytest.raises(ValueError):
        central_fan(shifted)


def test_locate_ray_cube_axis():
    G = central_fan(cube(4))
    ids, interior = locate_ray(G, (1, 0, 0, 0))
    assert interior and len(ids) == 1
    n = G.facets.facets[ids[0]].plane
    assert tuple(n.normal) == (1, 0, 0, 0)


def test_locate_ray_wall():
    G = central_fan(cube(4))
    ids, interior = locate_ray(G, (1, 1, 0, 0))
    assert not interior and len(ids) == 2


def test_locate_ray_zero_rejected():
    G = central_fan(cube(4))
    with pytest.raises(ValueError):
        locate_ray(G, (0, 0, 0, 0))


def test_locate_ray_partition(q40_fans):
    Gp, _ = q40_fans
    rng = random.Random(31337)
    interior_hits = 0
    for _ in range(1000):
        w = tuple(QQ(rng.randint(-50, 50)) for _ in range(4))
        if all(x == 0 for x in w):
            continue
        ids, interior = locate_ray(Gp, w)
        if interior:
            assert len(ids) == 1
            interior_hits += 1
        else:
            assert len(ids) >= 2
    assert interior_hits > 900  # walls are measure zero


def test_thm26_vertices_of_f1prime_in_f3_cones(q40_fans):
    # the eight vertices (h, +-g, +-e, +-f) land in the two cones over the
    # facets with normals +-e3
    Gp, _ = q40_fans
    f3_ids = set()
    for i, f in enumerate(Gp.facets.facets):
        if tuple(map(abs, f.plane.normal)) == (0, 0, 1, 0):
            f3_ids.add(i)
    assert len(f3_ids) == 2
    for signs in itertools.product((1, -1), repeat=3):
        w = (3, 2 * signs[0], 5 * signs[1], 3 * signs[2])
        ids, interior = locate_ray(Gp, w)
        assert interior and ids[0] in f3_ids


def test_reduced_pattern_q40(q40_fans):
    red = reduce_pattern(incidence_pattern(*q40_fans))
    assert len(red.nodes_plus) == 4 and len(red.nodes_minus) == 4
    assert len(red.arrows) == 16
    assert not two_cycle_check(red)
    assert pattern_canonical_form(red) == \
        pattern_canonical_form(reference_sixteen_arrow_pattern())


def test_reduced_pattern_q28_matches_q40(q28_fans):
    red = reduce_pattern(incidence_pattern(*q28_fans))
    assert pattern_canonical_form(red) == \
        pattern_canonical_form(reference_sixteen_arrow_pattern())


def test_out_degree_at_least_two(q40_fans, q28_fans):
    for fans in (q40_fans, q28_fans):
        red = reduce_pattern(incidence_pattern(*fans))
        for node in red.node_list():
            assert len(red.out_neighbors(node)) >= 2


def test_identical_fans_give_empty_pattern(q28_fans):
    G = q28_fans[0]
    pat = incidence_pattern(G, G)
    # every vertex ray of a fan lies on its own cone walls: boundary only
    assert not pat.arrows
    assert pat.boundary_hits
    red = reduce_pattern(pat)
    assert not red.nodes_plus and not red.nodes_minus
    assert not two_cycle_check(red)


def test_two_cycle_detection():
    from prismatoids.geodesic import IncidencePattern

    pat = IncidencePattern([0], [0], {
        (("plus", 0), ("minus", 0)), (("minus", 0), ("plus", 0)),
    })
    assert two_cycle_check(pat)


def test_thm26_inequalities():
    assert check_thm26_inequalities((6, 10, 3, 2, 5, 3, 2, 3))
    assert not check_thm26_inequalities((5, 8, 3, 2, 5, 3, 2, 3))
    assert check_thm26_inequalities((5, 8, 3, 2, 5, 3, 2, 3), allow_a_equals_e=True)
    assert not check_thm26_inequalities((1, 1, 1, 1, 1, 1, 1, 1))
    with pytest.raises(ValueError):
        check_thm26_inequalities((0, 1, 1, 1, 1, 1, 1, 1))


def test_transversality_gallery_pairs(q40_fans, q28_fans):
    assert transversality_check(*q40_fans)
    assert transversality_check(*q28_fans)


def test_transversality_fails_for_identical_fans(q28_fans):
    G = q28_fans[0]
    assert not transversality_check(G, G)


def test_oracle_minimum_eight():
    res = minimal_pattern_oracle(8)
    assert res["minimum_nodes"] == 8
    assert res["splits_at_minimum"] == [(4, 4)]
    assert res["classes_4_4"] == 2
    for (p, q), count in res["per_split"].items():
        if p + q < 8:
            assert count == 0


def test_oracle_three_six_unique():
    res = minimal_pattern_oracle(9, splits=[(3, 6)])
    assert res["per_split"][(3, 6)] == 1


def test_oracle_rejects_large():
    with pytest.raises(ValueError):
        minimal_pattern_oracle(10)


def test_reference_pattern_is_a_known_class():
    from prismatoids.geodesic import pattern_classes

    ref = pattern_canonical_form(reference_sixteen_arrow_pattern())
    assert ref[2] in pattern_classes(4, 4)


@pytest.fixture(scope="session")
def q28_polars():
    Pp, Pm = gallery_pair("q28")
    return polar_dual(Pp), polar_dual(Pm)


def test_octagon_q28(q28_polars):
    assert octagon_properties_check(*q28_polars)


def test_octagon_q20_blocks():
    Qp = VPolytope(4, tuple(v[:4] for v in data.Q20_TOP_ROWS))
    Qm = VPolytope(4, tuple(v[:4] for v in data.Q20_BOTTOM_ROWS))
    assert octagon_properties_check(Qp, Qm)


def test_octagon_cube_fails():
    c = cube(4)
    assert not octagon_properties_check(c, c)


def test_fatten_boundary_rejected(q28_polars):
    with pytest.raises(ValueError):
        fatten(*q28_polars, 1)


def test_fatten_containment(q28_polars):
    qp, qm = fatten(*q28_polars, 1000)
    assert fatten_containment_check(qp, qm)


def test_fatten_preserves_face_lattice(q28_polars):
    from prismatoids.hull import facet_enumeration

    Qp, Qm = q28_polars
    qp, _ = fatten(Qp, Qm, QQ(17, 16))
    before = sorted(f.incident for f in facet_enumeration(Qp).facets)
    after = sorted(f.incident for f in facet_enumeration(qp).facets)
    assert before == after


def test_c34_band_coverage(q28_polars):
    from prismatoids.geodesic import octagon_vertices

    Qp, _ = q28_polars
    band = set(octagon_vertices(Qp, "34"))
    rng = random.Random(11)
    for _ in range(200):
        c, s = rng.randint(-99, 99), rng.randint(-99, 99)
        if c == 0 and s == 0:
            continue
        ray = (QQ(0), QQ(0), QQ(c), QQ(s))
        best, ids = None, []
        for i, v in enumerate(Qp.vertices):
            val = sum(a * x for a, x in zip(ray, v))
            if best is None or val > best:
                best, ids = val, [i]
            elif val == best:
                ids.append(i)
        assert set(ids) <= band
