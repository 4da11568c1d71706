import pytest

from conftest import cube, simplex

from prismatoids import data
from prismatoids.exact import QQ
from prismatoids.geometry import VPolytope
from prismatoids.hull import facet_enumeration, validate_facets
from prismatoids.prismatoid import (
    NotAPrismatoid,
    assemble,
    check_width_bound,
    detect_bases,
    gallery,
    gallery_pair,
    gallery_prismatoid,
    width,
)


@pytest.fixture(scope="session")
def q20():
    return gallery_prismatoid("q20")


@pytest.fixture(scope="session")
def q40():
    return gallery_prismatoid("q40")


def segment(a, b):
    return VPolytope(1, ((QQ(a),), (QQ(b),)))


def triangle():
    return VPolytope(2, ((0, 0), (2, 0), (0, 2)))


def shifted_triangle():
    return VPolytope(2, ((-1, -1), (1, -1), (-1, 1)))


def test_trapezoid_width_two():
    P = assemble(segment(-1, 1), segment(-2, 2))
    r = width(P)
    assert r.width == 2
    assert r.prismatoid_excess == 0


def test_prism_width_two():
    t = shifted_triangle()
    P = assemble(t, t)
    assert width(P).width == 2


def test_assemble_dimension_mismatch():
    with pytest.raises(ValueError):
        assemble(segment(0, 1), triangle())


def test_assemble_rejects_flat_base():
    flat = VPolytope(2, ((0, 0), (1, 1), (2, 2)))
    with pytest.raises(ValueError):
        assemble(flat, shifted_triangle())


def test_gallery_counts():
    assert gallery("q40").n == 40
    assert gallery("q32").n == 32
    assert gallery("q28").n == 28
    assert gallery("q20").n == 25
    t = gallery("table1_20dim")
    assert t.n == 40 and t.dim == 20
    with pytest.raises(KeyError):
        gallery("q99")


def test_gallery_q20_block_checksums():
    P = gallery("q20")
    assert P.dim == 5
    top = [v for v in P.vertices if v[4] == 1]
    bottom = [v for v in P.vertices if v[4] == -1]
    assert len(top) == 12 and len(bottom) == 13


def test_table1_base_split_by_first_column():
    t = gallery("table1_20dim")
    plus = [v for v in t.vertices if v[0] == 1]
    minus = [v for v in t.vertices if v[0] == -1]
    assert len(plus) == 20 and len(minus) == 20


def test_gallery_widths(q20, q40):
    assert width(q40).width == 6
    assert width(q20).width == 6
    r = width(q20)
    assert r.n == 25 and r.prismatoid_excess == QQ(1, 20)


def test_gallery_widths_at_least_six():
    for name in ("q32", "q28"):
        assert width(gallery_prismatoid(name)).width >= 6


def test_base_facet_vertex_counts(q20):
    top, bottom = q20.base_masks()
    assert sorted((top.bit_count(), bottom.bit_count())) == [12, 13]


def test_gallery_base_hyperplanes(q20, q40):
    for P in (q40, q20):
        ft = P.facets.facets[P.base_top]
        fb = P.facets.facets[P.base_bottom]
        d = P.dim
        assert ft.plane.key() == (0,) * (d - 1) + (1, 1)
        assert fb.plane.key() == (0,) * (d - 1) + (-1, 1)
        assert ft.incident | fb.incident == (1 << P.n) - 1


def test_detect_bases_cube():
    P = cube(3)
    F = facet_enumeration(P)
    assert len(detect_bases(P, F)) == 3


def test_detect_bases_simplex():
    P = simplex(3)
    F = facet_enumeration(P)
    assert detect_bases(P, F) == []


def test_detect_bases_q28():
    P = gallery_prismatoid("q28")
    pairs = detect_bases(P.body, P.facets)
    assert (min(P.base_top, P.base_bottom), max(P.base_top, P.base_bottom)) in pairs


def test_check_width_bound(q20, q40):
    assert check_width_bound(q40)
    assert check_width_bound(q20)
    # a forged width of 10 on 25 vertices violates the bound
    assert not check_width_bound(q20, width_value=10)
    with pytest.raises(ValueError):
        check_width_bound(assemble(segment(0, 1), segment(0, 1)))


def test_q20_facets_validate(q20):
    assert validate_facets(q20.facets).ok


def test_not_a_prismatoid():
    from prismatoids.prismatoid import from_lifted_vertices

    # a simplex has no parallel facet pair, and its last coordinate is not +-1
    with pytest.raises(NotAPrismatoid):
        from_lifted_vertices(VPolytope(3, (
            (0, 0, 1), (2, 0, 1), (0, 2, 1), (0, 0, -1),
        )))


def test_gallery_pair_q28_counts():
    Pp, Pm = gallery_pair("q28")
    assert Pp.n == 40 and Pm.n == 40
    assert len(facet_enumeration(Pp)) == 14
    assert len(facet_enumeration(Pm)) == 14
