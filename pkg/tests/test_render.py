import math

import pytest

from conftest import cube

from prismatoids.exact import QQ, rational_circle_point
from prismatoids.geodesic import central_fan
from prismatoids.render import ProjectionSingular, TorusDiagram, diagram, hopf_coords, svg_render


def test_hopf_coords_diagonal_point():
    c = rational_circle_point(QQ(1, 8), QQ(1, 1000))
    a, b = hopf_coords((c.c, 0, c.s, 0))
    assert a == 0.0 and b == 0.0


def test_hopf_coords_singular():
    with pytest.raises(ProjectionSingular):
        hopf_coords((1, 0, 0, 0))
    with pytest.raises(ProjectionSingular):
        hopf_coords((0, 0, 1, 0))


def test_hopf_coords_inverts_torus_parametrization():
    from prismatoids.twisted import lattice_points, twisted_vertices

    L = lattice_points(3, 2)
    alpha = rational_circle_point(QQ(1, 8), QQ(1, 10**6))
    P = twisted_vertices(L, alpha, QQ(1, 10**6))
    m2 = 2 * L.m
    for (da, db), v in zip(L.points(), P.vertices):
        a, b = hopf_coords(v)
        assert abs(a - da / m2) < 1e-4 or abs(a - da / m2 - 1) < 1e-4 \
            or abs(a - da / m2 + 1) < 1e-4
        assert abs(b - db / m2) < 1e-4 or abs(b - db / m2 - 1) < 1e-4 \
            or abs(b - db / m2 + 1) < 1e-4


def test_diagram_marker_counts():
    from prismatoids.hull import polar_dual
    from prismatoids.prismatoid import gallery_pair

    Pp, Pm = gallery_pair("q28")
    Qp, Qm = polar_dual(Pp), polar_dual(Pm)
    dia = diagram([central_fan(Qp), central_fan(Qm)], size=1.0)
    vertex_warnings = [w for w in dia.warnings if isinstance(w[1], int)]
    assert len(dia.markers) == Qp.n + Qm.n - len(vertex_warnings)
    singular = sum(
        1
        for Q in (Qp, Qm)
        for v in Q.vertices
        if (v[0] == 0 and v[1] == 0) or (v[2] == 0 and v[3] == 0)
    )
    assert len(vertex_warnings) == singular == 20


def test_wraparound_splitting():
    dia = TorusDiagram(size=1.0)
    dia.add_segment("plus", (0.9, 0.5), (0.1, 0.5))
    assert len(dia.polylines) == 2
    for _layer, seg in dia.polylines:
        for x, _y in seg:
            assert -1e-9 <= x <= 1 + 1e-9


def test_svg_deterministic():
    G = central_fan(cube(4))
    d1 = diagram([G], size=1.0)
    d2 = diagram([G], size=1.0)
    assert svg_render(d1) == svg_render(d2)
    assert svg_render(d1).startswith(b"<?xml")


def test_empty_diagram_has_frame():
    svg = svg_render(TorusDiagram(size=1.0))
    assert b"<rect" in svg and b"</svg>" in svg
