"""Flat-torus projection of geodesic maps and deterministic SVG output.

Floats appear only here: the upstream data stays exact, and a diagram is
presentation.  Horizontal position is the circular angle of (x1, x2), the
vertical one that of (x3, x4), both in turns scaled by the torus size, with
segments split at the wrap-around.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .exact import rank
from .geometry import VPolytope, mask_to_indices
from .hull import facet_enumeration


class ProjectionSingular(ValueError):
    pass


def hopf_coords(p) -> tuple[float, float]:
    """Both circular angles of a point off the two singular circles, in turns."""
    x1, x2, x3, x4 = (float(c) for c in p)
    if x1 == 0 and x2 == 0:
        raise ProjectionSingular("point lies on the plane x1 = x2 = 0")
    if x3 == 0 and x4 == 0:
        raise ProjectionSingular("point lies on the plane x3 = x4 = 0")
    a = math.atan2(x2, x1) / (2 * math.pi) % 1.0
    b = math.atan2(x4, x3) / (2 * math.pi) % 1.0
    return a, b


@dataclass
class TorusDiagram:
    size: float
    polylines: list = field(default_factory=list)  # (layer, [(x, y), ...])
    markers: list = field(default_factory=list)  # (layer, x, y)
    warnings: list = field(default_factory=list)

    def add_segment(self, layer: str, p, q):
        """One torus geodesic segment, split where it wraps around."""
        m = self.size
        ax, ay = p
        dx = (q[0] - ax + m / 2) % m - m / 2
        dy = (q[1] - ay + m / 2) % m - m / 2
        cuts = {0.0, 1.0}
        for start, delta in ((ax, dx), (ay, dy)):
            if delta:
                for k in range(-1, int(m) + 2):
                    t = (k - start) / delta
                    if 0.0 < t < 1.0:
                        cuts.add(t)
        ts = sorted(cuts)
        for t0, t1 in zip(ts, ts[1:]):
            mids = ((t0 + t1) / 2)
            ox = math.floor((ax + mids * dx) / m) * m
            oy = math.floor((ay + mids * dy) / m) * m
            seg = [((ax + t * dx) - ox, (ay + t * dy) - oy) for t in (t0, t1)]
            if seg[0] != seg[1]:
                self.polylines.append((layer, seg))


def _edges_of(P: VPolytope):
    """Vertex pairs forming edges, from the rank of their common facet normals."""
    F = facet_enumeration(P)
    masks = [f.incident for f in F.facets]
    normals = [[int(x) for x in f.plane.canonical().normal] for f in F.facets]
    n = P.n
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            rows = [normals[k] for k in range(len(masks))
                    if (masks[k] >> i & 1) and (masks[k] >> j & 1)]
            if rows and rank(rows) == P.dim - 1:
                out.append((i, j))
    return out


def diagram(maps, size: float = 1.0, layers=None) -> TorusDiagram:
    """Project one or two geodesic maps onto the flat torus.

    Each map contributes its vertices as markers and its source polytope's
    edges as split segments; elements hitting a singular circle are skipped
    and recorded as warnings.
    """
    if layers is None:
        layers = ["plus", "minus"]
    out = TorusDiagram(size=float(size))
    for layer, G in zip(layers, maps):
        P = G.source
        coords = {}
        for i, v in enumerate(P.vertices):
            try:
                a, b = hopf_coords(v)
            except ProjectionSingular as exc:
                out.warnings.append((layer, i, str(exc)))
                continue
            coords[i] = (a * out.size, b * out.size)
            out.markers.append((layer, coords[i][0], coords[i][1]))
        for i, j in _edges_of(P):
            if i in coords and j in coords:
                out.add_segment(layer, coords[i], coords[j])
            else:
                out.warnings.append((layer, (i, j), "edge endpoint not projectable"))
    return out


_LAYER_STYLE = {
    "plus": "#c62828",
    "minus": "#1565c0",
}
_CANVAS = 1000.0


def svg_render(dia: TorusDiagram) -> bytes:
    """Deterministic SVG 1.1 bytes on a fixed 1000 x 1000 canvas."""
    s = dia.size or 1.0
    scale = _CANVAS / s

    def fmt(x: float) -> str:
        return f"{x:.4f}"

    def pt(x: float, y: float) -> str:
        return f"{fmt(x * scale)},{fmt(_CANVAS - y * scale)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{int(_CANVAS)}" height="{int(_CANVAS)}" '
        f'viewBox="0 0 {int(_CANVAS)} {int(_CANVAS)}">',
        f'<rect x="0" y="0" width="{int(_CANVAS)}" height="{int(_CANVAS)}" '
        'fill="white" stroke="black" stroke-width="1"/>',
    ]
    by_layer: dict = {}
    for layer, seg in dia.polylines:
        by_layer.setdefault(layer, []).append(("path", seg))
    for layer, x, y in dia.markers:
        by_layer.setdefault(layer, []).append(("dot", (x, y)))
    for layer in sorted(by_layer):
        color = _LAYER_STYLE.get(layer, "#444444")
        lines.append(f'<g id="{layer}" stroke="{color}" fill="{color}">')
        for kind, data in sorted(by_layer[layer], key=repr):
            if kind == "path":
                d = "M" + " L".join(pt(x, y) for x, y in data)
                lines.append(f'<path d="{d}" fill="none" stroke-width="1.5"/>')
            else:
                x, y = data
                lines.append(f'<circle cx="{fmt(x * scale)}" '
                             f'cy="{fmt(_CANVAS - y * scale)}" r="4"/>')
        lines.append("</g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode()


def svg_write(dia: TorusDiagram, path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(svg_render(dia))
