import itertools
import random

import pytest

from prismatoids.exact import QQ
from prismatoids.geometry import VPolytope


def cube(dim, half=1):
    verts = [tuple(QQ(half) * s for s in signs)
             for signs in itertools.product((1, -1), repeat=dim)]
    return VPolytope(dim, tuple(verts))


def simplex(dim):
    verts = [tuple(QQ(0) for _ in range(dim))]
    for i in range(dim):
        verts.append(tuple(QQ(1) if j == i else QQ(0) for j in range(dim)))
    return VPolytope(dim, tuple(verts))


def cross_polytope(dim):
    verts = []
    for i in range(dim):
        for s in (1, -1):
            verts.append(tuple(QQ(s) if j == i else QQ(0) for j in range(dim)))
    return VPolytope(dim, tuple(verts))


def random_polytope(rng: random.Random, dim, npoints, coord_range=4):
    """Full-dimensional random integer polytope; small ranges force ties."""
    while True:
        pts = set()
        while len(pts) < npoints:
            pts.add(tuple(QQ(rng.randint(-coord_range, coord_range)) for _ in range(dim)))
        try:
            P = VPolytope(dim, tuple(sorted(pts)))
        except ValueError:
            continue
        from prismatoids.geometry import affine_dimension

        if affine_dimension(P) == dim:
            return P


@pytest.fixture(scope="session")
def rng():
    return random.Random(20110512)
