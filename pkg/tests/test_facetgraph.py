import random

import pytest

from conftest import cross_polytope, cube, random_polytope, simplex

from prismatoids.facetgraph import (
    DisconnectedGraph,
    bfs_distance,
    build_adjacency,
    eccentricity_scan,
    export_adjacency,
)
from prismatoids.geometry import mask_to_indices
from prismatoids.hull import facet_enumeration, ridges_of_facet


def ridge_scan_adjacency(F):
    """Oracle: facets are adjacent iff they share a ridge computed exactly."""
    ridge_owner = {}
    nf = len(F.facets)
    adj = [set() for _ in range(nf)]
    for i in range(nf):
        for ridge in ridges_of_facet(F, i):
            if ridge in ridge_owner:
                j = ridge_owner[ridge]
                adj[i].add(j)
                adj[j].add(i)
            else:
                ridge_owner[ridge] = i
    return [sorted(s) for s in adj]


def test_cube_dual_graph():
    F = facet_enumeration(cube(3))
    G = build_adjacency(F)
    assert G.facet_count == 6
    assert all(G.degree(i) == 4 for i in range(6))
    assert G.pairs_examined == 15


def test_simplicial_polytope_degrees():
    F = facet_enumeration(cross_polytope(4))
    G = build_adjacency(F)
    assert all(G.degree(i) == 4 for i in range(G.facet_count))


def test_bfs_identity_and_neighbors():
    F = facet_enumeration(cube(3))
    G = build_adjacency(F)
    assert bfs_distance(G, 0, 0) == 0
    j = G.adjacency[0][0]
    assert bfs_distance(G, 0, j) == 1


def test_cube_opposite_facets_distance_two():
    F = facet_enumeration(cube(3))
    G = build_adjacency(F)
    # opposite facet pairs have antiparallel normals and disjoint vertices
    for i in range(6):
        for j in range(6):
            if i < j and F.facets[i].incident & F.facets[j].incident == 0:
                assert bfs_distance(G, i, j) == 2


def test_eccentricity_cube():
    F = facet_enumeration(cube(3))
    G = build_adjacency(F)
    assert eccentricity_scan(G, [0]) == 2


def test_eccentricity_simplex_complete_graph():
    F = facet_enumeration(simplex(3))
    G = build_adjacency(F)
    assert eccentricity_scan(G, range(G.facet_count)) == 1


def test_eccentricity_empty_sources():
    F = facet_enumeration(simplex(3))
    G = build_adjacency(F)
    with pytest.raises(ValueError):
        eccentricity_scan(G, [])


def test_disconnected_pair_raises():
    from prismatoids.facetgraph import DualGraph

    G = DualGraph(2, [[], []], 1)
    with pytest.raises(DisconnectedGraph):
        bfs_distance(G, 0, 1)


def test_adjacency_matches_ridge_scan_random(rng):
    for dim in (3, 4, 5):
        for _ in range(4):
            P = random_polytope(rng, dim, dim + 6)
            F = facet_enumeration(P)
            G = build_adjacency(F)
            assert G.adjacency == ridge_scan_adjacency(F)


def test_adjacency_matches_ridge_scan_degenerate(rng):
    for _ in range(5):
        P = random_polytope(rng, 4, 11, coord_range=1)
        F = facet_enumeration(P)
        G = build_adjacency(F)
        assert G.adjacency == ridge_scan_adjacency(F)


def test_export_format():
    F = facet_enumeration(simplex(2))
    G = build_adjacency(F)
    text = export_adjacency(G)
    lines = text.strip().split("\n")
    assert len(lines) == 3
    assert lines[0].startswith("0: ")
