"""Facet adjacency via shared-vertex bit masks, and dual-graph distance queries.

Two facets of a d-polytope are adjacent when they share a ridge.  For
nearly-simplicial polytopes the cheap test |incident(i) & incident(j)| >= d-1
admits false positives, so a second stage keeps, per facet, only the
candidates whose common-vertex set is maximal.  Both stages work purely on
the incidence bit masks; this is the performance-critical path for the
large suspension towers (hundreds of millions of pairs).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import backend
from .geometry import FacetList


@dataclass
class DualGraph:
    facet_count: int
    adjacency: list  # sorted neighbor index list per facet
    polytope_dim: int
    pairs_examined: int = 0

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])


class DisconnectedGraph(ValueError):
    pass


def build_adjacency(F: FacetList, threads: int = 1) -> DualGraph:
    """Dual graph of a facet list.

    Stage 1 collects all pairs with at least d-1 common vertices (bitwise
    AND plus popcount).  Stage 2 discards a candidate when its common-vertex
    set is strictly contained in the common-vertex set of another candidate
    of the same facet; what survives are exactly the ridge-sharing pairs.
    Equal common sets between distinct candidates are impossible after facet
    dedup and are asserted against.
    """
    d = F.polytope_dim
    masks = [f.incident for f in F.facets]
    nf = len(masks)
    pairs, examined = backend.adjacency_pairs(masks, d - 1, threads)

    candidates: list[list[int]] = [[] for _ in range(nf)]
    for i, j in pairs:
        candidates[i].append(j)
        candidates[j].append(i)

    adjacency: list[list[int]] = [[] for _ in range(nf)]
    for i in range(nf):
        cand = candidates[i]
        if not cand:
            continue
        commons = [masks[i] & masks[j] for j in cand]
        for a, j in enumerate(cand):
            ca = commons[a]
            keep = True
            for b in range(len(cand)):
                if a == b:
                    continue
                cb = commons[b]
                # Equal common sets mean both candidates meet facet i in the
                # same lower-dimensional face; the face's ridge partner is
                # also a candidate and strictly dominates both, so dropping
                # only strict containments keeps exactly the ridge pairs.
                if ca & cb == ca and ca != cb:
                    keep = False
                    break
            if keep:
                adjacency[i].append(j)
        adjacency[i].sort()

    for i in range(nf):
        for j in adjacency[i]:
            assert i in adjacency[j], "adjacency must come out symmetric"
    return DualGraph(nf, adjacency, d, examined)


def bfs_distance(G: DualGraph, start: int, goal: int) -> int:
    """Graph distance between two facets; raises on a disconnected pair."""
    if not 0 <= start < G.facet_count or not 0 <= goal < G.facet_count:
        raise IndexError("facet index out of range")
    if start == goal:
        return 0
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in G.adjacency[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                if w == goal:
                    return dist[w]
                queue.append(w)
    raise DisconnectedGraph(f"facets {start} and {goal} are not connected")


def bfs_all(G: DualGraph, start: int) -> list:
    dist = [-1] * G.facet_count
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in G.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def eccentricity_scan(G: DualGraph, sources) -> int:
    """Maximum BFS distance from any source facet to any facet."""
    sources = list(sources)
    if not sources:
        raise ValueError("empty source set")
    best = 0
    for s in sources:
        dist = bfs_all(G, s)
        if min(dist) < 0:
            raise DisconnectedGraph("dual graph is disconnected")
        best = max(best, max(dist))
    return best


@dataclass
class AdjacencyExport:
    lines: list = field(default_factory=list)


def export_adjacency(G: DualGraph) -> str:
    """One line per facet: "i: j k l ..."."""
    return "\n".join(
        f"{i}: " + " ".join(str(j) for j in G.adjacency[i])
        for i in range(G.facet_count)
    ) + "\n"
