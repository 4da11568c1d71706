"""One-point suspension with verified base perturbation, iterated into towers.

Suspending a prismatoid over a vertex v of one base and nudging the other
base's vertices in the fresh coordinate raises dimension, vertex count, and
(when the nudge is right) width by one each.  There is no a-priori bound on
a working perturbation, so every step recomputes facets, adjacency, and
width before being accepted, retrying with a relatively smaller perturbation
on failure.

Integer coordinates are kept by scaling: the suspension pair sits at
+-10^E in the new coordinate and the perturbed vertices at +1, which is the
same polytope as a unit suspension with perturbation 10^-E (column scaling
is combinatorially trivial).  The recorded epsilon exponent is the relative
one, -E.

The published 20-dimensional construction is reproduced exactly by
`published_q20_plan`: suspension magnitudes and the rotating perturbation
windows are transcribed from the final coordinate table, which the tower
regenerates vertex for vertex.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .exact import QQ
from .facetgraph import bfs_distance
from .geometry import VPolytope, mask_to_indices
from .prismatoid import NotAPrismatoid, Prismatoid, from_lifted_vertices, width


class TowerError(RuntimeError):
    pass


@dataclass
class TowerStep:
    dim: int
    n_vertices: int
    width: int
    epsilon_exponent: int
    elapsed: float

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "n": self.n_vertices,
            "width": self.width,
            "epsilon_exponent": self.epsilon_exponent,
            "elapsed_ms": round(self.elapsed * 1000, 1),
        }


@dataclass
class PerturbationSchedule:
    initial_exponent: int = -7
    shrink_factor: int = 10
    max_retries: int = 6

    def __post_init__(self):
        if self.max_retries < 1:
            raise ValueError("max_retries must be at least 1")
        if self.shrink_factor < 2:
            raise ValueError("shrink_factor must shrink")


def one_point_suspension(P: VPolytope, v: int) -> VPolytope:
    """Replace vertex v by v +- e_new one dimension up; others get 0.

    v lies on the segment between its two replacements by construction.
    """
    if not 0 <= v < P.n:
        raise IndexError(f"vertex index {v} out of range")
    verts = []
    for i, p in enumerate(P.vertices):
        if i == v:
            verts.append(p + (QQ(1),))
            verts.append(p + (QQ(-1),))
        else:
            verts.append(p + (QQ(0),))
    return VPolytope(P.dim + 1, tuple(verts))


@dataclass
class _TowerState:
    body: VPolytope
    roots: list  # per vertex: label of its seed ancestor
    chain: dict  # base name -> vertex index of the live suspension copy
    width: int
    prism: Prismatoid | None = None


def _base_sets(body: VPolytope):
    tops = {i for i, v in enumerate(body.vertices) if v[-1] == 1}
    bottoms = {i for i, v in enumerate(body.vertices) if v[-1] == -1}
    assert len(tops) + len(bottoms) == body.n, "lift coordinate must be +-1"
    return tops, bottoms


def _build_candidate(state: _TowerState, base: str, chain_root: str, mag: int,
                     window, window_offset=QQ(1)):
    """Vertex list, roots, and chain bookkeeping for one suspension step.

    The new coordinate is inserted just before the trailing +-1 base
    coordinate so the designated-base convention (x_last = +-1) survives.
    Window entries name seed roots on the opposite base; every current
    vertex with such a root is nudged by the window offset.
    """
    tops, bottoms = _base_sets(state.body)
    members = tops if base == "top" else bottoms
    v = state.chain.get(base)
    if v is None:
        v = next(i for i, r in enumerate(state.roots) if r == chain_root and i in members)
    window = set(window)
    verts, roots = [], []
    plus_index = None
    for i, p in enumerate(state.body.vertices):
        head, tail = p[:-1], p[-1:]
        offset = window_offset if state.roots[i] in window else QQ(0)
        if i == v:
            verts.append(head + (QQ(mag),) + tail)
            roots.append(state.roots[i])
            plus_index = len(verts) - 1
            verts.append(head + (QQ(-mag),) + tail)
            roots.append(state.roots[i])
        else:
            verts.append(head + (offset,) + tail)
            roots.append(state.roots[i])
    chain = dict(state.chain)
    if plus_index is None:
        raise TowerError(f"chain vertex {chain_root!r} not found on base {base}")
    chain[base] = plus_index
    other = "bottom" if base == "top" else "top"
    if chain.get(other) is not None and chain[other] > plus_index:
        chain[other] += 1
    return VPolytope(state.body.dim + 1, tuple(verts)), roots, chain, v


def widen_step(state: _TowerState, base: str, chain_root: str, mag: int,
               window, schedule: PerturbationSchedule, threads: int = 1):
    """One verified suspension step; retries with smaller perturbations."""
    d, n = state.body.dim, state.body.n
    if n <= 2 * d:
        raise TowerError("both bases are simplices: nothing left to suspend")
    tops, bottoms = _base_sets(state.body)
    perturbed = bottoms if base == "top" else tops
    assert len(perturbed) > d, "the perturbed base must not be a simplex"

    t0 = time.perf_counter()
    current_mag = mag
    for attempt in range(schedule.max_retries):
        body, roots, chain, _v = _build_candidate(state, base, chain_root,
                                                  current_mag, window)
        try:
            cand = from_lifted_vertices(body, threads)
            w = bfs_distance(cand.dual, cand.base_top, cand.base_bottom)
        except NotAPrismatoid:
            w = -1
        if w >= state.width + 1:
            step = TowerStep(
                dim=cand.dim,
                n_vertices=cand.n,
                width=w,
                epsilon_exponent=-len(str(current_mag)) + 1,
                elapsed=time.perf_counter() - t0,
            )
            return _TowerState(body, roots, chain, w, cand), step
        current_mag *= schedule.shrink_factor
    raise TowerError(
        f"no perturbation up to 1/{current_mag} increased the width at dim {d + 1}"
    )


def published_q20_plan() -> list[dict]:
    """The suspension schedule that regenerates the published 20-dim tower.

    Eight suspensions over the evolving copy of top vertex t10, then seven
    over bottom vertex b12; the opposite base is nudged by +1 on a window of
    seed vertices that walks around the base.
    """
    t = [("top", "t10", 10**7, ["b11"]),
         ("top", "t10", 10**7, ["b10"]),
         ("top", "t10", 10**7, ["b9", "b0"]),
         ("top", "t10", 10**10, ["b0", "b1"]),
         ("top", "t10", 10**11, ["b1", "b2"]),
         ("top", "t10", 10**11, ["b2", "b3"]),
         ("top", "t10", 10**11, ["b3", "b4"]),
         ("top", "t10", 10**11, ["b4", "b5"]),
         ("bottom", "b12", 10**5, ["t10"]),
         ("bottom", "b12", 10**7, ["t11"]),
         ("bottom", "b12", 10**7, ["t2"]),
         ("bottom", "b12", 10**7, ["t2", "t4"]),
         ("bottom", "b12", 10**8, ["t4", "t7"]),
         ("bottom", "b12", 10**8, ["t7", "t5"]),
         ("bottom", "b12", 10**9, ["t5", "t1"])]
    return [dict(base=b, chain_root=c, mag=m, window=w) for b, c, m, w in t]


def seed_roots(body: VPolytope) -> list:
    """Labels t0..,b0.. for a freshly assembled prismatoid, in vertex order."""
    tops, _ = _base_sets(body)
    roots = []
    ti = bi = 0
    for i in range(body.n):
        if i in tops:
            roots.append(f"t{ti}")
            ti += 1
        else:
            roots.append(f"b{bi}")
            bi += 1
    return roots


def _auto_plan_step(state: _TowerState, rotation: dict):
    """Derive one step when no published schedule applies.

    The base with fewer vertices is split at its lowest-index vertex (the
    chain continues on the live copy); the opposite base is nudged on a pair
    of its seed vertices that advances one position per visit.
    """
    tops, bottoms = _base_sets(state.body)
    base = "top" if len(tops) <= len(bottoms) else "bottom"
    members = sorted(tops if base == "top" else bottoms)
    chain_idx = state.chain.get(base)
    if chain_idx is None or chain_idx not in (tops if base == "top" else bottoms):
        chain_idx = members[0]
        state.chain[base] = chain_idx
    chain_root = state.roots[chain_idx]
    other = sorted(bottoms if base == "top" else tops)
    other_roots = sorted({state.roots[i] for i in other})
    k = rotation.get(base, 0)
    window = [other_roots[k % len(other_roots)],
              other_roots[(k + 1) % len(other_roots)]]
    rotation[base] = k + 1
    return dict(base=base, chain_root=chain_root, mag=10**7, window=window)


def replay_tower(prism: Prismatoid, plan: list[dict], widths: list[int]):
    """Rebuild tower bookkeeping for already-verified steps, without hulls."""
    state = _TowerState(prism.body, seed_roots(prism.body),
                        {"top": None, "bottom": None}, width(prism).width, prism)
    for p, w in zip(plan, widths):
        body, roots, chain, _v = _build_candidate(state, p["base"],
                                                  p["chain_root"], p["mag"],
                                                  p["window"])
        state = _TowerState(body, roots, chain, w, None)
    return state


def build_tower(prism: Prismatoid, steps: int,
                schedule: PerturbationSchedule | None = None,
                plan: list[dict] | None = None,
                threads: int = 1,
                step_callback=None,
                state: _TowerState | None = None,
                done: int = 0):
    """Iterate verified widening steps; returns (steps, final prismatoid)."""
    schedule = schedule or PerturbationSchedule()
    if steps > prism.n - 2 * prism.dim:
        raise ValueError("a prismatoid admits at most n - 2d widening steps")
    if state is None:
        state = _TowerState(prism.body, seed_roots(prism.body),
                            {"top": None, "bottom": None},
                            width(prism).width, prism)
    trace: list[TowerStep] = []
    rotation: dict = {}
    for k in range(done, steps):
        if plan is not None and k < len(plan):
            p = plan[k]
        else:
            p = _auto_plan_step(state, rotation)
        state, step = widen_step(state, p["base"], p["chain_root"], p["mag"],
                                 p["window"], schedule, threads)
        trace.append(step)
        if step_callback is not None:
            step_callback(step, state.prism)
    if state.prism is None:
        state.prism = from_lifted_vertices(state.body, threads)
    return trace, state.prism


def verify_non_hirsch(prism: Prismatoid) -> dict:
    """Facet count, width, and the dual interpretation of the width bound.

    The polar of an n-vertex d-prismatoid is a d-polytope with n facets
    whose diameter equals the width, so width > n - d certifies a diameter
    above the classical bound.
    """
    w = width(prism)
    n, d = prism.n, prism.dim
    return {
        "n": n,
        "dim": d,
        "facets": len(prism.facets),
        "width": w.width,
        "hirsch_bound": n - d,
        "violates_hirsch": w.width > n - d,
        "dual_hirsch_excess": str(QQ(w.width, n - d) - 1),
        "pairs_examined": prism.dual.pairs_examined,
    }
