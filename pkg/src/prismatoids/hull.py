"""Exact facet enumeration for vertex polytopes in arbitrary dimension.

The engine pivots across ridges: from a known facet it rotates the
supporting hyperplane around each ridge until the first vertex is hit,
which yields the neighboring facet.  Ties in the rotation (several vertices
hit simultaneously) are what non-simplicial facets look like here, so
degenerate inputs run through the same code path with no perturbation.
Ridges of non-simplicial facets come from a recursive enumeration one
dimension down.

Coordinates are integerized by positive per-column scaling (an invertible
diagonal map, hence a combinatorial no-op) so the inner loops run on
integers; hyperplanes are mapped back to the original coordinates on exit.
"""

from __future__ import annotations

import hashlib
import json
import os


from . import backend
from .exact import QQ, ZZ, kernel_vector, primitive_vector, scale_columns_to_integers
from .geometry import (
    Facet,
    FacetList,
    Hyperplane,
    ValidationReport,
    VPolytope,
    affine_dimension,
    mask_to_indices,
)


class DegenerateInput(ValueError):
    """Raised when a polytope is not full-dimensional in its ambient space."""


def _homogenize(points):
    return [tuple(p) + (1,) for p in points]


def _interior_row(points):
    # Vertex centroid scaled by n, homogenized: an interior point of the
    # full-dimensional hull, kept integral.
    n = len(points)
    dim = len(points[0])
    return tuple(sum(p[j] for p in points) for j in range(dim)) + (n,)


def _initial_facet(hom, o_row, dim):
    """Wrap a first supporting hyperplane until it contains dim independent points."""
    best = max(h[0] for h in hom)
    f = tuple([1] + [0] * (dim - 1) + [-best])
    touched = [next(i for i, h in enumerate(hom) if h[0] == best)]
    while len(touched) < dim:
        rows = [hom[i] for i in touched] + [o_row]
        u = kernel_vector(rows, dim + 1)
        assert u is not None, "kernel lost during initial wrap"
        uvals = backend.eval_functional(u, hom)
        if not any(v > 0 for v in uvals):
            u = tuple(-x for x in u)
            uvals = [-v for v in uvals]
        hvals = backend.eval_functional(f, hom)
        q = backend.best_ratio(hvals, uvals)
        assert q >= 0, "bounded polytope must stop the rotation"
        f = primitive_vector(uvals[q] * a - hvals[q] * b for a, b in zip(f, u))
        touched.append(q)
    return f


def _incidence(f, hom):
    mask = 0
    for i, v in enumerate(backend.eval_functional(f, hom)):
        if v == 0:
            mask |= 1 << i
        elif v > 0:
            raise AssertionError("candidate hyperplane does not support the polytope")
    return mask


def _projection_columns(points, indices):
    # Columns that keep the affine span of the selected points injective.
    base = points[indices[0]]
    rows = [[points[i][j] - base[j] for j in range(len(base))] for i in indices[1:]]
    mat = [list(r) for r in rows]
    ncols = len(base)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        p = mat[r][c]
        for i in range(r + 1, len(mat)):
            fi = mat[i][c]
            for j in range(c, ncols):
                mat[i][j] = (p * mat[i][j] - fi * mat[r][j]) // prev
        prev = p
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return pivots


def _enumerate_int(points, dim, gids=None, memo=None, want_functionals=True):
    """Facets of full-dimensional integer points: list of (functional, mask).

    Functionals are primitive integer vectors f of length dim+1 with
    f.(x, 1) <= 0 on every point and = 0 exactly on the facet.

    gids maps local point indices to top-level vertex indices; recursive
    ridge enumerations of non-simplicial facets are memoized in `memo` under
    their top-level vertex masks (a face's ridge sets are intrinsic to the
    face, so they are safe to share between enclosing contexts).
    """
    n = len(points)
    if dim == 1:
        lo = min(p[0] for p in points)
        hi = max(p[0] for p in points)
        lo_mask = sum(1 << i for i, p in enumerate(points) if p[0] == lo)
        hi_mask = sum(1 << i for i, p in enumerate(points) if p[0] == hi)
        return [((-1, lo), lo_mask), ((1, -hi), hi_mask)]

    hom = _homogenize(points)
    o_row = _interior_row(points)
    f0 = _initial_facet(hom, o_row, dim)

    facets: dict[int, tuple | None] = {}  # incidence mask -> functional (lazy)
    order: list[int] = []
    seen_ridges: set[int] = set()
    hcol = dim  # table column of the facet functional (opposite the interior row)

    def functional_for(mask):
        rows = [hom[i] for i in mask_to_indices(mask)]
        f = kernel_vector(rows, dim + 1)
        assert f is not None, "facet points must span a hyperplane"
        if sum(a * b for a, b in zip(f, o_row)) > 0:
            f = tuple(-x for x in f)
        return f

    def register(mask, f=None):
        if mask in facets:
            return False
        facets[mask] = tuple(int(x) for x in f) if f is not None else None
        order.append(mask)
        return True

    def fresh_table(mask):
        basis = mask_to_indices(mask)
        rows = [hom[i] for i in basis] + [o_row]
        res = backend.gauss_jordan_adjugate(rows)
        assert res is not None, "simplicial facet matrix must be invertible"
        det, cols = res
        W = backend.product_table(hom, cols)
        return W, det, basis

    mask0 = _incidence(f0, hom)
    register(mask0, f0)

    # Depth-first over the facet graph.  Simplicial steps exchange one basis
    # row in the shared value table W (W[q][j] = <hom q, adjugate column j>)
    # and roll the exchange back on exit, so a single table serves the whole
    # walk; non-simplicial facets fall back to ridge recursion and fresh
    # tables for their simplicial neighbors.
    contexts: list[list] = []
    stack: list[tuple] = [("visit", mask0, None)]

    while stack:
        action, mask, info = stack.pop()
        if action == "exitpivot":
            W, det, basis = contexts[-1]
            r, orig = info
            contexts[-1][1] = backend.pivot_update(W, det, r, orig)
            basis[r] = orig
            continue
        if action == "exitctx":
            contexts.pop()
            continue

        simplicial = mask.bit_count() == dim
        if info is not None:
            # enter a simplicial neighbor by one exchange in the live table
            W, det, basis = contexts[-1]
            r, q_star = info
            stack.append(("exitpivot", 0, (r, basis[r])))
            contexts[-1][1] = backend.pivot_update(W, det, r, q_star)
            basis[r] = q_star
        elif simplicial:
            contexts.append(list(fresh_table(mask)))
            stack.append(("exitctx", 0, None))

        if simplicial:
            W, det, basis = contexts[-1]
            sign = -1 if det > 0 else 1
            for r, vi in enumerate(basis):
                ridge = mask & ~(1 << vi)
                if ridge in seen_ridges:
                    continue
                seen_ridges.add(ridge)
                q_star = backend.best_ratio_signed(W, r, hcol, sign)
                assert q_star >= 0, "bounded polytope must stop the rotation"
                hv = backend.combine_hvals(W, r, hcol, q_star)
                child = 0
                for q in range(n):
                    if hv[q] == 0:
                        child |= 1 << q
                if register(child):
                    pivot = (r, q_star) if child.bit_count() == dim else None
                    stack.append(("visit", child, pivot))
        else:
            f = facets[mask]
            if f is None:
                f = facets[mask] = functional_for(mask)
            hvals = backend.eval_functional(f, hom)
            idx = mask_to_indices(mask)
            for ridge in _ridges_of(points, idx, dim, gids, memo):
                if ridge in seen_ridges:
                    continue
                seen_ridges.add(ridge)
                rows = [hom[i] for i in mask_to_indices(ridge)] + [o_row]
                u = kernel_vector(rows, dim + 1)
                assert u is not None, "ridge span must leave a pencil direction"
                uvals = backend.eval_functional(u, hom)
                inner = next(i for i in idx if uvals[i] != 0)
                if uvals[inner] > 0:
                    uvals = [-v for v in uvals]
                q = backend.best_ratio(hvals, uvals)
                assert q >= 0
                child = 0
                for qq in range(n):
                    if uvals[q] * hvals[qq] - hvals[q] * uvals[qq] == 0:
                        child |= 1 << qq
                if register(child):
                    stack.append(("visit", child, None))

    if not want_functionals:
        return [(None, m) for m in order]
    return [(facets[m] if facets[m] is not None else functional_for(m), m)
            for m in order]


def _ridges_of(points, idx, dim, gids=None, memo=None):
    """Ridge masks of a (possibly non-simplicial) facet with vertex indices idx."""
    if gids is None:
        gids = tuple(range(len(points)))
    key = 0
    for i in idx:
        key |= 1 << gids[i]
    if memo is not None and key in memo:
        to_local = {gids[i]: i for i in idx}
        out = []
        for gm in memo[key]:
            lm = 0
            for g in mask_to_indices(gm):
                lm |= 1 << to_local[g]
            out.append(lm)
        return out
    cols = _projection_columns(points, idx)
    assert len(cols) == dim - 1, "facet vertex set is not (dim-1)-dimensional"
    proj = [tuple(points[i][c] for c in cols) for i in idx]
    sub = _enumerate_int(proj, dim - 1, tuple(gids[i] for i in idx), memo,
                          want_functionals=False)
    out = []
    for _f, m in sub:
        gm = 0
        for local in mask_to_indices(m):
            gm |= 1 << idx[local]
        out.append(gm)
    if memo is not None:
        gout = []
        for lm in out:
            gm = 0
            for i in mask_to_indices(lm):
                gm |= 1 << gids[i]
            gout.append(gm)
        memo[key] = gout
    return out


def facet_enumeration(P: VPolytope) -> FacetList:
    """Complete, duplicate-free facet list with exact incidence bit masks.

    Requires a full-dimensional input; lower-dimensional data must be
    projected by the caller first (silent projection hides modelling bugs).
    """
    if P.n < P.dim + 1:
        raise DegenerateInput("too few vertices for a full-dimensional polytope")
    if affine_dimension(P) != P.dim:
        raise DegenerateInput("vertex set is not full-dimensional")
    cached = _cache_load(P)
    if cached is not None:
        return cached
    scaled, mults = scale_columns_to_integers(P.vertices)
    scaled = [tuple(ZZ(x) for x in p) for p in scaled]
    raw = _enumerate_int(scaled, P.dim, tuple(range(P.n)), {})
    facets = []
    for f, mask in raw:
        normal = tuple(QQ(f[j]) * mults[j] for j in range(P.dim))
        plane = Hyperplane(normal, QQ(-f[P.dim])).canonical()
        facets.append(Facet(plane, mask))
    facets.sort(key=lambda fc: fc.plane.key())
    result = FacetList(P, facets, P.dim)
    _cache_store(P, result)
    return result


def ridges_of_facet(F: FacetList, i: int, memo=None) -> list[int]:
    """Vertex masks of the ridges contained in facet i."""
    P = F.source
    idx = F.facets[i].indices()
    if len(idx) == P.dim:
        m = F.facets[i].incident
        return [m & ~(1 << v) for v in idx]
    scaled, _ = scale_columns_to_integers(P.vertices)
    return _ridges_of(scaled, idx, P.dim, None, memo)


def validate_facets(F: FacetList) -> ValidationReport:
    """Independent certificate for a facet list.

    Checks every vertex against every half-space, recomputes incidence sets
    from the hyperplanes, and verifies that every ridge lies in exactly two
    facets and that the facet graph is connected.  Together these certify
    that the facet list is the complete boundary of the hull.
    """
    report = ValidationReport(ok=True)
    P = F.source
    keys = set()
    for i, facet in enumerate(F.facets):
        key = facet.plane.key()
        if key in keys:
            report.fail(f"facet {i} duplicates another facet hyperplane")
        keys.add(key)
        mask = 0
        for vi, v in enumerate(P.vertices):
            val = facet.plane.value(v)
            if val > facet.plane.offset:
                report.fail(f"vertex {vi} violates facet {i}")
            elif val == facet.plane.offset:
                mask |= 1 << vi
        if mask != facet.incident:
            report.fail(f"facet {i} incidence set is not the exact equality set")
        if facet.vertex_count < F.polytope_dim:
            report.fail(f"facet {i} has fewer than dim incident vertices")
    report.checks["halfspaces"] = report.ok
    if not report.ok:
        # Incidence data is wrong, so the ridge scan below would operate on
        # garbage vertex sets; report what we have.
        return report

    ridge_count: dict[int, list[int]] = {}
    memo: dict = {}
    for i in range(len(F.facets)):
        for ridge in ridges_of_facet(F, i, memo):
            ridge_count.setdefault(ridge, []).append(i)
    bad = {r: fs for r, fs in ridge_count.items() if len(fs) != 2}
    for r, fs in sorted(bad.items())[:5]:
        report.fail(f"ridge {mask_to_indices(r)} lies in {len(fs)} facet(s): {fs}")
    report.checks["ridges"] = not bad
    report.checks["ridge_total"] = len(ridge_count)

    if F.facets and not bad:
        adj = {i: set() for i in range(len(F.facets))}
        for fs in ridge_count.values():
            adj[fs[0]].add(fs[1])
            adj[fs[1]].add(fs[0])
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != len(F.facets):
            report.fail("facet graph is disconnected")
        report.checks["connected"] = len(seen) == len(F.facets)
    return report


def polar_dual(P: VPolytope) -> VPolytope:
    """Vertices of {y : <y, x> <= 1 for all x in P}; requires 0 interior.

    Vertex i of the polar is facet i of P scaled so its offset equals 1, so
    facet order and polar vertex order agree.
    """
    F = facet_enumeration(P)
    verts = []
    for facet in F.facets:
        b = facet.plane.offset
        if b <= 0:
            raise ValueError("origin is not strictly interior to the polytope")
        verts.append(tuple(a / b for a in facet.plane.normal))
    return VPolytope(P.dim, tuple(verts))


# ---------------------------------------------------------------------------
# Optional facet cache (PRISMATOID_CACHE directory)
# ---------------------------------------------------------------------------


def polytope_digest(P: VPolytope) -> str:
    body = ";".join(",".join(str(QQ(c)) for c in v) for v in P.vertices)
    return hashlib.sha256(f"{P.dim}|{body}".encode()).hexdigest()


def _cache_path(P: VPolytope):
    root = os.environ.get("PRISMATOID_CACHE")
    if not root:
        return None
    return os.path.join(root, polytope_digest(P) + ".json")


def _cache_load(P: VPolytope):
    path = _cache_path(P)
    if not path or not os.path.exists(path):
        return None
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    from .exact import rational_from_string

    facets = [
        Facet(
            Hyperplane(
                tuple(rational_from_string(x) for x in entry["normal"]),
                rational_from_string(entry["offset"]),
            ),
            int(entry["incident"]),
        )
        for entry in data["facets"]
    ]
    return FacetList(P, facets, data["dim"])


def _cache_store(P: VPolytope, F: FacetList):
    path = _cache_path(P)
    if not path:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    data = {
        "dim": F.polytope_dim,
        "facets": [
            {
                "normal": [str(QQ(a)) for a in f.plane.normal],
                "offset": str(QQ(f.plane.offset)),
                "incident": f.incident,
            }
            for f in F.facets
        ],
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)
