"""Exact polyhedral cone intersection in small dimension.

Cones arrive as {x : E x = 0, A x >= 0} with integer rows.  The double
description sweep below maintains a lineality basis plus extreme rays (rank
test for ray adjacency) and reports the cone's dimension together with
whether some point satisfies every inequality strictly, which is the
relative-interior test the transversality checker needs.

Only small systems pass through here (fans of 4-polytopes), so clarity wins
over asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import kernel_vector, primitive_vector, rank


def kernel_basis(rows, ncols):
    """Basis of the rational kernel of a row system, as primitive integer vectors."""
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(ncols)) for i in range(ncols)]
    basis = []
    work = [list(r) for r in rows]
    while True:
        v = kernel_vector(work, ncols)
        if v is None:
            return basis
        basis.append(v)
        # demanding orthogonality to v cuts the kernel dimension by exactly one
        work.append(list(v))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass
class ConeDescription:
    dim: int
    rays: list
    lineality: list
    strict_feasible: bool  # some x satisfies every inequality strictly


def intersect_cone(eq_rows, ineq_rows, ncols) -> ConeDescription:
    """Double description of {x : E x = 0, A x >= 0}."""
    eq_rows = [tuple(r) for r in eq_rows if any(r)]
    basis = kernel_basis(eq_rows, ncols)
    k = len(basis)
    if k == 0:
        return ConeDescription(0, [], [], not ineq_rows)

    reduced = []
    forced_zero = False
    for row in ineq_rows:
        r = tuple(_dot(row, b) for b in basis)
        if any(r):
            reduced.append(r)
        else:
            # identically zero on the span: satisfiable, but never strictly
            forced_zero = True

    lin = [tuple(1 if i == j else 0 for j in range(k)) for i in range(k)]
    rays: list[tuple] = []
    tight: list[int] = []
    processed = 0

    for ci, a in enumerate(reduced):
        lv = [_dot(a, l) for l in lin]
        hit = next((i for i, v in enumerate(lv) if v), None)
        if hit is not None:
            # the constraint cuts the lineality space: release one direction
            l0, v0 = lin[hit], lv[hit]
            if v0 < 0:
                l0, v0 = tuple(-x for x in l0), -v0
            lin = [
                primitive_vector(v0 * x - lv[i] * y for x, y in zip(l, l0))
                for i, l in enumerate(lin)
                if i != hit
            ]
            rays = [
                primitive_vector(v0 * x - _dot(a, r) * y for x, y in zip(r, l0))
                for r in rays
            ]
            tight = [t | (1 << ci) for t in tight]
            rays.append(l0)
            tight.append(processed)
            processed |= 1 << ci
            continue

        vals = [_dot(a, r) for r in rays]
        keep = [i for i, v in enumerate(vals) if v >= 0]
        new_rays = [rays[i] for i in keep]
        new_tight = [tight[i] | ((1 << ci) if vals[i] == 0 else 0) for i in keep]
        pointed_dim = k - len(lin)
        for ip in (i for i, v in enumerate(vals) if v > 0):
            for im in (i for i, v in enumerate(vals) if v < 0):
                common = tight[ip] & tight[im]
                got = rank([reduced[j] for j in _bits(common)]) if common else 0
                if got < pointed_dim - 2:
                    continue
                comb = primitive_vector(
                    vals[ip] * x - vals[im] * y
                    for x, y in zip(rays[im], rays[ip])
                )
                if comb not in new_rays:
                    new_rays.append(comb)
                    new_tight.append((common | (1 << ci)))
        rays, tight = new_rays, new_tight
        processed |= 1 << ci

    gens = [list(r) for r in rays] + [list(l) for l in lin]
    dim = rank(gens) if gens else 0

    if not reduced:
        strict = not forced_zero
    else:
        strict = not forced_zero and all(
            any(_dot(a, r) > 0 for r in rays) for a in reduced
        )

    def lift(v):
        out = [0] * ncols
        for coef, b in zip(v, basis):
            for j in range(ncols):
                out[j] += coef * b[j]
        return primitive_vector(out)

    return ConeDescription(
        dim=dim,
        rays=[lift(r) for r in rays],
        lineality=[lift(l) for l in lin],
        strict_feasible=strict,
    )
