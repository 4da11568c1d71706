"""Exact rational scalars, fraction-free linear algebra, and rational circle points.

Everything downstream of this module computes with exact rationals; floats
appear only in the SVG rendering layer.  Rationals are gmpy2.mpq values when
gmpy2 is importable and fractions.Fraction otherwise; both print as "p/q".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath

try:
    import gmpy2

    QQ = gmpy2.mpq
    ZZ = gmpy2.mpz
    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    QQ = Fraction
    ZZ = int
    HAVE_GMPY2 = False

#: Default denominator cap for circle-point approximations.  The continued
#: fraction is refined past the cap only when the requested tolerance
#: demands it.
CIRCLE_DENOMINATOR_CAP = 10**6


def rational_from_string(text: str):
    """Parse "p/q" or "p" into an exact rational."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        d = int(den)
        if d == 0:
            raise ValueError(f"zero denominator in rational {text!r}")
        return QQ(int(num), d)
    return QQ(int(text))


def rational_to_string(value) -> str:
    """Format an exact rational as "p/q", or "p" when the denominator is 1."""
    return str(QQ(value))


def as_integer(value) -> int:
    """Convert an exact rational known to be integral; raises otherwise."""
    q = QQ(value)
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return int(q.numerator)


def gcd_all(values) -> int:
    """Nonnegative gcd of an iterable of ints (0 for an all-zero input)."""
    g = 0
    for v in values:
        g = gcd(g, int(v))
        if g == 1:
            return 1
    return g


def lcm_all(values) -> int:
    out = 1
    for v in values:
        v = int(v)
        out = out // gcd(out, v) * v
    return out


def primitive_vector(values) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (all-zero passes through)."""
    vals = [int(v) for v in values]
    g = gcd_all(vals)
    if g > 1:
        vals = [v // g for v in vals]
    return tuple(vals)


def integer_rows(rows):
    """Clear denominators row-wise: each row scaled to a primitive integer row.

    Valid whenever only the direction of each row matters (linear systems,
    rank); not for point coordinates, where scaling changes the geometry.
    """
    out = []
    for row in rows:
        qs = [QQ(x) for x in row]
        mult = lcm_all(q.denominator for q in qs)
        out.append(primitive_vector(int(q.numerator) * (mult // int(q.denominator)) for q in qs))
    return out


def scale_columns_to_integers(points):
    """Scale each coordinate column by the lcm of its denominators.

    Positive per-column scaling is a combinatorial no-op on a point
    configuration (it is an invertible diagonal map), so the facet structure
    computed on the integer points transfers back exactly.  Returns
    (integer point rows, per-column multipliers).
    """
    if not points:
        return [], []
    dim = len(points[0])
    cols = []
    for j in range(dim):
        cols.append(lcm_all(QQ(p[j]).denominator for p in points))
    scaled = []
    for p in points:
        row = []
        for j in range(dim):
            q = QQ(p[j]) * cols[j]
            row.append(as_integer(q))
        scaled.append(tuple(row))
    return scaled, cols


# ---------------------------------------------------------------------------
# Fraction-free elimination
# ---------------------------------------------------------------------------


def _echelon(rows):
    """Bareiss echelon form of an integer matrix.

    Returns (echelon rows, pivot column list).  Intermediate entries are
    minors of the input, which keeps growth polynomial instead of the
    exponential blow-up of naive cross-multiplication.  The loop lives in
    the kernel backend (compiled when available).
    """
    from . import backend

    return backend.bareiss_echelon(rows)


def rank(rows) -> int:
    """Exact rank of a rational matrix via fraction-free elimination."""
    if not rows:
        return 0
    _, pivots = _echelon(integer_rows(rows))
    return len(pivots)


def kernel_vector(rows, ncols: int) -> tuple[int, ...] | None:
    """One nonzero integer kernel vector of an integer matrix, or None.

    The echelon phase is fraction-free; back-substitution runs over exact
    rationals and the result is rescaled to a primitive integer vector.
    """
    ech, pivots = _echelon(rows) if rows else ([], [])
    if len(pivots) == ncols:
        return None
    free = next(j for j in range(ncols) if j not in pivots)
    x = [QQ(0)] * ncols
    x[free] = QQ(1)
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        s = QQ(0)
        for j in range(c + 1, ncols):
            if ech[i][j]:
                s += ech[i][j] * x[j]
        x[c] = -s / ech[i][c]
    mult = lcm_all(QQ(v).denominator for v in x)
    return primitive_vector(as_integer(QQ(v) * mult) for v in x)


def solve_affine(a_rows, b):
    """Solve A x = b exactly.

    Returns ("unique", x), ("none", None), or ("underdetermined", (x0, basis))
    where basis spans the solution space of A x = 0.
    """
    if not a_rows:
        raise ValueError("empty system")
    ncols = len(a_rows[0])
    if len(b) != len(a_rows):
        raise ValueError("dimension mismatch between matrix and right-hand side")
    aug = [list(row) + [bv] for row, bv in zip(a_rows, b)]
    ech, pivots = _echelon(integer_rows(aug))
    if ncols in pivots:
        return "none", None
    x = [QQ(0)] * ncols
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        s = QQ(ech[i][ncols])
        for j in range(c + 1, ncols):
            if ech[i][j]:
                s -= ech[i][j] * x[j]
        x[c] = s / ech[i][c]
    x = tuple(x)
    if len(pivots) == ncols:
        return "unique", x
    basis = []
    int_a = integer_rows(a_rows)
    reduced, piv2 = _echelon(int_a)
    for free in range(ncols):
        if free in piv2:
            continue
        v = [QQ(0)] * ncols
        v[free] = QQ(1)
        for i in range(len(piv2) - 1, -1, -1):
            c = piv2[i]
            s = QQ(0)
            for j in range(c + 1, ncols):
                if reduced[i][j]:
                    s += reduced[i][j] * v[j]
            v[c] = -s / reduced[i][c]
        basis.append(tuple(v))
    return "underdetermined", (x, basis)


# ---------------------------------------------------------------------------
# Exact points on the unit circle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CirclePoint:
    """A rational point (c, s) with c*c + s*s = 1 exactly."""

    c: object
    s: object

    def __post_init__(self):
        object.__setattr__(self, "c", QQ(self.c))
        object.__setattr__(self, "s", QQ(self.s))
        if self.c * self.c + self.s * self.s != 1:
            raise ValueError("point is not on the unit circle")

    def turns(self, dps: int = 40):
        """Angle of the point in turns, evaluated to dps digits."""
        with mpmath.workdps(dps):
            t = mpmath.atan2(mpmath.mpf(self.s.numerator) / mpmath.mpf(self.s.denominator),
                             mpmath.mpf(self.c.numerator) / mpmath.mpf(self.c.denominator))
            t = t / (2 * mpmath.pi)
            if t < 0:
                t += 1
            return t

    def conjugate(self) -> "CirclePoint":
        return CirclePoint(self.c, -self.s)

    def swapped(self) -> "CirclePoint":
        """Reflect across the diagonal: angle u maps to 1/4 - u."""
        return CirclePoint(self.s, self.c)


def _tangent_half_point(p: int, q: int) -> CirclePoint:
    # (c, s) for tan(theta/2) = p/q via the tangent-half-angle substitution.
    den = q * q + p * p
    return CirclePoint(QQ(q * q - p * p, den), QQ(2 * p * q, den))


def _approx_octant(turns, tol) -> CirclePoint:
    """Circle point near `turns` in [0, 1/8], within tol (in turns)."""
    if turns == 0:
        return CirclePoint(1, 0)
    # |atan a - atan b| <= |a - b|, and full angle is twice the half angle,
    # so a tangent error of pi*tol keeps the angle within tol turns.
    with mpmath.workdps(60):
        target = mpmath.tan(mpmath.pi * QQ(turns).numerator / QQ(turns).denominator)
        bound = mpmath.pi * mpmath.mpf(QQ(tol).numerator) / mpmath.mpf(QQ(tol).denominator)
        # Continued-fraction convergents of the target tangent.
        x = target
        h0, h1 = 1, int(mpmath.floor(x))
        k0, k1 = 0, 1
        x = x - h1
        best = (h1, 1)
        while True:
            if abs(mpmath.mpf(best[0]) / best[1] - target) <= bound:
                cp = _tangent_half_point(best[0], best[1])
                if abs(cp.turns() - mpmath.mpf(QQ(turns).numerator) / QQ(turns).denominator) <= \
                        mpmath.mpf(QQ(tol).numerator) / QQ(tol).denominator:
                    return cp
            if x == 0:
                return _tangent_half_point(best[0], best[1])
            x = 1 / x
            a = int(mpmath.floor(x))
            x = x - a
            h0, h1 = h1, a * h1 + h0
            k0, k1 = k1, a * k1 + k0
            best = (h1, k1)
            if k1 > 10**40:  # unreachable for sane tolerances
                raise ValueError("continued fraction failed to converge")


def rational_circle_point(turns, tol) -> CirclePoint:
    """Exact rational unit-circle point within `tol` turns of angle `turns`.

    The angle argument is reduced to the fundamental octant [0, 1/8] and the
    result unfolded through exact symmetries; symmetric angles therefore
    share denominators, which keeps downstream hull arithmetic small.  The
    base approximation picks the first continued-fraction convergent of
    tan(pi * turns) that meets the tolerance; denominators stay below
    CIRCLE_DENOMINATOR_CAP for tolerances coarser than about 1e-12 turns.
    """
    u = QQ(turns)
    tol = QQ(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not 0 <= u < 1:
        raise ValueError("turns must lie in [0, 1)")
    if u > QQ(1, 2):
        return rational_circle_point(1 - u, tol).conjugate()
    if u > QQ(1, 4):
        p = rational_circle_point(QQ(1, 2) - u, tol)
        return CirclePoint(-p.c, p.s)
    if u > QQ(1, 8):
        return rational_circle_point(QQ(1, 4) - u, tol).swapped()
    return _approx_octant(u, tol)
