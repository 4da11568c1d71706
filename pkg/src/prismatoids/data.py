"""Vertex data for the explicit prismatoid gallery.

Rows are written the way the construction tables print them, with "±x"
markers expanding to both signs (product over all marked slots in a row,
sign of the leftmost marker varying slowest).  Everything is parsed into
exact rationals; transcription is guarded by count and block checksums in
the test suite.
"""

from __future__ import annotations

import itertools

from .exact import QQ, rational_from_string


def expand_rows(rows):
    """Expand "±" markers; returns a list of rational coordinate tuples."""
    out = []
    for row in rows:
        tokens = row.split()
        marked = [i for i, t in enumerate(tokens) if t.startswith("±")]
        base = []
        for t in tokens:
            base.append(rational_from_string(t[1:]) if t.startswith("±") else rational_from_string(t))
        if not marked:
            out.append(tuple(base))
            continue
        for signs in itertools.product((1, -1), repeat=len(marked)):
            v = list(base)
            for s, i in zip(signs, marked):
                v[i] = s * v[i]
            out.append(tuple(v))
    return out


# Convex hulls of two 4-cubes: the 40-vertex construction and its a=e variant.
P_PLUS_Q40 = expand_rows(["±6 ±10 ±3 ±2", "±5 ±3 ±2 ±3"])
P_MINUS_Q40 = expand_rows(["±3 ±2 ±5 ±3", "±2 ±3 ±6 ±10"])

P_PLUS_Q32 = expand_rows(["±5 ±8 ±3 ±2", "±5 ±3 ±2 ±3"])
P_MINUS_Q32 = expand_rows(["±3 ±2 ±5 ±3", "±2 ±3 ±5 ±8"])

# After dropping the four redundant facets the polytopes pick up eight
# extra vertices each and become prisms over 12-facet 3-polytopes.
P_PLUS_Q28 = expand_rows(["±5 ±8 ±3 ±2", "±5 ±3 ±2 ±3", "±5 ±18 ±3 0"])
P_MINUS_Q28 = expand_rows(["±3 ±2 ±5 ±3", "±2 ±3 ±5 ±8", "0 ±3 ±5 ±18"])

# 32-vertex prismatoid, bases scaled to a common right-hand side of 360.
Q32_ROWS = expand_rows([
    "±72 0 0 0 1",
    "0 ±45 0 0 1",
    "0 0 ±120 0 1",
    "0 0 0 ±120 1",
    "0 ±20 0 ±100 1",
    "0 0 ±72 ±72 1",
    "0 0 ±72 0 -1",
    "0 0 0 ±45 -1",
    "0 ±120 0 0 -1",
    "±120 0 0 0 -1",
    "±100 0 0 ±20 -1",
    "±72 ±72 0 0 -1",
])

# 28-vertex prismatoid, right-hand sides normalized to 90.
Q28_ROWS = expand_rows([
    "±18 0 0 0 1",
    "0 0 ±30 0 1",
    "0 0 0 ±30 1",
    "0 ±5 0 ±25 1",
    "0 0 ±18 ±18 1",
    "0 0 ±18 0 -1",
    "0 ±30 0 0 -1",
    "±30 0 0 0 -1",
    "±25 0 0 ±5 -1",
    "±18 ±18 0 0 -1",
])

# 25-vertex width-six prismatoid: 12 top vertices and 13 bottom vertices.
Q20_TOP_ROWS = expand_rows([
    "0 0 ±20 -4 1",
    "0 0 ±21 -7 1",
    "0 0 ±16 -15 1",
    "0 0 0 ±32 1",
    "3/50 -1/25 0 -30 1",
    "-3/50 -1/25 0 30 1",
    "3/1000 7/1000 0 -318/10 1",
    "-3/1000 7/1000 0 318/10 1",
])
Q20_BOTTOM_ROWS = expand_rows([
    "60 0 0 0 -1",
    "8 -30 0 0 -1",
    "0 -33 0 0 -1",
    "-2 -32 0 0 -1",
    "-55 0 0 0 -1",
    "-34 36 0 0 -1",
    "0 76 0 0 -1",
    "44 34 0 0 -1",
    "-20 0 1/5 -1/5 -1",
    "2999/50 0 -3/25 -1/5 -1",
    "299999/5000 0 0 1/100 -1",
    "-549/10 0 1/5000 1/800 -1",
    "-54 0 1/500 -1/80 -1",
])
Q20_ROWS = Q20_TOP_ROWS + Q20_BOTTOM_ROWS

# The published 20-dimensional suspension tower output: 40 vertices, with the
# base split given by the sign of the first column.  Columns 2..5 carry the
# seed coordinates, columns 6..20 the fifteen suspension coordinates.
_T1 = [
    "1 0 0 20 -4    0 0 0 0 0 0 0 0  0 0 0 0 0 0 0",
    "1 0 0 -20 -4   0 0 0 0 0 0 0 0  0 0 0 0 0 0 1",
    "1 0 0 21 -7    0 0 0 0 0 0 0 0  0 0 1 1 0 0 0",
    "1 0 0 -21 -7   0 0 0 0 0 0 0 0  0 0 0 0 0 0 0",
    "1 0 0 16 -15   0 0 0 0 0 0 0 0  0 0 0 1 1 0 0",
    "1 0 0 -16 -15  0 0 0 0 0 0 0 0  0 0 0 0 0 1 1",
    "1 0 0 0 32     0 0 0 0 0 0 0 0  0 0 0 0 0 0 0",
    "1 0 0 0 -32    0 0 0 0 0 0 0 0  0 0 0 0 1 1 0",
    "1 3/50 -1/25 0 -30   0 0 0 0 0 0 0 0  0 0 0 0 0 0 0",
    "1 -3/50 -1/25 0 30   0 0 0 0 0 0 0 0  0 0 0 0 0 0 0",
    "1 -3/1000 7/1000 0 318/10   0 0 0 0 0 0 0 0  0 1 0 0 0 0 0",
    "1 3/1000 7/1000 0 -318/10   10000000 10000000 10000000 10000000000"
    " 100000000000 100000000000 100000000000 100000000000  1 0 0 0 0 0 0",
    "1 3/1000 7/1000 0 -318/10   -10000000 0 0 0 0 0 0 0  1 0 0 0 0 0 0",
    "1 3/1000 7/1000 0 -318/10   10000000 -10000000 0 0 0 0 0 0  1 0 0 0 0 0 0",
    "1 3/1000 7/1000 0 -318/10   10000000 10000000 -10000000 0 0 0 0 0  1 0 0 0 0 0 0",
    "1 3/1000 7/1000 0 -318/10   10000000 10000000 10000000 -10000000000 0 0 0 0  1 0 0 0 0 0 0",
    "1 3/1000 7/1000 0 -318/10   10000000 10000000 10000000 10000000000"
    " -100000000000 0 0 0  1 0 0 0 0 0 0",
    "1 3/1000 7/1000 0 -318/10   10000000 10000000 10000000 10000000000"
    " 100000000000 -100000000000 0 0  1 0 0 0 0 0 0",
    "1 3/1000 7/1000 0 -318/10   10000000 10000000 10000000 10000000000"
    " 100000000000 100000000000 -100000000000 0  1 0 0 0 0 0 0",
    "1 3/1000 7/1000 0 -318/10   10000000 10000000 10000000 10000000000"
    " 100000000000 100000000000 100000000000 -100000000000  1 0 0 0 0 0 0",
    "-1 60 0 0 0    0 0 1 1 0 0 0 0  0 0 0 0 0 0 0",
    "-1 8 -30 0 0   0 0 0 1 1 0 0 0  0 0 0 0 0 0 0",
    "-1 0 -33 0 0   0 0 0 0 1 1 0 0  0 0 0 0 0 0 0",
    "-1 -2 -32 0 0  0 0 0 0 0 1 1 0  0 0 0 0 0 0 0",
    "-1 -55 0 0 0   0 0 0 0 0 0 1 1  0 0 0 0 0 0 0",
    "-1 -34 36 0 0  0 0 0 0 0 0 0 1  0 0 0 0 0 0 0",
    "-1 0 76 0 0    0 0 0 0 0 0 0 0  0 0 0 0 0 0 0",
    "-1 44 34 0 0   0 0 0 0 0 0 0 0  0 0 0 0 0 0 0",
    "-1 -20 0 1/5 -1/5    0 0 0 0 0 0 0 0  0 0 0 0 0 0 0",
    "-1 2999/50 0 -3/25 -1/5    0 0 1 0 0 0 0 0  0 0 0 0 0 0 0",
    "-1 299999/5000 0 0 1/100   0 1 0 0 0 0 0 0  0 0 0 0 0 0 0",
    "-1 -549/10 0 1/5000 1/800  1 0 0 0 0 0 0 0  0 0 0 0 0 0 0",
    "-1 -54 0 1/500 -1/80  0 0 0 0 0 0 0 0"
    "  100000 10000000 10000000 10000000 100000000 100000000 1000000000",
    "-1 -54 0 1/500 -1/80  0 0 0 0 0 0 0 0  -100000 0 0 0 0 0 0",
    "-1 -54 0 1/500 -1/80  0 0 0 0 0 0 0 0  100000 -10000000 0 0 0 0 0",
    "-1 -54 0 1/500 -1/80  0 0 0 0 0 0 0 0  100000 10000000 -10000000 0 0 0 0",
    "-1 -54 0 1/500 -1/80  0 0 0 0 0 0 0 0  100000 10000000 10000000 -10000000 0 0 0",
    "-1 -54 0 1/500 -1/80  0 0 0 0 0 0 0 0"
    "  100000 10000000 10000000 10000000 -100000000 0 0",
    "-1 -54 0 1/500 -1/80  0 0 0 0 0 0 0 0"
    "  100000 10000000 10000000 10000000 100000000 -100000000 0",
    "-1 -54 0 1/500 -1/80  0 0 0 0 0 0 0 0"
    "  100000 10000000 10000000 10000000 100000000 100000000 -1000000000",
]
TABLE1_ROWS = expand_rows(_T1)

# Parameter set of the eight-parameter inequality system and its a=e variant.
THM26_PARAMS_Q40 = tuple(QQ(x) for x in (6, 10, 3, 2, 5, 3, 2, 3))
THM26_PARAMS_Q32 = tuple(QQ(x) for x in (5, 8, 3, 2, 5, 3, 2, 3))
