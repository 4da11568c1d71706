import random

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prismatoids.exact import (
    QQ,
    CirclePoint,
    rank,
    rational_circle_point,
    rational_from_string,
    rational_to_string,
    solve_affine,
)

rationals = st.fractions(max_denominator=50)


def test_rank_identity():
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3


def test_rank_zero_matrix():
    assert rank([[0, 0, 0, 0], [0, 0, 0, 0]]) == 0


def test_rank_proportional_rows():
    assert rank([[1, 2], [2, 4]]) == 1


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_rank_matches_transpose(rows):
    cols = [[rows[i][j] for i in range(len(rows))] for j in range(3)]
    assert rank(rows) == rank(cols)


def test_solve_identity():
    kind, x = solve_affine([[1, 0], [0, 1]], [3, 4])
    assert kind == "unique" and x == (3, 4)


def test_solve_inconsistent():
    kind, x = solve_affine([[1, 1], [1, 1]], [1, 2])
    assert kind == "none" and x is None


def test_solve_underdetermined():
    kind, (x0, basis) = solve_affine([[1, 1]], [1])
    assert kind == "underdetermined"
    assert x0[0] + x0[1] == 1
    assert len(basis) == 1
    assert basis[0][0] + basis[0][1] == 0


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_affine([[1, 0]], [1, 2])


def test_rational_parse_roundtrip():
    assert rational_from_string("3/4") == QQ(3, 4)
    assert rational_from_string("-5") == QQ(-5)
    assert rational_to_string(QQ(-6, 4)) == "-3/2"
    with pytest.raises(ValueError):
        rational_from_string("1/0")


@given(st.fractions(max_denominator=10**6))
@settings(max_examples=100, deadline=None)
def test_rational_string_roundtrip(q):
    assert rational_from_string(rational_to_string(QQ(q))) == QQ(q)


def test_lowest_terms_product():
    a = QQ(6, 4)
    b = QQ(4, 6)
    assert a * b == 1
    assert a.numerator == 3 and a.denominator == 2


def test_circle_point_cardinal_angles():
    assert rational_circle_point(0, QQ(1, 100)) == CirclePoint(1, 0)
    assert rational_circle_point(QQ(1, 4), QQ(1, 100)) == CirclePoint(0, 1)
    assert rational_circle_point(QQ(1, 2), QQ(1, 100)) == CirclePoint(-1, 0)
    assert rational_circle_point(QQ(3, 4), QQ(1, 100)) == CirclePoint(0, -1)


def test_circle_point_rejects_bad_args():
    with pytest.raises(ValueError):
        rational_circle_point(QQ(1, 6), 0)
    with pytest.raises(ValueError):
        rational_circle_point(QQ(3, 2), QQ(1, 10))


def test_circle_point_one_sixth_high_precision():
    # check the returned angle against a 40-digit evaluation
    tol = QQ(1, 10**6)
    p = rational_circle_point(QQ(1, 6), tol)
    assert p.c * p.c + p.s * p.s == 1
    with mpmath.workdps(40):
        err = abs(p.turns(40) - mpmath.mpf(1) / 6)
        assert err <= mpmath.mpf(1) / 10**6


def test_circle_point_identity_on_many_angles():
    rng = random.Random(99)
    for _ in range(1000):
        u = QQ(rng.randint(0, 9999), 10000)
        p = rational_circle_point(u, QQ(1, 1000))
        assert p.c * p.c + p.s * p.s == 1


def test_circle_point_meets_tolerance():
    rng = random.Random(5)
    with mpmath.workdps(40):
        for _ in range(40):
            u = QQ(rng.randint(0, 999), 1000)
            tol = QQ(1, 10**5)
            p = rational_circle_point(u, tol)
            target = mpmath.mpf(u.numerator) / int(u.denominator)
            err = abs(p.turns(40) - target)
            if err > mpmath.mpf(1) / 2:
                err = 1 - err
            assert err <= mpmath.mpf(1) / 10**5


def test_circle_point_symmetric_angles_share_denominator():
    tol = QQ(1, 10**4)
    a = rational_circle_point(QQ(1, 12), tol)
    b = rational_circle_point(QQ(5, 12), tol)
    assert a.c.denominator == b.c.denominator
    assert b.c == -a.c and b.s == a.s
