import math
from fractions import Fraction

import numpy as np
import pytest

from equibound.twodist import (
    TwoDistanceSet,
    g_table,
    g_upper,
    harmonic_bound,
    lift,
    simplex_pairs_construction,
)

TOL = 1e-12


def pairwise_products(points):
    gram = points @ points.T
    out = []
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            out.append(gram[i, j])
    return np.array(out)


def test_construction_sizes():
    for n in range(3, 13):
        s = simplex_pairs_construction(n)
        assert s.size == n * (n + 1) // 2
        assert s.points.shape == (s.size, n)


def test_construction_unit_norms():
    for n in (3, 6, 9):
        s = simplex_pairs_construction(n)
        norms = np.linalg.norm(s.points, axis=1)
        assert np.max(np.abs(norms - 1.0)) < TOL


def test_construction_exact_products():
    for n in range(3, 13):
        s = simplex_pairs_construction(n)
        a, b = s.products
        assert a == Fraction(n - 3, 2 * (n - 1))
        assert b == Fraction(-2, n - 1)
        assert a != b and -1 <= b < 1 and -1 <= a < 1


def test_construction_two_product_values():
    for n in (3, 6, 10):
        s = simplex_pairs_construction(n)
        a, b = (float(v) for v in s.products)
        prods = pairwise_products(s.points)
        near_a = np.abs(prods - a) < TOL
        near_b = np.abs(prods - b) < TOL
        assert np.all(near_a | near_b)
        assert near_a.any() and near_b.any()


def test_construction_octahedron_case():
    s = simplex_pairs_construction(3)
    assert s.size == 6
    assert s.products == (Fraction(0), Fraction(-1))


def test_construction_degenerate():
    with pytest.raises(ValueError):
        simplex_pairs_construction(2)


def test_construction_deterministic():
    first = simplex_pairs_construction(7).points
    second = simplex_pairs_construction(7).points
    assert np.array_equal(first, second)


def test_lift_solves_defining_equations():
    s = TwoDistanceSet(dim=2, points=np.eye(2), products=(Fraction(1, 5), Fraction(-3, 5)))
    result = lift(s)
    assert result.r_squared == Fraction(6, 5)
    assert result.cos_theta == Fraction(1, 3)
    s2 = TwoDistanceSet(dim=2, points=np.eye(2), products=(Fraction(0), Fraction(-1, 2)))
    result2 = lift(s2)
    assert result2.r_squared == Fraction(5, 4)
    assert result2.cos_theta == Fraction(1, 5)
    # the defining equations themselves
    for res, (a, b) in ((result, (Fraction(1, 5), Fraction(-3, 5))),
                        (result2, (Fraction(0), Fraction(-1, 2)))):
        assert 1 - a == res.r_squared * (1 - res.cos_theta)
        assert 1 - b == res.r_squared * (1 + res.cos_theta)


def test_lift_rejects_nonnegative_sum():
    s = TwoDistanceSet(dim=2, points=np.eye(2), products=(Fraction(1, 2), Fraction(-1, 2)))
    with pytest.raises(ValueError):
        lift(s)


def test_lift_of_construction():
    # a + b < 0 holds for the built-in construction up to n = 6.
    for n in (3, 4, 5, 6):
        s = simplex_pairs_construction(n)
        a, b = s.products
        assert a + b < 0
        result = lift(s)
        assert result.R > 1
        assert result.lifted.shape == (s.size, n + 1)
        norms = np.linalg.norm(result.lifted, axis=1)
        assert np.max(np.abs(norms - 1.0)) < TOL
        prods = pairwise_products(result.lifted)
        ct = float(result.cos_theta)
        assert np.all((np.abs(prods - ct) < TOL) | (np.abs(prods + ct) < TOL))


def test_construction_sum_sign_threshold():
    # a + b = (n - 7)/(2(n - 1)) crosses zero at n = 7.
    for n in range(3, 12):
        a, b = simplex_pairs_construction(n).products
        if n < 7:
            assert a + b < 0
        elif n == 7:
            assert a + b == 0
        else:
            assert a + b > 0


def test_harmonic_bound_values():
    assert harmonic_bound(22) == 275
    assert harmonic_bound(2) == 5
    assert harmonic_bound(6) == 27
    with pytest.raises(ValueError):
        harmonic_bound(1)


def test_g_upper_examples():
    assert g_upper(100, 4851) == 5050
    assert g_upper(22, 276) == 276
    assert g_upper(23, 276) == 276


def test_g_upper_floors_fractional_bounds():
    assert g_upper(10, 56.9) == 56
    assert g_upper(10, 54.2) == 55


def test_g_table_rows_and_errors():
    m_bounds = {8: 28, 9: 28, 10: 28}
    rows = g_table(range(7, 10), m_bounds)
    assert [(r.n, r.bound, r.tight) for r in rows] == [
        (7, 28, True),
        (8, 36, True),
        (9, 45, True),
    ]
    with pytest.raises(ValueError, match="11"):
        g_table(range(10, 11), m_bounds)


def test_g_table_exception_flagging():
    # n = 22 with M(23) = 276 > 253 must come out not tight.
    rows = g_table([21, 22, 23], {22: 231, 23: 276, 24: 276})
    flags = {r.n: r.tight for r in rows}
    assert flags == {21: True, 22: False, 23: True}
