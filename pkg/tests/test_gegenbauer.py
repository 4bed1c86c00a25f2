import random
from fractions import Fraction

import pytest

from equibound.exactalg import poly_eval, var
from equibound.gegenbauer import gegenbauer, gegenbauer_eval

U = var("u")


def test_degree_zero_and_one():
    for n in (2, 5, 23, 100):
        assert gegenbauer(n, 0).poly == 1
        assert gegenbauer(n, 1).poly == U


def test_degree_two_closed_form():
    # Recurrence at k = 2 gives (n u^2 - 1)/(n - 1).
    assert gegenbauer(5, 2).poly == (5 * U ** 2 - 1) / 4
    for n in (3, 7, 23):
        assert gegenbauer(n, 2).poly == (n * U ** 2 - 1) / (n - 1)


def test_degree_three_closed_form():
    # k = 3: u((n + 2) u^2 - 3)/(n - 1).
    for n in (3, 5, 23):
        assert gegenbauer(n, 3).poly == U * ((n + 2) * U ** 2 - 3) / (n - 1)


def test_eval_examples():
    assert gegenbauer_eval(7, 3, 1) == 1
    assert gegenbauer_eval(5, 2, 0) == Fraction(-1, 4)
    assert gegenbauer_eval(23, 2, Fraction(1, 5)) == Fraction(-1, 275)


def test_value_one_at_one():
    for n in range(3, 21):
        for k in range(0, 11):
            assert gegenbauer_eval(n, k, 1) == 1


def test_parity_random():
    rng = random.Random(2024)
    for _ in range(80):
        n = rng.randint(3, 16)
        k = rng.randint(0, 9)
        u = Fraction(rng.randint(-30, 30), rng.randint(31, 60))
        assert gegenbauer_eval(n, k, -u) == (-1) ** k * gegenbauer_eval(n, k, u)


def test_parity_of_exponents():
    for n in (3, 6, 11):
        for k in range(0, 8):
            p = gegenbauer(n, k).poly
            for expo in p.terms:
                assert (sum(expo) - k) % 2 == 0


def test_bounded_on_interval_grid():
    # |P_k^n| <= 1 on [-1, 1]; exact comparison at rational grid points.
    grid = [Fraction(i, 12) for i in range(-12, 13)]
    for n in (3, 5, 10, 17):
        for k in (2, 3, 5, 8):
            for u in grid:
                assert abs(gegenbauer_eval(n, k, u)) <= 1


def test_recurrence_consistency():
    for n in (4, 9):
        for k in range(2, 9):
            lhs = gegenbauer(n, k).poly * (k + n - 3)
            rhs = (2 * k + n - 4) * U * gegenbauer(n, k - 1).poly \
                - (k - 1) * gegenbauer(n, k - 2).poly
            assert lhs == rhs


def test_domain_errors():
    with pytest.raises(ValueError):
        gegenbauer(1, 2)
    with pytest.raises(ValueError):
        gegenbauer_eval(0, 1, Fraction(1, 2))
    with pytest.raises(ValueError):
        gegenbauer(5, -1)


def test_metadata_fields():
    g = gegenbauer(7, 4)
    assert g.dim == 7 and g.degree == 4
    assert poly_eval(g.poly, {"u": 1}) == 1
