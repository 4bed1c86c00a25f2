import pytest

from equibound.analysis import (
    bracket_k,
    case_bounds,
    crossover_k,
    crossover_report,
    window_covers_bracket,
)


def test_case_bounds_at_crossover():
    cb = case_bounds(9)
    assert cb.caseB == 359 * 360 // 2 == 64620
    assert cb.caseA == 64240
    assert cb.caseA < cb.caseB


def test_case_bounds_below_crossover():
    cb = case_bounds(8)
    assert cb.caseA == 42960
    assert cb.caseB == 41328
    assert cb.caseA >= cb.caseB


def test_case_bounds_small():
    assert case_bounds(2).caseB == 276
    assert case_bounds(3).caseB == 1128
    assert case_bounds(10).caseA < case_bounds(10).caseB


def test_case_bounds_domain():
    with pytest.raises(ValueError):
        case_bounds(0)


def test_crossover_location():
    cross = crossover_k()
    assert cross.k == 9
    assert cross.n == 438


def test_crossover_is_first():
    for k in range(1, 9):
        cb = case_bounds(k)
        assert cb.caseA >= cb.caseB, k
    for k in range(9, 30):
        cb = case_bounds(k)
        assert cb.caseA < cb.caseB, k


def test_bracket_examples():
    assert bracket_k(23) == 2
    assert bracket_k(46) == 2
    assert bracket_k(401) == 9
    assert bracket_k(7) == 1


def test_bracket_changes_exactly_at_window_starts():
    previous = bracket_k(7)
    for n in range(8, 700):
        k = bracket_k(n)
        assert k >= previous
        if k != previous:
            assert n == (2 * k + 1) ** 2 - 2
        previous = k


def test_bracket_domain():
    with pytest.raises(ValueError):
        bracket_k(6)


def test_window_coverage():
    # 3(2k+1)^2 - 16 > (2k+3)^2 - 2 exactly for k > 1.
    assert not window_covers_bracket(1)
    for k in range(2, 51):
        assert window_covers_bracket(k)
        assert 3 * (2 * k + 1) ** 2 - 16 > (2 * k + 3) ** 2 - 2


def test_report_shape():
    report = crossover_report(k_max=10)
    assert report["crossover"].k == 9
    assert len(report["rows"]) == 10
    assert all(flag for _, flag in report["coverage"])
