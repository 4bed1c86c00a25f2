"""Reference-table assets: parsing, self-consistency, frozen values."""

from fractions import Fraction

import pytest

from equibound import refdata
from equibound.bounds import main_theorem_bound, main_theorem_range
from equibound.refdata import (
    ReferenceRow,
    ReferenceTable,
    TABLE3_ALPHAS,
    TABLE3_DIMS,
    generate_m_bounds,
    known_g_map,
    load_table,
    m_bound_map,
    table3_matrix,
)
from equibound.twodist import g_table


def test_all_sources_load_with_expected_row_counts():
    counts = {"table1": 14, "table2": 12, "table3": 228,
              "known_g": 7, "m_bounds": 412}
    for source, count in counts.items():
        table = load_table(source)
        assert table.source == source
        assert len(table.rows) == count


def test_unknown_source_rejected():
    with pytest.raises(ValueError):
        load_table("table9")


def test_table1_open_case_pairs():
    table = load_table("table1")
    pairs = {(14, 28, 29), (16, 40, 41), (17, 48, 50), (18, 48, 61),
             (19, 72, 75), (20, 90, 95), (42, 276, 288)}
    got = {(n, table.value(n, kind="lower"), table.value(n, kind="upper"))
           for n in {r.n for r in table.rows}}
    assert got == pairs


def test_table2_matches_closed_form_with_zero_diffs():
    table = load_table("table2")
    seen = set()
    for row in table.rows:
        a = row.alpha.denominator
        assert row.alpha == Fraction(1, a)
        assert main_theorem_bound(a, row.n) == row.value
        lo, hi = main_theorem_range(a)
        assert row.n in (lo, hi)
        seen.add(a)
    assert seen == {3, 5, 7, 9, 11, 13}


def test_table2_corruption_rejected_on_load():
    good = load_table("table2").rows
    # value off by one
    bad = list(good)
    bad[0] = ReferenceRow(n=bad[0].n, alpha=bad[0].alpha,
                          value=bad[0].value + 1, kind="upper", source="table2")
    with pytest.raises(ValueError):
        ReferenceTable(source="table2", rows=tuple(bad))
    # endpoint off by one
    bad = list(good)
    bad[1] = ReferenceRow(n=bad[1].n + 1, alpha=bad[1].alpha,
                          value=bad[1].value, kind="upper", source="table2")
    with pytest.raises(ValueError):
        ReferenceTable(source="table2", rows=tuple(bad))


def test_row_kind_and_source_tags_validated():
    with pytest.raises(ValueError):
        ReferenceRow(n=5, alpha=None, value=Fraction(1), kind="best", source="table1")
    row = ReferenceRow(n=5, alpha=None, value=Fraction(1), kind="upper", source="table1")
    with pytest.raises(ValueError):
        ReferenceTable(source="table3", rows=(row,))


def test_table3_every_cell_present():
    matrix = table3_matrix()
    assert sorted(matrix) == list(TABLE3_DIMS)
    for cells in matrix.values():
        assert sorted(cells) == sorted(TABLE3_ALPHAS)


def test_table3_flat_columns_exact():
    matrix = table3_matrix()
    flat = {Fraction(1, 13): 14028, Fraction(1, 15): 24976,
            Fraction(1, 17): 41328, Fraction(1, 19): 64620}
    for alpha, value in flat.items():
        assert all(matrix[n][alpha] == value for n in TABLE3_DIMS)


def test_table3_spot_cells_including_decimals():
    matrix = table3_matrix()
    assert matrix[401][Fraction(1, 5)] == 17734
    assert matrix[419][Fraction(1, 9)] == 88808
    assert matrix[407][Fraction(1, 9)] == 65332
    assert matrix[401][Fraction(1, 23)] == Fraction(16541, 10)
    assert matrix[405][Fraction(1, 21)] == 4950
    assert matrix[417][Fraction(1, 27)] == 973
    assert matrix[419][Fraction(1, 27)] == Fraction(98397, 100)
    assert matrix[414][Fraction(1, 27)] == Fraction(9568, 10)


def test_table3_row_maxima():
    matrix = table3_matrix()
    maxima = [max(matrix[n].values()) for n in TABLE3_DIMS]
    assert maxima == [64620] * 6 + [65332, 66839, 68411, 70051, 71764, 73555,
                                    75429, 77393, 79453, 81616, 83890, 86284, 88808]


def test_table3_max_exceeds_pair_count_only_at_419():
    # the reason the two-distance table stops at n = 417: the dimension-419
    # bound 88808 overshoots 418*419/2 = 87571
    matrix = table3_matrix()
    for n in TABLE3_DIMS:
        row_max = max(matrix[n].values())
        pair_count = (n - 1) * n // 2
        assert (row_max > pair_count) == (n == 419)


def test_known_g_values():
    assert known_g_map() == {2: 5, 3: 6, 4: 10, 5: 16, 6: 27, 22: 275, 23: 276}


def test_m_bounds_matches_generator_exactly():
    assert m_bound_map() == generate_m_bounds()


def test_m_bounds_spot_values():
    bounds = m_bound_map()
    assert bounds[8] == 28
    assert bounds[23] == 276
    assert bounds[43] == 344
    assert bounds[44] == Fraction(2112, 5)
    assert bounds[46] == 736
    assert bounds[47] == 1128
    assert bounds[78] == 2080
    assert bounds[79] == 3160
    assert bounds[358] == 42960
    assert bounds[359] == 64620
    assert bounds[400] == 64620
    assert bounds[401] == 64620
    assert bounds[419] == 88808


def test_m_bounds_feed_g_table_exception_set():
    rows = g_table(range(7, 418), m_bound_map())
    loose = {row.n for row in rows if not row.tight}
    assert loose == {22, 46, 78, 118, 166, 222, 286, 358}
    assert loose == {(2 * k + 1) ** 2 - 3 for k in range(2, 10)}
    by_n = {row.n: row for row in rows}
    assert by_n[93].bound == 4371 and by_n[93].tight
    assert by_n[22].bound == 276
    # one dimension further the assembled bound overshoots
    extended = g_table(range(7, 419), m_bound_map())
    assert not {row.n: row for row in extended}[418].tight
