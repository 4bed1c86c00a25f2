"""Bundled reference tables and their loader.

Five CSV assets ship with the package, all sharing the header
``n,alpha,value,kind,source``:

* ``table1``  -- open-case dimensions with best known lower/upper line counts.
* ``table2``  -- closed-form flat-window values, one row per window endpoint.
* ``table3``  -- per-angle numerical bounds for dimensions 401..419.
* ``known_g`` -- exactly known two-distance maxima outside the generic rule.
* ``m_bounds`` -- assembled per-dimension upper bounds on line counts,
  the input the two-distance table builder consumes.

Every value parses to an exact ``Fraction`` (decimal strings such as
``1654.1`` included), so regression tests can compare without float slop.
``generate_m_bounds`` rebuilds the assembled table from its ingredients and
is tested against the shipped asset.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

SOURCES = ("table1", "table2", "table3", "known_g", "m_bounds")
KINDS = ("lower", "upper", "exact")

# angles tabulated in table3, in column order
TABLE3_ALPHAS = tuple(Fraction(1, q) for q in range(5, 29, 2))
TABLE3_DIMS = tuple(range(401, 420))


@dataclass(frozen=True)
class ReferenceRow:
    n: int
    alpha: Fraction | None
    value: Fraction
    kind: str
    source: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("unknown row kind %r" % (self.kind,))


@dataclass(frozen=True)
class ReferenceTable:
    source: str
    rows: tuple[ReferenceRow, ...]

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError("unknown source tag %r" % (self.source,))
        for row in self.rows:
            if row.source != self.source:
                raise ValueError(
                    "row for n = %d is tagged %r, expected %r"
                    % (row.n, row.source, self.source))
        if self.source == "table2":
            _check_table2(self.rows)

    def value(self, n, alpha=None, kind=None):
        """The unique value matching (n, alpha, kind); ValueError otherwise."""
        hits = [r for r in self.rows
                if r.n == n
                and (alpha is None or r.alpha == alpha)
                and (kind is None or r.kind == kind)]
        if len(hits) != 1:
            raise ValueError(
                "%d rows match n = %d in source %r" % (len(hits), n, self.source))
        return hits[0].value


def _check_table2(rows):
    # each angle 1/a carries one value, (a^2-2)(a^2-1)/2, on the two window
    # endpoints a^2-2 and 3a^2-16; reject the table otherwise
    by_alpha = {}
    for row in rows:
        if row.alpha is None:
            raise ValueError("table2 row for n = %d lacks an angle" % (row.n,))
        by_alpha.setdefault(row.alpha, []).append(row)
    for alpha, group in by_alpha.items():
        a = 1 / alpha
        if a.denominator != 1 or a < 3:
            raise ValueError("table2 angle %s is not a reciprocal 1/a, a >= 3" % (alpha,))
        a = a.numerator
        want = Fraction((a * a - 2) * (a * a - 1), 2)
        dims = sorted(row.n for row in group)
        if dims != [a * a - 2, 3 * a * a - 16]:
            raise ValueError(
                "table2 rows for alpha = %s sit at dimensions %s, "
                "expected the window endpoints [%d, %d]"
                % (alpha, dims, a * a - 2, 3 * a * a - 16))
        for row in group:
            if row.value != want:
                raise ValueError(
                    "table2 value %s at n = %d disagrees with the closed form %s"
                    % (row.value, row.n, want))


def _parse(text, source):
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    reader = csv.DictReader(lines)
    if reader.fieldnames != ["n", "alpha", "value", "kind", "source"]:
        raise ValueError("bad CSV header %s" % (reader.fieldnames,))
    rows = []
    for rec in reader:
        rows.append(ReferenceRow(
            n=int(rec["n"]),
            alpha=Fraction(rec["alpha"]) if rec["alpha"] else None,
            value=Fraction(rec["value"]),
            kind=rec["kind"],
            source=rec["source"],
        ))
    return ReferenceTable(source=source, rows=tuple(rows))


def load_table(source, path=None):
    """Load a bundled table by source tag, or the same format from ``path``."""
    if source not in SOURCES:
        raise ValueError("unknown source tag %r" % (source,))
    if path is None:
        text = resources.files("equibound.data").joinpath(source + ".csv").read_text()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    return _parse(text, source)


def table3_matrix(table=None):
    """table3 as {n: {alpha: value}} with every cell present."""
    if table is None:
        table = load_table("table3")
    matrix = {n: {} for n in TABLE3_DIMS}
    for row in table.rows:
        matrix[row.n][row.alpha] = row.value
    for n, cells in matrix.items():
        if sorted(cells) != sorted(TABLE3_ALPHAS):
            raise ValueError("table3 row n = %d has angle set %s" % (n, sorted(cells)))
    return matrix


def m_bound_map(path=None):
    """{dimension: upper bound on the line count} from the assembled table."""
    table = load_table("m_bounds", path=path)
    out = {}
    for row in table.rows:
        if row.kind != "upper":
            raise ValueError("m_bounds row n = %d has kind %r" % (row.n, row.kind))
        if row.n in out:
            raise ValueError("duplicate m_bounds row for n = %d" % (row.n,))
        out[row.n] = row.value
    return out


def known_g_map():
    table = load_table("known_g")
    return {row.n: row.value for row in table.rows}


# dimensions just below a window start, where the relative bound at the next
# window's angle undercuts the flat window value
PEAK_DIMS = frozenset({44, 45, 46, 76, 77, 78, 117, 118, 166, 222, 286, 358})

# dimensions n = (2k+1)^2 - 3 where the line bound one dimension up exceeds
# the pair count n(n+1)/2, so the two-distance table entry is not tight there
G_OPEN_DIMS = frozenset((2 * k + 1) ** 2 - 3 for k in range(2, 10))

# consolidated published line-count bounds for small dimensions (solved cases
# use the exact maximum, open cases the best upper bound)
SMALL_DIM_LINE_BOUNDS = {
    **{m: 28 for m in range(8, 14)},
    14: 29, 15: 36, 16: 41, 17: 50, 18: 61, 19: 75, 20: 95,
    21: 126, 22: 176, 23: 276,
    **{m: 276 for m in range(24, 42)},
    42: 288, 43: 344,
}


def _window_k(m):
    # largest k with (2k+1)^2 - 2 <= m
    k = 1
    while (2 * (k + 1) + 1) ** 2 - 2 <= m:
        k += 1
    return k


def generate_m_bounds():
    """Rebuild the assembled per-dimension bound table from its ingredients.

    Small dimensions take the consolidated published values; 44..400 use the
    window formulas (peak dimensions get the relative bound at the next
    window's angle, the rest the flat value of their window); 401..419 take
    the row maximum of table3.  The shipped ``m_bounds.csv`` must match this
    exactly.
    """
    out = {m: Fraction(v) for m, v in SMALL_DIM_LINE_BOUNDS.items()}
    for m in range(44, 401):
        k = _window_k(m)
        if m in PEAK_DIMS:
            out[m] = Fraction(4 * m * (k + 1) * (k + 2), (2 * k + 3) ** 2 - m)
        else:
            nk = (2 * k + 1) ** 2 - 2
            out[m] = Fraction(nk * (nk + 1), 2)
    for n, cells in table3_matrix().items():
        out[n] = max(cells.values())
    return out
