"""Where the two high-dimensional bound families trade places.

Case A is the pillar-style bound at the top of each bracket, case B the
pair-count value carried from the bracket's bottom; A starts out larger
and dips under B at ladder index 9, dimension 438.  Past the end of the
assembled table the same comparison shows why it stops where it does.
"""

from equibound import analysis, refdata, twodist


def scan():
    print("k   caseA     caseB     smaller")
    for k in range(1, 13):
        cb = analysis.case_bounds(k)
        print("%-3d %-9d %-9d %s"
              % (k, cb.caseA, cb.caseB, "A" if cb.caseA < cb.caseB else "B"))
    cross = analysis.crossover_k()
    print("first index with caseA < caseB: k = %d (dimension %d)"
          % (cross.k, cross.n))


def table_edge():
    # the assembled two-distance table is tight up to n = 417 and stops
    # being so at 418: the line bound one dimension up finally outgrows
    # the pair count
    m_bounds = refdata.m_bound_map()
    print("\nedge of the assembled table:")
    for row in twodist.g_table(range(415, 419), m_bounds):
        pair_count = row.n * (row.n + 1) // 2
        print("  n = %-4d bound %-6d pair count %-6d %s"
              % (row.n, row.bound, pair_count,
                 "tight" if row.tight else "open"))


def main():
    scan()
    table_edge()


if __name__ == "__main__":
    main()
