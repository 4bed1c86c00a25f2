"""From a two-distance set to equiangular lines and back to the g table."""

import numpy as np

from equibound import refdata, twodist


def show_construction(n):
    s = twodist.simplex_pairs_construction(n)
    gram = s.points @ s.points.T
    off = gram[~np.eye(s.size, dtype=bool)]
    print("n = %d: %d unit vectors, products %s and %s" % (n, s.size, *s.products))
    print("  distinct off-diagonal values (rounded): %s"
          % (sorted({round(float(v), 9) for v in off}),))
    return s


def show_lift(s):
    result = twodist.lift(s)
    lifted = result.lifted
    gram = lifted @ lifted.T
    off = np.abs(gram[~np.eye(len(gram), dtype=bool)])
    print("  lift: R^2 = %s, cos theta = %s" % (result.r_squared, result.cos_theta))
    print("  lifted to dimension %d; |products| spread %.2e around %.6f"
          % (lifted.shape[1], off.max() - off.min(), float(result.cos_theta)))


def g_table_window():
    # around n = 22 the line bound in dimension 23 overshoots the pair
    # count, the one place below 46 where the table entry is not tight
    m_bounds = refdata.m_bound_map()
    print("\ng(n) upper bounds near the first open dimension:")
    for row in twodist.g_table(range(20, 26), m_bounds):
        print("  n = %-3d bound %-5d %s"
              % (row.n, row.bound, "tight" if row.tight else "open"))


def main():
    for n in (5, 6):
        s = show_construction(n)
        show_lift(s)
    g_table_window()


if __name__ == "__main__":
    main()
