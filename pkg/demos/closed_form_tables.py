"""Walk the closed-form windows and watch the bound flatten.

For each odd reciprocal a the line count at cosine 1/a is pinned to the
single value (a^2 - 2)(a^2 - 1)/2 across the whole dimension window
[a^2 - 2, 3a^2 - 16].  Outside the window the relative bound (below) or
the certificate fallback (above) takes over, and the flat run is exactly
what makes the two-distance tables in higher dimensions tractable.
"""

from fractions import Fraction

from equibound import bounds


def window_table():
    print("a   value   window")
    for a in (3, 5, 7, 9, 11, 13):
        lo, hi = bounds.main_theorem_range(a)
        value = bounds.main_theorem_bound(a, lo)
        print("%-3d %-7d [%d, %d]" % (a, value, lo, hi))


def flatten_at(a):
    alpha = Fraction(1, a)
    lo, hi = bounds.main_theorem_range(a)
    print("\ncosine 1/%d, window [%d, %d]:" % (a, lo, hi))
    probes = [lo - 2, lo - 1, lo, lo + 1, (lo + hi) // 2, hi, hi + 1]
    for n in probes:
        result = bounds.best_bound(n, alpha)
        value = result.value
        shown = (
            "%d" % value
            if getattr(value, "denominator", 1) == 1
            else "%s ~ %.2f" % (value, float(value))
        )
        print("  n = %-4d %-12s (%s)" % (n, shown, result.method))


def main():
    window_table()
    flatten_at(5)
    flatten_at(7)


if __name__ == "__main__":
    main()
