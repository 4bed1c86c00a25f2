"""Spherical two-distance sets: the pair-sum lower-bound construction,
the lift to equiangular lines one dimension up, and the assembly of upper
bounds on the maximum size g(n).

The size story is: the construction gives g(n) >= n(n+1)/2; for sets whose
two inner products satisfy a + b >= 0 the same number is an upper bound,
and for a + b < 0 the set lifts to equiangular lines in dimension n + 1,
so g(n) <= max(M(n+1), n(n+1)/2).  g_table applies that inequality across
a dimension range given a table of M bounds and marks where the lower and
upper bounds meet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "TwoDistanceSet",
    "LiftResult",
    "GTableRow",
    "simplex_pairs_construction",
    "lift",
    "harmonic_bound",
    "g_upper",
    "g_table",
]


@dataclass(frozen=True)
class TwoDistanceSet:
    dim: int
    points: np.ndarray  # shape (size, dim), unit rows
    products: tuple  # (a, b), exact Fractions for the built-in construction

    @property
    def size(self):
        return len(self.points)


@dataclass(frozen=True)
class LiftResult:
    R: float
    r_squared: Fraction
    cos_theta: Fraction
    lifted: np.ndarray  # shape (size, dim + 1), unit rows


@dataclass(frozen=True)
class GTableRow:
    n: int
    bound: int
    tight: bool


def _hyperplane_frame(n):
    # Deterministic Gram-Schmidt on the spanning set f_i = e_i - e_{n+1}
    # of the hyperplane sum(x) = 0 in R^{n+1}; reproducible run to run.
    frame = []
    for i in range(n):
        f = np.zeros(n + 1)
        f[i] = 1.0
        f[n] = -1.0
        for q in frame:
            f -= np.dot(q, f) * q
        f /= np.linalg.norm(f)
        frame.append(f)
    return np.array(frame)


def simplex_pairs_construction(n):
    """The n(n+1)/2 points e_i + e_j (i < j) of R^{n+1}, recentered on
    their centroid, scaled to unit norm, and expressed in an orthonormal
    frame of the centered hyperplane, so they live honestly in R^n.

    Inner products come out as exactly two values,
    a = (n-3)/(2(n-1)) and b = -2/(n-1); for n < 3 no disjoint index
    pairs exist, the second value never occurs, and the construction is
    rejected.
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError(
            "construction degenerates for n < 3 (only one inner product value), got %r"
            % (n,)
        )
    m = n + 1
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    raw = np.zeros((len(pairs), m))
    for row, (i, j) in enumerate(pairs):
        raw[row, i] = 1.0
        raw[row, j] = 1.0
    centered = raw - 2.0 / m  # centroid is (2/(n+1)) * all-ones
    norm = math.sqrt(2.0 * (n - 1) / (n + 1))  # common length of every row
    frame = _hyperplane_frame(n)
    points = (centered / norm) @ frame.T
    a = Fraction(n - 3, 2 * (n - 1))
    b = Fraction(-2, n - 1)
    return TwoDistanceSet(dim=n, points=points, products=(a, b))


def lift_parameters(a, b):
    """Exact scale and angle of the lift for inner products (a, b).

    They solve 1 - a = R^2 (1 - cos t), 1 - b = R^2 (1 + cos t):
    R^2 = (2 - a - b)/2 and cos t = (a - b)/(2 - a - b).  a + b < 0 forces
    R > 1, which is what makes the extra coordinate sqrt(R^2 - 1)/R real.
    """
    a, b = Fraction(a), Fraction(b)
    if a + b >= 0:
        raise ValueError(
            "lift requires inner products with a + b < 0, got a + b = %s" % (a + b,)
        )
    return (2 - a - b) / 2, (a - b) / (2 - a - b)


def lift(s):
    """Map a two-distance set with a + b < 0 to unit vectors in dimension
    dim + 1 whose pairwise inner products are all +/- cos(theta)."""
    a, b = s.products
    r_squared, cos_theta = lift_parameters(a, b)
    r = math.sqrt(r_squared)
    last = math.sqrt(r_squared - 1) / r
    lifted = np.hstack([s.points / r, np.full((s.size, 1), last)])
    return LiftResult(R=r, r_squared=r_squared, cos_theta=cos_theta, lifted=lifted)


def harmonic_bound(n):
    """n(n+3)/2, the distance-count-free upper bound on g(n)."""
    if not isinstance(n, int) or n < 2:
        raise ValueError("dimension must be an integer >= 2, got %r" % (n,))
    return n * (n + 3) // 2


def g_upper(n, m_upper_n_plus_1):
    """max(M(n+1) bound, n(n+1)/2).  The second branch covers sets with
    a + b >= 0, the first covers a + b < 0 through the lift.  Non-integer
    M bounds are floored first: a size bound may always be."""
    if not isinstance(n, int) or n < 2:
        raise ValueError("dimension must be an integer >= 2, got %r" % (n,))
    m_bound = math.floor(m_upper_n_plus_1)
    return max(m_bound, n * (n + 1) // 2)


def g_table(n_range, m_bounds):
    """One GTableRow per n: the g(n) upper bound and whether it meets the
    construction's lower bound n(n+1)/2.

    m_bounds maps dimension m to an upper bound on M(m); every n in
    n_range needs m_bounds[n + 1].
    """
    rows = []
    for n in n_range:
        if n + 1 not in m_bounds:
            raise ValueError(
                "no M bound for dimension %d (needed by the n = %d row)" % (n + 1, n)
            )
        bound = g_upper(n, m_bounds[n + 1])
        rows.append(GTableRow(n=n, bound=bound, tight=bound == n * (n + 1) // 2))
    return rows
