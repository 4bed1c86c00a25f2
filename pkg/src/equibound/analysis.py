"""Asymptotic comparison of the two bound regimes along the odd-reciprocal
angle ladder.

Along n = (2k+3)^2 - 3 the relative bound at cosine 1/(2k+3) evaluates to
the "case A" value 8/3 (2k^2+6k+3)(k+1)(k+2); the competing "case B" value
is the closed-form plateau n_k(n_k+1)/2 at n_k = (2k+1)^2 - 2.  Case A
starts above case B and falls below it at k = 9, i.e. dimension 438, after
which the plateau value dominates.  bracket_k locates any dimension inside
its odd-square window, which is what the plateau conjecture quantifies
over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .bounds import main_theorem_range

__all__ = [
    "CaseBounds",
    "Crossover",
    "case_bounds",
    "crossover_k",
    "bracket_k",
    "window_covers_bracket",
    "crossover_report",
]


@dataclass(frozen=True)
class CaseBounds:
    k: int
    caseA: int
    caseB: int


class Crossover(NamedTuple):
    k: int
    n: int


def case_bounds(k):
    """Exact case A and case B values at ladder index k >= 1."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("ladder index must be an integer >= 1, got %r" % (k,))
    case_a = Fraction(8, 3) * (2 * k * k + 6 * k + 3) * (k + 1) * (k + 2)
    assert case_a.denominator == 1
    case_b = (4 * k * k + 4 * k - 1) * (2 * k * k + 2 * k)
    # Cross-check both closed forms against their defining expressions.
    n_top = (2 * k + 3) ** 2 - 3
    assert case_a == Fraction(4 * n_top * (k + 1) * (k + 2), (2 * k + 3) ** 2 - n_top)
    n_k = (2 * k + 1) ** 2 - 2
    assert case_b == n_k * (n_k + 1) // 2
    return CaseBounds(k=k, caseA=int(case_a), caseB=case_b)


def crossover_k():
    """Smallest k with caseA(k) < caseB(k), together with the dimension
    (2k+3)^2 - 3 where the regime change happens.  Exact scan."""
    k = 1
    while True:
        cb = case_bounds(k)
        if cb.caseA < cb.caseB:
            return Crossover(k=k, n=(2 * k + 3) ** 2 - 3)
        k += 1


def bracket_k(n):
    """The unique k with (2k+1)^2 - 2 <= n < (2k+3)^2 - 2, defined for n >= 7."""
    if not isinstance(n, int) or n < 7:
        raise ValueError("bracketing needs an integer n >= 7, got %r" % (n,))
    root = math.isqrt(n + 2)
    if root % 2 == 0:
        root -= 1
    k = (root - 1) // 2
    assert (2 * k + 1) ** 2 - 2 <= n < (2 * k + 3) ** 2 - 2
    return k


def window_covers_bracket(k):
    """True iff the closed-form window at a = 2k+1 reaches past the end of
    the bracket [(2k+1)^2 - 2, (2k+3)^2 - 2): exactly when k > 1."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("ladder index must be an integer >= 1, got %r" % (k,))
    _, hi = main_theorem_range(2 * k + 1)
    return hi > (2 * k + 3) ** 2 - 2


def crossover_report(k_max=12):
    """Everything the regime-change story rests on, computed exactly:
    per-k case values with their ordering, the crossover point, and the
    window-coverage facts for k = 2..k_max."""
    rows = [case_bounds(k) for k in range(1, k_max + 1)]
    return {
        "rows": rows,
        "crossover": crossover_k(),
        "coverage": [(k, window_covers_bracket(k)) for k in range(2, k_max + 1)],
    }
