"""Gegenbauer polynomials P_k^n normalized so that P_k^n(1) = 1.

Built from the three-term recurrence

    P_0^n = 1,   P_1^n = u,
    P_k^n(u) = ((2k + n - 4) u P_{k-1}^n(u) - (k - 1) P_{k-2}^n(u)) / (k + n - 3),

kept exact over the rationals.  The recurrence is used as-is instead of a
hypergeometric closed form so the normalization is never in doubt.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .exactalg import Polynomial, Rational, poly_eval, var

__all__ = ["GegenbauerPoly", "gegenbauer", "gegenbauer_eval"]


@dataclass(frozen=True)
class GegenbauerPoly:
    dim: int
    degree: int
    poly: Polynomial


def _check_args(n, k):
    if not isinstance(n, int) or n < 2:
        raise ValueError("dimension parameter must be an integer >= 2, got %r" % (n,))
    if not isinstance(k, int) or k < 0:
        raise ValueError("degree must be a nonnegative integer, got %r" % (k,))


@functools.lru_cache(maxsize=None)
def _poly(n, k):
    # lru_cache doubles as the memo table; safe under the interpreter lock.
    if k == 0:
        return Polynomial.constant(1)
    if k == 1:
        return var("u")
    u = var("u")
    prev, cur = _poly(n, k - 2), _poly(n, k - 1)
    # Denominator k + n - 3 >= 1 whenever n >= 2 and k >= 2.
    return ((2 * k + n - 4) * u * cur - (k - 1) * prev) / (k + n - 3)


def gegenbauer(n, k):
    """The exact degree-k Gegenbauer polynomial for dimension parameter n."""
    _check_args(n, k)
    return GegenbauerPoly(dim=n, degree=k, poly=_poly(n, k))


def gegenbauer_eval(n, k, u):
    """Exact value P_k^n(u) for rational u."""
    _check_args(n, k)
    return poly_eval(_poly(n, k), {"u": Rational(u)})
