"""Three-point kernels for spherical configurations.

This module builds, exactly over the rationals:

* the trivariate polynomials Q_k(u, v, t) obtained from a degree-k
  Gegenbauer polynomial in dimension parameter n - 1 by the standard
  square-root-free substitution,
* the rationalized block matrices whose (i, j) entry is
  (n+2k)/n * P_i^{n+2k}(u) * P_j^{n+2k}(v) * Q_k(u, v, t); these are
  congruent to the classical kernels via diag(sqrt(h_i)) with h_i > 0,
  so positive semidefiniteness transfers both ways,
* their symmetrizations over the six permutations of (u, v, t),
* the 2x2 moment matrix W(x) of the six-variable relaxation, and
* closed forms for the second diagonal entry of the degree-3
  symmetrized block at the evaluation patterns the exact certificate
  uses.

The closed forms are proportional to the symmetrized entry (1, 1); the
proportionality constant is computed in closed_form_scale and checked in
the tests.  Entry (0, 0) is a different linear functional and does not
satisfy the same grouping identities; level_one_entry_report exposes the
analogous comparison at degree 1, where the published grouped constraint
again matches entry (1, 1) exactly.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import Polynomial, Rational, poly_eval, var
from .gegenbauer import gegenbauer

__all__ = [
    "ThreePointKernel",
    "RationalizedBlock",
    "RelaxationVariables",
    "LevelOneReport",
    "harmonic_dim",
    "q_poly",
    "kernel",
    "block",
    "s_matrix",
    "s_affine",
    "w_matrix",
    "w_det",
    "s3_11_closed",
    "s3_11_formula",
    "closed_form_scale",
    "level_one_entry_report",
]

S3_VARIANTS = ("111", "aa1", "aaa", "aa-a")


@dataclass(frozen=True)
class ThreePointKernel:
    dim: int
    level: int
    qpoly: Polynomial


@dataclass(frozen=True)
class RationalizedBlock:
    dim: int
    level: int
    size: int
    entries: tuple


@dataclass(frozen=True)
class RelaxationVariables:
    """The six nonnegative variables of the relaxation, with the derived
    aggregates A = (x1+x2)/3, B = x3+x5, C = x4+x6."""

    x1: object
    x2: object
    x3: object
    x4: object
    x5: object
    x6: object

    def __post_init__(self):
        for name in ("x1", "x2", "x3", "x4", "x5", "x6"):
            try:
                negative = getattr(self, name) < 0
            except TypeError:
                continue  # symbolic stand-ins are not ordered; skip the check
            if negative:
                raise ValueError("%s must be nonnegative" % name)

    @classmethod
    def zero(cls):
        return cls(*(Fraction(0),) * 6)

    def as_tuple(self):
        return (self.x1, self.x2, self.x3, self.x4, self.x5, self.x6)

    @property
    def A(self):
        return (self.x1 + self.x2) / 3

    @property
    def B(self):
        return self.x3 + self.x5

    @property
    def C(self):
        return self.x4 + self.x6


def harmonic_dim(m, i):
    """Dimension h_i^m of the degree-i harmonic space on the (m-1)-sphere:
    C(m+i-1, m-1) - C(m+i-3, m-1).  Positive for all m >= 2, i >= 0."""
    if m < 2 or i < 0:
        raise ValueError("need m >= 2 and i >= 0")
    first = math.comb(m + i - 1, m - 1)
    second = math.comb(m + i - 3, m - 1) if m + i - 3 >= 0 else 0
    return first - second


def _check_dim(n):
    if not isinstance(n, int) or n < 3:
        raise ValueError("ambient dimension must be an integer >= 3, got %r" % (n,))


@functools.lru_cache(maxsize=None)
def q_poly(n, k):
    """The exact polynomial Q_k(u, v, t) for ambient dimension n.

    Built from P_k^{n-1}(x) = sum_j c_j x^j by mapping each monomial to
    c_j (t - uv)^j ((1-u^2)(1-v^2))^{(k-j)/2}; parity of the Gegenbauer
    polynomial makes every exponent integral, so no radical ever appears.
    """
    _check_dim(n)
    p = gegenbauer(n - 1, k).poly
    u, v, t = var("u"), var("v"), var("t")
    core = t - u * v
    prefactor = (1 - u ** 2) * (1 - v ** 2)
    out = Polynomial.constant(0)
    for expo, coeff in p.terms.items():
        j = expo[0] if expo else 0
        assert (k - j) % 2 == 0
        out = out + coeff * core ** j * prefactor ** ((k - j) // 2)
    return out


def kernel(n, k):
    return ThreePointKernel(dim=n, level=k, qpoly=q_poly(n, k))


@functools.lru_cache(maxsize=None)
def block(n, k, d):
    """Rationalized block of size (d+1) x (d+1) with polynomial entries
    (n+2k)/n * P_i^{n+2k}(u) * P_j^{n+2k}(v) * Q_k(u, v, t)."""
    _check_dim(n)
    if d < 0 or k < 0:
        raise ValueError("levels and block sizes must be nonnegative")
    q = q_poly(n, k)
    scale = Fraction(n + 2 * k, n)
    u_polys = [gegenbauer(n + 2 * k, i).poly for i in range(d + 1)]
    v_polys = [_to_v(p) for p in u_polys]
    entries = tuple(
        tuple(scale * u_polys[i] * v_polys[j] * q for j in range(d + 1))
        for i in range(d + 1)
    )
    return RationalizedBlock(dim=n, level=k, size=d + 1, entries=entries)


def _to_v(p):
    # Rename the univariate u-polynomial into v; avoids a substitution pass.
    if p.variables == ():
        return p
    return Polynomial(("v",), dict(p.terms))


def _check_interval(name, value):
    if abs(value) > 1:
        raise ValueError("%s must lie in [-1, 1], got %s" % (name, value))


def s_matrix(n, k, d, u, v, t):
    """Symmetrized rationalized block evaluated at scalars (u, v, t).

    Returns a (d+1) x (d+1) tuple-of-tuples of Rationals: the average of
    the block over all six permutations of the arguments.  Symmetric both
    as a matrix and under any permutation of (u, v, t).
    """
    _check_dim(n)
    if d < 0 or k < 0:
        raise ValueError("levels and block sizes must be nonnegative")
    vals = (Rational(u), Rational(v), Rational(t))
    for name, value in zip(("u", "v", "t"), vals):
        _check_interval(name, value)
    q = q_poly(n, k)
    scale = Fraction(n + 2 * k, n)
    polys = [gegenbauer(n + 2 * k, i).poly for i in range(d + 1)]
    pv = [[poly_eval(p, {"u": w}) for w in vals] for p in polys]
    perms = list(itertools.permutations(range(3)))
    qv = [
        poly_eval(q, {"u": vals[p0], "v": vals[p1], "t": vals[p2]})
        for p0, p1, p2 in perms
    ]
    rows = []
    for i in range(d + 1):
        row = []
        for j in range(d + 1):
            acc = Fraction(0)
            for (p0, p1, _), qq in zip(perms, qv):
                acc += pv[i][p0] * pv[j][p1] * qq
            row.append(scale * acc / 6)
        rows.append(tuple(row))
    return tuple(rows)


def _mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def s_affine(n, k, d, x, alpha, beta):
    """The affine matrix map of the relaxation at angles (alpha, beta):

        S(1,1,1) + S(a,a,1) x1 + S(b,b,1) x2 + S(a,a,a) x3
                 + S(a,a,b) x4 + S(a,b,b) x5 + S(b,b,b) x6.
    """
    alpha = Rational(alpha)
    beta = Rational(beta)
    for name, value in (("alpha", alpha), ("beta", beta)):
        if not -1 <= value < 1:
            raise ValueError("%s must lie in [-1, 1), got %s" % (name, value))
    triples = (
        (alpha, alpha, 1),
        (beta, beta, 1),
        (alpha, alpha, alpha),
        (alpha, alpha, beta),
        (alpha, beta, beta),
        (beta, beta, beta),
    )
    total = s_matrix(n, k, d, 1, 1, 1)
    for weight, (p, q_, r) in zip(x.as_tuple(), triples):
        total = _mat_add(total, _mat_scale(weight, s_matrix(n, k, d, p, q_, r)))
    return total


def w_matrix(x):
    """The 2x2 moment matrix [[1, A], [A, A + x3 + x4 + x5 + x6]]."""
    a = x.A
    corner = a + x.x3 + x.x4 + x.x5 + x.x6
    return ((1, a), (a, corner))


def w_det(x):
    """det W(x) = A + (x3 + x4 + x5 + x6) - A^2; nonnegativity of this
    determinant is equivalent to A(A - 1) <= B + C."""
    a = x.A
    return a + x.x3 + x.x4 + x.x5 + x.x6 - a * a


def s3_11_formula(n, alpha, variant):
    """The degree-3 closed forms as bare arithmetic, no domain checks.

    Works for exact scalars and equally for symbolic values (anything
    supporting field arithmetic with ints), which is how the certificate
    machinery replays the algebra with n eliminated.
    """
    if variant == "111":
        return 0 * alpha
    if variant == "aa1":
        lead = n * (n + 2) * (n + 4) * (n + 6)
        return lead * alpha ** 2 * (1 - alpha ** 2) ** 3 / (3 * (n - 1) * (n + 1) * (n + 3))
    lead = n * (n + 2) * (n + 4) * (n + 6)
    denom = (n - 2) * (n - 1) * (n + 1) * (n + 3)
    if variant == "aaa":
        return -lead * (alpha - 1) ** 3 * alpha ** 3 * ((n - 2) * alpha ** 2 - 6 * alpha - 3) / denom
    if variant == "aa-a":
        return -lead * alpha ** 3 * (alpha + 1) ** 3 * ((n - 2) * alpha ** 2 + 6 * alpha - 3) / denom
    raise ValueError("variant must be one of %s, got %r" % (S3_VARIANTS,), )


def s3_11_closed(n, alpha, variant):
    """Closed-form value of the degree-3 entry for one of the four
    evaluation patterns "111", "aa1", "aaa", "aa-a" (the last meaning the
    triple (alpha, alpha, -alpha)).

    Exactly equal to closed_form_scale(n) times entry (1, 1) of
    s_matrix(n, 3, d, . , . , .) at the corresponding triple.
    """
    if not isinstance(n, int) or n <= 3:
        raise ValueError("closed forms need integer n >= 4, got %r" % (n,))
    alpha = Rational(alpha)
    if not -1 < alpha < 1:
        raise ValueError("alpha must lie in (-1, 1), got %s" % (alpha,))
    if variant not in S3_VARIANTS:
        raise ValueError("variant must be one of %s, got %r" % (S3_VARIANTS, variant))
    return s3_11_formula(n, alpha, variant)


def closed_form_scale(n):
    """Ratio between the published degree-3 closed forms and entry (1, 1)
    of the symmetrized rationalized block: n^2 (n+2)(n+4) / ((n-1)(n+1)(n+3)).

    Strictly positive for n >= 4, so sign and semidefiniteness statements
    transfer unchanged between the two normalizations.
    """
    if not isinstance(n, int) or n <= 3:
        raise ValueError("scale factor needs integer n >= 4, got %r" % (n,))
    return Fraction(n * n * (n + 2) * (n + 4), (n - 1) * (n + 1) * (n + 3))


@dataclass(frozen=True)
class LevelOneReport:
    """Comparison of the two candidate degree-1 scalar constraints against
    the grouped form  A + alpha/(1+alpha) (x3+x5) + alpha/(alpha-1) (x4+x6).

    Each coefficient vector lists the multipliers of (x1, ..., x6) after
    scaling so that x1 carries 1/3 (the grouped form's A-coefficient);
    both entries have zero constant term so the scaling is well defined.
    """

    dim: int
    alpha: Fraction
    grouped_coeffs: tuple
    entry00_coeffs: tuple
    entry11_coeffs: tuple
    entry00_matches: bool
    entry11_matches: bool


def _entry_affine_coeffs(n, k, i, alpha):
    # Coefficients of x1..x6 in entry (i, i) of the degree-k affine map
    # at (alpha, -alpha), read off one variable at a time.
    triples = (
        (alpha, alpha, 1),
        (-alpha, -alpha, 1),
        (alpha, alpha, alpha),
        (alpha, alpha, -alpha),
        (alpha, -alpha, -alpha),
        (-alpha, -alpha, -alpha),
    )
    d = max(i, 1)
    return tuple(s_matrix(n, k, d, *trip)[i][i] for trip in triples)


def level_one_entry_report(n, alpha):
    """Derive the degree-1 scalar constraint from s_matrix and compare it,
    coefficient by coefficient, against the grouped published form.

    Entry (1, 1) reproduces the grouped form exactly for every n; entry
    (0, 0) does not (its x3/x5 and x4/x6 coefficients differ), which the
    caller is expected to report rather than reconcile.
    """
    _check_dim(n)
    alpha = Rational(alpha)
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1), got %s" % (alpha,))
    grouped = (
        Fraction(1, 3),
        Fraction(1, 3),
        alpha / (1 + alpha),
        alpha / (alpha - 1),
        alpha / (1 + alpha),
        alpha / (alpha - 1),
    )
    reports = {}
    for entry in (0, 1):
        raw = _entry_affine_coeffs(n, 1, entry, alpha)
        # Constant term S(1,1,1) vanishes for both entries at k = 1.
        norm = 3 * raw[0]
        scaled = tuple(c / norm for c in raw)
        reports[entry] = scaled
    return LevelOneReport(
        dim=n,
        alpha=alpha,
        grouped_coeffs=grouped,
        entry00_coeffs=reports[0],
        entry11_coeffs=reports[1],
        entry00_matches=reports[0] == grouped,
        entry11_matches=reports[1] == grouped,
    )
