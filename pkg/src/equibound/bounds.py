"""Upper bounds on the number M_alpha(n) of equiangular lines at a fixed
common angle, and the exact certificate behind the closed-form bound.

Three classical counting bounds (gerzon_bound, neumann_bound,
relative_bound) cover the easy regimes.  The interesting one is the
closed-form bound (a^2-2)(a^2-1)/2 for cosine 1/a on the dimension window
a^2-2 <= n <= 3a^2-16: verify_proof_chain replays its derivation step by
step in exact rational arithmetic and raises CertificateError on the
first identity or sign condition that fails, so a green run really is a
proof transcript.  verify_proof_chain_symbolic runs the same identities
once and for all in the rational-function field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import Polynomial, Rational, RationalFunction, ratfun_equal
from .threepoint import RelaxationVariables, w_det

__all__ = [
    "BoundQuery",
    "BoundResult",
    "ProofChainCertificate",
    "CertificateError",
    "gerzon_bound",
    "neumann_bound",
    "relative_bound",
    "main_theorem_range",
    "main_theorem_bound",
    "verify_proof_chain",
    "verify_proof_chain_symbolic",
    "best_bound",
]


class CertificateError(Exception):
    """An exact identity or sign condition of the proof chain failed."""


@dataclass(frozen=True)
class BoundQuery:
    dim: int
    cosine: Fraction

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 2:
            raise ValueError("dimension must be an integer >= 2, got %r" % (self.dim,))
        if not 0 < self.cosine < 1:
            raise ValueError("cosine must lie in (0, 1), got %s" % (self.cosine,))


@dataclass(frozen=True)
class BoundResult:
    value: object
    method: str
    certificate: object = None


@dataclass(frozen=True)
class ProofChainCertificate:
    """Transcript of the exact derivation for one cosine a.

    n_sub is the dimension 3/a^2 - 16 at which the degree-3 constraint
    coefficients take the displayed form; the bound then applies to all
    smaller dimensions.  combined_coeff is the common value of the two
    multiplier identities; bound_on_A caps the objective shift A, and
    final_bound = 1 + bound_on_A is the line-count bound itself.
    """

    a: Fraction
    n_sub: Fraction
    t: Fraction
    combined_coeff: Fraction
    bound_on_A: Fraction
    final_bound: Fraction


def gerzon_bound(n):
    """n(n+1)/2, valid for every angle."""
    if not isinstance(n, int) or n < 2:
        raise ValueError("dimension must be an integer >= 2, got %r" % (n,))
    return n * (n + 1) // 2


def neumann_bound(n, alpha):
    """2n whenever 1/alpha is not an odd integer; None otherwise."""
    query = BoundQuery(n, Rational(alpha))
    recip = 1 / query.cosine
    if recip.denominator == 1 and recip.numerator % 2 == 1:
        return None
    return 2 * n


def relative_bound(n, alpha):
    """n(1 - alpha^2)/(1 - n alpha^2) when 1 - n alpha^2 > 0; None otherwise."""
    query = BoundQuery(n, Rational(alpha))
    alpha = query.cosine
    denom = 1 - n * alpha * alpha
    if denom <= 0:
        return None
    return n * (1 - alpha * alpha) / denom


def main_theorem_range(a):
    """The dimension window [a^2 - 2, 3a^2 - 16] of the closed-form bound."""
    if not isinstance(a, int) or a < 3:
        raise ValueError("reciprocal cosine must be an integer >= 3, got %r" % (a,))
    return (a * a - 2, 3 * a * a - 16)


def main_theorem_bound(a, n):
    """(a^2 - 2)(a^2 - 1)/2 for cosine 1/a when a^2-2 <= n <= 3a^2-16;
    None when n falls outside the window."""
    lo, hi = main_theorem_range(a)
    if not isinstance(n, int) or n < 2:
        raise ValueError("dimension must be an integer >= 2, got %r" % (n,))
    if lo <= n <= hi:
        return (a * a - 2) * (a * a - 1) // 2
    return None


# -- the exact certificate -------------------------------------------------

def _multiplier(a):
    # t = -16 a^6 / ((6a^2 - 1)(a + 1)^2 (a - 1)^2)
    return -16 * a ** 6 / ((6 * a ** 2 - 1) * (a + 1) ** 2 * (a - 1) ** 2)


def _combined(a):
    # Common value of both multiplier identities.
    return -2 * a ** 4 * (5 * a ** 2 - 1) / ((6 * a ** 2 - 1) * (a - 1) ** 2 * (a + 1) ** 2)


def _identity_lhs(a, t):
    first = t * a / (1 + a) + 2 * a ** 4 * (3 * a + 1) / ((6 * a ** 2 - 1) * (a + 1) ** 3)
    second = t * a / (a - 1) + 2 * a ** 4 * (3 * a - 1) / ((6 * a ** 2 - 1) * (a - 1) ** 3)
    return first, second


def verify_proof_chain(a):
    """Replay the closed-form bound's derivation at the cosine a, exactly.

    Every equality and sign condition the argument rests on is checked;
    the first failure raises CertificateError naming the step.  Valid for
    0 < a <= 1/3 (the sign analysis needs a positive and 6a^2 - 1 < 0).
    """
    a = Rational(a)
    if not 0 < a <= Fraction(1, 3):
        raise ValueError("certificate defined for 0 < a <= 1/3, got %s" % (a,))
    t = _multiplier(a)
    combined = _combined(a)
    first, second = _identity_lhs(a, t)
    if first != combined:
        raise CertificateError("first multiplier identity failed at a = %s" % (a,))
    if second != combined:
        raise CertificateError("second multiplier identity failed at a = %s" % (a,))
    if not t > 0:
        raise CertificateError("multiplier t is not positive at a = %s" % (a,))
    if not combined < 0:
        raise CertificateError("combined coefficient is not negative at a = %s" % (a,))
    plus_one = t + 1
    target = -(10 * a ** 6 + 13 * a ** 4 - 8 * a ** 2 + 1) / (
        (6 * a ** 2 - 1) * (a - 1) ** 2 * (a + 1) ** 2
    )
    if plus_one != target:
        raise CertificateError("t + 1 normal form failed at a = %s" % (a,))
    bound_on_a_var = 1 - plus_one / combined
    if bound_on_a_var != (1 - 3 * a ** 2) / (2 * a ** 4):
        raise CertificateError("bound on A failed at a = %s" % (a,))
    final = 1 + bound_on_a_var
    if final != (1 - 3 * a ** 2 + 2 * a ** 4) / (2 * a ** 4):
        raise CertificateError("final bound normal form failed at a = %s" % (a,))
    if final != (1 - 2 * a ** 2) * (1 - a ** 2) / (2 * a ** 4):
        raise CertificateError("final bound factorization failed at a = %s" % (a,))
    if final != Fraction(1, 2) * (1 / a ** 2 - 2) * (1 / a ** 2 - 1):
        raise CertificateError("final bound product form failed at a = %s" % (a,))
    return ProofChainCertificate(
        a=a,
        n_sub=3 / a ** 2 - 16,
        t=t,
        combined_coeff=combined,
        bound_on_A=bound_on_a_var,
        final_bound=final,
    )


def _w_rearrangement_holds():
    # det W = A + (x3+x4+x5+x6) - A^2 at the aggregate level, with
    # polynomial stand-ins u -> A and v -> x3+x4+x5+x6.
    agg_a = Polynomial.variable("u")
    agg_s = Polynomial.variable("v")
    zero = Polynomial.constant(0)
    x = RelaxationVariables(
        Fraction(3, 2) * agg_a, Fraction(3, 2) * agg_a, agg_s, zero, zero, zero
    )
    return w_det(x) == agg_a + agg_s - agg_a * agg_a


def verify_proof_chain_symbolic(perturbation=None):
    """Check the certificate identities in the rational-function field.

    With no perturbation this must return True; passing a nonzero
    perturbation (added to the multiplier t) must break the identities
    and return False, which is how the rejection path is exercised.
    """
    a = RationalFunction.variable()
    t = _multiplier(a)
    if perturbation is not None:
        t = t + perturbation
    combined = _combined(a)
    first, second = _identity_lhs(a, t)
    ok = ratfun_equal(first, combined)
    ok = ok and ratfun_equal(second, combined)
    ok = ok and ratfun_equal(
        t + 1,
        -(10 * a ** 6 + 13 * a ** 4 - 8 * a ** 2 + 1)
        / ((6 * a ** 2 - 1) * (a - 1) ** 2 * (a + 1) ** 2),
    )
    ok = ok and ratfun_equal(1 - (t + 1) / combined, (1 - 3 * a ** 2) / (2 * a ** 4))
    final = 1 + (1 - 3 * a ** 2) / (2 * a ** 4)
    ok = ok and ratfun_equal(final, (1 - 2 * a ** 2) * (1 - a ** 2) / (2 * a ** 4))
    ok = ok and ratfun_equal(final, (a ** -2 - 2) * (a ** -2 - 1) / 2)
    ok = ok and _w_rearrangement_holds()
    return ok


# -- bound selection -------------------------------------------------------

_PRIORITY = {
    "main_theorem": 0,
    "relaxation_certificate": 1,
    "relative": 2,
    "neumann": 3,
    "sdp": 4,
    "gerzon": 5,
}


def best_bound(n, alpha, sdp_result=None):
    """Minimum over all applicable bounds at (n, alpha), with provenance.

    sdp_result may be a number or any object with a reported_bound
    attribute (as produced by the solver module).  Ties in value go to
    the method with the stronger provenance: exact certificates first,
    then relative, neumann, sdp, and gerzon last.
    """
    query = BoundQuery(n, Rational(alpha))
    alpha = query.cosine
    candidates = [(gerzon_bound(n), "gerzon", None)]
    neumann = neumann_bound(n, alpha)
    if neumann is not None:
        candidates.append((neumann, "neumann", None))
    relative = relative_bound(n, alpha)
    if relative is not None:
        candidates.append((relative, "relative", None))
    if alpha <= Fraction(1, 3):
        cert = verify_proof_chain(alpha)
        recip = 1 / alpha
        if recip.denominator == 1 and main_theorem_bound(int(recip), n) is not None:
            candidates.append((main_theorem_bound(int(recip), n), "main_theorem", cert))
        elif n <= cert.n_sub:
            candidates.append((cert.final_bound, "relaxation_certificate", cert))
    if sdp_result is not None:
        value = getattr(sdp_result, "reported_bound", sdp_result)
        candidates.append((value, "sdp", None))
    value, method, cert = min(
        candidates, key=lambda item: (item[0], _PRIORITY[item[1]])
    )
    return BoundResult(value=value, method=method, certificate=cert)
